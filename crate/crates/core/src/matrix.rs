//! Dense symmetric matrices, LU factorization with partial pivoting, shifted
//! determinants, and the coronal evaluation `1^T (nu I - M)^{-1} 1`.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Absolute symmetry tolerance asserted at construction.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Condition-number ceiling above which [`coronal_numeric`] refuses to
/// evaluate: the shift is treated as a pole.
pub const CORONAL_CONDITION_LIMIT: f64 = 1e12;

/// Square symmetric real matrix, row-major dense storage.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSymMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl DenseSymMatrix {
    /// Builds from rows, asserting symmetry within [`SYMMETRY_TOL`].
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<DenseSymMatrix> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidParameter("matrix dimension must be positive".into()));
        }
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParameter("matrix rows must all have length dim".into()));
        }
        let entries: Vec<f64> = rows.into_iter().flatten().collect();
        let m = DenseSymMatrix { dim, entries };
        m.check_symmetric()?;
        Ok(m)
    }

    /// Builds entry `(i, j)` from a function, asserting symmetry.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<DenseSymMatrix> {
        if dim == 0 {
            return Err(Error::InvalidParameter("matrix dimension must be positive".into()));
        }
        let mut entries = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                entries[i * dim + j] = f(i, j);
            }
        }
        let m = DenseSymMatrix { dim, entries };
        m.check_symmetric()?;
        Ok(m)
    }

    pub fn zeros(dim: usize) -> Result<DenseSymMatrix> {
        DenseSymMatrix::from_fn(dim, |_, _| 0.0)
    }

    fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let deviation = (self.get(i, j) - self.get(j, i)).abs();
                if deviation > SYMMETRY_TOL {
                    return Err(Error::NotSymmetric { i, j, deviation });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    pub(crate) fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn norm_fro(&self) -> f64 {
        self.entries.iter().map(|e| e * e).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Row-major `nu I - M`, the shifted matrix whose determinant is the
    /// characteristic polynomial at `nu`.
    fn shifted(&self, nu: f64) -> Vec<f64> {
        let mut a = vec![0.0; self.dim * self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = -self.get(i, j) + if i == j { nu } else { 0.0 };
                a[i * self.dim + j] = v;
            }
        }
        a
    }
}

// Serializes as a row-major array of arrays.
impl Serialize for DenseSymMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim))?;
        for i in 0..self.dim {
            let row: Vec<f64> = (0..self.dim).map(|j| self.get(i, j)).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// LU factorization with partial pivoting; `None` when an exactly zero pivot
/// makes the matrix singular to working precision.
pub(crate) struct Lu {
    dim: usize,
    lu: Vec<f64>,
    piv: Vec<usize>,
    det_sign: f64,
}

pub(crate) fn lu_factor(dim: usize, mut a: Vec<f64>) -> Option<Lu> {
    assert_eq!(a.len(), dim * dim);
    let mut piv = vec![0usize; dim];
    let mut det_sign = 1.0;
    for k in 0..dim {
        let mut p = k;
        let mut max = a[k * dim + k].abs();
        for i in k + 1..dim {
            let v = a[i * dim + k].abs();
            if v > max {
                max = v;
                p = i;
            }
        }
        piv[k] = p;
        if max == 0.0 {
            return None;
        }
        if p != k {
            for j in 0..dim {
                a.swap(k * dim + j, p * dim + j);
            }
            det_sign = -det_sign;
        }
        let pivot = a[k * dim + k];
        for i in k + 1..dim {
            let factor = a[i * dim + k] / pivot;
            a[i * dim + k] = factor;
            for j in k + 1..dim {
                a[i * dim + j] -= factor * a[k * dim + j];
            }
        }
    }
    Some(Lu {
        dim,
        lu: a,
        piv,
        det_sign,
    })
}

impl Lu {
    pub(crate) fn det(&self) -> f64 {
        let mut d = self.det_sign;
        for k in 0..self.dim {
            d *= self.lu[k * self.dim + k];
        }
        d
    }

    pub(crate) fn solve(&self, b: &[f64]) -> Vec<f64> {
        assert_eq!(b.len(), self.dim);
        let n = self.dim;
        let mut x = b.to_vec();
        // The stored L rows are in the final pivoted order, so the whole
        // permutation must be applied to the right-hand side before any
        // elimination.
        for k in 0..n {
            x.swap(k, self.piv[k]);
        }
        for k in 0..n {
            for i in k + 1..n {
                x[i] -= self.lu[i * n + k] * x[k];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let xj = x[j];
                x[i] -= self.lu[i * n + j] * xj;
            }
            x[i] /= self.lu[i * n + i];
        }
        x
    }

    /// Hager-style estimate of the 1-norm of the inverse. The matrices fed
    /// here are symmetric, so solving with the transpose is the same solve.
    pub(crate) fn inv_norm1_estimate(&self) -> f64 {
        let n = self.dim;
        let mut x = vec![1.0 / n as f64; n];
        let mut est = 0.0f64;
        for _ in 0..5 {
            let z = self.solve(&x);
            let new_est: f64 = z.iter().map(|v| v.abs()).sum();
            let xi: Vec<f64> = z.iter().map(|v| if *v >= 0.0 { 1.0 } else { -1.0 }).collect();
            let w = self.solve(&xi);
            let (mut j_max, mut w_max) = (0, 0.0);
            for (j, wj) in w.iter().enumerate() {
                if wj.abs() > w_max {
                    w_max = wj.abs();
                    j_max = j;
                }
            }
            let wx: f64 = w.iter().zip(&x).map(|(a, b)| a * b).sum();
            est = est.max(new_est);
            if w_max <= wx.abs() {
                break;
            }
            x = vec![0.0; n];
            x[j_max] = 1.0;
        }
        est
    }
}

fn norm1(dim: usize, a: &[f64]) -> f64 {
    (0..dim)
        .map(|j| (0..dim).map(|i| a[i * dim + j].abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `det(nu I - M)`, the characteristic polynomial evaluated at `nu`.
pub fn det_shifted(m: &DenseSymMatrix, nu: f64) -> f64 {
    match lu_factor(m.dim(), m.shifted(nu)) {
        Some(lu) => lu.det(),
        None => 0.0,
    }
}

/// Determinant of a general square matrix (lemma checks take arbitrary, not
/// necessarily symmetric, inputs).
pub fn det_general(rows: &[Vec<f64>]) -> f64 {
    let dim = rows.len();
    assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
    let a: Vec<f64> = rows.iter().flatten().copied().collect();
    match lu_factor(dim, a) {
        Some(lu) => lu.det(),
        None => 0.0,
    }
}

/// Solves `(nu I - M) x = 1` and returns `1^T x`.
///
/// Refuses with a pole error when the estimated condition number of the
/// shifted matrix exceeds [`CORONAL_CONDITION_LIMIT`], which signals that
/// `nu` is numerically indistinguishable from an eigenvalue of `M`.
pub fn coronal_numeric(m: &DenseSymMatrix, nu: f64) -> Result<f64> {
    let n = m.dim();
    let shifted = m.shifted(nu);
    let a_norm1 = norm1(n, &shifted);
    let pole = |condition: f64| Error::PoleAtNu {
        nu,
        condition,
        limit: CORONAL_CONDITION_LIMIT,
        nearest_eigenvalue_gap: if condition > 0.0 {
            a_norm1 / condition
        } else {
            0.0
        },
    };
    let lu = lu_factor(n, shifted).ok_or_else(|| pole(f64::INFINITY))?;
    let condition = a_norm1 * lu.inv_norm1_estimate();
    if condition > CORONAL_CONDITION_LIMIT {
        return Err(pole(condition));
    }
    let x = lu.solve(&vec![1.0; n]);
    Ok(x.iter().sum())
}

/// `alpha D(G) + (1 - alpha) A(G)` as a dense symmetric matrix.
///
/// At `alpha = 0` this is the adjacency matrix, at `alpha = 1/2` half of the
/// signless Laplacian, at `alpha = 1` the degree matrix.
pub fn alpha_matrix_of(g: &Graph, alpha: f64) -> Result<DenseSymMatrix> {
    let degrees = g.degrees();
    DenseSymMatrix::from_fn(g.n(), |i, j| {
        if i == j {
            alpha * degrees[i] as f64
        } else if g.has_edge(i, j) {
            1.0 - alpha
        } else {
            0.0
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;

    fn c4() -> DenseSymMatrix {
        let g = build_family("cycle:4".parse().unwrap()).unwrap();
        alpha_matrix_of(&g, 0.0).unwrap()
    }

    #[test]
    fn rejects_asymmetric() {
        let r = DenseSymMatrix::from_rows(vec![vec![1.0, 2.0], vec![2.5, 1.0]]);
        assert!(matches!(r, Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn rejects_zero_dim() {
        assert!(DenseSymMatrix::from_rows(vec![]).is_err());
    }

    #[test]
    fn coronal_constant_row_sum() {
        // A(C4) has constant row sum 2, so the coronal at 3 is 4 / (3 - 2)
        let v = coronal_numeric(&c4(), 3.0).unwrap();
        assert!((v - 4.0).abs() < 1e-12);
    }

    #[test]
    fn coronal_one_by_one() {
        let m = DenseSymMatrix::from_rows(vec![vec![0.0]]).unwrap();
        let v = coronal_numeric(&m, 2.0).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
    }

    #[test]
    fn coronal_kab_alpha_zero() {
        // K_{2,3} at alpha = 0, nu = 3: closed form gives 9
        let g = build_family("cbipartite:2,3".parse().unwrap()).unwrap();
        let m = alpha_matrix_of(&g, 0.0).unwrap();
        let v = coronal_numeric(&m, 3.0).unwrap();
        assert!((v - 9.0).abs() < 1e-10, "got {v}");
    }

    #[test]
    fn coronal_with_pivoting() {
        // small diagonal forces row interchanges in the LU solve; the
        // symmetry-reduced 2x2 hand solve is the oracle
        let alpha = 0.2663936338353524;
        let nu = 1.0687652060400676;
        let g = build_family("cbipartite:1,3".parse().unwrap()).unwrap();
        let m = alpha_matrix_of(&g, alpha).unwrap();
        let den = (nu - 3.0 * alpha) * (nu - alpha) - 3.0 * (1.0 - alpha) * (1.0 - alpha);
        let u = ((nu - alpha) + 3.0 * (1.0 - alpha)) / den;
        let v = ((nu - 3.0 * alpha) + (1.0 - alpha)) / den;
        let want = u + 3.0 * v;
        let got = coronal_numeric(&m, nu).unwrap();
        assert!((got - want).abs() < 1e-12 * want.abs(), "{got} vs {want}");
    }

    #[test]
    fn coronal_refuses_pole() {
        // 2 is an eigenvalue of A(C4)
        let err = coronal_numeric(&c4(), 2.0 + 1e-15).unwrap_err();
        assert!(matches!(err, Error::PoleAtNu { .. }));
    }

    #[test]
    fn det_shifted_matches_charpoly_c4() {
        // char poly of A(C4) is nu^4 - 4 nu^2
        for nu in [-3.0f64, -0.5, 0.7, 1.9, 5.0] {
            let expected = nu.powi(4) - 4.0 * nu * nu;
            assert!((det_shifted(&c4(), nu) - expected).abs() < 1e-9 * expected.abs().max(1.0));
        }
    }

    #[test]
    fn det_general_small() {
        let d = det_general(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert!((d + 2.0).abs() < 1e-12);
    }

    #[test]
    fn alpha_matrix_endpoints() {
        let g = build_family("cycle:4".parse().unwrap()).unwrap();
        let a1 = alpha_matrix_of(&g, 1.0).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 2.0 } else { 0.0 };
                assert_eq!(a1.get(i, j), want);
            }
        }
        let p2 = build_family("path:2".parse().unwrap()).unwrap();
        let h = alpha_matrix_of(&p2, 0.5).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(h.get(i, j), 0.5);
            }
        }
    }
}
