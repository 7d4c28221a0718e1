//! Cyclic Jacobi eigensolver for dense symmetric matrices and the
//! multiplicity-clustered [`Spectrum`] it produces.
//!
//! Jacobi is the oracle of this crate: deterministic, symmetry-preserving,
//! and accurate to near machine precision at the dimensions in play, so the
//! closed-form spectrum engine is always checked against it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::DenseSymMatrix;

const MAX_SWEEPS: usize = 50;

/// One eigenvalue with its multiplicity; `clause` labels which closed-form
/// branch produced it, when the spectrum came from that engine.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
}

/// Multiset of real eigenvalues, sorted non-increasing, with values closer
/// than the clustering tolerance merged into multiplicities.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// Clusters raw values into (value, multiplicity) entries. Single-linkage
    /// on the sorted list: a gap larger than `cluster_tol` starts a new
    /// entry; each entry's value is the mean of its members.
    pub fn from_values(values: Vec<f64>, cluster_tol: f64) -> Spectrum {
        Spectrum::from_tagged(values.into_iter().map(|v| (v, None)).collect(), cluster_tol)
    }

    /// Like [`Spectrum::from_values`], carrying clause tags through the
    /// clustering. Tags of merged values are joined with `+`, deduplicated.
    pub fn from_tagged(mut values: Vec<(f64, Option<String>)>, cluster_tol: f64) -> Spectrum {
        values.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("eigenvalues must not be NaN"));
        let mut eigenvalues: Vec<SpectrumEntry> = Vec::new();
        let mut cluster: Vec<(f64, Option<String>)> = Vec::new();
        let flush = |cluster: &mut Vec<(f64, Option<String>)>, out: &mut Vec<SpectrumEntry>| {
            if cluster.is_empty() {
                return;
            }
            let value = cluster.iter().map(|(v, _)| v).sum::<f64>() / cluster.len() as f64;
            let mut tags: Vec<&str> = cluster
                .iter()
                .filter_map(|(_, t)| t.as_deref())
                .collect();
            tags.sort_unstable();
            tags.dedup();
            out.push(SpectrumEntry {
                value,
                multiplicity: cluster.len(),
                clause: if tags.is_empty() {
                    None
                } else {
                    Some(tags.join("+"))
                },
            });
            cluster.clear();
        };
        for (v, tag) in values {
            if let Some(&(last, _)) = cluster.last() {
                if last - v > cluster_tol {
                    flush(&mut cluster, &mut eigenvalues);
                }
            }
            cluster.push((v, tag));
        }
        flush(&mut cluster, &mut eigenvalues);
        Spectrum { eigenvalues }
    }

    /// Total multiplicity, equal to the dimension of the source matrix.
    pub fn dim(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity).sum()
    }

    /// Expands to a plain sorted (non-increasing) list, repeating each value
    /// by its multiplicity.
    pub fn flatten(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.eigenvalues
    }
}

/// Default clustering tolerance: `1e-8 * max(1, ||m||_inf)`.
pub fn default_cluster_tol(m: &DenseSymMatrix) -> f64 {
    1e-8 * m.norm_inf().max(1.0)
}

/// All eigenvalues of a symmetric matrix via cyclic Jacobi rotations, merged
/// into multiplicities with `cluster_tol` (defaulting to
/// [`default_cluster_tol`]).
pub fn sym_eigenvalues(m: &DenseSymMatrix, cluster_tol: Option<f64>) -> Result<Spectrum> {
    let tol = match cluster_tol {
        Some(t) if t > 0.0 => t,
        Some(t) => {
            return Err(Error::InvalidParameter(format!(
                "cluster tolerance must be positive, got {t}"
            )))
        }
        None => default_cluster_tol(m),
    };
    let values = jacobi_eigenvalues(m.dim(), m.entries().to_vec())?;
    Ok(Spectrum::from_values(values, tol))
}

/// Cyclic Jacobi with the accumulation scheme of the classical routine:
/// sweeps of (p, q) rotations annihilating `a[p][q]`, diagonal corrections
/// collected in a separate array to limit rounding drift.
fn jacobi_eigenvalues(n: usize, mut a: Vec<f64>) -> Result<Vec<f64>> {
    if n == 1 {
        return Ok(vec![a[0]]);
    }
    let mut b: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut d = b.clone();
    let mut z = vec![0.0; n];
    let scale: f64 = a
        .iter()
        .map(|v| v.abs())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);

    for sweep in 0..MAX_SWEEPS {
        let off: f64 = (0..n - 1)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q].abs())
            .sum();
        if off == 0.0 || off < 1e-15 * scale {
            d.sort_by(|x, y| y.partial_cmp(x).expect("symmetric eigenvalues are finite"));
            return Ok(d);
        }
        // During the first sweeps, skip elements that are already tiny
        // relative to the matrix; afterwards rotate unconditionally.
        let threshold = if sweep < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                if sweep > 3
                    && d[p].abs() + g == d[p].abs()
                    && d[q].abs() + g == d[q].abs()
                {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if apq.abs() <= threshold {
                    continue;
                }
                if apq == 0.0 {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[p * n + q] = 0.0;
                let rotate = |a: &mut Vec<f64>, i: usize, j: usize, k: usize, l: usize| {
                    let g = a[i * n + j];
                    let h = a[k * n + l];
                    a[i * n + j] = g - s * (h + g * tau);
                    a[k * n + l] = h + s * (g - h * tau);
                };
                for j in 0..p {
                    rotate(&mut a, j, p, j, q);
                }
                for j in p + 1..q {
                    rotate(&mut a, p, j, j, q);
                }
                for j in q + 1..n {
                    rotate(&mut a, p, j, q, j);
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;
    use crate::matrix::alpha_matrix_of;

    fn family(desc: &str) -> crate::graph::Graph {
        build_family(desc.parse().unwrap()).unwrap()
    }

    fn assert_spectrum(s: &Spectrum, expected: &[(f64, usize)], tol: f64) {
        assert_eq!(s.entries().len(), expected.len(), "spectrum {s:?}");
        for (e, &(v, m)) in s.entries().iter().zip(expected) {
            assert!((e.value - v).abs() <= tol, "got {} want {v}", e.value);
            assert_eq!(e.multiplicity, m);
        }
    }

    #[test]
    fn half_alpha_k4() {
        let m = alpha_matrix_of(&family("complete:4"), 0.5).unwrap();
        let s = sym_eigenvalues(&m, None).unwrap();
        assert_spectrum(&s, &[(3.0, 1), (1.0, 3)], 1e-12);
    }

    #[test]
    fn zero_matrix() {
        let m = DenseSymMatrix::zeros(3).unwrap();
        let s = sym_eigenvalues(&m, None).unwrap();
        assert_spectrum(&s, &[(0.0, 3)], 0.0);
    }

    #[test]
    fn adjacency_c4() {
        // brute-force oracle: char poly nu^4 - 4 nu^2, roots {2, 0, 0, -2}
        let m = alpha_matrix_of(&family("cycle:4"), 0.0).unwrap();
        let s = sym_eigenvalues(&m, None).unwrap();
        assert_spectrum(&s, &[(2.0, 1), (0.0, 2), (-2.0, 1)], 1e-12);
    }

    #[test]
    fn trace_and_frobenius_invariants() {
        let mut rng = crate::rng::SplitMix64::new(42);
        for _ in 0..20 {
            let dim = 2 + rng.below(12);
            let mut rows = vec![vec![0.0; dim]; dim];
            for i in 0..dim {
                for j in i..dim {
                    let v = rng.uniform(-3.0, 3.0);
                    rows[i][j] = v;
                    rows[j][i] = v;
                }
            }
            let m = DenseSymMatrix::from_rows(rows).unwrap();
            let s = sym_eigenvalues(&m, Some(1e-12)).unwrap();
            let flat = s.flatten();
            assert_eq!(flat.len(), dim);
            let sum: f64 = flat.iter().sum();
            let sum_sq: f64 = flat.iter().map(|v| v * v).sum();
            let tol = 1e-9 * dim as f64 * m.norm_inf().max(1.0);
            assert!((sum - m.trace()).abs() < tol);
            assert!((sum_sq - m.norm_fro().powi(2)).abs() < tol.max(1e-9 * m.norm_fro().powi(2)));
        }
    }

    #[test]
    fn clustering_merges_and_splits() {
        let s = Spectrum::from_values(vec![1.0, 1.0 + 2e-9, 0.5], 1e-8);
        assert_eq!(s.entries().len(), 2);
        assert_eq!(s.entries()[0].multiplicity, 2);
        let s = Spectrum::from_values(vec![1.0, 1.0 + 2e-9, 0.5], 1e-10);
        assert_eq!(s.entries().len(), 3);
    }

    #[test]
    fn tags_merge_deterministically() {
        let s = Spectrum::from_tagged(
            vec![
                (2.0, Some("b".into())),
                (2.0, Some("a".into())),
                (2.0, Some("a".into())),
            ],
            1e-8,
        );
        assert_eq!(s.entries()[0].clause.as_deref(), Some("a+b"));
    }

    #[test]
    fn accuracy_at_dim_200() {
        // The tridiagonal (2, -1) matrix has eigenvalues
        // 2 - 2 cos(pi k / (n + 1)); the contract promises 1e-10 relative
        // to the spectral norm up to dimension 200.
        let n = 200;
        let m = DenseSymMatrix::from_fn(n, |i, j| {
            if i == j {
                2.0
            } else if i.abs_diff(j) == 1 {
                -1.0
            } else {
                0.0
            }
        })
        .unwrap();
        let s = sym_eigenvalues(&m, Some(1e-13)).unwrap();
        let got = s.flatten();
        let mut want: Vec<f64> = (1..=n)
            .map(|k| 2.0 - 2.0 * (std::f64::consts::PI * k as f64 / (n as f64 + 1.0)).cos())
            .collect();
        want.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let spectral_norm = want[0];
        for (g, w) in got.iter().zip(&want) {
            assert!(
                (g - w).abs() <= 1e-10 * spectral_norm,
                "dim 200: got {g} want {w}"
            );
        }
    }

    #[test]
    fn accuracy_on_larger_matrix() {
        // Laplacian-like matrix of a path has known eigenvalues
        // 2 - 2 cos(pi k / n); check to 1e-10 relative.
        let n = 60;
        let m = DenseSymMatrix::from_fn(n, |i, j| {
            if i == j {
                2.0
            } else if i.abs_diff(j) == 1 {
                -1.0
            } else {
                0.0
            }
        })
        .unwrap();
        let s = sym_eigenvalues(&m, Some(1e-12)).unwrap();
        let got = s.flatten();
        let mut want: Vec<f64> = (1..=n)
            .map(|k| 2.0 - 2.0 * (std::f64::consts::PI * k as f64 / (n as f64 + 1.0)).cos())
            .collect();
        want.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-10 * 4.0, "got {g} want {w}");
        }
    }
}
