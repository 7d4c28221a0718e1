//! Numeric two-sided checks of the structured-matrix identities the
//! spectrum engine rests on: rank-one determinant updates, coronal
//! determinant factorization, the inverse of `bI - cJ`, closed forms for
//! complete-bipartite spectra and coronals, and the constant-row-sum
//! coronal.

use crate::error::{Error, Result};
use crate::matrix::{coronal_numeric, det_general, DenseSymMatrix};

/// Relative agreement required of the two sides of each identity.
pub const LEMMA_REL_TOL: f64 = 1e-8;

fn rel_dev(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

/// Two-sided evaluation of `det(M + b J) = det(M) + b 1^T adj(M) 1`.
///
/// Returns `(lhs, rhs)`. Requires `M` invertible so the adjugate can be
/// formed as `det(M) M^{-1}`.
pub fn rank_one_det_update(m: &[Vec<f64>], b: f64) -> Result<(f64, f64)> {
    let n = m.len();
    let det_m = det_general(m);
    let flat: Vec<f64> = m.iter().flatten().copied().collect();
    let lu = crate::matrix::lu_factor(n, flat)
        .ok_or_else(|| Error::LemmaPrecondition("M must be invertible".into()))?;
    // 1^T adj(M) 1 = det(M) * 1^T M^{-1} 1
    let x = lu.solve(&vec![1.0; n]);
    let adj_quad: f64 = det_m * x.iter().sum::<f64>();
    let perturbed: Vec<Vec<f64>> = m
        .iter()
        .map(|row| row.iter().map(|v| v + b).collect())
        .collect();
    let lhs = det_general(&perturbed);
    let rhs = det_m + b * adj_quad;
    Ok((lhs, rhs))
}

/// Two-sided evaluation of
/// `det(nu I - M - b J) = (1 - b coronal_M(nu)) det(nu I - M)`.
pub fn coronal_det_factorization(m: &DenseSymMatrix, b: f64, nu: f64) -> Result<(f64, f64)> {
    let n = m.dim();
    let shifted_minus_j: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { nu } else { 0.0 };
                    diag - m.get(i, j) - b
                })
                .collect()
        })
        .collect();
    let lhs = det_general(&shifted_minus_j);
    let coronal = coronal_numeric(m, nu)?;
    let rhs = (1.0 - b * coronal) * crate::matrix::det_shifted(m, nu);
    Ok((lhs, rhs))
}

/// Max entrywise deviation of `(bI - cJ)((1/b)I + c/(b(b-nc)) J)` from the
/// identity matrix.
pub fn inverse_bi_cj_deviation(n: usize, b: f64, c: f64) -> Result<f64> {
    if b == 0.0 || (b - n as f64 * c).abs() < 1e-12 * b.abs().max(1.0) {
        return Err(Error::LemmaPrecondition(format!(
            "bI - cJ with b = {b}, c = {c}, n = {n} is singular"
        )));
    }
    let coeff = c / (b * (b - n as f64 * c));
    let mut max_dev = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            // row i of (bI - cJ) times column j of the claimed inverse
            let mut acc = 0.0;
            for k in 0..n {
                let lhs = if i == k { b - c } else { -c };
                let rhs = if k == j { 1.0 / b + coeff } else { coeff };
                acc += lhs * rhs;
            }
            let want = if i == j { 1.0 } else { 0.0 };
            max_dev = max_dev.max((acc - want).abs());
        }
    }
    Ok(max_dev)
}

/// Evaluates the three rank-one identities above at the given inputs and
/// reports per-identity agreement within [`LEMMA_REL_TOL`]. This is a test
/// harness around the block-matrix machinery, not a production path.
pub fn rank_one_identities_check(
    m: &DenseSymMatrix,
    b: f64,
    c: f64,
    nu: f64,
) -> Result<(bool, bool, bool)> {
    let rows: Vec<Vec<f64>> = (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m.get(i, j)).collect())
        .collect();
    let (l1, r1) = rank_one_det_update(&rows, b)?;
    let (l2, r2) = coronal_det_factorization(m, b, nu)?;
    let dev3 = inverse_bi_cj_deviation(m.dim(), b, c)?;
    Ok((
        rel_dev(l1, r1) <= LEMMA_REL_TOL,
        rel_dev(l2, r2) <= LEMMA_REL_TOL,
        dev3 <= LEMMA_REL_TOL,
    ))
}

/// Closed-form coronal of the complete bipartite graph `K_{a,b}` under the
/// alpha matrix:
/// `((a+b) nu - alpha (a+b)^2 + 2ab) / (nu^2 - alpha (a+b) nu + (2 alpha - 1) ab)`.
pub fn coronal_kab(a: usize, b: usize, alpha: f64, nu: f64) -> Result<f64> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(
            "complete bipartite parts must be nonempty".into(),
        ));
    }
    let (af, bf) = (a as f64, b as f64);
    let n = af + bf;
    let denominator = nu * nu - alpha * n * nu + (2.0 * alpha - 1.0) * af * bf;
    let scale = nu * nu + alpha.abs() * n * nu.abs() + af * bf;
    if denominator.abs() <= 1e-12 * scale.max(1.0) {
        return Err(Error::PoleAtNu {
            nu,
            condition: f64::INFINITY,
            limit: crate::matrix::CORONAL_CONDITION_LIMIT,
            nearest_eigenvalue_gap: 0.0,
        });
    }
    Ok((n * nu - alpha * n * n + 2.0 * af * bf) / denominator)
}

/// Closed-form alpha-matrix spectrum of `K_{a,b}`: the two quadratic roots
/// `(alpha(a+b) +/- sqrt(alpha^2 (a+b)^2 + 4ab(1-2alpha)))/2` plus
/// `alpha a` with multiplicity `b-1` and `alpha b` with multiplicity `a-1`.
/// Flattened, sorted non-increasing.
pub fn kab_alpha_spectrum(a: usize, b: usize, alpha: f64) -> Result<Vec<f64>> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(
            "complete bipartite parts must be nonempty".into(),
        ));
    }
    let (af, bf) = (a as f64, b as f64);
    let n = af + bf;
    let disc = alpha * alpha * n * n + 4.0 * af * bf * (1.0 - 2.0 * alpha);
    if disc < 0.0 {
        return Err(Error::NumericInconsistency(format!(
            "discriminant {disc} negative for a = {a}, b = {b}, alpha = {alpha}"
        )));
    }
    let sq = disc.sqrt();
    let mut values = Vec::with_capacity(a + b);
    values.push((alpha * n + sq) / 2.0);
    values.extend(std::iter::repeat_n(alpha * af, b - 1));
    values.extend(std::iter::repeat_n(alpha * bf, a - 1));
    values.push((alpha * n - sq) / 2.0);
    values.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
    Ok(values)
}
