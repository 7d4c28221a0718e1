//! Real-coefficient univariate polynomials and real-root extraction for the
//! quadratic/cubic/quartic factors produced by the spectrum engine.
//!
//! Degree 2 uses the stable quadratic formula. Degrees 3 and 4 go through
//! eigenvalues of the balanced companion matrix (Hessenberg QR), followed by
//! Newton polishing. Clusters of near-equal roots are re-polished on the
//! appropriate derivative, accepted only when that lowers the residual, so
//! genuine multiple roots come out to near machine precision while close
//! distinct roots are left alone.

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative ceiling for imaginary parts the root finder may discard.
pub const IMAG_TOL: f64 = 1e-8;

/// Residual acceptance bound: `|p(root)| <= RESIDUAL_REL * ||p||` with the
/// norm scaled by powers of the root.
pub const RESIDUAL_REL: f64 = 1e-7;

// Wide enough to catch the eps^(1/d) perturbation of a d-fold root under
// coefficient rounding (1e-4 at degree 4); the residual guard in
// `polish_clusters` keeps genuinely distinct close roots from merging.
const CLUSTER_GAP: f64 = 2e-4;

// Residual bound certifying that a complex conjugate pair from the
// companion eigensolver is a rounding-perturbed real double root.
const RESCUE_RESIDUAL: f64 = 1e-10;

/// Univariate polynomial with real coefficients, ascending degree order,
/// trailing zero coefficients trimmed so the leading coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RealPolynomial {
    coefficients: Vec<f64>,
}

impl RealPolynomial {
    /// `coefficients[k]` multiplies `x^k`. The zero polynomial is stored as
    /// a single zero coefficient.
    pub fn new(mut coefficients: Vec<f64>) -> RealPolynomial {
        while coefficients.len() > 1 && coefficients.last() == Some(&0.0) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(0.0);
        }
        RealPolynomial { coefficients }
    }

    pub fn from_roots(roots: &[f64]) -> RealPolynomial {
        let mut coeffs = vec![1.0];
        for &r in roots {
            // multiply by (x - r)
            let mut next = vec![0.0; coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            coeffs = next;
        }
        RealPolynomial::new(coeffs)
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c)
    }

    /// Compensated Horner evaluation: tracks the rounding error of every
    /// product and sum with error-free transformations, giving a residual
    /// roughly as accurate as plain Horner in twice the working precision.
    /// The Newton polish relies on this near ill-conditioned roots, where
    /// the plain residual is pure rounding noise.
    pub fn eval_compensated(&self, x: f64) -> f64 {
        let mut iter = self.coefficients.iter().rev();
        let mut sum = *iter.next().expect("nonempty");
        let mut compensation = 0.0;
        for &c in iter {
            let product = sum * x;
            let product_err = sum.mul_add(x, -product);
            let new_sum = product + c;
            let shifted = new_sum - product;
            let sum_err = (product - (new_sum - shifted)) + (c - shifted);
            sum = new_sum;
            compensation = compensation * x + (product_err + sum_err);
        }
        sum + compensation
    }

    pub fn derivative(&self) -> RealPolynomial {
        if self.degree() == 0 {
            return RealPolynomial::new(vec![0.0]);
        }
        let coeffs = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        RealPolynomial::new(coeffs)
    }

    pub fn mul(&self, other: &RealPolynomial) -> RealPolynomial {
        let mut out = vec![0.0; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPolynomial::new(out)
    }

    pub fn monic(&self) -> RealPolynomial {
        let lead = *self.coefficients.last().expect("nonempty");
        if lead == 1.0 || lead == 0.0 {
            return self.clone();
        }
        RealPolynomial::new(self.coefficients.iter().map(|c| c / lead).collect())
    }

    /// `sum_k |c_k| max(1, |x|)^k`, the natural scale for residuals at `x`.
    pub fn norm_at(&self, x: f64) -> f64 {
        let b = x.abs().max(1.0);
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * b + c.abs())
    }
}

/// All real roots (with multiplicity, sorted non-increasing) of a degree
/// 1..=4 polynomial whose roots are known real by construction.
///
/// A root whose imaginary part from the companion eigensolver exceeds the
/// [`IMAG_TOL`] relative bound, or whose residual fails the
/// [`RESIDUAL_REL`] check, raises a numeric-inconsistency error: those
/// conditions signal a misapplied branch rather than rounding noise.
pub fn real_roots(p: &RealPolynomial) -> Result<Vec<f64>> {
    let degree = p.degree();
    if degree == 0 || degree > 4 {
        return Err(Error::InvalidParameter(format!(
            "real_roots handles degrees 1 through 4, got {degree}"
        )));
    }
    if !p.coefficients().iter().all(|c| c.is_finite()) {
        return Err(Error::InvalidParameter(
            "polynomial coefficients must be finite".into(),
        ));
    }
    let monic = p.monic();
    let mut roots = match degree {
        1 => vec![-monic.coefficients[0]],
        2 => quadratic_roots(&monic)?,
        _ => companion_roots(&monic)?,
    };

    let dp = monic.derivative();
    for r in roots.iter_mut() {
        *r = newton_guarded(&monic, &dp, *r);
    }
    polish_clusters(&monic, &mut roots);
    roots.sort_by(|a, b| b.partial_cmp(a).expect("roots are finite"));

    for &r in &roots {
        let residual = monic.eval_compensated(r).abs();
        if residual > RESIDUAL_REL * monic.norm_at(r) {
            return Err(Error::NumericInconsistency(format!(
                "root {r} has residual {residual:e} above {RESIDUAL_REL:e} * ||p||"
            )));
        }
    }
    Ok(roots)
}

fn quadratic_roots(monic: &RealPolynomial) -> Result<Vec<f64>> {
    let c = monic.coefficients[0];
    let b = monic.coefficients[1];
    let disc = b * b - 4.0 * c;
    if disc >= 0.0 {
        let sq = disc.sqrt();
        if b == 0.0 {
            return Ok(vec![sq / 2.0, -sq / 2.0]);
        }
        let q = -(b + b.signum() * sq) / 2.0;
        let r1 = q;
        let r2 = if q != 0.0 { c / q } else { -b - q };
        Ok(vec![r1, r2])
    } else {
        let imag = (-disc).sqrt() / 2.0;
        let re = -b / 2.0;
        // tiny negative discriminants are rounding artifacts of a real
        // double root; the residual confirms or refutes that reading
        if imag <= IMAG_TOL * re.abs().max(1.0)
            || monic.eval_compensated(re).abs() <= RESCUE_RESIDUAL * monic.norm_at(re)
        {
            Ok(vec![re, re])
        } else {
            Err(Error::NumericInconsistency(format!(
                "quadratic has complex roots {re} +/- {imag}i"
            )))
        }
    }
}

fn companion_roots(monic: &RealPolynomial) -> Result<Vec<f64>> {
    let d = monic.degree();
    // Companion matrix: ones on the subdiagonal, last column holds the
    // negated coefficients; already upper Hessenberg.
    let mut a = Hess::zeros(d);
    for i in 2..=d {
        a.set(i, i - 1, 1.0);
    }
    for i in 1..=d {
        a.set(i, d, -monic.coefficients[i - 1]);
    }
    balance(&mut a);
    let eigen = hqr(&mut a)?;
    let dp = monic.derivative();
    let mut roots = Vec::with_capacity(d);
    let mut i = 0;
    while i < eigen.len() {
        let (re, im) = eigen[i];
        let magnitude = re.hypot(im);
        if im.abs() <= IMAG_TOL * magnitude.max(1.0) {
            roots.push(re);
            i += 1;
            continue;
        }
        // A conjugate pair with small imaginary part is how the eigensolver
        // reports a rounding-perturbed real double root. Polish the real
        // part on the derivative (where a double root of p is simple) and
        // let the residual of p decide whether the double-root reading is
        // real or the pair is genuinely complex.
        let is_pair = i + 1 < eigen.len()
            && (eigen[i + 1].0 - re).abs() <= 1e-9 * magnitude.max(1.0)
            && (eigen[i + 1].1 + im).abs() <= 1e-9 * magnitude.max(1.0);
        if is_pair {
            let polished = newton_full(&dp, re);
            let close_enough = (polished - re).abs() <= 8.0 * im.abs() + 1e-9 * magnitude.max(1.0);
            if close_enough && monic.eval_compensated(polished).abs() <= RESCUE_RESIDUAL * monic.norm_at(polished)
            {
                roots.push(polished);
                roots.push(polished);
                i += 2;
                continue;
            }
        }
        return Err(Error::NumericInconsistency(format!(
            "companion eigenvalue {re} + {im}i has a non-negligible imaginary part"
        )));
    }
    Ok(roots)
}

fn newton_guarded(p: &RealPolynomial, dp: &RealPolynomial, mut x: f64) -> f64 {
    let mut fx = p.eval_compensated(x).abs();
    for _ in 0..6 {
        let d = dp.eval(x);
        if d == 0.0 {
            break;
        }
        let x_new = x - p.eval_compensated(x) / d;
        if !x_new.is_finite() {
            break;
        }
        let f_new = p.eval_compensated(x_new).abs();
        if f_new < fx {
            x = x_new;
            fx = f_new;
        } else {
            break;
        }
    }
    x
}

/// Full Newton iteration (no residual guard) used on derivatives, where the
/// target is a simple root.
fn newton_full(p: &RealPolynomial, mut x: f64) -> f64 {
    let dp = p.derivative();
    for _ in 0..40 {
        let d = dp.eval(x);
        if d == 0.0 {
            break;
        }
        let step = p.eval_compensated(x) / d;
        let x_new = x - step;
        if !x_new.is_finite() {
            break;
        }
        x = x_new;
        if step.abs() <= 1e-15 * (1.0 + x.abs()) {
            break;
        }
    }
    x
}

/// Re-polishes clusters of near-equal roots on the (k-1)-th derivative. A
/// k-fold root of `p` is a simple root of `p^(k-1)`, so Newton there
/// restores full precision lost to the multiple-root sensitivity of the
/// companion eigenvalues. The replacement is kept only when it does not
/// increase the worst member residual, which rejects clusters that are in
/// fact close distinct roots.
fn polish_clusters(monic: &RealPolynomial, roots: &mut [f64]) {
    roots.sort_by(|a, b| a.partial_cmp(b).expect("roots are finite"));
    let scale = roots.iter().fold(1.0f64, |m, r| m.max(r.abs()));
    let gap = CLUSTER_GAP * scale;
    let n = roots.len();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && roots[end] - roots[end - 1] <= gap {
            end += 1;
        }
        let k = end - start;
        if k >= 2 {
            let mean = roots[start..end].iter().sum::<f64>() / k as f64;
            let mut dk = monic.clone();
            for _ in 0..k - 1 {
                dk = dk.derivative();
            }
            let polished = newton_full(&dk, mean);
            let spread = roots[end - 1] - roots[start];
            let before = roots[start..end]
                .iter()
                .map(|r| monic.eval_compensated(*r).abs())
                .fold(0.0, f64::max);
            let after = monic.eval_compensated(polished).abs();
            // Near a true multiple root both residuals sit at the Horner
            // rounding floor, so beating `before` is not required there;
            // a cluster of genuinely distinct roots leaves a residual far
            // above the floor at the critical point and is kept apart.
            let noise_floor =
                4.0 * (monic.degree() + 1) as f64 * f64::EPSILON * monic.norm_at(polished);
            if (polished - mean).abs() <= spread + gap && after <= before.max(noise_floor) {
                roots[start..end].iter_mut().for_each(|r| *r = polished);
            }
        }
        start = end;
    }
}

/// Square matrix with 1-based accessors, matching the classical statement of
/// the balancing and Hessenberg QR algorithms.
struct Hess {
    n: usize,
    a: Vec<f64>,
}

impl Hess {
    fn zeros(n: usize) -> Hess {
        Hess {
            n,
            a: vec![0.0; n * n],
        }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> f64 {
        self.a[(i - 1) * self.n + (j - 1)]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[(i - 1) * self.n + (j - 1)] = v;
    }
}

/// Diagonal-similarity balancing (radix 2), preserving eigenvalues and the
/// Hessenberg zero pattern.
fn balance(a: &mut Hess) {
    const RADIX: f64 = 2.0;
    let n = a.n;
    loop {
        let mut last = true;
        for i in 1..=n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 1..=n {
                if j != i {
                    c += a.get(j, i).abs();
                    r += a.get(i, j).abs();
                }
            }
            if c != 0.0 && r != 0.0 {
                let mut g = r / RADIX;
                let mut f = 1.0;
                let s = c + r;
                let mut c_scaled = c;
                while c_scaled < g {
                    f *= RADIX;
                    c_scaled *= RADIX * RADIX;
                }
                g = r * RADIX;
                while c_scaled > g {
                    f /= RADIX;
                    c_scaled /= RADIX * RADIX;
                }
                if (c_scaled + r) / f < 0.95 * s {
                    last = false;
                    let g = 1.0 / f;
                    for j in 1..=n {
                        let v = a.get(i, j) * g;
                        a.set(i, j, v);
                    }
                    for j in 1..=n {
                        let v = a.get(j, i) * f;
                        a.set(j, i, v);
                    }
                }
            }
        }
        if last {
            break;
        }
    }
}

/// Eigenvalues of an upper Hessenberg matrix by the implicit double-shift QR
/// iteration. Returns `(re, im)` pairs; the matrix is destroyed.
fn hqr(a: &mut Hess) -> Result<Vec<(f64, f64)>> {
    let n = a.n;
    let mut wr = vec![0.0; n + 1];
    let mut wi = vec![0.0; n + 1];
    let mut anorm = 0.0;
    for i in 1..=n {
        for j in i.saturating_sub(1).max(1)..=n {
            anorm += a.get(i, j).abs();
        }
    }
    let mut nn = n as isize;
    let mut t = 0.0;
    'outer: while nn >= 1 {
        let mut its = 0;
        loop {
            // look for a single small subdiagonal element
            let mut l = nn;
            while l >= 2 {
                let mut s = a.get(l as usize - 1, l as usize - 1).abs()
                    + a.get(l as usize, l as usize).abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a.get(l as usize, l as usize - 1).abs() + s == s {
                    a.set(l as usize, l as usize - 1, 0.0);
                    break;
                }
                l -= 1;
            }
            let mut x = a.get(nn as usize, nn as usize);
            if l == nn {
                wr[nn as usize] = x + t;
                wi[nn as usize] = 0.0;
                nn -= 1;
                continue 'outer;
            }
            let y = a.get(nn as usize - 1, nn as usize - 1);
            let mut w = a.get(nn as usize, nn as usize - 1) * a.get(nn as usize - 1, nn as usize);
            if l == nn - 1 {
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let mut z = q.abs().sqrt();
                x += t;
                if q >= 0.0 {
                    z = p + z.copysign(p);
                    wr[nn as usize - 1] = x + z;
                    wr[nn as usize] = if z != 0.0 { x - w / z } else { x + z };
                    wi[nn as usize - 1] = 0.0;
                    wi[nn as usize] = 0.0;
                } else {
                    wr[nn as usize - 1] = x + p;
                    wr[nn as usize] = x + p;
                    wi[nn as usize] = z;
                    wi[nn as usize - 1] = -z;
                }
                nn -= 2;
                continue 'outer;
            }
            if its == 30 {
                return Err(Error::NumericInconsistency(
                    "Hessenberg QR iteration failed to converge".into(),
                ));
            }
            let mut y = y;
            if its == 10 || its == 20 {
                // exceptional shift
                t += x;
                for i in 1..=nn as usize {
                    let v = a.get(i, i) - x;
                    a.set(i, i, v);
                }
                let s = a.get(nn as usize, nn as usize - 1).abs()
                    + a.get(nn as usize - 1, nn as usize - 2).abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            // look for two consecutive small subdiagonal elements
            let mut m = nn - 2;
            let mut p = 0.0;
            let mut q = 0.0;
            let mut r = 0.0;
            while m >= l {
                let mu = m as usize;
                let z = a.get(mu, mu);
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / a.get(mu + 1, mu) + a.get(mu, mu + 1);
                q = a.get(mu + 1, mu + 1) - z - rr - ss;
                r = a.get(mu + 2, mu + 1);
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = a.get(mu, mu - 1).abs() * (q.abs() + r.abs());
                let v = p.abs()
                    * (a.get(mu - 1, mu - 1).abs() + z.abs() + a.get(mu + 1, mu + 1).abs());
                if u + v == v {
                    break;
                }
                m -= 1;
            }
            for i in (m + 2)..=nn {
                a.set(i as usize, i as usize - 2, 0.0);
                if i != m + 2 {
                    a.set(i as usize, i as usize - 3, 0.0);
                }
            }
            // double QR step on rows l..nn, columns m..nn
            for k in m..=nn - 1 {
                let ku = k as usize;
                if k != m {
                    p = a.get(ku, ku - 1);
                    q = a.get(ku + 1, ku - 1);
                    r = if k != nn - 1 {
                        a.get(ku + 2, ku - 1)
                    } else {
                        0.0
                    };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = (p * p + q * q + r * r).sqrt().copysign(p);
                if s == 0.0 {
                    continue;
                }
                if k == m {
                    if l != m {
                        let v = -a.get(ku, ku - 1);
                        a.set(ku, ku - 1, v);
                    }
                } else {
                    a.set(ku, ku - 1, -s * x);
                }
                p += s;
                x = p / s;
                let y2 = q / s;
                let z2 = r / s;
                q /= p;
                r /= p;
                // row modification
                for j in ku..=nn as usize {
                    let mut pj = a.get(ku, j) + q * a.get(ku + 1, j);
                    if k != nn - 1 {
                        pj += r * a.get(ku + 2, j);
                        let v = a.get(ku + 2, j) - pj * z2;
                        a.set(ku + 2, j, v);
                    }
                    let v1 = a.get(ku + 1, j) - pj * y2;
                    a.set(ku + 1, j, v1);
                    let v0 = a.get(ku, j) - pj * x;
                    a.set(ku, j, v0);
                }
                // column modification
                let mmin = if nn < k + 3 { nn } else { k + 3 } as usize;
                for i in l as usize..=mmin {
                    let mut pi = x * a.get(i, ku) + y2 * a.get(i, ku + 1);
                    if k != nn - 1 {
                        pi += z2 * a.get(i, ku + 2);
                        let v = a.get(i, ku + 2) - pi * r;
                        a.set(i, ku + 2, v);
                    }
                    let v1 = a.get(i, ku + 1) - pi * q;
                    a.set(i, ku + 1, v1);
                    let v0 = a.get(i, ku) - pi;
                    a.set(i, ku, v0);
                }
            }
        }
    }
    Ok((1..=n).map(|i| (wr[i], wi[i])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_roots(p: &RealPolynomial, expected: &[f64], tol: f64) {
        let got = real_roots(p).unwrap();
        assert_eq!(got.len(), expected.len());
        let mut want = expected.to_vec();
        want.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() <= tol, "got {got:?} want {want:?}");
        }
    }

    #[test]
    fn quadratic_example() {
        // quadratic formula oracle: x^2 - 5.5x + 7 has roots 3.5 and 2
        let p = RealPolynomial::new(vec![7.0, -5.5, 1.0]);
        assert_roots(&p, &[3.5, 2.0], 1e-12);
    }

    #[test]
    fn unit_quadratic() {
        let p = RealPolynomial::new(vec![-1.0, 0.0, 1.0]);
        assert_roots(&p, &[1.0, -1.0], 1e-14);
    }

    #[test]
    fn cubic_printed_values() {
        let p = RealPolynomial::new(vec![-23.0, 31.5, -10.5, 1.0]);
        assert_roots(&p, &[5.632, 3.790, 1.077], 1e-3);
    }

    #[test]
    fn cubic_exact_roots() {
        let p = RealPolynomial::from_roots(&[-2.0, 0.5, 7.0]);
        assert_roots(&p, &[-2.0, 0.5, 7.0], 1e-10);
    }

    #[test]
    fn quartic_roots() {
        let p = RealPolynomial::from_roots(&[-3.25, -1.0, 2.0, 9.5]);
        assert_roots(&p, &[-3.25, -1.0, 2.0, 9.5], 1e-9);
    }

    #[test]
    fn double_root_quadratic() {
        let p = RealPolynomial::from_roots(&[4.0, 4.0]);
        assert_roots(&p, &[4.0, 4.0], 1e-10);
    }

    #[test]
    fn double_root_cubic() {
        let p = RealPolynomial::from_roots(&[5.0, 5.0, 4.0]);
        assert_roots(&p, &[5.0, 5.0, 4.0], 1e-9);
    }

    #[test]
    fn triple_root_cubic() {
        let p = RealPolynomial::from_roots(&[2.0, 2.0, 2.0]);
        assert_roots(&p, &[2.0, 2.0, 2.0], 1e-7);
    }

    #[test]
    fn two_double_roots_quartic() {
        let p = RealPolynomial::from_roots(&[3.5, 3.5, 2.0, 2.0]);
        assert_roots(&p, &[3.5, 3.5, 2.0, 2.0], 1e-9);
    }

    #[test]
    fn close_distinct_roots_not_merged() {
        let p = RealPolynomial::from_roots(&[1.0, 1.0 + 1e-4, 5.0]);
        let got = real_roots(&p).unwrap();
        assert!((got[0] - 5.0).abs() < 1e-9);
        assert!((got[1] - (1.0 + 1e-4)).abs() < 2e-7, "{got:?}");
        assert!((got[2] - 1.0).abs() < 2e-7, "{got:?}");
    }

    #[test]
    fn complex_roots_rejected() {
        let p = RealPolynomial::new(vec![1.0, 0.0, 1.0]); // x^2 + 1
        assert!(matches!(
            real_roots(&p),
            Err(Error::NumericInconsistency(_))
        ));
        let p = RealPolynomial::new(vec![1.0, 0.0, 0.0, 0.0, 1.0]); // x^4 + 1
        assert!(matches!(
            real_roots(&p),
            Err(Error::NumericInconsistency(_))
        ));
    }

    #[test]
    fn degree_out_of_range() {
        let p = RealPolynomial::new(vec![3.0]);
        assert!(real_roots(&p).is_err());
        let p = RealPolynomial::from_roots(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        assert!(real_roots(&p).is_err());
    }

    #[test]
    fn eval_and_derivative() {
        let p = RealPolynomial::new(vec![1.0, -2.0, 3.0]); // 3x^2 - 2x + 1
        assert_eq!(p.eval(2.0), 9.0);
        assert_eq!(p.derivative().coefficients(), &[-2.0, 6.0]);
    }

    #[test]
    fn compensated_eval_beats_plain_near_multiple_root() {
        // (x-1)^4 at x = 1 + 2^-13: the exact value 2^-52 is smaller than
        // the plain Horner rounding noise; the compensated evaluation
        // recovers it to high relative accuracy
        let p = RealPolynomial::new(vec![1.0, -4.0, 6.0, -4.0, 1.0]);
        let x = 1.0 + (2f64).powi(-13);
        let exact = (2f64).powi(-52);
        let compensated = p.eval_compensated(x);
        assert!(
            (compensated - exact).abs() <= 1e-10 * exact,
            "{compensated} vs {exact}"
        );
    }

    #[test]
    fn simple_root_next_to_triple_root() {
        // the simple root sits 8.7e-3 from a triple root; its condition
        // number under coefficient rounding is about 4e6, so anything
        // within a few parts in 1e6 is the best f64 coefficients can carry
        let t = -6.769438619441881;
        let s = -6.760715376528259;
        let p = RealPolynomial::from_roots(&[s, t, t, t]);
        let got = real_roots(&p).unwrap();
        assert!((got[0] - s).abs() <= 5e-6, "{got:?}");
        for r in &got[1..] {
            assert!((r - t).abs() <= 5e-6, "{got:?}");
        }
    }

    #[test]
    fn quadruple_root() {
        let p = RealPolynomial::from_roots(&[2.0, 2.0, 2.0, 2.0]);
        assert_roots(&p, &[2.0, 2.0, 2.0, 2.0], 1e-7);
    }

    #[test]
    fn mul_matches_from_roots() {
        let a = RealPolynomial::from_roots(&[1.0, -2.0]);
        let b = RealPolynomial::from_roots(&[3.0]);
        let c = a.mul(&b);
        assert_eq!(c, RealPolynomial::from_roots(&[1.0, -2.0, 3.0]));
    }
}
