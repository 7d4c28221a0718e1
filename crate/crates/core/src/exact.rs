//! Exact-mode arithmetic: arbitrary-precision rational scalars, matrices,
//! exact characteristic polynomials via the Faddeev-LeVerrier recurrence,
//! rational-root extraction, and exact linear solves for coronal values.
//!
//! Everything here is zero-tolerance: identities verified in this module
//! hold coefficient-by-coefficient over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Reduced arbitrary-precision rational with positive denominator.
pub type Rational = BigRational;

pub fn rat(numerator: i64, denominator: i64) -> Rational {
    Rational::new(BigInt::from(numerator), BigInt::from(denominator))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `p/q`, plain integers, and finite decimals (`0.25`) exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad rational numerator `{num}`: {e}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad rational denominator `{den}`: {e}")))?;
        if d.is_zero() {
            return Err(Error::Parse("rational denominator is zero".into()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let digits = format!("{int_part}{frac_part}");
        let n: BigInt = digits
            .parse()
            .map_err(|e| Error::Parse(format!("bad decimal `{s}`: {e}")))?;
        let d = BigInt::from(10u32).pow(frac_part.len() as u32);
        return Ok(Rational::new(n, d));
    }
    let n: BigInt = s
        .parse()
        .map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")))?;
    Ok(Rational::from_integer(n))
}

/// Dense square matrix over the rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> RationalMatrix {
        RationalMatrix {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = RationalMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + a * b;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add_diagonal(&mut self, c: &Rational) {
        for i in 0..self.dim {
            let v = self.get(i, i) + c;
            self.set(i, i, v);
        }
    }

    /// `alpha D(G) + (1 - alpha) A(G)` over the rationals.
    pub fn alpha_matrix(g: &Graph, alpha: &Rational) -> RationalMatrix {
        let n = g.n();
        let degrees = g.degrees();
        let one_minus = Rational::one() - alpha;
        let mut m = RationalMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, alpha * rat_int(degrees[i] as i64));
        }
        for &(a, b) in g.edges() {
            m.set(a, b, one_minus.clone());
            m.set(b, a, one_minus.clone());
        }
        m
    }
}

/// Polynomial with rational coefficients, ascending degree order.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalPolynomial {
    coefficients: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> RationalPolynomial {
        while coefficients.len() > 1 && coefficients.last().map(Rational::is_zero) == Some(true) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(Rational::zero());
        }
        RationalPolynomial { coefficients }
    }

    pub fn one() -> RationalPolynomial {
        RationalPolynomial::new(vec![Rational::one()])
    }

    /// The monic linear factor `x - root`.
    pub fn linear(root: &Rational) -> RationalPolynomial {
        RationalPolynomial::new(vec![-root.clone(), Rational::one()])
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coefficients.last().map(Rational::is_one) == Some(true)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let mut out = vec![Rational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }

    pub fn pow(&self, e: usize) -> RationalPolynomial {
        let mut out = RationalPolynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient by `x - root`; errors if `root` is not a root.
    pub fn deflate(&self, root: &Rational) -> Result<RationalPolynomial> {
        let n = self.coefficients.len();
        if n < 2 {
            return Err(Error::Exact("cannot deflate a constant polynomial".into()));
        }
        let mut quotient = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for k in (0..n).rev() {
            let value = &self.coefficients[k] + &carry;
            if k == 0 {
                if !value.is_zero() {
                    return Err(Error::Exact(format!(
                        "{root} is not an exact root (remainder {value})"
                    )));
                }
            } else {
                carry = &value * root;
                quotient[k - 1] = value;
            }
        }
        Ok(RationalPolynomial::new(quotient))
    }

    pub fn to_f64_coefficients(&self) -> Vec<f64> {
        self.coefficients
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Exact monic characteristic polynomial `det(x I - M)` by the
/// Faddeev-LeVerrier recurrence.
pub fn charpoly_exact(m: &RationalMatrix) -> RationalPolynomial {
    let n = m.dim();
    // coefficients c_k of x^{n-k}; c_0 = 1
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = m.clone();
    for k in 1..=n {
        let ck = -mk.trace() / rat_int(k as i64);
        coeffs[n - k] = ck.clone();
        if k < n {
            mk.add_diagonal(&ck);
            mk = m.mul(&mk);
        }
    }
    RationalPolynomial::new(coeffs)
}

/// Best rational approximation of `x` by continued fractions, returning all
/// convergents with denominator up to `max_den`.
fn convergents(x: f64, max_den: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut a = x;
    let (mut h0, mut h1) = (BigInt::from(1), BigInt::from(a.floor() as i64));
    let (mut k0, mut k1) = (BigInt::from(0), BigInt::from(1));
    out.push(Rational::new(h1.clone(), k1.clone()));
    a -= a.floor();
    for _ in 0..64 {
        if a.abs() < 1e-18 {
            break;
        }
        a = 1.0 / a;
        let ai = a.floor();
        if !ai.is_finite() || ai >= 9.0e18 {
            break;
        }
        let ai_big = BigInt::from(ai as i64);
        let h2 = &ai_big * &h1 + &h0;
        let k2 = &ai_big * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            break;
        }
        out.push(Rational::new(h2.clone(), k2.clone()));
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        a -= ai;
    }
    out
}

/// Extracts all roots of a rational-coefficient polynomial that is known to
/// split over the rationals, guided by floating-point estimates of the
/// roots. Each candidate is verified exactly before deflation; if the
/// polynomial does not fully factor, an exact-mode error is returned.
pub fn rational_roots(p: &RationalPolynomial, hints: &[f64]) -> Result<Vec<Rational>> {
    if hints.len() != p.degree() {
        return Err(Error::Exact(format!(
            "need {} root hints, got {}",
            p.degree(),
            hints.len()
        )));
    }
    let mut remaining = p.clone();
    let mut roots = Vec::with_capacity(hints.len());
    for &hint in hints {
        let mut found = None;
        for candidate in convergents(hint, 1_000_000_000) {
            if remaining.eval(&candidate).is_zero() {
                found = Some(candidate);
                break;
            }
        }
        let root = found.ok_or_else(|| {
            Error::Exact(format!(
                "no rational root near {hint}; the spectrum is not rational"
            ))
        })?;
        remaining = remaining.deflate(&root)?;
        roots.push(root);
    }
    Ok(roots)
}

/// Exact Gaussian elimination solve of `a x = b`.
pub fn solve_exact(a: &RationalMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.dim();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| a.get(i, j).clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&i| !m[i][k].is_zero())
            .ok_or_else(|| Error::Exact("singular matrix in exact solve".into()))?;
        m.swap(k, pivot_row);
        let pivot = m[k][k].clone();
        for j in k..=n {
            m[k][j] = &m[k][j] / &pivot;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let factor = m[i][k].clone();
                for j in k..=n {
                    m[i][j] = &m[i][j] - &factor * &m[k][j];
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Exact coronal `1^T (nu I - M)^{-1} 1` over the rationals.
pub fn coronal_exact(m: &RationalMatrix, nu: &Rational) -> Result<Rational> {
    let n = m.dim();
    let mut shifted = RationalMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let v = if i == j {
                nu - m.get(i, j)
            } else {
                -m.get(i, j)
            };
            shifted.set(i, j, v);
        }
    }
    let ones = vec![Rational::one(); n];
    let x = solve_exact(&shifted, &ones)?;
    Ok(x.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;

    fn family(desc: &str) -> Graph {
        build_family(desc.parse().unwrap()).unwrap()
    }

    #[test]
    fn charpoly_k3_adjacency() {
        let m = RationalMatrix::alpha_matrix(&family("complete:3"), &rat_int(0));
        let p = charpoly_exact(&m);
        // x^3 - 3x - 2 (eigenvalues 2, -1, -1)
        let want = [rat_int(-2), rat_int(-3), rat_int(0), rat_int(1)];
        assert_eq!(p.coefficients(), &want);
    }

    #[test]
    fn charpoly_identity_2x2() {
        let p = charpoly_exact(&RationalMatrix::identity(2));
        let want = [rat_int(1), rat_int(-2), rat_int(1)];
        assert_eq!(p.coefficients(), &want);
    }

    #[test]
    fn charpoly_half_alpha_p2() {
        let m = RationalMatrix::alpha_matrix(&family("path:2"), &rat(1, 2));
        let p = charpoly_exact(&m);
        // x^2 - x (eigenvalues 1, 0)
        let want = [rat_int(0), rat_int(-1), rat_int(1)];
        assert_eq!(p.coefficients(), &want);
    }

    #[test]
    fn rational_root_extraction() {
        // (x - 2)(x - 1/3)^2
        let p = RationalPolynomial::linear(&rat_int(2))
            .mul(&RationalPolynomial::linear(&rat(1, 3)).pow(2));
        let roots = rational_roots(&p, &[2.0, 1.0 / 3.0, 0.3333333333333333]).unwrap();
        assert_eq!(roots, vec![rat_int(2), rat(1, 3), rat(1, 3)]);
    }

    #[test]
    fn rational_roots_rejects_irrational() {
        // x^2 - 2
        let p = RationalPolynomial::new(vec![rat_int(-2), rat_int(0), rat_int(1)]);
        assert!(rational_roots(&p, &[std::f64::consts::SQRT_2, -std::f64::consts::SQRT_2]).is_err());
    }

    #[test]
    fn exact_coronal_constant_row_sum() {
        // A(C4): coronal at 3 is 4/(3-2) = 4, exactly
        let m = RationalMatrix::alpha_matrix(&family("cycle:4"), &rat_int(0));
        let v = coronal_exact(&m, &rat_int(3)).unwrap();
        assert_eq!(v, rat_int(4));
    }

    #[test]
    fn exact_coronal_singular_is_error() {
        let m = RationalMatrix::alpha_matrix(&family("cycle:4"), &rat_int(0));
        assert!(coronal_exact(&m, &rat_int(2)).is_err());
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("2").unwrap(), rat_int(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn deflate_checks_remainder() {
        let p = RationalPolynomial::linear(&rat_int(2)).mul(&RationalPolynomial::linear(&rat_int(3)));
        assert!(p.deflate(&rat_int(2)).is_ok());
        assert!(p.deflate(&rat_int(5)).is_err());
    }

    #[test]
    fn charpoly_small_at_eigenvalues() {
        // float cross-check: the exact characteristic polynomial evaluated
        // at every eigensolver eigenvalue is zero to 1e-6 of the norm
        use crate::eigen::sym_eigenvalues;
        use crate::matrix::alpha_matrix_of;
        let mut rng = crate::rng::SplitMix64::new(31);
        for _ in 0..15 {
            let n = 2 + rng.below(6);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.next_f64() < 0.5 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let alpha_num = rng.below(5) as i64;
            let alpha = rat(alpha_num, 4);
            let p = charpoly_exact(&RationalMatrix::alpha_matrix(&g, &alpha));
            let coeffs = p.to_f64_coefficients();
            let norm: f64 = coeffs.iter().map(|c| c.abs()).sum();
            let m = alpha_matrix_of(&g, alpha_num as f64 / 4.0).unwrap();
            for lam in sym_eigenvalues(&m, Some(1e-12)).unwrap().flatten() {
                let value = coeffs.iter().rev().fold(0.0, |acc, &c| acc * lam + c);
                assert!(
                    value.abs() <= 1e-6 * norm.max(1.0),
                    "p({lam}) = {value} for n = {n}"
                );
            }
        }
    }

    #[test]
    fn charpoly_matches_eval() {
        // spot-check det(xI - M) via exact solve path for a small matrix
        let m = RationalMatrix::alpha_matrix(&family("cycle:4"), &rat(1, 3));
        let p = charpoly_exact(&m);
        assert!(p.is_monic());
        assert_eq!(p.degree(), 4);
        // eigenvalue t = 2/3*2 = row sum is 2 for cycle; alpha*2+(1-alpha)*2 = 2
        assert!(p.eval(&rat_int(2)).is_zero());
    }
}
