//! Per-kind coefficient builders for the closed-form characteristic
//! polynomial factorizations of the four joins.
//!
//! Every factorization is assembled from the same four ingredients:
//!
//! * a repeated linear factor with exponent `m1 - n1`,
//! * the shifted spectrum of `G2` (shift `alpha n1` for vertex kinds,
//!   `alpha m1` for edge kinds),
//! * one quadratic per non-Perron eigenvalue of the alpha matrix of `G1`,
//! * a final factor `B0(nu) - W (1-alpha)^2 Lc(nu) * coronal(nu - shift)`,
//!   where `B0` and `Lc` are kind-specific polynomials and `W` is `n1`
//!   (vertex kinds) or `m1` (edge kinds).
//!
//! For regular `G2` the coronal is `n2 / (nu - shift - t2)` and the final
//! factor clears to a cubic; for `K_{a,b}` it is a ratio of the closed-form
//! numerator and denominator and the final factor clears to a quartic. The
//! builders are generic over the scalar so the floating-point engine and the
//! zero-tolerance exact mode share one source of truth.

use std::ops::{Add, Mul, Neg, Sub};

use crate::exact::Rational;
use crate::graph::JoinKind;

/// Scalar ring the builders are generic over.
pub(crate) trait Coef:
    Clone
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(v: i64) -> Self;
}

impl Coef for f64 {
    fn from_int(v: i64) -> f64 {
        v as f64
    }
}

impl Coef for Rational {
    fn from_int(v: i64) -> Rational {
        crate::exact::rat_int(v)
    }
}

/// Join parameters lifted into the scalar type. `m1` always equals
/// `n1 t1 / 2` (twice the edge count is the degree sum of a regular graph),
/// so `t1 n1 / 2` terms are written as `m1` and stay in the ring.
#[derive(Clone)]
pub(crate) struct Params<T> {
    pub alpha: T,
    pub t1: T,
    pub n1: T,
    pub m1: T,
    pub n2: T,
}

impl<T: Coef> Params<T> {
    pub fn new(alpha: T, t1: usize, n1: usize, m1: usize, n2: usize) -> Params<T> {
        Params {
            alpha,
            t1: T::from_int(t1 as i64),
            n1: T::from_int(n1 as i64),
            m1: T::from_int(m1 as i64),
            n2: T::from_int(n2 as i64),
        }
    }

    fn one_minus_alpha_sq(&self) -> T {
        let om = T::from_int(1) - self.alpha.clone();
        om.clone() * om
    }

    /// `n1` for vertex kinds, `m1` for edge kinds: the size of the block
    /// joined to `G2`.
    fn weight(&self, kind: JoinKind) -> T {
        if kind.connects_inserted() {
            self.m1.clone()
        } else {
            self.n1.clone()
        }
    }
}

fn int<T: Coef>(v: i64) -> T {
    T::from_int(v)
}

/// Multiplies two coefficient slices (ascending order).
pub(crate) fn poly_mul<T: Coef>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![int::<T>(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn poly_sub<T: Coef>(a: Vec<T>, b: &[T]) -> Vec<T> {
    let mut out = a;
    if out.len() < b.len() {
        out.resize(b.len(), int::<T>(0));
    }
    for (o, y) in out.iter_mut().zip(b.iter()) {
        *o = o.clone() - y.clone();
    }
    out
}

fn poly_scale<T: Coef>(a: &[T], c: &T) -> Vec<T> {
    a.iter().map(|x| x.clone() * c.clone()).collect()
}

/// The monic linear polynomial `nu + c0` as `[c0, 1]`.
fn lin<T: Coef>(c0: T) -> [T; 2] {
    [c0, int(1)]
}

/// Shift applied to the spectrum and coronal argument of `G2`:
/// `alpha n1` for vertex kinds, `alpha m1` for edge kinds.
pub(crate) fn g2_shift<T: Coef>(kind: JoinKind, p: &Params<T>) -> T {
    p.alpha.clone() * p.weight(kind)
}

/// Root of the repeated linear factor carrying multiplicity `m1 - n1`.
pub(crate) fn repeated_eigenvalue<T: Coef>(kind: JoinKind, p: &Params<T>) -> T {
    let a = &p.alpha;
    match kind {
        // 2 alpha (1 + t1) - 2
        JoinKind::QVertex | JoinKind::TVertex => {
            int::<T>(2) * a.clone() * (int::<T>(1) + p.t1.clone()) - int(2)
        }
        // alpha (2 t1 + n2 + 2) - 2
        JoinKind::QEdge | JoinKind::TEdge => {
            a.clone() * (int::<T>(2) * p.t1.clone() + p.n2.clone() + int(2)) - int(2)
        }
    }
}

/// Simple eigenvalue replacing the repeated factor and the quadratic list
/// when `t1 = 1` (so `G1` is the single-edge graph).
pub(crate) fn t1_one_simple<T: Coef>(kind: JoinKind, p: &Params<T>) -> T {
    let a = &p.alpha;
    match kind {
        JoinKind::QVertex => a.clone() * (int::<T>(1) + p.n2.clone()),
        JoinKind::QEdge => a.clone(),
        JoinKind::TVertex => a.clone() * (int::<T>(3) + p.n2.clone()) - int(1),
        JoinKind::TEdge => int::<T>(3) * a.clone() - int(1),
    }
}

/// The monic quadratic attached to each eigenvalue `lambda` of the alpha
/// matrix of `G1` other than the Perron value `t1`. Ascending coefficients.
pub(crate) fn pair_quadratic<T: Coef>(kind: JoinKind, p: &Params<T>, lambda: &T) -> [T; 3] {
    let a = p.alpha.clone();
    let t1 = p.t1.clone();
    let n2 = p.n2.clone();
    let lam = lambda.clone();
    match kind {
        JoinKind::QVertex => {
            // nu^2 - (t1 - 2 + lam + a(2 + t1 + n2)) nu
            //      - 2 a n2 (1 - a) - (1 - a(1 + t1 + n2))(t1 + lam)
            let c1 = -(t1.clone() - int::<T>(2)
                + lam.clone()
                + a.clone() * (int::<T>(2) + t1.clone() + n2.clone()));
            let c0 = -(int::<T>(2) * a.clone() * n2.clone() * (int::<T>(1) - a.clone()))
                - (int::<T>(1) - a.clone() * (int::<T>(1) + t1.clone() + n2.clone()))
                    * (t1.clone() + lam.clone());
            [c0, c1, int(1)]
        }
        JoinKind::QEdge => {
            // nu^2 - (a(t1 + n2 + 2) + t1 - 2 + lam) nu
            //      + a^2 t1 n2 + (a(t1 + 1) - 1)(t1 + lam)
            let c1 = -(a.clone() * (t1.clone() + n2.clone() + int(2)) + t1.clone() - int::<T>(2)
                + lam.clone());
            let c0 = a.clone() * a.clone() * t1.clone() * n2.clone()
                + (a.clone() * (t1.clone() + int(1)) - int::<T>(1)) * (t1.clone() + lam.clone());
            [c0, c1, int(1)]
        }
        JoinKind::TVertex => {
            // nu^2 + (2 - t1 - 2a - a t1 - a n2 - 2 lam) nu
            //      - (1 - a)(t1 - 2 a t1 + lam)
            //      + (a t1 + a n2 + lam)(t1 - 2 + 2a + lam)
            let c1 = int::<T>(2)
                - t1.clone()
                - int::<T>(2) * a.clone()
                - a.clone() * t1.clone()
                - a.clone() * n2.clone()
                - int::<T>(2) * lam.clone();
            let c0 = -(int::<T>(1) - a.clone())
                * (t1.clone() - int::<T>(2) * a.clone() * t1.clone() + lam.clone())
                + (a.clone() * t1.clone() + a.clone() * n2.clone() + lam.clone())
                    * (t1.clone() - int::<T>(2) + int::<T>(2) * a.clone() + lam.clone());
            [c0, c1, int(1)]
        }
        JoinKind::TEdge => {
            // nu^2 + (2 - t1 - 2a - a t1 - a n2 - 2 lam) nu
            //      - t1 (1 - a)(1 - 3a)
            //      + (a t1 + lam)(t1 - 3 + 3a + a n2 + lam)
            let c1 = int::<T>(2)
                - t1.clone()
                - int::<T>(2) * a.clone()
                - a.clone() * t1.clone()
                - a.clone() * n2.clone()
                - int::<T>(2) * lam.clone();
            let c0 = -(t1.clone()
                * (int::<T>(1) - a.clone())
                * (int::<T>(1) - int::<T>(3) * a.clone()))
                + (a.clone() * t1.clone() + lam.clone())
                    * (t1.clone() - int::<T>(3)
                        + int::<T>(3) * a.clone()
                        + a.clone() * n2.clone()
                        + lam.clone());
            [c0, c1, int(1)]
        }
    }
}

/// The coronal-free part `B0` of the final factor (degree 2, ascending).
fn b0_poly<T: Coef>(kind: JoinKind, p: &Params<T>) -> Vec<T> {
    let a = p.alpha.clone();
    let t1 = p.t1.clone();
    let n2 = p.n2.clone();
    let omsq = p.one_minus_alpha_sq();
    match kind {
        JoinKind::QVertex => {
            // (nu - a t1 - a n2)(nu + 2 - 2a - 2 t1) - 2 t1 (1 - a)^2
            let l1 = lin::<T>(-(a.clone() * t1.clone() + a.clone() * n2.clone()));
            let l2 = lin::<T>(int::<T>(2) - int::<T>(2) * a.clone() - int::<T>(2) * t1.clone());
            poly_sub(
                poly_mul(&l1, &l2),
                &[int::<T>(2) * t1.clone() * omsq.clone()],
            )
        }
        JoinKind::QEdge => {
            // (nu - a t1)(nu - 2a t1 - a n2)
            //   - (1 - a)(2 t1 - 2)(nu - a t1 + 1 - a) - 2 (1 - a)^2
            let l1 = lin::<T>(-(a.clone() * t1.clone()));
            let l2 = lin::<T>(
                -(int::<T>(2) * a.clone() * t1.clone() + a.clone() * n2.clone()),
            );
            let om = int::<T>(1) - a.clone();
            let coeff = om.clone() * (int::<T>(2) * t1.clone() - int::<T>(2));
            let l3 = lin::<T>(-(a.clone() * t1.clone()) + int::<T>(1) - a.clone());
            let mut out = poly_sub(poly_mul(&l1, &l2), &poly_scale(&l3, &coeff));
            out = poly_sub(out, &[int::<T>(2) * omsq.clone()]);
            out
        }
        JoinKind::TVertex => {
            // (nu - t1 - a t1 - a n2)(nu + 2 - 2a - 2 t1) - 2 t1 (1 - a)^2
            let l1 = lin::<T>(
                -(t1.clone() + a.clone() * t1.clone() + a.clone() * n2.clone()),
            );
            let l2 = lin::<T>(int::<T>(2) - int::<T>(2) * a.clone() - int::<T>(2) * t1.clone());
            poly_sub(
                poly_mul(&l1, &l2),
                &[int::<T>(2) * t1.clone() * omsq.clone()],
            )
        }
        JoinKind::TEdge => {
            // (nu - t1 - a t1)(nu + 2 - 2a - 2 t1 - a n2) - 2 t1 (1 - a)^2
            let l1 = lin::<T>(-(t1.clone() + a.clone() * t1.clone()));
            let l2 = lin::<T>(
                int::<T>(2)
                    - int::<T>(2) * a.clone()
                    - int::<T>(2) * t1.clone()
                    - a.clone() * n2.clone(),
            );
            poly_sub(
                poly_mul(&l1, &l2),
                &[int::<T>(2) * t1.clone() * omsq.clone()],
            )
        }
    }
}

/// The degree-1 polynomial multiplying `W (1-alpha)^2 coronal` in the final
/// factor.
fn lc_poly<T: Coef>(kind: JoinKind, p: &Params<T>) -> [T; 2] {
    let a = p.alpha.clone();
    let t1 = p.t1.clone();
    match kind {
        JoinKind::QVertex | JoinKind::TVertex => {
            lin(int::<T>(2) - int::<T>(2) * a.clone() - int::<T>(2) * t1.clone())
        }
        JoinKind::QEdge => lin(-(a.clone() * t1.clone())),
        JoinKind::TEdge => lin(-(t1.clone() + a.clone() * t1.clone())),
    }
}

/// Scalar pieces of the final factor for evaluating the full theorem form
/// at a point with a numerically computed coronal:
/// `B0(nu) - W (1-alpha)^2 Lc(nu) * coronal_value`.
pub(crate) fn final_factor_at(
    kind: JoinKind,
    p: &Params<f64>,
    nu: f64,
    coronal_value: f64,
) -> f64 {
    let b0 = b0_poly(kind, p);
    let lc = lc_poly(kind, p);
    let eval = |c: &[f64]| c.iter().rev().fold(0.0, |acc, &v| acc * nu + v);
    eval(&b0) - p.weight(kind) * p.one_minus_alpha_sq() * eval(&lc) * coronal_value
}

/// Cubic final factor for regular `G2` with degree `t2`:
/// `B0 (nu - shift - t2) - W (1-alpha)^2 n2 Lc`, ascending coefficients.
pub(crate) fn regular_cubic<T: Coef>(kind: JoinKind, p: &Params<T>, t2: &T) -> Vec<T> {
    let b0 = b0_poly(kind, p);
    let lc = lc_poly(kind, p);
    let pole = lin::<T>(-(g2_shift(kind, p) + t2.clone()));
    let scale = p.weight(kind) * p.one_minus_alpha_sq() * p.n2.clone();
    poly_sub(poly_mul(&b0, &pole), &poly_scale(&lc, &scale))
}

/// Quartic final factor for `G2 = K_{a,b}`:
/// `B0 * D2(nu - shift) - W (1-alpha)^2 Lc * N2(nu - shift)` where `N2/D2`
/// is the closed-form coronal of `K_{a,b}`. Ascending coefficients.
pub(crate) fn bipartite_quartic<T: Coef>(
    kind: JoinKind,
    p: &Params<T>,
    a_part: usize,
    b_part: usize,
) -> Vec<T> {
    let b0 = b0_poly(kind, p);
    let lc = lc_poly(kind, p);
    let s = g2_shift(kind, p);
    let alpha = p.alpha.clone();
    let n2 = p.n2.clone();
    let ab = int::<T>(a_part as i64) * int::<T>(b_part as i64);
    // D2(x) = x^2 - alpha n2 x + (2 alpha - 1) ab at x = nu - s
    let d2 = [
        s.clone() * s.clone()
            + alpha.clone() * n2.clone() * s.clone()
            + (int::<T>(2) * alpha.clone() - int::<T>(1)) * ab.clone(),
        -(int::<T>(2) * s.clone() + alpha.clone() * n2.clone()),
        int(1),
    ];
    // N2(x) = n2 x - alpha n2^2 + 2 ab at x = nu - s
    let n2_shifted = [
        -(n2.clone() * s.clone()) - alpha.clone() * n2.clone() * n2.clone()
            + int::<T>(2) * ab.clone(),
        n2.clone(),
    ];
    let scale = p.weight(kind) * p.one_minus_alpha_sq();
    poly_sub(
        poly_mul(&b0, &d2),
        &poly_scale(&poly_mul(&lc, &n2_shifted), &scale),
    )
}
