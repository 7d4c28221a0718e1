//! Zero-tolerance verification of the closed-form factorizations over the
//! rationals, for rational `alpha` and factor graphs whose alpha spectra
//! are rational.
//!
//! The factored form is assembled from the same coefficient builders as the
//! floating-point engine, but in exact arithmetic, and compared
//! coefficient-by-coefficient against the Faddeev-LeVerrier characteristic
//! polynomial of the assembled join matrix.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{
    charpoly_exact, rational_roots, Rational, RationalMatrix, RationalPolynomial,
};
use crate::graph::Graph;

use super::factors::{
    bipartite_quartic, g2_shift, pair_quadratic, regular_cubic, repeated_eigenvalue,
    t1_one_simple, Params,
};
use super::{AlphaParam, G2Class, JoinSpec};

/// Exact characteristic polynomial of the assembled alpha matrix of the
/// join graph.
pub fn exact_join_charpoly(spec: &JoinSpec, alpha: &Rational) -> Result<RationalPolynomial> {
    let joined = spec.join_graph()?;
    Ok(charpoly_exact(&RationalMatrix::alpha_matrix(&joined, alpha)))
}

/// Exact eigenvalues of the alpha matrix of `g`, sorted non-increasing.
/// Errors when the spectrum is not rational.
fn exact_alpha_spectrum(g: &Graph, alpha: &Rational) -> Result<Vec<Rational>> {
    let m = RationalMatrix::alpha_matrix(g, alpha);
    let p = charpoly_exact(&m);
    let alpha_f = alpha
        .to_f64()
        .ok_or_else(|| Error::Exact("alpha does not fit in f64".into()))?;
    let hints = super::alpha_spectrum_flat(g, AlphaParam::new(alpha_f)?)?;
    let mut roots = rational_roots(&p, &hints)?;
    roots.sort_by(|a, b| b.cmp(a));
    Ok(roots)
}

fn remove_perron_exact(values: &[Rational], t: &Rational) -> Result<Vec<Rational>> {
    let idx = values.iter().position(|v| v == t).ok_or_else(|| {
        Error::Exact(format!("Perron eigenvalue {t} not found in exact spectrum"))
    })?;
    let mut rest = values.to_vec();
    rest.remove(idx);
    Ok(rest)
}

/// Exact expanded closed-form characteristic polynomial of the join, for
/// regular or complete-bipartite `G2`.
pub fn exact_closed_form_charpoly(
    spec: &JoinSpec,
    alpha: &Rational,
) -> Result<RationalPolynomial> {
    let (n1, m1, n2) = (spec.g1().n(), spec.g1().edge_count(), spec.g2().n());
    let t1 = spec.t1();
    let kind = spec.kind();
    if n2 == 0 {
        return Err(Error::Exact("exact closed form needs a nonempty g2".into()));
    }
    if t1 == 1 && !(spec.g1().n() == 2 && spec.g1().edges() == [(0, 1)]) {
        return Err(Error::Exact(
            "the 1-regular closed form covers only the single-edge g1".into(),
        ));
    }
    let p: Params<Rational> = Params::new(alpha.clone(), t1, n1, m1, n2);
    let shift = g2_shift(kind, &p);

    let mut product = RationalPolynomial::one();

    if t1 >= 2 {
        let root = repeated_eigenvalue(kind, &p);
        product = product.mul(&RationalPolynomial::linear(&root).pow(m1 - n1));
        let lam1 = remove_perron_exact(
            &exact_alpha_spectrum(spec.g1(), alpha)?,
            &crate::exact::rat_int(t1 as i64),
        )?;
        for lam in &lam1 {
            let q = pair_quadratic(kind, &p, lam);
            product = product.mul(&RationalPolynomial::new(q.to_vec()));
        }
    } else {
        let simple = t1_one_simple(kind, &p);
        product = product.mul(&RationalPolynomial::linear(&simple));
    }

    match spec.g2_class() {
        G2Class::Regular { t2 } => {
            let lam2 = remove_perron_exact(
                &exact_alpha_spectrum(spec.g2(), alpha)?,
                &crate::exact::rat_int(t2 as i64),
            )?;
            for lam in &lam2 {
                let root = &shift + lam;
                product = product.mul(&RationalPolynomial::linear(&root));
            }
            let cubic = regular_cubic(kind, &p, &crate::exact::rat_int(t2 as i64));
            product = product.mul(&RationalPolynomial::new(cubic));
        }
        G2Class::CompleteBipartite { a, b } => {
            let alpha_a = alpha * crate::exact::rat_int(a as i64);
            let alpha_b = alpha * crate::exact::rat_int(b as i64);
            let root_a = &shift + alpha_a;
            let root_b = &shift + alpha_b;
            product = product.mul(&RationalPolynomial::linear(&root_a).pow(b - 1));
            product = product.mul(&RationalPolynomial::linear(&root_b).pow(a - 1));
            let quartic = bipartite_quartic(kind, &p, a, b);
            product = product.mul(&RationalPolynomial::new(quartic));
        }
        G2Class::Arbitrary => {
            return Err(Error::UnsupportedClass(
                "exact closed form needs a regular or complete-bipartite g2".into(),
            ));
        }
    }
    Ok(product)
}

/// Compares the exact closed-form product against the exact characteristic
/// polynomial of the assembled join matrix, coefficient by coefficient.
/// Returns the two polynomials' agreement; any mismatch is a hard failure
/// of the factorization, not a rounding artifact.
pub fn exact_theorem_identity(spec: &JoinSpec, alpha: &Rational) -> Result<bool> {
    let assembled = exact_join_charpoly(spec, alpha)?;
    let factored = exact_closed_form_charpoly(spec, alpha)?;
    Ok(assembled == factored)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::{build_family, JoinKind};

    fn family(desc: &str) -> Graph {
        build_family(desc.parse().unwrap()).unwrap()
    }

    #[test]
    fn exact_identity_qvertex_k3_c3() {
        let spec = JoinSpec::with_auto_class(JoinKind::QVertex, family("complete:3"), family("cycle:3"))
            .unwrap();
        assert!(exact_theorem_identity(&spec, &rat(1, 3)).unwrap());
    }

    #[test]
    fn exact_identity_all_kinds_k4_k2() {
        for kind in JoinKind::ALL {
            let spec = JoinSpec::with_auto_class(kind, family("complete:4"), family("complete:2"))
                .unwrap();
            assert!(
                exact_theorem_identity(&spec, &rat(1, 2)).unwrap(),
                "failed for {kind}"
            );
        }
    }

    #[test]
    fn exact_identity_bipartite_route() {
        let spec = JoinSpec::new(
            JoinKind::QEdge,
            family("complete:3"),
            family("cbipartite:2,2"),
            G2Class::CompleteBipartite { a: 2, b: 2 },
        )
        .unwrap();
        assert!(exact_theorem_identity(&spec, &rat(1, 4)).unwrap());
    }

    #[test]
    fn exact_identity_tedge_bipartite() {
        let spec = JoinSpec::new(
            JoinKind::TEdge,
            family("complete:4"),
            family("cbipartite:1,2"),
            G2Class::CompleteBipartite { a: 1, b: 2 },
        )
        .unwrap();
        assert!(exact_theorem_identity(&spec, &rat(1, 5)).unwrap());
    }

    #[test]
    fn exact_identity_t1_one() {
        let spec =
            JoinSpec::with_auto_class(JoinKind::TVertex, family("path:2"), family("complete:3"))
                .unwrap();
        assert!(exact_theorem_identity(&spec, &rat(2, 5)).unwrap());
    }

    #[test]
    fn exact_rejects_irrational_spectrum() {
        // C5 has an irrational adjacency spectrum
        let spec = JoinSpec::with_auto_class(JoinKind::QVertex, family("cycle:5"), family("complete:2"))
            .unwrap();
        assert!(matches!(
            exact_closed_form_charpoly(&spec, &rat(1, 2)),
            Err(Error::Exact(_))
        ));
    }
}
