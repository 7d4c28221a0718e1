//! Alpha-matrix assembly, the closed-form spectrum engine for the four
//! joins, pointwise theorem-form characteristic-polynomial evaluation for
//! arbitrary second factors, and spectrum comparison.
//!
//! Two independent routes produce the spectrum of a join:
//!
//! * [`direct_join_spectrum`] builds the join graph, assembles its alpha
//!   matrix, and runs the dense eigensolver (the oracle);
//! * [`closed_form_spectrum`] never touches the join matrix and instead
//!   assembles the factored spectrum from `n1`, `m1`, `t1`, the alpha
//!   spectrum of `G1`, and either the regularity or the bipartite part
//!   sizes of `G2`.
//!
//! Their agreement is the correctness argument for both.

mod exact;
mod factors;

pub use exact::{exact_closed_form_charpoly, exact_join_charpoly, exact_theorem_identity};

use serde::Serialize;

use crate::eigen::{sym_eigenvalues, Spectrum};
use crate::error::{Error, Result};
use crate::graph::{build_family, join, Family, Graph, JoinKind};
use crate::matrix::{alpha_matrix_of, coronal_numeric, det_shifted, DenseSymMatrix};
use crate::poly::{real_roots, RealPolynomial};

use factors::Params;

/// Tolerance used when removing the Perron eigenvalue `t1` from the alpha
/// spectrum of a regular graph; a larger gap means the input was not
/// actually regular.
pub const PERRON_TOL: f64 = 1e-6;

/// Interpolation parameter of the alpha matrix, confined to `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub fn new(value: f64) -> Result<AlphaParam> {
        if (0.0..=1.0).contains(&value) {
            Ok(AlphaParam(value))
        } else {
            Err(Error::InvalidParameter(format!(
                "alpha must lie in [0, 1], got {value}"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `alpha D(G) + (1 - alpha) A(G)`.
pub fn alpha_matrix(g: &Graph, alpha: AlphaParam) -> DenseSymMatrix {
    alpha_matrix_of(g, alpha.value()).expect("alpha matrix construction is symmetric")
}

/// Classification of the second factor that selects the closed-form branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum G2Class {
    Regular { t2: usize },
    CompleteBipartite { a: usize, b: usize },
    Arbitrary,
}

/// A joined pair with a validated regular first factor.
#[derive(Clone, Debug)]
pub struct JoinSpec {
    kind: JoinKind,
    g1: Graph,
    g2: Graph,
    g2_class: G2Class,
    t1: usize,
}

impl JoinSpec {
    /// Validates that `g1` is regular with degree at least 1 and at least
    /// one edge, and that `g2_class` matches `g2`.
    pub fn new(kind: JoinKind, g1: Graph, g2: Graph, g2_class: G2Class) -> Result<JoinSpec> {
        let t1 = g1.regularity().ok_or_else(|| {
            Error::Precondition("g1 must be regular for the closed-form theorems".into())
        })?;
        if t1 < 1 || g1.edge_count() == 0 {
            return Err(Error::Precondition(
                "g1 must have regularity at least 1 (at least one edge)".into(),
            ));
        }
        match g2_class {
            G2Class::Regular { t2 } => {
                if g2.regularity() != Some(t2) {
                    return Err(Error::Precondition(format!(
                        "g2 is not {t2}-regular (degrees {:?})",
                        g2.degrees()
                    )));
                }
            }
            G2Class::CompleteBipartite { a, b } => {
                let canonical = build_family(Family::CompleteBipartite(a, b))?;
                if g2 != canonical {
                    return Err(Error::Precondition(format!(
                        "g2 is not the canonical complete bipartite graph with parts {a}, {b}"
                    )));
                }
            }
            G2Class::Arbitrary => {}
        }
        Ok(JoinSpec {
            kind,
            g1,
            g2,
            g2_class,
            t1,
        })
    }

    /// Picks `Regular` when `g2` is regular, otherwise `Arbitrary`.
    pub fn with_auto_class(kind: JoinKind, g1: Graph, g2: Graph) -> Result<JoinSpec> {
        let class = match g2.regularity() {
            Some(t2) => G2Class::Regular { t2 },
            None => G2Class::Arbitrary,
        };
        JoinSpec::new(kind, g1, g2, class)
    }

    pub fn kind(&self) -> JoinKind {
        self.kind
    }

    pub fn g1(&self) -> &Graph {
        &self.g1
    }

    pub fn g2(&self) -> &Graph {
        &self.g2
    }

    pub fn g2_class(&self) -> G2Class {
        self.g2_class
    }

    pub fn t1(&self) -> usize {
        self.t1
    }

    /// Builds the join graph itself.
    pub fn join_graph(&self) -> Result<Graph> {
        join(self.kind, &self.g1, &self.g2)
    }

    fn dims(&self) -> (usize, usize, usize) {
        (self.g1.n(), self.g1.edge_count(), self.g2.n())
    }
}

/// Oracle path: construct the join, assemble its alpha matrix, eigensolve.
pub fn direct_join_spectrum(
    spec: &JoinSpec,
    alpha: AlphaParam,
    cluster_tol: Option<f64>,
) -> Result<Spectrum> {
    let graph = spec.join_graph()?;
    let m = alpha_matrix(&graph, alpha);
    sym_eigenvalues(&m, cluster_tol)
}

/// One explicit eigenvalue of a closed-form spectrum. Multiplicity may be
/// zero (for instance the repeated factor when `m1 = n1`); such entries are
/// dropped when flattening.
#[derive(Clone, Debug, Serialize)]
pub struct ExplicitEigenvalue {
    pub value: f64,
    pub multiplicity: usize,
    pub clause: String,
}

/// A polynomial factor whose roots enter the spectrum `multiplicity` times
/// each.
#[derive(Clone, Debug, Serialize)]
pub struct FactorRoots {
    pub polynomial: RealPolynomial,
    pub multiplicity: usize,
    pub clause: String,
}

/// Structured spectrum produced by the closed-form engine: explicit
/// eigenvalues plus quadratic/cubic/quartic factors, each tagged with the
/// clause of the factorization it came from.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormSpectrum {
    pub explicit: Vec<ExplicitEigenvalue>,
    pub factor_roots: Vec<FactorRoots>,
    /// Dimension of the join, `n1 + m1 + n2`.
    pub dim: usize,
}

impl ClosedFormSpectrum {
    /// Total multiplicity carried by the structure; always equals `dim`.
    pub fn total_multiplicity(&self) -> usize {
        let explicit: usize = self.explicit.iter().map(|e| e.multiplicity).sum();
        let factors: usize = self
            .factor_roots
            .iter()
            .map(|f| f.polynomial.degree() * f.multiplicity)
            .sum();
        explicit + factors
    }

    /// Solves every factor and merges the result into a full [`Spectrum`].
    /// The default clustering tolerance is `1e-8 * max(1, |largest value|)`.
    pub fn flatten(&self, cluster_tol: Option<f64>) -> Result<Spectrum> {
        let mut tagged: Vec<(f64, Option<String>)> = Vec::with_capacity(self.dim);
        for e in &self.explicit {
            tagged.extend(std::iter::repeat_n((e.value, Some(e.clause.clone())), e.multiplicity));
        }
        for f in &self.factor_roots {
            let roots = real_roots(&f.polynomial)?;
            for _ in 0..f.multiplicity {
                for &r in &roots {
                    tagged.push((r, Some(f.clause.clone())));
                }
            }
        }
        let tol = cluster_tol.unwrap_or_else(|| {
            let scale = tagged.iter().fold(1.0f64, |m, (v, _)| m.max(v.abs()));
            1e-8 * scale
        });
        let spectrum = Spectrum::from_tagged(tagged, tol);
        if spectrum.dim() != self.dim {
            return Err(Error::NumericInconsistency(format!(
                "flattened spectrum has dimension {}, expected {}",
                spectrum.dim(),
                self.dim
            )));
        }
        Ok(spectrum)
    }
}

/// Removes one copy of the Perron eigenvalue `t` from a non-increasing list
/// of eigenvalues, erroring if the closest value is farther than
/// [`PERRON_TOL`] (which catches accidentally irregular inputs).
fn remove_perron(values: &[f64], t: f64) -> Result<Vec<f64>> {
    let (idx, dev) = values
        .iter()
        .enumerate()
        .map(|(i, v)| (i, (v - t).abs()))
        .min_by(|a, b| a.1.partial_cmp(&b.1).expect("finite"))
        .ok_or_else(|| Error::Precondition("empty spectrum".into()))?;
    if dev > PERRON_TOL {
        return Err(Error::Precondition(format!(
            "expected Perron eigenvalue {t}, closest spectrum value differs by {dev:e}"
        )));
    }
    let mut rest = values.to_vec();
    rest.remove(idx);
    Ok(rest)
}

/// True when the graph is exactly the canonical single-edge graph, the only
/// 1-regular graph the corollary branches cover.
fn is_single_edge(g: &Graph) -> bool {
    g.n() == 2 && g.edges() == [(0, 1)]
}

fn alpha_spectrum_flat(g: &Graph, alpha: AlphaParam) -> Result<Vec<f64>> {
    let m = alpha_matrix(g, alpha);
    Ok(sym_eigenvalues(&m, None)?.flatten())
}

/// Closed-form spectrum of the join, assembled without constructing the
/// join matrix. Requires `G2` classified as regular or complete bipartite;
/// arbitrary second factors are served pointwise by
/// [`theorem_charpoly_eval`].
pub fn closed_form_spectrum(spec: &JoinSpec, alpha: AlphaParam) -> Result<ClosedFormSpectrum> {
    let (n1, m1, n2) = spec.dims();
    let t1 = spec.t1();
    let kind = spec.kind();
    if n2 == 0 {
        return Err(Error::Precondition(
            "closed-form spectrum needs a nonempty g2; use theorem_charpoly_eval for the degenerate join".into(),
        ));
    }
    if t1 == 1 && !is_single_edge(spec.g1()) {
        return Err(Error::Precondition(
            "the 1-regular closed form covers only the single-edge g1; route disjoint unions of edges through theorem_charpoly_eval".into(),
        ));
    }
    let prefix = clause_prefix(kind, spec.g2_class())?;
    let branch = if t1 == 1 { "a" } else { "b" };
    let tag = |item: &str| format!("{prefix}({branch})({item})");

    let p = Params::new(alpha.value(), t1, n1, m1, n2);
    let shift = factors::g2_shift(kind, &p);

    let mut explicit = Vec::new();
    let mut factor_roots = Vec::new();

    // Item (i): the repeated factor root for t1 >= 2, or the simple
    // eigenvalue absorbing the cancellation at t1 = 1.
    if t1 >= 2 {
        explicit.push(ExplicitEigenvalue {
            value: factors::repeated_eigenvalue(kind, &p),
            multiplicity: m1 - n1,
            clause: tag("i"),
        });
    } else {
        explicit.push(ExplicitEigenvalue {
            value: factors::t1_one_simple(kind, &p),
            multiplicity: 1,
            clause: tag("i"),
        });
    }

    match spec.g2_class() {
        G2Class::Regular { t2 } => {
            // Item (ii): shifted non-Perron eigenvalues of A_alpha(G2).
            let lam2 = remove_perron(&alpha_spectrum_flat(spec.g2(), alpha)?, t2 as f64)?;
            for lam in lam2 {
                explicit.push(ExplicitEigenvalue {
                    value: shift + lam,
                    multiplicity: 1,
                    clause: tag("ii"),
                });
            }
            // Quadratics per non-Perron eigenvalue of A_alpha(G1).
            if t1 >= 2 {
                let lam1 = remove_perron(&alpha_spectrum_flat(spec.g1(), alpha)?, t1 as f64)?;
                for lam in lam1 {
                    factor_roots.push(FactorRoots {
                        polynomial: RealPolynomial::new(
                            factors::pair_quadratic(kind, &p, &lam).to_vec(),
                        ),
                        multiplicity: 1,
                        clause: tag("iii"),
                    });
                }
            }
            // Final cubic.
            factor_roots.push(FactorRoots {
                polynomial: RealPolynomial::new(factors::regular_cubic(kind, &p, &(t2 as f64))),
                multiplicity: 1,
                clause: tag(if t1 >= 2 { "iv" } else { "iii" }),
            });
        }
        G2Class::CompleteBipartite { a, b } => {
            // Items (ii)/(iii): the shifted flat part of the K_{a,b} spectrum.
            explicit.push(ExplicitEigenvalue {
                value: shift + alpha.value() * a as f64,
                multiplicity: b - 1,
                clause: tag("ii"),
            });
            explicit.push(ExplicitEigenvalue {
                value: shift + alpha.value() * b as f64,
                multiplicity: a - 1,
                clause: tag("iii"),
            });
            if t1 >= 2 {
                let lam1 = remove_perron(&alpha_spectrum_flat(spec.g1(), alpha)?, t1 as f64)?;
                for lam in lam1 {
                    factor_roots.push(FactorRoots {
                        polynomial: RealPolynomial::new(
                            factors::pair_quadratic(kind, &p, &lam).to_vec(),
                        ),
                        multiplicity: 1,
                        clause: tag("iv"),
                    });
                }
            }
            // Final quartic.
            factor_roots.push(FactorRoots {
                polynomial: RealPolynomial::new(factors::bipartite_quartic(kind, &p, a, b)),
                multiplicity: 1,
                clause: tag(if t1 >= 2 { "v" } else { "iv" }),
            });
        }
        G2Class::Arbitrary => {
            return Err(Error::UnsupportedClass(
                "closed-form spectra exist for regular or complete-bipartite g2 only; use theorem_charpoly_eval for arbitrary g2".into(),
            ));
        }
    }

    let out = ClosedFormSpectrum {
        explicit,
        factor_roots,
        dim: n1 + m1 + n2,
    };
    if out.total_multiplicity() != out.dim {
        return Err(Error::NumericInconsistency(format!(
            "multiplicity ledger mismatch: {} vs dim {}",
            out.total_multiplicity(),
            out.dim
        )));
    }
    Ok(out)
}

fn clause_prefix(kind: JoinKind, class: G2Class) -> Result<String> {
    let family = match kind {
        JoinKind::QVertex => "Cor1",
        JoinKind::QEdge => "Cor2",
        JoinKind::TVertex => "Cor10",
        JoinKind::TEdge => "Cor11",
    };
    let variant = match class {
        G2Class::Regular { .. } => ".1",
        G2Class::CompleteBipartite { .. } => ".2",
        G2Class::Arbitrary => {
            return Err(Error::UnsupportedClass(
                "no closed-form clause family for arbitrary g2".into(),
            ))
        }
    };
    Ok(format!("{family}{variant}"))
}

/// Evaluates the full factored characteristic polynomial of the join at a
/// point `nu`, for arbitrary `G2`. The coronal of `A_alpha(G2)` is computed
/// numerically, so `nu` must avoid its poles (and, when `m1 < n1`, the root
/// of the repeated factor).
pub fn theorem_charpoly_eval(spec: &JoinSpec, alpha: AlphaParam, nu: f64) -> Result<f64> {
    let (n1, m1, n2) = spec.dims();
    let t1 = spec.t1();
    let kind = spec.kind();
    let p = Params::new(alpha.value(), t1, n1, m1, n2);

    let lam1 = remove_perron(&alpha_spectrum_flat(spec.g1(), alpha)?, t1 as f64)?;
    let base = nu - factors::repeated_eigenvalue(kind, &p);
    let exponent = m1 as i64 - n1 as i64;
    if exponent < 0 && base.abs() <= 1e-9 * nu.abs().max(1.0) {
        return Err(Error::PoleAtNu {
            nu,
            condition: f64::INFINITY,
            limit: crate::matrix::CORONAL_CONDITION_LIMIT,
            nearest_eigenvalue_gap: base.abs(),
        });
    }
    let power_term = base.powi(exponent as i32);

    let shift = factors::g2_shift(kind, &p);
    let (phi2, coronal) = if n2 == 0 {
        (1.0, 0.0)
    } else {
        let m2 = alpha_matrix(spec.g2(), alpha);
        (
            det_shifted(&m2, nu - shift),
            coronal_numeric(&m2, nu - shift)?,
        )
    };

    let quadratics: f64 = lam1
        .iter()
        .map(|lam| {
            let q = factors::pair_quadratic(kind, &p, lam);
            q.iter().rev().fold(0.0, |acc, &c| acc * nu + c)
        })
        .product();

    Ok(power_term * phi2 * quadratics * factors::final_factor_at(kind, &p, nu, coronal))
}

/// Result of comparing two spectra as flattened multisets.
#[derive(Clone, Debug, Serialize)]
pub struct SpectraComparison {
    pub equal: bool,
    pub max_deviation: f64,
    pub first_mismatch: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Flattens both spectra (repeating by multiplicity) and compares pairwise
/// at tolerance `tol`. A dimension mismatch is reported, not an error.
pub fn spectra_equal(s1: &Spectrum, s2: &Spectrum, tol: f64) -> SpectraComparison {
    let a = s1.flatten();
    let b = s2.flatten();
    if a.len() != b.len() {
        return SpectraComparison {
            equal: false,
            max_deviation: f64::INFINITY,
            first_mismatch: None,
            reason: Some(format!("dimension mismatch: {} vs {}", a.len(), b.len())),
        };
    }
    let mut max_deviation = 0.0f64;
    let mut first_mismatch = None;
    for (i, (x, y)) in a.iter().zip(&b).enumerate() {
        let dev = (x - y).abs();
        if dev > tol && first_mismatch.is_none() {
            first_mismatch = Some(i);
        }
        max_deviation = max_deviation.max(dev);
    }
    SpectraComparison {
        equal: first_mismatch.is_none(),
        max_deviation,
        first_mismatch,
        reason: None,
    }
}
