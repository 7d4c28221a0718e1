//! Python bindings: graphs, joins, alpha spectra (direct and closed form),
//! coronals, and cospectral certification.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use aalpha::alpha::{self, AlphaParam, G2Class, JoinSpec};
use aalpha::cospectral;
use aalpha::graph::{self, Family, JoinKind};
use aalpha::{eigen, lemmas, matrix};

fn to_py_err(e: aalpha::Error) -> PyErr {
    match e {
        aalpha::Error::InvalidParameter(_) | aalpha::Error::InvalidInput(_) | aalpha::Error::Parse(_) => {
            PyValueError::new_err(e.to_string())
        }
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn parse_kind(kind: &str) -> PyResult<JoinKind> {
    kind.parse().map_err(to_py_err)
}

/// Simple undirected graph with a canonical edge set.
#[pyclass(name = "Graph", frozen)]
#[derive(Clone)]
struct PyGraph {
    inner: graph::Graph,
}

#[pymethods]
impl PyGraph {
    /// Build from a family descriptor such as "complete:4", "path:3",
    /// "cycle:5", "cbipartite:2,3", "empty:3", or "petersen".
    #[staticmethod]
    fn family(descriptor: &str) -> PyResult<PyGraph> {
        let inner = match descriptor {
            "petersen" => graph::petersen(),
            "shrikhande" => cospectral::shrikhande(),
            "rook4" => cospectral::rook_4x4(),
            other => {
                graph::build_family(other.parse::<Family>().map_err(to_py_err)?).map_err(to_py_err)?
            }
        };
        Ok(PyGraph { inner })
    }

    /// Build from explicit edges.
    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<PyGraph> {
        Ok(PyGraph {
            inner: graph::Graph::new(n, edges).map_err(to_py_err)?,
        })
    }

    /// Parse the `n m` / `i j` edge-list text format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<PyGraph> {
        Ok(PyGraph {
            inner: graph::Graph::from_edge_list(text).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn regularity(&self) -> Option<usize> {
        self.inner.regularity()
    }

    fn line_graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.line_graph(),
        }
    }

    fn q_graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.q_graph(),
        }
    }

    fn total_graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.total_graph(),
        }
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

/// Join two graphs: kind is "qvertex", "qedge", "tvertex", or "tedge".
#[pyfunction]
fn join(kind: &str, g1: &PyGraph, g2: &PyGraph) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: graph::join(parse_kind(kind)?, &g1.inner, &g2.inner).map_err(to_py_err)?,
    })
}

fn spectrum_to_pairs(s: &eigen::Spectrum) -> Vec<(f64, usize)> {
    s.entries()
        .iter()
        .map(|e| (e.value, e.multiplicity))
        .collect()
}

/// Spectrum of the alpha matrix of a graph as (value, multiplicity) pairs,
/// sorted non-increasing.
#[pyfunction]
#[pyo3(signature = (g, alpha, cluster_tol=None))]
fn alpha_spectrum(g: &PyGraph, alpha: f64, cluster_tol: Option<f64>) -> PyResult<Vec<(f64, usize)>> {
    let a = AlphaParam::new(alpha).map_err(to_py_err)?;
    let m = alpha::alpha_matrix(&g.inner, a);
    let s = eigen::sym_eigenvalues(&m, cluster_tol).map_err(to_py_err)?;
    Ok(spectrum_to_pairs(&s))
}

fn make_spec(kind: &str, g1: &PyGraph, g2: &PyGraph, g2_class: Option<&str>) -> PyResult<JoinSpec> {
    let kind = parse_kind(kind)?;
    let class = match g2_class {
        None | Some("auto") => {
            return JoinSpec::with_auto_class(kind, g1.inner.clone(), g2.inner.clone())
                .map_err(to_py_err)
        }
        Some("arbitrary") => G2Class::Arbitrary,
        Some(desc) => {
            if let Some(rest) = desc.strip_prefix("cbipartite:") {
                let parts: Vec<usize> = rest
                    .split(',')
                    .map(|p| p.trim().parse())
                    .collect::<Result<_, _>>()
                    .map_err(|e| PyValueError::new_err(format!("bad bipartite class: {e}")))?;
                if parts.len() != 2 {
                    return Err(PyValueError::new_err("cbipartite class takes two parts"));
                }
                G2Class::CompleteBipartite {
                    a: parts[0],
                    b: parts[1],
                }
            } else if desc == "regular" {
                let t2 = g2.inner.regularity().ok_or_else(|| {
                    PyValueError::new_err("g2 is not regular")
                })?;
                G2Class::Regular { t2 }
            } else {
                return Err(PyValueError::new_err(format!(
                    "unknown g2_class `{desc}`; use auto, regular, arbitrary, or cbipartite:a,b"
                )));
            }
        }
    };
    JoinSpec::new(kind, g1.inner.clone(), g2.inner.clone(), class).map_err(to_py_err)
}

/// Oracle route: spectrum of the assembled join matrix.
#[pyfunction]
#[pyo3(signature = (kind, g1, g2, alpha, g2_class=None))]
fn join_spectrum_direct(
    kind: &str,
    g1: &PyGraph,
    g2: &PyGraph,
    alpha: f64,
    g2_class: Option<&str>,
) -> PyResult<Vec<(f64, usize)>> {
    let spec = make_spec(kind, g1, g2, g2_class)?;
    let a = AlphaParam::new(alpha).map_err(to_py_err)?;
    let s = alpha::direct_join_spectrum(&spec, a, None).map_err(to_py_err)?;
    Ok(spectrum_to_pairs(&s))
}

/// Closed-form route: (value, multiplicity, clause) triples assembled from
/// the factor spectra alone.
#[pyfunction]
#[pyo3(signature = (kind, g1, g2, alpha, g2_class=None))]
fn join_spectrum_closed(
    kind: &str,
    g1: &PyGraph,
    g2: &PyGraph,
    alpha: f64,
    g2_class: Option<&str>,
) -> PyResult<Vec<(f64, usize, String)>> {
    let spec = make_spec(kind, g1, g2, g2_class)?;
    let a = AlphaParam::new(alpha).map_err(to_py_err)?;
    let s = alpha::closed_form_spectrum(&spec, a)
        .and_then(|cf| cf.flatten(None))
        .map_err(to_py_err)?;
    Ok(s.entries()
        .iter()
        .map(|e| (e.value, e.multiplicity, e.clause.clone().unwrap_or_default()))
        .collect())
}

/// Factored characteristic polynomial of the join evaluated at `nu`
/// (arbitrary second factors allowed).
#[pyfunction]
fn theorem_charpoly_eval(kind: &str, g1: &PyGraph, g2: &PyGraph, alpha: f64, nu: f64) -> PyResult<f64> {
    let spec = make_spec(kind, g1, g2, Some("arbitrary"))?;
    let a = AlphaParam::new(alpha).map_err(to_py_err)?;
    alpha::theorem_charpoly_eval(&spec, a, nu).map_err(to_py_err)
}

/// Zero-tolerance check that the exact factored characteristic polynomial
/// of the join equals the characteristic polynomial of the assembled
/// matrix, for rational alpha = num/den.
#[pyfunction]
#[pyo3(signature = (kind, g1, g2, alpha_num, alpha_den, g2_class=None))]
fn exact_theorem_identity(
    kind: &str,
    g1: &PyGraph,
    g2: &PyGraph,
    alpha_num: i64,
    alpha_den: i64,
    g2_class: Option<&str>,
) -> PyResult<bool> {
    if alpha_den == 0 {
        return Err(PyValueError::new_err("alpha denominator must be nonzero"));
    }
    let spec = make_spec(kind, g1, g2, g2_class)?;
    alpha::exact_theorem_identity(&spec, &aalpha::exact::rat(alpha_num, alpha_den))
        .map_err(to_py_err)
}

/// Coronal `1^T (nu I - A_alpha(G))^{-1} 1`.
#[pyfunction]
fn coronal(g: &PyGraph, alpha: f64, nu: f64) -> PyResult<f64> {
    let a = AlphaParam::new(alpha).map_err(to_py_err)?;
    matrix::coronal_numeric(&alpha::alpha_matrix(&g.inner, a), nu).map_err(to_py_err)
}

/// Closed-form coronal of the complete bipartite graph.
#[pyfunction]
fn coronal_kab(a: usize, b: usize, alpha: f64, nu: f64) -> PyResult<f64> {
    lemmas::coronal_kab(a, b, alpha, nu).map_err(to_py_err)
}

fn certificate_to_dict<'py>(
    py: Python<'py>,
    c: &cospectral::CospectralCertificate,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("is_cospectral", c.is_cospectral)?;
    d.set_item("max_deviation", c.max_deviation)?;
    d.set_item("alphas_checked", c.alphas_checked.clone())?;
    d.set_item("tolerance", c.tolerance)?;
    d.set_item("nonisomorphic_evidence", c.nonisomorphic_evidence.as_str())?;
    d.set_item("note", c.note)?;
    if let Some(f) = &c.failure {
        d.set_item("failure", f.clone())?;
    }
    Ok(d)
}

/// Certify that two graphs share their alpha spectrum over a grid of
/// alphas.
#[pyfunction]
#[pyo3(signature = (g_a, g_b, alphas=None, tol=1e-7))]
fn verify_cospectral<'py>(
    py: Python<'py>,
    g_a: &PyGraph,
    g_b: &PyGraph,
    alphas: Option<Vec<f64>>,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let grid = alphas.unwrap_or_else(|| cospectral::default_alpha_grid(20260808));
    let cert =
        cospectral::verify_cospectral(&g_a.inner, &g_b.inner, &grid, tol).map_err(to_py_err)?;
    certificate_to_dict(py, &cert)
}

/// Join both members of a named catalog seed with `h` under the requested
/// kinds, returning one certificate dict per kind.
#[pyfunction]
#[pyo3(signature = (seed_name, h, kinds=None, alphas=None, tol=1e-7))]
fn generate_family<'py>(
    py: Python<'py>,
    seed_name: &str,
    h: &PyGraph,
    kinds: Option<Vec<String>>,
    alphas: Option<Vec<f64>>,
    tol: f64,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let seed = cospectral::seed_by_name(seed_name).map_err(to_py_err)?;
    let kinds: Vec<JoinKind> = match kinds {
        None => JoinKind::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|s| parse_kind(s))
            .collect::<PyResult<_>>()?,
    };
    let grid = alphas.unwrap_or_else(|| cospectral::default_alpha_grid(20260808));
    let entries = cospectral::generate_family(&seed, &h.inner, &kinds, &grid, tol)
        .map_err(to_py_err)?;
    entries
        .iter()
        .map(|e| {
            let d = certificate_to_dict(py, &e.certificate)?;
            d.set_item("kind", e.kind.to_string())?;
            d.set_item("join_n", e.join_a.n())?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn aalpha_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(join, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(join_spectrum_direct, m)?)?;
    m.add_function(wrap_pyfunction!(join_spectrum_closed, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_charpoly_eval, m)?)?;
    m.add_function(wrap_pyfunction!(exact_theorem_identity, m)?)?;
    m.add_function(wrap_pyfunction!(coronal, m)?)?;
    m.add_function(wrap_pyfunction!(coronal_kab, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cospectral, m)?)?;
    m.add_function(wrap_pyfunction!(generate_family, m)?)?;
    Ok(())
}
