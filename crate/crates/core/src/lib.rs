//! Alpha-matrix spectra of graph joins.
//!
//! For `alpha` in `[0, 1]` the alpha matrix of a graph is
//! `alpha D + (1 - alpha) A`, interpolating between the adjacency matrix,
//! half the signless Laplacian, and the degree matrix. This crate builds
//! the four joins obtained from the subdivision-with-incidence graph and
//! the total graph of a regular first factor (connecting either its
//! original or its inserted vertices to every vertex of a second factor),
//! and computes their alpha spectra two independent ways:
//!
//! * directly, with a deterministic cyclic-Jacobi eigensolver on the
//!   assembled join matrix;
//! * in closed form, from the spectra of the two factors alone, via the
//!   factored characteristic polynomials the joins satisfy when the second
//!   factor is regular or complete bipartite.
//!
//! Arbitrary second factors are covered by pointwise evaluation of the
//! factored characteristic polynomial, an exact rational mode verifies the
//! factorizations with zero tolerance, and a cospectral module generates
//! certified families of non-isomorphic cospectral graphs from seed pairs.

// index loops mirror the matrix notation throughout the numeric code
#![allow(clippy::needless_range_loop)]

pub mod alpha;
pub mod cli;
pub mod cospectral;
pub mod eigen;
pub mod error;
pub mod exact;
pub mod graph;
pub mod lemmas;
pub mod matrix;
pub mod poly;
pub mod rng;
pub mod verify;

pub use alpha::{
    alpha_matrix, closed_form_spectrum, direct_join_spectrum, spectra_equal,
    theorem_charpoly_eval, AlphaParam, ClosedFormSpectrum, G2Class, JoinSpec,
};
pub use eigen::{sym_eigenvalues, Spectrum};
pub use error::{Error, Result};
pub use graph::{build_family, join, petersen, Family, Graph, JoinKind};
pub use matrix::{coronal_numeric, DenseSymMatrix};
pub use poly::{real_roots, RealPolynomial};
