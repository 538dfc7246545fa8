//! Weighted adjacency matrices and their spectral radius, quotient matrices
//! of vertex partitions, and exact characteristic polynomials.

mod checks;
mod eigen;
mod matrix;
mod partition;
mod poly;

use serde::Serialize;

pub use checks::{check_u_bound, rho_of, verify_quotient_rho, verify_supergraph_monotone, STRICT_MARGIN};
pub use eigen::{rayleigh_bound, spectral_radius, symmetric_eigen, SpectralResult, DEFAULT_TOL};
pub use matrix::{weighted_adjacency, Provenance, WeightedMatrix};
pub use partition::{coarsest_equitable, coarsest_equitable_matrix, quotient, QuotientMatrix, VertexPartition};
pub use poly::{char_poly, largest_real_root, MAX_CHAR_POLY_ORDER};

use crate::error::Result;
use crate::graph::{canonical_certificate, Certificate, Graph};
use crate::numfmt;
use crate::weighting::WeightFunction;

/// Serialisable spectral summary of one graph under one weighting.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub certificate: Certificate,
    pub weighting: String,
    #[serde(with = "numfmt::sig")]
    pub rho: f64,
    #[serde(with = "numfmt::sig_vec")]
    pub eigenvector: Vec<f64>,
    #[serde(with = "numfmt::sig")]
    pub residual: f64,
}

pub fn spectrum_report(g: &Graph, f: &WeightFunction, tol: f64) -> Result<SpectrumReport> {
    let m: WeightedMatrix<f64> = weighted_adjacency(g, f)?;
    let r = spectral_radius(&m, tol)?;
    Ok(SpectrumReport {
        certificate: canonical_certificate(g),
        weighting: f.to_string(),
        rho: r.rho,
        eigenvector: r.eigenvector,
        residual: r.residual,
    })
}
