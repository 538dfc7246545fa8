use super::eigen::{spectral_radius, DEFAULT_TOL};
use super::matrix::{weighted_adjacency, WeightedMatrix};
use super::partition::{quotient, VertexPartition};
use crate::error::{Error, Result};
use crate::graph::{named, Graph};
use crate::weighting::WeightFunction;

/// Margin demanded by strict spectral inequalities.
pub const STRICT_MARGIN: f64 = 1e-9;

pub fn rho_of(g: &Graph, f: &WeightFunction) -> Result<f64> {
    let m: WeightedMatrix<f64> = weighted_adjacency(g, f)?;
    Ok(spectral_radius(&m, DEFAULT_TOL)?.rho)
}

/// Whether an equitable quotient has the same spectral radius as the full
/// matrix, to `1e-8` relative.
pub fn verify_quotient_rho(g: &Graph, f: &WeightFunction, part: &VertexPartition) -> Result<bool> {
    let m: WeightedMatrix<f64> = weighted_adjacency(g, f)?;
    let q = quotient(&m, part)?;
    if !q.equitable {
        return Err(Error::NotEquitable);
    }
    let full = spectral_radius(&m, DEFAULT_TOL)?.rho;
    let reduced = q.spectral_radius()?;
    Ok((full - reduced).abs() <= 1e-8 * full.max(f64::MIN_POSITIVE))
}

/// Whether adding `extra` edges to a connected `g` strictly raises the
/// spectral radius of the weighted matrix.
pub fn verify_supergraph_monotone(g: &Graph, extra: &[(usize, usize)], f: &WeightFunction) -> Result<bool> {
    if extra.is_empty() {
        return Err(Error::Precondition("no edges to add".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(&(u, v)) = extra
        .iter()
        .find(|&&(u, v)| u < g.order() && v < g.order() && g.has_edge(u, v))
    {
        return Err(Error::Precondition(format!("edge {{{u}, {v}}} already present")));
    }
    let h = g.with_edges(extra)?;
    Ok(rho_of(&h, f)? > rho_of(g, f)? + STRICT_MARGIN)
}

/// Checks `rho(U(n, n1, n2)) <= sqrt(max(n1, n2) + 3)` for the adjacency
/// matrix, where the bound is claimed: `max + 3 >= (1 + sqrt(6n + 10))^2 / 9`.
pub fn check_u_bound(n: usize, n1: usize, n2: usize) -> Result<bool> {
    if n != n1 + n2 + 3 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} but n1 + n2 + 3 = {}",
            n1 + n2 + 3
        )));
    }
    let big = (n1.max(n2) + 3) as f64;
    let threshold = (1.0 + (6.0 * n as f64 + 10.0).sqrt()).powi(2) / 9.0;
    if big < threshold {
        return Err(Error::Precondition(format!(
            "max(n1, n2) + 3 = {big} is below (1 + sqrt(6n + 10))^2 / 9 = {threshold:.6}"
        )));
    }
    let g = named::unicyclic_u(n, n1, n2)?;
    Ok(rho_of(&g, &WeightFunction::Adjacency)? <= big.sqrt() + STRICT_MARGIN)
}
