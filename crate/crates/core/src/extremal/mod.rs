//! Ranking families by spectral radius, verifying the extremal orderings,
//! and a persisted catalog for graphs defined only by rank position.

mod catalog;
mod discover;
mod rank;
mod theorems;

pub use catalog::{CatalogEntry, ExtremalCatalog, CATALOG_ENV, CATALOG_FORMAT_VERSION};
pub use discover::{discover_family, DiscoveryReport, FamilyId, Finding};
pub use rank::{rank, rank_all, Direction, RankEntry, Ranked, RankingReport};
pub use theorems::{verify_theorem, GridPoint, TheoremId, TheoremVerdict};

use crate::weighting::{Exponent, WeightFunction};

/// p-Sombor weightings for the given exponents (`f64::INFINITY` for the limit).
///
/// # Panics
/// On a zero or NaN exponent.
pub fn p_grid(ps: &[f64]) -> Vec<WeightFunction> {
    ps.iter()
        .map(|&p| WeightFunction::PSombor(Exponent::finite(p).expect("valid exponent")))
        .collect()
}
