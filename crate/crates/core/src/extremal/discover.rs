//! Pins down families known only by their rank position (e.g. "the unicyclic
//! graph with the second largest radius") by exhaustive ranking, and checks
//! that the occupant does not depend on the weighting.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::catalog::{CatalogEntry, ExtremalCatalog};
use super::rank::{rank_all, Direction};
use super::theorems::{require_weighting, WeightingRange};
use crate::enumerate::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::{canonical_certificate, named, Certificate, Graph};
use crate::spectra::STRICT_MARGIN;
use crate::weighting::WeightFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    U1,
    U2,
    U3,
    U4,
    B1,
    B2,
    B3,
    /// `B'(n, k)`: the bicyclic graph with the `k`-th smallest radius.
    Bp1,
    Bp2,
    Bp3,
}

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [
        Self::U1,
        Self::U2,
        Self::U3,
        Self::U4,
        Self::B1,
        Self::B2,
        Self::B3,
        Self::Bp1,
        Self::Bp2,
        Self::Bp3,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::U1 => "U1",
            Self::U2 => "U2",
            Self::U3 => "U3",
            Self::U4 => "U4",
            Self::B1 => "B1",
            Self::B2 => "B2",
            Self::B3 => "B3",
            Self::Bp1 => "Bp1",
            Self::Bp2 => "Bp2",
            Self::Bp3 => "Bp3",
        }
    }

    /// Family, direction and 1-based rank that define the graph at order `n`.
    pub fn position(&self, n: usize) -> Result<(FamilySpec, Direction, usize)> {
        let out_of_range = |min: usize| {
            Err(Error::InvalidParameter(format!(
                "{self} is defined for n >= {min}, got {n}"
            )))
        };
        let uni = FamilySpec::Unicyclic { n };
        let bi = FamilySpec::Bicyclic { n };
        match self {
            Self::U1 | Self::U2 if n < 5 => out_of_range(5),
            Self::U1 => Ok((uni, Direction::Max, 2)),
            Self::U2 => Ok((uni, Direction::Max, 3)),
            Self::U3 | Self::U4 if n < 7 => out_of_range(7),
            Self::U3 => Ok((uni, Direction::Max, 4)),
            Self::U4 => Ok((uni, Direction::Max, 5)),
            Self::B1 if n < 5 => out_of_range(5),
            Self::B1 => Ok((bi, Direction::Max, 1)),
            Self::B2 if n < 6 => out_of_range(6),
            Self::B2 => Ok((bi, Direction::Max, 2)),
            Self::B3 if n < 5 => out_of_range(5),
            // B1 and B3 coincide at n = 5
            Self::B3 if n == 5 => Ok((bi, Direction::Max, 1)),
            Self::B3 => Ok((bi, Direction::Max, 3)),
            Self::Bp1 | Self::Bp2 | Self::Bp3 if n < 5 => out_of_range(5),
            Self::Bp1 => Ok((bi, Direction::Min, 1)),
            Self::Bp2 => Ok((bi, Direction::Min, 2)),
            Self::Bp3 => Ok((bi, Direction::Min, 3)),
        }
    }

    /// Hand-built reconstruction to cross-check against, where one exists.
    pub fn reference(&self, n: usize) -> Option<Graph> {
        match self {
            Self::U3 => named::u3(n).ok(),
            Self::B2 => named::b2(n).ok(),
            _ => None,
        }
    }

    pub(crate) fn weighting_range(&self) -> WeightingRange {
        match self {
            Self::B1 => WeightingRange::PStar,
            Self::Bp1 | Self::Bp2 | Self::Bp3 => WeightingRange::Any,
            _ => WeightingRange::PSomborAtLeast(2.0),
        }
    }

    pub fn default_grid(&self) -> Vec<WeightFunction> {
        match self {
            Self::Bp1 | Self::Bp2 | Self::Bp3 => vec![WeightFunction::psombor(2.0).expect("p = 2")],
            _ => super::p_grid(&[2.0, 2.5, 3.0, 4.0, 8.0, f64::INFINITY]),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// `U1`..`U4`, `B1`..`B3`, and `Bp1`..`Bp3` (also written `B'1`).
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace(['\'', '′'], "P");
        Self::ALL
            .into_iter()
            .find(|id| id.as_str().to_ascii_uppercase() == norm)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family id {s:?}")))
    }
}

/// Something discovery could not settle on its own.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    /// Different weightings put different graphs at the position.
    Unstable {
        n: usize,
        occupants: Vec<(String, Certificate)>,
    },
    /// The occupant is within `1e-9` of a neighbour.
    Tie { n: usize, weighting: String },
    /// The hand reconstruction is not the occupant.
    ReferenceMismatch {
        n: usize,
        expected: Certificate,
        observed: Certificate,
    },
    /// The catalog already holds a different graph.
    CatalogConflict {
        n: usize,
        stored: Certificate,
        observed: Certificate,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscoveryReport {
    pub family: FamilyId,
    pub n_values: Vec<usize>,
    pub weightings: Vec<String>,
    pub entries: Vec<CatalogEntry>,
    pub findings: Vec<Finding>,
    pub stable: bool,
}

/// Ranks the defining family for every `n` and weighting, records the
/// occupant in `catalog` where it is the same graph across the grid, and
/// reports every instability instead of resolving it.
pub fn discover_family(
    id: FamilyId,
    ns: &[usize],
    grid: &[WeightFunction],
    catalog: &mut ExtremalCatalog,
) -> Result<DiscoveryReport> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("weighting grid is empty".into()));
    }
    if ns.is_empty() {
        return Err(Error::InvalidParameter("no orders given".into()));
    }
    let mut entries = Vec::new();
    let mut findings = Vec::new();
    for &n in ns {
        let (spec, direction, rank) = id.position(n)?;
        for f in grid {
            require_weighting(f, id.weighting_range(), n)?;
        }
        let mut occupants: Vec<(String, Certificate)> = Vec::new();
        let mut tied = false;
        for f in grid {
            let ranked = rank_all(spec, f, direction)?;
            if rank > ranked.len() {
                return Err(Error::KTooLarge {
                    k: rank,
                    size: ranked.len(),
                });
            }
            let here = &ranked[rank - 1];
            let close =
                |other: Option<&super::rank::Ranked>| other.is_some_and(|o| (o.rho - here.rho).abs() <= STRICT_MARGIN);
            if close(rank.checked_sub(2).and_then(|i| ranked.get(i))) || close(ranked.get(rank)) {
                tied = true;
                findings.push(Finding::Tie {
                    n,
                    weighting: f.to_string(),
                });
            }
            occupants.push((f.to_string(), here.certificate.clone()));
        }
        let observed = occupants[0].1.clone();
        if occupants.iter().any(|(_, c)| *c != observed) {
            findings.push(Finding::Unstable { n, occupants });
            continue;
        }
        if let Some(reference) = id.reference(n) {
            let expected = canonical_certificate(&reference);
            if expected != observed {
                findings.push(Finding::ReferenceMismatch {
                    n,
                    expected,
                    observed: observed.clone(),
                });
            }
        }
        if tied {
            continue;
        }
        if let Some(stored) = catalog.get(id.as_str(), n) {
            if stored.certificate != observed {
                findings.push(Finding::CatalogConflict {
                    n,
                    stored: stored.certificate.clone(),
                    observed,
                });
                continue;
            }
        }
        let graph = observed.to_graph()?;
        let mut weightings: Vec<String> = grid.iter().map(|f| f.to_string()).collect();
        if let Some(stored) = catalog.get(id.as_str(), n) {
            weightings.extend(stored.weightings.iter().cloned());
            weightings.sort();
            weightings.dedup();
        }
        let entry = CatalogEntry {
            id: id.as_str().to_string(),
            n,
            degree_sequence: graph.degree_sequence(),
            certificate: observed,
            family: spec,
            direction,
            rank,
            weightings,
        };
        catalog.insert(entry.clone());
        entries.push(entry);
    }
    Ok(DiscoveryReport {
        family: id,
        n_values: ns.to_vec(),
        weightings: grid.iter().map(|f| f.to_string()).collect(),
        stable: findings.is_empty(),
        entries,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse() {
        for id in FamilyId::ALL {
            assert_eq!(id.as_str().parse::<FamilyId>().unwrap(), id);
        }
        assert_eq!("B'2".parse::<FamilyId>().unwrap(), FamilyId::Bp2);
        assert_eq!("u1".parse::<FamilyId>().unwrap(), FamilyId::U1);
        assert!("U9".parse::<FamilyId>().is_err());
    }

    #[test]
    fn positions() {
        assert!(FamilyId::U3.position(6).is_err());
        assert_eq!(FamilyId::B3.position(5).unwrap().2, 1);
        assert_eq!(FamilyId::B3.position(6).unwrap().2, 3);
        assert_eq!(FamilyId::Bp2.position(6).unwrap().1, Direction::Min);
    }

    #[test]
    fn u3_crosscheck_at_seven() {
        let mut catalog = ExtremalCatalog::new();
        let grid = [WeightFunction::psombor(2.0).unwrap()];
        let report = discover_family(FamilyId::U3, &[7], &grid, &mut catalog).unwrap();
        assert!(report.stable, "{:?}", report.findings);
        assert_eq!(
            report.entries[0].certificate,
            canonical_certificate(&named::cycle_with_pendants(4, 3).unwrap())
        );
        // repeat run reproduces the stored certificate
        let again = discover_family(FamilyId::U3, &[7], &grid, &mut catalog).unwrap();
        assert!(again.stable);
        assert_eq!(catalog.entries().len(), 1);
    }

    #[test]
    fn conflict_is_reported() {
        let mut catalog = ExtremalCatalog::new();
        let grid = [WeightFunction::psombor(2.0).unwrap()];
        discover_family(FamilyId::B1, &[5], &grid, &mut catalog).unwrap();
        let mut forged = catalog.get("B1", 5).unwrap().clone();
        forged.certificate = canonical_certificate(&named::b4(5).unwrap());
        catalog.insert(forged);
        let report = discover_family(FamilyId::B1, &[5], &grid, &mut catalog).unwrap();
        assert!(!report.stable);
        assert!(matches!(report.findings[0], Finding::CatalogConflict { .. }));
    }

    #[test]
    fn weighting_range_enforced() {
        let mut catalog = ExtremalCatalog::new();
        let grid = [WeightFunction::psombor(1.5).unwrap()];
        assert!(discover_family(FamilyId::U1, &[6], &grid, &mut catalog).is_err());
        // B' is exploratory and accepts any exponent
        assert!(discover_family(FamilyId::Bp1, &[5], &grid, &mut catalog).is_ok());
    }
}
