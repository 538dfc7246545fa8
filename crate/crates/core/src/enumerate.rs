//! Connected graphs of a given order and size up to isomorphism.
//!
//! Trees on `n` vertices come from trees on `n - 1` by attaching a pendant;
//! connected `(n, m)` graphs come from connected `(n, m - 1)` graphs by
//! adding one edge (every connected graph with a cycle loses a cycle edge
//! and stays connected). Duplicates are removed by canonical certificate,
//! and output is sorted by certificate. Levels are cached for the process.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_certificate, Certificate, Graph};

/// Largest order for trees, unicyclic and bicyclic graphs.
pub const MAX_ORDER_SPARSE: usize = 12;
/// Largest order for arbitrary sizes.
pub const MAX_ORDER_DENSE: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Trees { n: usize },
    Unicyclic { n: usize },
    Bicyclic { n: usize },
    Graphs { n: usize, m: usize },
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            Self::Trees { n } | Self::Unicyclic { n } | Self::Bicyclic { n } | Self::Graphs { n, .. } => n,
        }
    }

    pub fn size(&self) -> usize {
        match *self {
            Self::Trees { n } => n.saturating_sub(1),
            Self::Unicyclic { n } => n,
            Self::Bicyclic { n } => n + 1,
            Self::Graphs { m, .. } => m,
        }
    }

    /// Checks the size range and the order guardrails.
    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.order(), self.size());
        if n == 0 || m + 1 < n || m > n * (n - 1) / 2 {
            return Err(Error::InvalidSize { n, m });
        }
        let limit = if m <= n + 1 { MAX_ORDER_SPARSE } else { MAX_ORDER_DENSE };
        if n > limit {
            return Err(Error::Guardrail(format!(
                "order {n} with size {m} exceeds the enumeration limit {limit}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trees { n } => write!(f, "trees:{n}"),
            Self::Unicyclic { n } => write!(f, "unicyclic:{n}"),
            Self::Bicyclic { n } => write!(f, "bicyclic:{n}"),
            Self::Graphs { n, m } => write!(f, "graphs:{n},{m}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `trees:<n>`, `unicyclic:<n>`, `bicyclic:<n>` or `graphs:<n>,<m>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unrecognised family {s:?}"));
        let (kind, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (kind.trim().to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("trees" | "tree", &[n]) => Ok(Self::Trees { n }),
            ("unicyclic", &[n]) => Ok(Self::Unicyclic { n }),
            ("bicyclic", &[n]) => Ok(Self::Bicyclic { n }),
            ("graphs", &[n, m]) => Ok(Self::Graphs { n, m }),
            _ => Err(bad()),
        }
    }
}

/// Graphs of one family with their certificates, in certificate order.
pub type Family = Arc<Vec<(Certificate, Graph)>>;

fn cache() -> &'static Mutex<HashMap<(usize, usize), Family>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Family>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn dedup(candidates: Vec<Graph>) -> Vec<(Certificate, Graph)> {
    let keyed: Vec<(Certificate, Graph)> = candidates
        .into_par_iter()
        .map(|g| (canonical_certificate(&g), g))
        .collect();
    let mut unique: BTreeMap<Certificate, Graph> = BTreeMap::new();
    for (c, g) in keyed {
        unique.entry(c).or_insert(g);
    }
    unique
        .into_keys()
        .map(|c| {
            let g = c.to_graph().expect("certificate decodes");
            (c, g)
        })
        .collect()
}

fn level(n: usize, m: usize) -> Family {
    if let Some(f) = cache().lock().expect("cache lock").get(&(n, m)) {
        return f.clone();
    }
    let family = if n == 1 {
        vec![(
            canonical_certificate(&Graph::empty(1).expect("order 1")),
            Graph::empty(1).expect("order 1"),
        )]
    } else if m + 1 == n {
        let smaller = level(n - 1, n - 2);
        let candidates = smaller
            .iter()
            .flat_map(|(_, t)| {
                (0..n - 1).map(move |v| {
                    let mut edges = t.edges();
                    edges.push((v, n - 1));
                    Graph::new(n, &edges).expect("pendant extension is simple")
                })
            })
            .collect();
        dedup(candidates)
    } else {
        let smaller = level(n, m - 1);
        let candidates = smaller
            .iter()
            .flat_map(|(_, g)| {
                (0..n)
                    .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| !g.has_edge(u, v))
                    .map(move |e| g.with_edges(&[e]).expect("new edge is simple"))
            })
            .collect();
        dedup(candidates)
    };
    let family = Arc::new(family);
    cache().lock().expect("cache lock").insert((n, m), family.clone());
    family
}

/// Every connected graph of the family, pairwise non-isomorphic, sorted by
/// certificate, each in canonical labelling.
pub fn enumerate_with_certificates(spec: FamilySpec) -> Result<Family> {
    spec.validate()?;
    Ok(level(spec.order(), spec.size()))
}

pub fn enumerate(spec: FamilySpec) -> Result<Vec<Graph>> {
    Ok(enumerate_with_certificates(spec)?
        .iter()
        .map(|(_, g)| g.clone())
        .collect())
}

pub fn count(spec: FamilySpec) -> Result<usize> {
    Ok(enumerate_with_certificates(spec)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_counts() {
        assert_eq!(count(FamilySpec::Trees { n: 1 }).unwrap(), 1);
        assert_eq!(count(FamilySpec::Trees { n: 4 }).unwrap(), 2);
        assert_eq!(count(FamilySpec::Unicyclic { n: 5 }).unwrap(), 5);
        assert_eq!(count(FamilySpec::Bicyclic { n: 5 }).unwrap(), 5);
        assert_eq!(count(FamilySpec::Graphs { n: 4, m: 6 }).unwrap(), 1);
    }

    #[test]
    fn trees_four_are_path_and_star() {
        let certs: Vec<Certificate> = enumerate_with_certificates(FamilySpec::Trees { n: 4 })
            .unwrap()
            .iter()
            .map(|(c, _)| c.clone())
            .collect();
        let mut expected = vec![
            canonical_certificate(&named::path(4).unwrap()),
            canonical_certificate(&named::star(4).unwrap()),
        ];
        expected.sort();
        assert_eq!(certs, expected);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            count(FamilySpec::Graphs { n: 5, m: 3 }),
            Err(Error::InvalidSize { .. })
        ));
        assert!(matches!(
            count(FamilySpec::Graphs { n: 5, m: 11 }),
            Err(Error::InvalidSize { .. })
        ));
        assert!(matches!(count(FamilySpec::Trees { n: 13 }), Err(Error::Guardrail(_))));
        assert!(matches!(
            count(FamilySpec::Graphs { n: 10, m: 12 }),
            Err(Error::Guardrail(_))
        ));
        assert!(count(FamilySpec::Unicyclic { n: 2 }).is_err());
    }

    #[test]
    fn spec_strings() {
        for s in ["trees:7", "unicyclic:5", "bicyclic:6", "graphs:5,7"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert!("graphs:5".parse::<FamilySpec>().is_err());
        assert!("forest:5".parse::<FamilySpec>().is_err());
    }
}
