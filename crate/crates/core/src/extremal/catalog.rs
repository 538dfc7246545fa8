use std::path::Path;

use serde::{Deserialize, Serialize};

use super::rank::Direction;
use crate::enumerate::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::{Certificate, Graph};
use crate::spectra::DEFAULT_TOL;

pub const CATALOG_FORMAT_VERSION: u32 = 1;
/// Environment variable naming the catalog file.
pub const CATALOG_ENV: &str = "SOMBOR_CATALOG";

/// The graph occupying one rank position of a family at one order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub n: usize,
    pub certificate: Certificate,
    pub degree_sequence: Vec<usize>,
    pub family: FamilySpec,
    pub direction: Direction,
    pub rank: usize,
    /// Weightings under which the occupant was observed.
    pub weightings: Vec<String>,
}

/// Versioned store of discovered extremal graphs keyed by `(id, n)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalCatalog {
    pub format_version: u32,
    pub tool_version: String,
    pub tolerance: f64,
    entries: Vec<CatalogEntry>,
}

impl Default for ExtremalCatalog {
    fn default() -> Self {
        Self::new()
    }
}

impl ExtremalCatalog {
    pub fn new() -> Self {
        Self {
            format_version: CATALOG_FORMAT_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            tolerance: DEFAULT_TOL,
            entries: Vec::new(),
        }
    }

    /// Reads a catalog; a missing file is an empty catalog.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        if !path.exists() {
            return Ok(Self::new());
        }
        let catalog: Self = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        if catalog.format_version != CATALOG_FORMAT_VERSION {
            return Err(Error::InvalidParameter(format!(
                "catalog format {} is not supported (expected {CATALOG_FORMAT_VERSION})",
                catalog.format_version
            )));
        }
        Ok(catalog)
    }

    /// Writes sorted, pretty-printed JSON through a temporary file.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        let mut text = self.to_json();
        text.push('\n');
        let tmp = path.with_extension("json.tmp");
        std::fs::write(&tmp, text)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut sorted = self.clone();
        sorted.entries.sort_by(|a, b| (&a.id, a.n).cmp(&(&b.id, b.n)));
        sorted.tool_version = env!("CARGO_PKG_VERSION").to_string();
        serde_json::to_string_pretty(&sorted).expect("catalog serialises")
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str, n: usize) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id && e.n == n)
    }

    /// Stores `entry`, returning the one it replaced.
    pub fn insert(&mut self, entry: CatalogEntry) -> Option<CatalogEntry> {
        match self.entries.iter_mut().find(|e| e.id == entry.id && e.n == entry.n) {
            Some(slot) => Some(std::mem::replace(slot, entry)),
            None => {
                self.entries.push(entry);
                None
            }
        }
    }

    pub fn graph(&self, id: &str, n: usize) -> Result<Graph> {
        self.get(id, n)
            .ok_or_else(|| Error::CatalogMiss {
                family: id.to_string(),
                n,
            })?
            .certificate
            .to_graph()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_certificate, named};

    fn entry(id: &str, n: usize, g: &Graph) -> CatalogEntry {
        CatalogEntry {
            id: id.into(),
            n,
            certificate: canonical_certificate(g),
            degree_sequence: g.degree_sequence(),
            family: FamilySpec::Trees { n },
            direction: Direction::Max,
            rank: 1,
            weightings: vec!["psombor:2".into()],
        }
    }

    #[test]
    fn round_trip_and_sorting() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nested").join("catalog.json");
        let mut c = ExtremalCatalog::load(&path).unwrap();
        assert!(c.entries().is_empty());
        c.insert(entry("T", 6, &named::star(6).unwrap()));
        c.insert(entry("A", 5, &named::star(5).unwrap()));
        c.save(&path).unwrap();
        let back = ExtremalCatalog::load(&path).unwrap();
        assert_eq!(back.entries()[0].id, "A");
        assert_eq!(
            back.graph("T", 6).unwrap(),
            canonical_certificate(&named::star(6).unwrap()).to_graph().unwrap()
        );
        assert!(matches!(back.graph("T", 7), Err(Error::CatalogMiss { .. })));
        let first = std::fs::read(&path).unwrap();
        back.save(&path).unwrap();
        assert_eq!(first, std::fs::read(&path).unwrap());
    }

    #[test]
    fn insert_replaces() {
        let mut c = ExtremalCatalog::new();
        assert!(c.insert(entry("A", 5, &named::star(5).unwrap())).is_none());
        let old = c.insert(entry("A", 5, &named::path(5).unwrap())).unwrap();
        assert_eq!(old.certificate, canonical_certificate(&named::star(5).unwrap()));
        assert_eq!(c.entries().len(), 1);
    }

    #[test]
    fn rejects_unknown_format() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let mut text = ExtremalCatalog::new().to_json();
        text = text.replace("\"format_version\": 1", "\"format_version\": 99");
        std::fs::write(&path, text).unwrap();
        assert!(ExtremalCatalog::load(&path).is_err());
    }
}
