use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_with_certificates, FamilySpec};
use crate::error::{Error, Result};
use crate::graph::{Certificate, Graph};
use crate::numfmt::{self, format_sig};
use crate::spectra::{spectral_radius, weighted_adjacency, WeightedMatrix, DEFAULT_TOL, STRICT_MARGIN};
use crate::weighting::WeightFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Max,
    Min,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Max => "max",
            Self::Min => "min",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "max" => Ok(Self::Max),
            "min" => Ok(Self::Min),
            _ => Err(Error::InvalidParameter(format!(
                "direction must be max or min, got {s:?}"
            ))),
        }
    }
}

/// One graph of a family with its spectral radius.
#[derive(Clone, Debug, PartialEq)]
pub struct Ranked {
    pub certificate: Certificate,
    pub graph: Graph,
    pub rho: f64,
    /// Within `1e-9` of a neighbour in the ranking.
    pub tied: bool,
}

/// The whole family ordered by `rho` in `direction`. Runs of values closer
/// than `1e-9` are ordered by certificate and flagged as ties.
pub fn rank_all(spec: FamilySpec, f: &WeightFunction, direction: Direction) -> Result<Vec<Ranked>> {
    let family = enumerate_with_certificates(spec)?;
    let mut ranked: Vec<Ranked> = family
        .par_iter()
        .map(|(c, g)| {
            let m: WeightedMatrix<f64> = weighted_adjacency(g, f)?;
            Ok(Ranked {
                certificate: c.clone(),
                graph: g.clone(),
                rho: spectral_radius(&m, DEFAULT_TOL)?.rho,
                tied: false,
            })
        })
        .collect::<Result<_>>()?;
    order_with_ties(&mut ranked, direction);
    Ok(ranked)
}

fn order_with_ties(ranked: &mut [Ranked], direction: Direction) {
    ranked.sort_by(|a, b| {
        let o = a.rho.total_cmp(&b.rho);
        match direction {
            Direction::Max => o.reverse(),
            Direction::Min => o,
        }
    });
    let mut start = 0;
    while start < ranked.len() {
        let mut end = start + 1;
        while end < ranked.len() && (ranked[end].rho - ranked[end - 1].rho).abs() <= STRICT_MARGIN {
            end += 1;
        }
        if end - start > 1 {
            ranked[start..end].sort_by(|a, b| a.certificate.cmp(&b.certificate));
            ranked[start..end].iter_mut().for_each(|r| r.tied = true);
        }
        start = end;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankEntry {
    pub rank: usize,
    pub certificate: Certificate,
    #[serde(with = "numfmt::sig")]
    pub rho: f64,
    pub degree_sequence: Vec<usize>,
    pub tied: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankingReport {
    pub family: FamilySpec,
    pub weighting: String,
    pub direction: Direction,
    pub k: usize,
    pub family_size: usize,
    pub tolerance: f64,
    pub entries: Vec<RankEntry>,
}

/// The first `k` graphs of the family by spectral radius.
pub fn rank(spec: FamilySpec, f: &WeightFunction, k: usize, direction: Direction) -> Result<RankingReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    spec.validate()?;
    let size = enumerate_with_certificates(spec)?.len();
    if k > size {
        return Err(Error::KTooLarge { k, size });
    }
    let ranked = rank_all(spec, f, direction)?;
    let entries = ranked
        .into_iter()
        .take(k)
        .enumerate()
        .map(|(i, r)| RankEntry {
            rank: i + 1,
            degree_sequence: r.graph.degree_sequence(),
            certificate: r.certificate,
            rho: r.rho,
            tied: r.tied,
        })
        .collect();
    Ok(RankingReport {
        family: spec,
        weighting: f.to_string(),
        direction,
        k,
        family_size: size,
        tolerance: DEFAULT_TOL,
        entries,
    })
}

fn degrees_text(d: &[usize]) -> String {
    d.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

impl RankingReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("rank,certificate,rho,degree_sequence,tied\n");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                e.rank,
                csv_field(e.certificate.as_str()),
                format_sig(e.rho),
                degrees_text(&e.degree_sequence),
                e.tied
            );
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "family {}  weighting {}  direction {}  k {}  family size {}  tolerance {}\n",
            self.family,
            self.weighting,
            self.direction,
            self.k,
            self.family_size,
            format_sig(self.tolerance)
        );
        let width = self
            .entries
            .iter()
            .map(|e| e.certificate.as_str().len())
            .max()
            .unwrap_or(0)
            .max("certificate".len());
        let _ = writeln!(out, "{:>4}  {:<width$}  {:<16}  degrees", "rank", "certificate", "rho");
        for e in &self.entries {
            let mark = if e.tied { "  (tie)" } else { "" };
            let _ = writeln!(
                out,
                "{:>4}  {:<width$}  {:<16}  {}{}",
                e.rank,
                e.certificate.as_str(),
                format_sig(e.rho),
                degrees_text(&e.degree_sequence),
                mark
            );
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
