//! Executable versions of the extremal orderings: each theorem id names a
//! claim about which graphs hold the top positions (or how named graphs
//! compare), checked at every `(n, weighting)` grid point.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::catalog::ExtremalCatalog;
use super::discover::FamilyId;
use super::rank::{rank_all, Direction, Ranked};
use crate::enumerate::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::{canonical_certificate, named, Certificate, Graph};
use crate::numfmt;
use crate::spectra::{rho_of, STRICT_MARGIN};
use crate::weighting::{check_property_pstar, WeightFunction};

/// Weightings a claim is proven for.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum WeightingRange {
    /// p-Sombor with `p` at least the bound (including `+inf`).
    PSomborAtLeast(f64),
    /// Any weighting with property P* on the relevant degrees.
    PStar,
    Any,
}

pub(crate) fn require_weighting(f: &WeightFunction, range: WeightingRange, n: usize) -> Result<()> {
    let ok = match range {
        WeightingRange::Any => true,
        WeightingRange::PSomborAtLeast(lo) => f.exponent().is_some_and(|p| p.value() >= lo),
        WeightingRange::PStar => match f.exponent() {
            Some(p) => p.value() >= 1.0,
            None => check_property_pstar(f, n.saturating_sub(1).max(2))?.passed(),
        },
    };
    if ok {
        Ok(())
    } else {
        let claim = match range {
            WeightingRange::PSomborAtLeast(lo) => format!("p-Sombor weightings with p >= {lo}"),
            WeightingRange::PStar => "weightings with property P*".to_string(),
            WeightingRange::Any => unreachable!(),
        };
        Err(Error::InvalidParameter(format!(
            "{f} is outside the proven range: {claim}"
        )))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    T4_1,
    T4_2,
    R3_1,
    T3_2,
    R4_1,
    L4_1,
    L4_2,
    T5_1,
    T5_2Prime,
    L5_1,
    L5_2,
    T5_2,
    R5_1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        Self::T4_1,
        Self::T4_2,
        Self::R3_1,
        Self::T3_2,
        Self::R4_1,
        Self::L4_1,
        Self::L4_2,
        Self::T5_1,
        Self::T5_2Prime,
        Self::L5_1,
        Self::L5_2,
        Self::T5_2,
        Self::R5_1,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::T4_1 => "T4.1",
            Self::T4_2 => "T4.2",
            Self::R3_1 => "R3.1",
            Self::T3_2 => "T3.2",
            Self::R4_1 => "R4.1",
            Self::L4_1 => "L4.1",
            Self::L4_2 => "L4.2",
            Self::T5_1 => "T5.1",
            Self::T5_2Prime => "T5.2'",
            Self::L5_1 => "L5.1",
            Self::L5_2 => "L5.2",
            Self::T5_2 => "T5.2",
            Self::R5_1 => "R5.1",
        }
    }

    pub fn claim(&self) -> &'static str {
        match self {
            Self::T4_1 => "trees, n >= 6, property P*: top three are S_n, S_{2,n-2}, S_{3,n-3}",
            Self::T4_2 => "trees, n >= 6, p >= 1: top three are S_n, S_{2,n-2}, S_{3,n-3}",
            Self::R3_1 => "trees, n = 4: P_4 is S_{2,2} and ranks below S_4; n = 5: P_5 < S_{2,3} < S_5",
            Self::T3_2 => "unicyclic, n >= 7, p >= 2: top five are S_n + e, U1, U2, U3, U4",
            Self::R4_1 => "unicyclic, n = 5: C_5 < U3 < U2 < U1 < S_5 + e; n = 6: top three are S_6 + e, U1, U2",
            Self::L4_1 => "unicyclic, n >= 7, p >= 2: rho(U5) < rho(U4)",
            Self::L4_2 => "unicyclic, n >= 7, p >= 2: rho(U4) < rho(U3)",
            Self::T5_1 => "bicyclic, n >= 6, property P*: every graph other than B1..B4 is below B3",
            Self::T5_2Prime => "bicyclic, n >= 6, property P*: B1 is the unique maximum",
            Self::L5_1 => "bicyclic, n >= 6, p >= 2: rho(B4) < rho(B3)",
            Self::L5_2 => "bicyclic, n >= 6, p >= 2: rho(B3) < rho(B2)",
            Self::T5_2 => "bicyclic, n >= 6, p >= 2: top three are B1, B2, B3",
            Self::R5_1 => "bicyclic, n = 5: B1 = B3 is the unique maximum; ranks 2 and 3 are B2 and B4 in some order",
        }
    }

    /// Orders the claim covers: `(min, max)`.
    pub fn n_range(&self) -> (usize, Option<usize>) {
        match self {
            Self::T4_1 | Self::T4_2 => (6, None),
            Self::R3_1 => (4, Some(5)),
            Self::T3_2 | Self::L4_1 | Self::L4_2 => (7, None),
            Self::R4_1 => (5, Some(6)),
            Self::T5_1 | Self::T5_2Prime | Self::L5_1 | Self::L5_2 | Self::T5_2 => (6, None),
            Self::R5_1 => (5, Some(5)),
        }
    }

    pub fn default_n(&self) -> Vec<usize> {
        match self {
            Self::T4_1 | Self::T4_2 => (6..=9).collect(),
            Self::R3_1 => vec![4, 5],
            Self::T3_2 | Self::L4_1 | Self::L4_2 => (7..=9).collect(),
            Self::R4_1 => vec![5, 6],
            Self::R5_1 => vec![5],
            _ => (6..=8).collect(),
        }
    }

    pub(crate) fn weighting_range(&self) -> WeightingRange {
        match self {
            Self::T4_1 | Self::R3_1 | Self::T5_1 | Self::T5_2Prime => WeightingRange::PStar,
            Self::T4_2 => WeightingRange::PSomborAtLeast(1.0),
            _ => WeightingRange::PSomborAtLeast(2.0),
        }
    }

    /// `{2, 2.5, 3, 4, 8, inf}`, with `{1, 1.5}` added for claims from
    /// `p >= 1` and the adjacency matrix for property-P* claims.
    pub fn default_grid(&self) -> Vec<WeightFunction> {
        let mut ps = vec![2.0, 2.5, 3.0, 4.0, 8.0, f64::INFINITY];
        let range = self.weighting_range();
        if range != WeightingRange::PSomborAtLeast(2.0) {
            ps.splice(0..0, [1.0, 1.5]);
        }
        let mut grid = super::p_grid(&ps);
        if range == WeightingRange::PStar {
            grid.push(WeightFunction::Adjacency);
        }
        grid
    }

    /// Catalog families the check reads.
    pub fn required_families(&self) -> &'static [FamilyId] {
        match self {
            Self::T3_2 => &[FamilyId::U1, FamilyId::U2, FamilyId::U4],
            Self::R4_1 => &[FamilyId::U1, FamilyId::U2],
            Self::L4_1 | Self::L4_2 => &[FamilyId::U4],
            Self::T5_1 => &[FamilyId::B1, FamilyId::B3],
            Self::T5_2Prime => &[FamilyId::B1],
            Self::L5_1 | Self::L5_2 => &[FamilyId::B3],
            Self::T5_2 => &[FamilyId::B1, FamilyId::B3],
            Self::R5_1 => &[FamilyId::B1, FamilyId::B3],
            _ => &[],
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('′', "'");
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == norm)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridPoint {
    pub n: usize,
    pub weighting: String,
    pub pass: bool,
    /// Claimed graphs, best first.
    pub expected: Vec<Certificate>,
    /// What the ranking produced at the same positions.
    pub observed: Vec<Certificate>,
    /// Smallest gap between consecutive radii the claim depends on.
    #[serde(with = "numfmt::sig")]
    pub min_margin: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: String,
    pub claim: String,
    pub n_values: Vec<usize>,
    pub weightings: Vec<String>,
    pub pass: bool,
    #[serde(with = "numfmt::sig")]
    pub min_margin: f64,
    pub points: Vec<GridPoint>,
}

fn cert(g: &Graph) -> Certificate {
    canonical_certificate(g)
}

fn certs(gs: &[Graph]) -> Vec<Certificate> {
    gs.iter().map(cert).collect()
}

fn gaps(ranked: &[Ranked], upto: usize) -> f64 {
    ranked
        .windows(2)
        .take(upto)
        .map(|w| (w[0].rho - w[1].rho).abs())
        .fold(f64::INFINITY, f64::min)
}

/// The first `expected.len()` graphs of the ranking are `expected`, each
/// strictly above the next graph.
fn top_k(spec: FamilySpec, f: &WeightFunction, expected: &[Graph]) -> Result<GridPoint> {
    let ranked = rank_all(spec, f, Direction::Max)?;
    let k = expected.len();
    let expected = certs(expected);
    let observed: Vec<Certificate> = ranked.iter().take(k).map(|r| r.certificate.clone()).collect();
    let margin = gaps(&ranked, k);
    Ok(point(
        spec.order(),
        f,
        expected == observed && margin > STRICT_MARGIN,
        expected,
        observed,
        margin,
    ))
}

/// `chain` is strictly decreasing in radius.
fn chain(n: usize, f: &WeightFunction, chain: &[Graph]) -> Result<GridPoint> {
    let rhos: Vec<f64> = chain.iter().map(|g| rho_of(g, f)).collect::<Result<_>>()?;
    let margin = rhos.windows(2).map(|w| w[0] - w[1]).fold(f64::INFINITY, f64::min);
    let expected = certs(chain);
    let mut order: Vec<usize> = (0..chain.len()).collect();
    order.sort_by(|&a, &b| rhos[b].total_cmp(&rhos[a]));
    let observed = order.iter().map(|&i| expected[i].clone()).collect();
    Ok(point(n, f, margin > STRICT_MARGIN, expected, observed, margin))
}

fn point(
    n: usize,
    f: &WeightFunction,
    pass: bool,
    expected: Vec<Certificate>,
    observed: Vec<Certificate>,
    min_margin: f64,
) -> GridPoint {
    GridPoint {
        n,
        weighting: f.to_string(),
        pass,
        expected,
        observed,
        min_margin,
        note: None,
    }
}

fn check_point(id: TheoremId, n: usize, f: &WeightFunction, catalog: &ExtremalCatalog) -> Result<GridPoint> {
    let cat = |family: FamilyId| catalog.graph(family.as_str(), n);
    let trees = FamilySpec::Trees { n };
    let uni = FamilySpec::Unicyclic { n };
    let bi = FamilySpec::Bicyclic { n };
    match id {
        TheoremId::T4_1 | TheoremId::T4_2 => top_k(
            trees,
            f,
            &[
                named::star(n)?,
                named::double_star(2, n - 2)?,
                named::double_star(3, n - 3)?,
            ],
        ),
        TheoremId::R3_1 if n == 4 => {
            let identity = cert(&named::path(4)?) == cert(&named::double_star(2, 2)?);
            let mut p = top_k(trees, f, &[named::star(4)?, named::path(4)?])?;
            p.pass &= identity;
            p.note = Some(format!("P_4 and S_{{2,2}} share a certificate: {identity}"));
            Ok(p)
        }
        TheoremId::R3_1 => chain(n, f, &[named::star(5)?, named::double_star(2, 3)?, named::path(5)?]),
        TheoremId::T3_2 => top_k(
            uni,
            f,
            &[
                named::star_plus_edge(n)?,
                cat(FamilyId::U1)?,
                cat(FamilyId::U2)?,
                named::u3(n)?,
                cat(FamilyId::U4)?,
            ],
        ),
        TheoremId::R4_1 if n == 5 => top_k(
            uni,
            f,
            &[
                named::star_plus_edge(5)?,
                cat(FamilyId::U1)?,
                cat(FamilyId::U2)?,
                named::u3(5)?,
                named::cycle(5)?,
            ],
        ),
        TheoremId::R4_1 => {
            let mut p = top_k(
                uni,
                f,
                &[named::star_plus_edge(n)?, cat(FamilyId::U1)?, cat(FamilyId::U2)?],
            )?;
            let ranked = rank_all(uni, f, Direction::Max)?;
            p.note = Some(format!(
                "fourth place (not asserted): {} with degrees {:?}",
                ranked[3].certificate,
                ranked[3].graph.degree_sequence()
            ));
            Ok(p)
        }
        TheoremId::L4_1 => chain(n, f, &[cat(FamilyId::U4)?, named::u5(n)?]),
        TheoremId::L4_2 => chain(n, f, &[named::u3(n)?, cat(FamilyId::U4)?]),
        TheoremId::T5_1 => {
            let b3 = cert(&cat(FamilyId::B3)?);
            let exempt = [cert(&cat(FamilyId::B1)?), cert(&named::b2(n)?), cert(&named::b4(n)?)];
            let ranked = rank_all(bi, f, Direction::Max)?;
            let rest: Vec<&Ranked> = ranked.iter().filter(|r| !exempt.contains(&r.certificate)).collect();
            let observed = vec![rest[0].certificate.clone()];
            let rho_b3 = rho_of(&b3.to_graph()?, f)?;
            let margin = rest
                .iter()
                .find(|r| r.certificate != b3)
                .map_or(f64::INFINITY, |r| rho_b3 - r.rho);
            Ok(point(
                n,
                f,
                observed[0] == b3 && margin > STRICT_MARGIN,
                vec![b3],
                observed,
                margin,
            ))
        }
        TheoremId::T5_2Prime => top_k(bi, f, &[cat(FamilyId::B1)?]),
        TheoremId::L5_1 => chain(n, f, &[cat(FamilyId::B3)?, named::b4(n)?]),
        TheoremId::L5_2 => chain(n, f, &[named::b2(n)?, cat(FamilyId::B3)?]),
        TheoremId::T5_2 => top_k(bi, f, &[cat(FamilyId::B1)?, named::b2(n)?, cat(FamilyId::B3)?]),
        TheoremId::R5_1 => {
            let b1 = cert(&cat(FamilyId::B1)?);
            let same = b1 == cert(&cat(FamilyId::B3)?);
            let ranked = rank_all(bi, f, Direction::Max)?;
            let mut pair = vec![cert(&named::b2(5)?), cert(&named::b4(5)?)];
            pair.sort();
            let mut observed_pair: Vec<Certificate> = ranked[1..3].iter().map(|r| r.certificate.clone()).collect();
            let order = observed_pair.clone();
            observed_pair.sort();
            let margin =
                (ranked[0].rho - ranked[1].rho).min(ranked.get(3).map_or(f64::INFINITY, |r| ranked[2].rho - r.rho));
            let pass = same && ranked[0].certificate == b1 && observed_pair == pair && margin > STRICT_MARGIN;
            let mut expected = vec![b1];
            expected.extend(pair);
            let mut observed = vec![ranked[0].certificate.clone()];
            observed.extend(order.iter().cloned());
            let mut p = point(n, f, pass, expected, observed, margin);
            let which = if order[0] == cert(&named::b2(5)?) {
                "B2 then B4"
            } else {
                "B4 then B2"
            };
            p.note = Some(format!("B1 and B3 coincide: {same}; ranks 2-3 (not asserted): {which}"));
            Ok(p)
        }
    }
}

/// Checks the claim `id` at every `(n, weighting)` pair. Orders or
/// weightings outside the claim's proven range are rejected.
pub fn verify_theorem(
    id: TheoremId,
    ns: &[usize],
    grid: &[WeightFunction],
    catalog: &ExtremalCatalog,
) -> Result<TheoremVerdict> {
    if ns.is_empty() || grid.is_empty() {
        return Err(Error::InvalidParameter("empty n range or weighting grid".into()));
    }
    let (lo, hi) = id.n_range();
    for &n in ns {
        if n < lo || hi.is_some_and(|hi| n > hi) {
            let range = match hi {
                Some(hi) => format!("{lo}..={hi}"),
                None => format!(">= {lo}"),
            };
            return Err(Error::InvalidParameter(format!("{id} covers n {range}, got {n}")));
        }
        for f in grid {
            require_weighting(f, id.weighting_range(), n)?;
        }
    }
    let mut points = Vec::new();
    for &n in ns {
        for f in grid {
            points.push(check_point(id, n, f, catalog)?);
        }
    }
    Ok(TheoremVerdict {
        theorem: id.to_string(),
        claim: id.claim().to_string(),
        n_values: ns.to_vec(),
        weightings: grid.iter().map(|f| f.to_string()).collect(),
        pass: points.iter().all(|p| p.pass),
        min_margin: points.iter().map(|p| p.min_margin).fold(f64::INFINITY, f64::min),
        points,
    })
}
