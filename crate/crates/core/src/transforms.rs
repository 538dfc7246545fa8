//! Graph surgeries that provably raise the spectral radius of `A_f(G)` for
//! weightings with property P*, each with a checker that recomputes both
//! radii.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_certificate, EdgeList, Graph};
use crate::spectra::{rho_of, STRICT_MARGIN};
use crate::weighting::{check_property_pstar, WeightFunction};

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::EndpointOutOfRange {
            endpoint: v,
            n: g.order(),
        });
    }
    Ok(())
}

fn check_pair(g: &Graph, v1: usize, v2: usize) -> Result<()> {
    check_vertex(g, v1)?;
    check_vertex(g, v2)?;
    if v1 == v2 {
        return Err(Error::Precondition("v1 and v2 must differ".into()));
    }
    Ok(())
}

/// `N(v1) - N[v2]`.
fn exclusive_neighbors(g: &Graph, v1: usize, v2: usize) -> Vec<usize> {
    g.neighbors(v1)
        .iter()
        .copied()
        .filter(|&w| w != v2 && !g.has_edge(v2, w))
        .collect()
}

fn move_edges(g: &Graph, from: usize, to: usize, moved: &[usize]) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = if a == from { (b, a) } else { (a, b) };
            if y == from && moved.contains(&x) {
                (x, to)
            } else {
                (a, b)
            }
        })
        .collect();
    Graph::new(g.order(), &edges)
}

/// Kelmans operation: every edge `v1 w` with `w` in `N(v1) - N[v2]` becomes
/// `v2 w`. Fails if the result is disconnected.
pub fn kelmans(g: &Graph, v1: usize, v2: usize) -> Result<Graph> {
    check_pair(g, v1, v2)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let moved = exclusive_neighbors(g, v1, v2);
    let h = move_edges(g, v1, v2, &moved)?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(h)
}

/// Moves one pendant from `v1` to its neighbour `v2`. Both exclusive
/// neighbourhoods must consist of pendants with `1 <= |N1| <= |N2|`.
pub fn pendant_shift(g: &Graph, v1: usize, v2: usize) -> Result<Graph> {
    check_pair(g, v1, v2)?;
    if !g.has_edge(v1, v2) {
        return Err(Error::Precondition(format!("{v1} and {v2} are not adjacent")));
    }
    let n1 = exclusive_neighbors(g, v1, v2);
    let n2 = exclusive_neighbors(g, v2, v1);
    if n1.is_empty() {
        return Err(Error::Precondition(format!("{v1} has no pendant outside N[{v2}]")));
    }
    if let Some(&w) = n1.iter().chain(&n2).find(|&&w| g.degree(w) != 1) {
        return Err(Error::Precondition(format!("exclusive neighbour {w} is not a pendant")));
    }
    if n1.len() > n2.len() {
        return Err(Error::Precondition(format!(
            "|N1| = {} exceeds |N2| = {}",
            n1.len(),
            n2.len()
        )));
    }
    move_edges(g, v1, v2, &n1[..1])
}

/// Vertices of the trees hanging at `u`: components of `G - u` that are
/// trees attached to `u` by a single edge.
pub fn pendant_tree_at(g: &Graph, u: usize) -> Result<Vec<usize>> {
    check_vertex(g, u)?;
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut tree = Vec::new();
    for s in 0..n {
        if s == u || comp[s] != usize::MAX {
            continue;
        }
        let mut members = vec![s];
        comp[s] = s;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &y in g.neighbors(x) {
                if y != u && comp[y] == usize::MAX {
                    comp[y] = s;
                    members.push(y);
                }
            }
            i += 1;
        }
        let inner_edges: usize = members
            .iter()
            .map(|&x| g.neighbors(x).iter().filter(|&&y| y != u).count())
            .sum::<usize>()
            / 2;
        let to_u = members.iter().filter(|&&x| g.has_edge(x, u)).count();
        if inner_edges + 1 == members.len() && to_u == 1 {
            tree.extend(members);
        }
    }
    tree.sort_unstable();
    Ok(tree)
}

/// Replaces the pendant tree `T` at `u` by a star: every vertex of `T`
/// becomes a pendant of `u`.
pub fn collapse_to_star(g: &Graph, u: usize) -> Result<Graph> {
    let tree = pendant_tree_at(g, u)?;
    if tree.is_empty() {
        return Err(Error::Precondition(format!("no pendant tree at {u}")));
    }
    if tree.iter().all(|&w| g.has_edge(u, w)) {
        return Err(Error::Precondition(format!("pendant tree at {u} is already a star")));
    }
    let mut in_tree = vec![false; g.order()];
    tree.iter().for_each(|&w| in_tree[w] = true);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| !in_tree[a] && !in_tree[b])
        .collect();
    edges.extend(tree.iter().map(|&w| (u, w)));
    Graph::new(g.order(), &edges)
}

/// Replayable description of one surgery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum OpSpec {
    Kelmans { v1: usize, v2: usize },
    PendantShift { v1: usize, v2: usize },
    Collapse { u: usize },
}

impl OpSpec {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match *self {
            Self::Kelmans { v1, v2 } => kelmans(g, v1, v2),
            Self::PendantShift { v1, v2 } => pendant_shift(g, v1, v2),
            Self::Collapse { u } => collapse_to_star(g, u),
        }
    }
}

impl fmt::Display for OpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Kelmans { v1, v2 } => write!(f, "kelmans({v1},{v2})"),
            Self::PendantShift { v1, v2 } => write!(f, "pendant_shift({v1},{v2})"),
            Self::Collapse { u } => write!(f, "collapse({u})"),
        }
    }
}

impl FromStr for OpSpec {
    type Err = Error;

    /// Accepts the display form, e.g. `kelmans(1,2)`, or `kelmans:1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unrecognised operation {s:?}"));
        let s = s.trim();
        let (name, args) = match s.split_once('(') {
            Some((name, rest)) => (name, rest.strip_suffix(')').ok_or_else(bad)?),
            None => s.split_once(':').ok_or_else(bad)?,
        };
        let args: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (name.trim(), args.as_slice()) {
            ("kelmans", &[v1, v2]) => Ok(Self::Kelmans { v1, v2 }),
            ("pendant_shift", &[v1, v2]) => Ok(Self::PendantShift { v1, v2 }),
            ("collapse", &[u]) => Ok(Self::Collapse { u }),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransformOutcome {
    pub op: OpSpec,
    #[serde(serialize_with = "as_edge_list")]
    pub result: Graph,
    pub changed: bool,
    #[serde(with = "crate::numfmt::sig")]
    pub rho_before: f64,
    #[serde(with = "crate::numfmt::sig")]
    pub rho_after: f64,
}

fn as_edge_list<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    EdgeList::from(g).serialize(s)
}

/// Applies `op` and checks that the radius rises by more than `1e-9` when the
/// graph changes up to isomorphism, and stays put otherwise.
pub fn verify_monotone(g: &Graph, op: OpSpec, f: &WeightFunction) -> Result<TransformOutcome> {
    let result = op.apply(g)?;
    let report = check_property_pstar(f, result.max_degree().max(g.max_degree()).max(2))?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "{f} lacks property P*: {:?}",
            report.counterexample
        )));
    }
    let changed = canonical_certificate(g) != canonical_certificate(&result);
    let rho_before = rho_of(g, f)?;
    let rho_after = rho_of(&result, f)?;
    let ok = if changed {
        rho_after > rho_before + STRICT_MARGIN
    } else {
        (rho_after - rho_before).abs() <= STRICT_MARGIN
    };
    if !ok {
        return Err(Error::MonotonicityViolated {
            op: op.to_string(),
            before: rho_before,
            after: rho_after,
        });
    }
    Ok(TransformOutcome {
        op,
        result,
        changed,
        rho_before,
        rho_after,
    })
}
