//! Cyclomatic classification and bicyclic bases.

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// Structural class of a connected graph. Bicyclic graphs are split by the
/// shape of their base: theta graphs `P(q, l, t)` or dumbbells `B(q, l, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum GraphClass {
    Tree,
    Unicyclic,
    #[serde(rename = "bicyclic-P")]
    BicyclicTheta {
        q: usize,
        l: usize,
        t: usize,
    },
    #[serde(rename = "bicyclic-B")]
    BicyclicDumbbell {
        q: usize,
        l: usize,
        t: usize,
    },
    Other,
}

impl GraphClass {
    pub fn is_bicyclic(&self) -> bool {
        matches!(self, Self::BicyclicTheta { .. } | Self::BicyclicDumbbell { .. })
    }
}

/// Vertices left after repeatedly deleting degree-1 vertices, ascending.
pub fn strip_pendants(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] || deg[v] != 1 {
            continue;
        }
        alive[v] = false;
        for &u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

/// The unique minimal bicyclic subgraph, relabelled in increasing order of
/// the original vertex indices.
pub fn base_of(g: &Graph) -> Result<Graph> {
    if !g.is_connected() || g.size() != g.order() + 1 {
        return Err(Error::NotBicyclic {
            n: g.order(),
            m: g.size(),
        });
    }
    g.induced(&strip_pendants(g))
}

pub fn classify(g: &Graph) -> GraphClass {
    if !g.is_connected() {
        return GraphClass::Other;
    }
    match g.cyclomatic_number() {
        0 => GraphClass::Tree,
        1 => GraphClass::Unicyclic,
        2 => base_of(g).map(|b| base_shape(&b)).unwrap_or(GraphClass::Other),
        _ => GraphClass::Other,
    }
}

/// Follows degree-2 vertices from `start` through `first` until a branch
/// vertex; returns (end, edge count).
fn trace(g: &Graph, start: usize, first: usize) -> (usize, usize) {
    let (mut prev, mut cur, mut len) = (start, first, 1);
    while g.degree(cur) == 2 && cur != start {
        let next = g.neighbors(cur).iter().copied().find(|&x| x != prev).unwrap_or(prev);
        prev = cur;
        cur = next;
        len += 1;
    }
    (cur, len)
}

fn base_shape(base: &Graph) -> GraphClass {
    let branch: Vec<usize> = (0..base.order()).filter(|&v| base.degree(v) >= 3).collect();
    match branch.as_slice() {
        [v] if base.degree(*v) == 4 => {
            let mut loops: Vec<usize> = base.neighbors(*v).iter().map(|&w| trace(base, *v, w).1).collect();
            loops.sort_unstable();
            // each cycle is seen once in each direction
            GraphClass::BicyclicDumbbell {
                q: loops[3],
                l: 1,
                t: loops[0],
            }
        }
        [u, w] => {
            let from_u: Vec<(usize, usize)> = base.neighbors(*u).iter().map(|&x| trace(base, *u, x)).collect();
            if from_u.iter().all(|&(end, _)| end == *w) {
                let mut lens: Vec<usize> = from_u.iter().map(|&(_, len)| len).collect();
                lens.sort_unstable();
                let (a, b, c) = (lens[0], lens[1], lens[2]);
                return GraphClass::BicyclicTheta {
                    q: a + c,
                    l: a + 1,
                    t: a + b,
                };
            }
            let bridge = from_u.iter().find(|&&(end, _)| end == *w).map(|&(_, len)| len);
            let loop_u = from_u.iter().find(|&&(end, _)| end == *u).map(|&(_, len)| len);
            let loop_w = base
                .neighbors(*w)
                .iter()
                .map(|&x| trace(base, *w, x))
                .find(|&(end, _)| end == *w)
                .map(|(_, len)| len);
            match (bridge, loop_u, loop_w) {
                (Some(b), Some(x), Some(y)) => GraphClass::BicyclicDumbbell {
                    q: x.max(y),
                    l: b + 1,
                    t: x.min(y),
                },
                _ => GraphClass::Other,
            }
        }
        _ => GraphClass::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_certificate, named};

    #[test]
    fn basic_classes() {
        assert_eq!(classify(&named::star(7).unwrap()), GraphClass::Tree);
        assert_eq!(classify(&named::star_plus_edge(7).unwrap()), GraphClass::Unicyclic);
        assert_eq!(
            classify(&named::b2(7).unwrap()),
            GraphClass::BicyclicDumbbell { q: 3, l: 1, t: 3 }
        );
        assert_eq!(
            classify(&named::b4(7).unwrap()),
            GraphClass::BicyclicTheta { q: 3, l: 2, t: 3 }
        );
    }

    #[test]
    fn base_of_strips_pendants() {
        let base = base_of(&named::b2(8).unwrap()).unwrap();
        assert_eq!(
            canonical_certificate(&base),
            canonical_certificate(&named::dumbbell(3, 1, 3).unwrap())
        );
        let k4e = named::theta(3, 2, 3).unwrap();
        assert_eq!(base_of(&k4e).unwrap(), k4e);
        let b4 = base_of(&named::b4(7).unwrap()).unwrap();
        assert_eq!(canonical_certificate(&b4), canonical_certificate(&k4e));
        assert!(base_of(&named::star(5).unwrap()).is_err());
    }

    #[test]
    fn parameters_round_trip() {
        for (q, l, t) in [(3, 2, 3), (4, 2, 3), (5, 3, 4), (6, 2, 4), (4, 3, 4), (7, 4, 6)] {
            let g = named::theta(q, l, t).unwrap();
            assert_eq!(classify(&g), GraphClass::BicyclicTheta { q, l, t }, "P({q},{l},{t})");
        }
        for (q, l, t) in [(3, 1, 3), (4, 1, 3), (3, 2, 3), (5, 4, 4)] {
            let g = named::dumbbell(q, l, t).unwrap();
            assert_eq!(classify(&g), GraphClass::BicyclicDumbbell { q, l, t }, "B({q},{l},{t})");
        }
    }

    #[test]
    fn higher_cyclomatic_is_other() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(classify(&k4), GraphClass::Other);
        assert_eq!(classify(&Graph::new(3, &[(0, 1)]).unwrap()), GraphClass::Other);
    }
}
