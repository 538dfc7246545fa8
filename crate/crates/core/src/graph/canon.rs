//! Canonical labelling by colour refinement and individualisation.
//!
//! The certificate of a graph is the graph6 encoding of its canonical form:
//! among all labellings reachable in the individualisation-refinement tree,
//! the one whose upper-triangular adjacency bit string (graph6 order) is
//! lexicographically smallest. Every step of the tree is defined without
//! reference to the input labels, so the minimum is a class invariant.
//! Branches related by a known automorphism are skipped.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Graph;
use crate::error::Result;
use crate::io::graph6;

/// Canonical byte string identifying an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> Result<Graph> {
        graph6::decode(self.as_str())
    }

    pub fn as_str(&self) -> &str {
        // graph6 bytes are always in 63..=126
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// Parses a stored certificate, re-canonicalising to reject strings that
    /// are valid graph6 but not canonical.
    pub fn parse(s: &str) -> Result<Self> {
        let g = graph6::decode(s)?;
        let cert = canonical_certificate(&g);
        if cert.as_str() != s {
            return Err(crate::Error::Graph6(format!("{s} is not a canonical form")));
        }
        Ok(cert)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Certificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Certificate::parse(&s).map_err(serde::de::Error::custom)
    }
}

pub fn canonical_certificate(g: &Graph) -> Certificate {
    let (payload, _) = Search::run(g);
    let mut bytes = graph6::order_header(g.order());
    bytes.extend_from_slice(&payload);
    Certificate(bytes)
}

/// Returns `perm` with `perm[v]` the canonical position of vertex `v`, so
/// that `g.permute(&perm)` is the canonical representative.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let (_, order) = Search::run(g);
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

struct Search {
    n: usize,
    adj: Vec<bool>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search {
    fn run(g: &Graph) -> (Vec<u8>, Vec<usize>) {
        let n = g.order();
        let mut adj = vec![false; n * n];
        for (u, v) in g.edges() {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let mut search = Search {
            n,
            adj,
            best: None,
            automorphisms: Vec::new(),
        };
        let mut colors = vec![0; n];
        search.refine(&mut colors);
        search.descend(colors, &mut Vec::new());
        search.best.expect("search reaches at least one leaf")
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Iterated 1-WL refinement. Colours are ranks of signatures, so the
    /// numbering depends only on the structure.
    fn refine(&self, colors: &mut [usize]) {
        let mut classes = count_classes(colors);
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..self.n)
                .map(|v| {
                    let mut nb: Vec<usize> = (0..self.n)
                        .filter(|&u| self.adjacent(v, u))
                        .map(|u| colors[u])
                        .collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut uniq = sigs.clone();
            uniq.sort();
            uniq.dedup();
            for (v, sig) in sigs.iter().enumerate() {
                colors[v] = uniq.binary_search(sig).expect("present");
            }
            if uniq.len() == classes {
                return;
            }
            classes = uniq.len();
        }
    }

    fn individualize(&self, colors: &[usize], v: usize) -> Vec<usize> {
        let sigs: Vec<(usize, bool)> = (0..self.n).map(|u| (colors[u], u != v)).collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        let mut out: Vec<usize> = sigs.iter().map(|s| uniq.binary_search(s).expect("present")).collect();
        self.refine(&mut out);
        out
    }

    fn descend(&mut self, colors: Vec<usize>, prefix: &mut Vec<usize>) {
        let mut sizes = vec![0usize; self.n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let Some(target) = sizes.iter().position(|&s| s > 1) else {
            self.leaf(&colors);
            return;
        };
        let cell: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&w| self.twins(v, w)) || self.same_orbit(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let next = self.individualize(&colors, v);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, colors: &[usize]) {
        let mut order = vec![0; self.n];
        for (v, &c) in colors.iter().enumerate() {
            order[c] = v;
        }
        let payload = graph6::pack_bits(self.n, |i, j| self.adjacent(order[i], order[j]));
        match &self.best {
            None => self.best = Some((payload, order)),
            Some((best, best_order)) => match payload.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((payload, order)),
                std::cmp::Ordering::Equal => {
                    let mut aut = vec![0; self.n];
                    for (pos, &v) in best_order.iter().enumerate() {
                        aut[v] = order[pos];
                    }
                    if aut.iter().enumerate().any(|(i, &j)| i != j) {
                        self.automorphisms.push(aut);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// The transposition (v w) is an automorphism.
    fn twins(&self, v: usize, w: usize) -> bool {
        (0..self.n)
            .filter(|&u| u != v && u != w)
            .all(|u| self.adjacent(v, u) == self.adjacent(w, u))
    }

    /// Whether `v` shares an orbit with a tried vertex under the group
    /// generated by known automorphisms fixing `prefix` pointwise.
    fn same_orbit(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        if tried.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for aut in &self.automorphisms {
            if prefix.iter().all(|&p| aut[p] == p) {
                for (x, &y) in aut.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&w| find(&mut parent, w) == root)
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_graph;
    use crate::graph::named;

    #[test]
    fn relabeled_path_same_certificate() {
        let a = make_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = make_graph(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_certificate(&a), canonical_certificate(&b));
    }

    #[test]
    fn p4_is_double_star_2_2() {
        let p4 = named::path(4).unwrap();
        let s22 = named::double_star(2, 2).unwrap();
        assert_eq!(canonical_certificate(&p4), canonical_certificate(&s22));
    }

    #[test]
    fn star_differs_from_path() {
        let s4 = named::star(4).unwrap();
        let p4 = named::path(4).unwrap();
        assert_ne!(canonical_certificate(&s4), canonical_certificate(&p4));
    }

    #[test]
    fn labeling_yields_certificate_graph() {
        let g = named::unicyclic_u(8, 3, 2).unwrap();
        let perm = canonical_labeling(&g);
        let canon = g.permute(&perm).unwrap();
        let cert = canonical_certificate(&g);
        assert_eq!(cert.to_graph().unwrap(), canon);
        assert_eq!(canonical_certificate(&canon), cert);
    }

    #[test]
    fn large_star_is_fast() {
        // twin pruning keeps the search linear for stars
        let g = named::star(30).unwrap();
        let cert = canonical_certificate(&g);
        assert_eq!(Certificate::parse(cert.as_str()).unwrap(), cert);
    }

    #[test]
    fn petersen_like_symmetric_graph() {
        let c = named::cycle(12).unwrap();
        let shifted: Vec<usize> = (0..12).map(|v| (v * 5) % 12).collect();
        assert_eq!(
            canonical_certificate(&c),
            canonical_certificate(&c.permute(&shifted).unwrap())
        );
    }

    #[test]
    fn non_canonical_string_rejected() {
        // P3 labelled with the centre last: 0-2, 1-2
        let g = make_graph(3, &[(0, 2), (1, 2)]).unwrap();
        let s = graph6::encode(&g);
        let canon = canonical_certificate(&g);
        if s != canon.as_str() {
            assert!(Certificate::parse(&s).is_err());
        }
        assert!(Certificate::parse(canon.as_str()).is_ok());
    }
}
