//! Simple undirected graphs on vertices `0..n`.

mod canon;
mod class;
pub mod named;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_certificate, canonical_labeling, Certificate};
pub use class::{base_of, classify, strip_pendants, GraphClass};

/// Simple undirected graph. Vertices are `0..n`; neighbour lists are kept
/// sorted so that equality is structural on the labelled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Builds a validated graph from an edge list.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges)
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { endpoint: u.max(v), n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { n, adj, m: edges.len() })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self)
    }

    /// Cyclomatic number `m - n + 1` (meaningful for connected graphs).
    pub fn cyclomatic_number(&self) -> isize {
        self.m as isize - self.n as isize + 1
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::new(self.n, &edges)
    }

    /// Returns a copy with the extra edges inserted.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Self> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        Self::new(self.n, &edges)
    }

    /// Induced subgraph on `keep` (relabelled in the given order).
    pub fn induced(&self, keep: &[usize]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        Self::new(keep.len(), &edges)
    }
}

/// True iff every vertex is reachable from vertex 0.
pub fn is_connected(g: &Graph) -> bool {
    let mut seen = vec![false; g.n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &g.adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == g.n
}

/// Edge-list document used for JSON I/O.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        Self {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(doc: EdgeList) -> Result<Self> {
        let edges: Vec<_> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(doc.n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = make_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_loop_duplicate_and_range() {
        assert!(matches!(make_graph(2, &[(0, 0)]), Err(Error::Loop(0))));
        assert!(matches!(
            make_graph(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            make_graph(3, &[(0, 3)]),
            Err(Error::EndpointOutOfRange { endpoint: 3, n: 3 })
        ));
        assert!(matches!(make_graph(0, &[]), Err(Error::EmptyGraph)));
    }

    #[test]
    fn path_is_connected() {
        let p4 = make_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_connected(&p4));
        let sparse = make_graph(4, &[(0, 1)]).unwrap();
        assert!(!is_connected(&sparse));
        let c5 = make_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(is_connected(&c5));
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn permute_preserves_size() {
        let p4 = make_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let q = p4.permute(&[2, 0, 3, 1]).unwrap();
        assert_eq!(q.size(), 3);
        assert!(q.has_edge(2, 0) && q.has_edge(0, 3) && q.has_edge(3, 1));
        assert!(p4.permute(&[0, 0, 1, 2]).is_err());
    }
}
