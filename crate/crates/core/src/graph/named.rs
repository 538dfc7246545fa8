//! Constructors for the graph families that appear in the extremal
//! orderings. Vertex labels are fixed per family (see each function) so that
//! eigenvector entries can be matched against hand-labelled drawings.
//!
//! Families whose drawings are not recoverable (U1, U2, U4, B1, B3) are
//! obtained from the discovery catalog in [`crate::extremal`] instead.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// `S_n`: centre `0`, leaves `1..n`.
pub fn star(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges)
}

/// `C_n`: `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::new(n, &edges)
}

/// Double star `S_{d,e}` of order `d + e`, `2 <= d <= e`. Centres `0`
/// (degree `d`) and `1` (degree `e`); pendants of `0` are `2..=d`, pendants
/// of `1` follow.
pub fn double_star(d: usize, e: usize) -> Result<Graph> {
    if d < 2 || d > e {
        return Err(invalid(format!("double star needs 2 <= d <= n - d, got ({d}, {e})")));
    }
    let n = d + e;
    let mut edges = vec![(0, 1)];
    edges.extend((2..=d).map(|v| (0, v)));
    edges.extend((d + 1..n).map(|v| (1, v)));
    Graph::new(n, &edges)
}

/// `S_n + e`: star centred at `0` with the extra edge `1 - 2`.
pub fn star_plus_edge(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("S_n + e needs n >= 3, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    edges.push((1, 2));
    Graph::new(n, &edges)
}

/// `U(n, n1, n2)`: triangle `0, 1, 2` with `n1` pendants on `0` and `n2`
/// pendants on `1`; `n = n1 + n2 + 3`.
pub fn unicyclic_u(n: usize, n1: usize, n2: usize) -> Result<Graph> {
    if n != n1 + n2 + 3 {
        return Err(invalid(format!(
            "U(n, n1, n2) needs n = n1 + n2 + 3, got ({n}, {n1}, {n2})"
        )));
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    edges.extend((3..3 + n1).map(|v| (0, v)));
    edges.extend((3 + n1..n).map(|v| (1, v)));
    Graph::new(n, &edges)
}

/// Cycle `0 - ... - (c-1)` with `k` pendants on the last cycle vertex `c-1`.
///
/// With `c = 4` this is U3, labelled so that `{0, 2}, {1}, {3}, {4..}` is
/// its equitable partition.
pub fn cycle_with_pendants(c: usize, k: usize) -> Result<Graph> {
    if c < 3 {
        return Err(invalid(format!("cycle length must be >= 3, got {c}")));
    }
    let mut edges: Vec<_> = (1..c).map(|i| (i - 1, i)).collect();
    edges.push((0, c - 1));
    edges.extend((c..c + k).map(|v| (c - 1, v)));
    Graph::new(c + k, &edges)
}

/// U3 of order `n >= 4`: `cycle_with_pendants(4, n - 4)`.
pub fn u3(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(invalid(format!("U3 needs n >= 4, got {n}")));
    }
    cycle_with_pendants(4, n - 4)
}

/// U5 of order `n >= 5`: vertex `0` carries `n - 4` pendants (`4..n`) and
/// is joined to `1`, which lies on the triangle `1, 2, 3`.
pub fn u5(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(invalid(format!("U5 needs n >= 5, got {n}")));
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (1, 3)];
    edges.extend((4..n).map(|v| (0, v)));
    Graph::new(n, &edges)
}

fn add_path(edges: &mut Vec<(usize, usize)>, from: usize, to: usize, len: usize, next: &mut usize) {
    let mut prev = from;
    for _ in 1..len {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
    edges.push((prev, to));
}

/// Theta graph `P(q, l, t)`: cycles `C_q` and `C_t` sharing a path on `l`
/// vertices. Requires `q >= t >= 3` and `2 <= l <= t - l + 2`.
///
/// The branch vertices are `0` and `1`; internal vertices of the shared
/// path come first, then those of the rest of `C_t`, then of `C_q`.
pub fn theta(q: usize, l: usize, t: usize) -> Result<Graph> {
    if !(q >= t && t >= 3 && l >= 2 && 2 * l <= t + 2) {
        return Err(invalid(format!(
            "P(q, l, t) needs q >= t >= 3, 2 <= l <= t - l + 2, got ({q}, {l}, {t})"
        )));
    }
    let n = q + t - l;
    let mut edges = Vec::new();
    let mut next = 2;
    add_path(&mut edges, 0, 1, l - 1, &mut next);
    add_path(&mut edges, 0, 1, t - l + 1, &mut next);
    add_path(&mut edges, 0, 1, q - l + 1, &mut next);
    debug_assert_eq!(next, n);
    Graph::new(n, &edges)
}

/// Dumbbell `B(q, l, t)`: `C_q` on `0..q` and `C_t` joined by a path on `l`
/// vertices from `0` (`l = 1` identifies the two cycles at `0`). Requires
/// `q >= t >= 3`, `l >= 1`.
pub fn dumbbell(q: usize, l: usize, t: usize) -> Result<Graph> {
    if !(q >= t && t >= 3 && l >= 1) {
        return Err(invalid(format!(
            "B(q, l, t) needs q >= t >= 3, l >= 1, got ({q}, {l}, {t})"
        )));
    }
    let n = q + t + l - 2;
    let mut edges: Vec<_> = (1..q).map(|i| (i - 1, i)).collect();
    edges.push((0, q - 1));
    let mut next = q;
    let mut end = 0;
    for _ in 1..l {
        edges.push((end, next));
        end = next;
        next += 1;
    }
    // C_t through `end` and t - 1 new vertices
    let first = next;
    let mut prev = end;
    for v in first..first + t - 1 {
        edges.push((prev, v));
        prev = v;
    }
    edges.push((prev, end));
    Graph::new(n, &edges)
}

/// B2 of order `n >= 5`: two triangles `0,1,2` and `0,3,4` sharing `0`,
/// which also carries `n - 5` pendants.
pub fn b2(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(invalid(format!("B2 needs n >= 5, got {n}")));
    }
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)];
    edges.extend((5..n).map(|v| (0, v)));
    Graph::new(n, &edges)
}

/// B4 of order `n >= 4`: `K_4 - e` on `0..4` with the missing edge `0 - 3`;
/// the degree-2 vertex `3` carries `n - 4` pendants.
pub fn b4(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(invalid(format!("B4 needs n >= 4, got {n}")));
    }
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)];
    edges.extend((4..n).map(|v| (3, v)));
    Graph::new(n, &edges)
}

/// Parses `family:arg,arg,...` for the constructible families, e.g.
/// `double_star:3,4`, `theta:4,2,3`, `u:20,16,1`, `b2:7`.
pub fn build(spec: &str) -> Result<Graph> {
    let (family, args) = spec.split_once(':').unwrap_or((spec, ""));
    let args: Vec<usize> = if args.trim().is_empty() {
        Vec::new()
    } else {
        args.split(',')
            .map(|a| a.trim().parse().map_err(|_| invalid(format!("bad argument {a:?}"))))
            .collect::<Result<_>>()?
    };
    let want = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(invalid(format!("{family} takes {k} argument(s), got {}", args.len())))
        }
    };
    match family.to_ascii_lowercase().as_str() {
        "path" => want(1).and_then(|_| path(args[0])),
        "star" => want(1).and_then(|_| star(args[0])),
        "cycle" => want(1).and_then(|_| cycle(args[0])),
        "double_star" => want(2).and_then(|_| double_star(args[0], args[1])),
        "star_plus_edge" => want(1).and_then(|_| star_plus_edge(args[0])),
        "u" => want(3).and_then(|_| unicyclic_u(args[0], args[1], args[2])),
        "cycle_with_pendants" => want(2).and_then(|_| cycle_with_pendants(args[0], args[1])),
        "u3" => want(1).and_then(|_| u3(args[0])),
        "u5" => want(1).and_then(|_| u5(args[0])),
        "theta" => want(3).and_then(|_| theta(args[0], args[1], args[2])),
        "dumbbell" => want(3).and_then(|_| dumbbell(args[0], args[1], args[2])),
        "b2" => want(1).and_then(|_| b2(args[0])),
        "b4" => want(1).and_then(|_| b4(args[0])),
        other => Err(invalid(format!("unknown family {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_rejects_long_shared_path() {
        assert!(theta(3, 9, 3).is_err());
        assert!(theta(5, 3, 4).is_ok());
    }

    #[test]
    fn star_plus_edge_degrees() {
        let g = star_plus_edge(5).unwrap();
        assert_eq!(g.size(), 5);
        assert_eq!(g.degree_sequence(), vec![4, 2, 2, 1, 1]);
    }

    #[test]
    fn u3_degrees() {
        for n in 5..10 {
            let g = u3(n).unwrap();
            let mut expect = vec![n - 2, 2, 2, 2];
            expect.extend(std::iter::repeat_n(1, n - 4));
            assert_eq!(g.degree_sequence(), expect);
            assert_eq!(g.degree(3), n - 2);
        }
    }

    #[test]
    fn b2_degrees() {
        let g = b2(7).unwrap();
        assert_eq!(g.degree_sequence(), vec![6, 2, 2, 2, 2, 1, 1]);
        assert_eq!(g.size(), 8);
    }

    #[test]
    fn u5_matches_eigen_equations() {
        let g = u5(9).unwrap();
        assert_eq!(g.degree(0), 9 - 3);
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.degree(2), 2);
        assert_eq!(g.degree(3), 2);
        assert_eq!(g.size(), 9);
    }

    #[test]
    fn theta_and_dumbbell_orders() {
        let k4e = theta(3, 2, 3).unwrap();
        assert_eq!((k4e.order(), k4e.size()), (4, 5));
        assert_eq!(k4e.degree_sequence(), vec![3, 3, 2, 2]);
        let t = theta(5, 3, 4).unwrap();
        assert_eq!((t.order(), t.size()), (6, 7));
        let bowtie = dumbbell(3, 1, 3).unwrap();
        assert_eq!(bowtie.degree_sequence(), vec![4, 2, 2, 2, 2]);
        let d = dumbbell(4, 3, 3).unwrap();
        assert_eq!((d.order(), d.size()), (8, 9));
        assert!(d.is_connected());
    }

    #[test]
    fn parameter_ranges() {
        assert!(double_star(1, 5).is_err());
        assert!(double_star(4, 3).is_err());
        assert!(theta(3, 3, 3).is_err());
        assert!(theta(3, 2, 4).is_err());
        assert!(dumbbell(3, 0, 3).is_err());
        assert!(unicyclic_u(10, 4, 4).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn build_parses_specs() {
        assert_eq!(build("double_star:3,4").unwrap(), double_star(3, 4).unwrap());
        assert_eq!(build("U:20,16,1").unwrap().order(), 20);
        assert!(build("path").is_err());
        assert!(build("hypercube:3").is_err());
        assert!(build("theta:4,x,3").is_err());
    }
}
