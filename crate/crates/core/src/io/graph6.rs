//! graph6 encoding (the format used by nauty's `geng` and friends).
//!
//! Upper-triangle bits are taken column by column:
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six to a byte and offset
//! by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let mut bytes = order_header(g.order());
    bytes.extend(pack_bits(g.order(), |i, j| g.has_edge(i, j)));
    String::from_utf8(bytes).expect("graph6 is ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, rest) = parse_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (rest[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Graph::new(n, &edges)
}

pub(crate) fn order_header(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut v = vec![126];
        v.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
        v
    } else {
        let mut v = vec![126, 126];
        v.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
        v
    }
}

fn parse_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let short = || Error::Graph6("truncated order field".into());
    let word = |b: &[u8]| b.iter().fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize);
    match bytes {
        [] => Err(short()),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(short());
            }
            Ok((word(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(short());
            }
            Ok((word(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

/// Packs the upper-triangle bits of an `n`-vertex adjacency predicate.
pub(crate) fn pack_bits(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<u8> {
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if adjacent(i, j) {
                out[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    for b in &mut out {
        *b += 63;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_graph, named};

    #[test]
    fn known_small_codes() {
        // nauty: C5 = "Dhc", K4 = "C~", P3 with centre 1 = "Bg"
        assert_eq!(encode(&named::cycle(5).unwrap()), "Dhc");
        let k4 = make_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4), "C~");
        assert_eq!(encode(&make_graph(3, &[(0, 1), (1, 2)]).unwrap()), "Bg");
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4 (petgraph fixture)
        let g = make_graph(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn decode_inverts_encode_with_long_header() {
        let g = named::star(70).unwrap();
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
        assert_eq!(decode(&format!(">>graph6<<{s}\n")).unwrap(), g);
    }

    #[test]
    fn decode_errors() {
        assert!(decode("").is_err());
        assert!(decode("D").is_err());
        assert!(decode("Dh c").is_err());
        assert!(decode("Bx").is_err()); // padding bit set
        assert_eq!(decode("@").unwrap().order(), 1);
    }
}
