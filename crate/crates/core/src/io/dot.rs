//! Graphviz export, optionally labelling edges with their weights.

use std::fmt::Write;

use crate::graph::Graph;
use crate::numfmt::format_sig;
use crate::weighting::WeightFunction;

pub fn to_dot(g: &Graph, name: &str, weights: Option<&WeightFunction>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", sanitize(name));
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        match weights.and_then(|f| f.eval::<f64>(g.degree(u), g.degree(v)).ok()) {
            Some(w) => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{}\"];", format_sig(w));
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

fn sanitize(name: &str) -> String {
    let s: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    if s.is_empty() || s.starts_with(|c: char| c.is_ascii_digit()) {
        format!("G{s}")
    } else {
        s
    }
}
