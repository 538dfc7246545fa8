//! Text formats: edge-list JSON, graph6 and DOT.

pub mod dot;
pub mod graph6;

use std::path::Path;

use crate::error::Result;
use crate::graph::{EdgeList, Graph};

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeList::from(g)).expect("edge list serialises")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: EdgeList = serde_json::from_str(text)?;
    Graph::try_from(doc)
}

pub fn read_json_graph(path: impl AsRef<Path>) -> Result<Graph> {
    graph_from_json(&std::fs::read_to_string(path)?)
}
