//! Graphviz DOT emission for Fan graphs.

use std::fmt::Write as _;

use linesplit::{FanGraph, IncidenceData};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph: one node per vertex labelled by its coordinates,
/// one edge per Fan edge labelled by its line.
pub fn fan_graph_dot(inc: &IncidenceData, g: &FanGraph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for &v in g.vertices() {
        let label = inc.point(v).point.to_string();
        writeln!(out, "  p{v} [label={}];", quote(&label)).unwrap();
    }
    for e in g.edges() {
        let label = inc.arrangement().label(e.line);
        writeln!(out, "  p{} -- p{} [label={}];", e.ends.0, e.ends.1, quote(label)).unwrap();
    }
    out.push_str("}\n");
    out
}
