//! Graphviz output.

use std::fmt::Write;

use crate::coloring::EdgeColoring;
use crate::graph::Graph;

/// Undirected DOT graph. With a coloring, each edge is labeled with its color
/// and drawn with a hue proportional to `(c - 1) / t`.
pub fn to_dot(g: &Graph, coloring: Option<&EdgeColoring>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        match g.labels() {
            Some(labels) => writeln!(out, "  {v} [label=\"{}\"];", labels[v].replace('"', "\\\"")),
            None => writeln!(out, "  {v};"),
        }
        .expect("writing to a String cannot fail");
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => {
                let color = c.colors[e];
                let hue = (color - 1) as f64 / c.t as f64;
                writeln!(out, "  {a} -- {b} [label=\"{color}\", color=\"{hue:.3} 0.850 0.800\"];")
            }
            None => writeln!(out, "  {a} -- {b};"),
        }
        .expect("writing to a String cannot fail");
    }
    out.push_str("}\n");
    out
}
