//! Graphviz output.

use std::fmt::Write;

use polyuni_core::Graph;

/// One undirected DOT graph per input, named `{name}_{i}`.
pub fn to_dot(graphs: &[Graph], name: &str) -> String {
    let mut out = String::new();
    for (i, g) in graphs.iter().enumerate() {
        writeln!(out, "graph {name}_{i} {{").unwrap();
        for v in 0..g.order() {
            writeln!(out, "  {v};").unwrap();
        }
        for (u, v) in g.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
    }
    out
}
