use std::fmt::Write as _;

use super::ZdGraph;

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for ch in label.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// Undirected DOT text. `labels` is indexed by source element. Isolated
/// vertices come first, then edges in vertex order.
pub fn export_dot(g: &ZdGraph, labels: &[String]) -> String {
    let mut out = String::from("graph zd {\n");
    for (i, &x) in g.vertices.iter().enumerate() {
        if g.degree(i) == 0 {
            let _ = writeln!(out, "  {};", quote(&labels[x]));
        }
    }
    for (i, j) in g.edges() {
        let _ = writeln!(
            out,
            "  {} -- {};",
            quote(&labels[g.vertices[i]]),
            quote(&labels[g.vertices[j]])
        );
    }
    out.push_str("}\n");
    out
}
