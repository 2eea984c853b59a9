use std::fmt::Write as _;

use crate::graph::{EdgeId, Graph, SpanningTree};

/// A named edge set drawn in its own color.
#[derive(Clone, Debug)]
pub struct Highlight<'a> {
    pub name: &'a str,
    pub color: &'a str,
    pub edges: &'a [EdgeId],
}

/// Graphviz text: tree edges solid, non-tree edges dashed. An edge in
/// several highlights takes the first one's color and lists every name in
/// its `class` attribute.
pub fn export_dot(g: &Graph, t: &SpanningTree, highlights: &[Highlight<'_>]) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let id = EdgeId(i);
        let style = if t.contains(id) { "solid" } else { "dashed" };
        let hits: Vec<&Highlight> = highlights
            .iter()
            .filter(|h| h.edges.contains(&id))
            .collect();
        write!(out, "  {u} -- {v} [style={style}").unwrap();
        if let Some(first) = hits.first() {
            let names: Vec<&str> = hits.iter().map(|h| h.name).collect();
            write!(
                out,
                ", color=\"{}\", penwidth=2.5, class=\"{}\"",
                first.color,
                names.join(" ")
            )
            .unwrap();
        }
        out.push_str("];\n");
    }
    out.push_str("}\n");
    out
}
