use std::fmt::Write as _;

use super::Embedding;

/// Graphviz rendering; each face walk is listed as a comment.
pub fn to_dot(emb: &Embedding) -> String {
    let mut out = String::from("graph embedding {\n");
    for (i, f) in emb.faces().iter().enumerate() {
        let walk: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
        let tag = if f.is_outer() { " (outer)" } else { "" };
        let _ = writeln!(out, "  // face {i}{tag}: {}", walk.join(" "));
    }
    let outer = emb.outer_vertices();
    for v in emb.vertices() {
        let shape = if outer.contains(&v) {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(out, "  {v} [shape={shape}];");
    }
    for e in emb.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    out.push_str("}\n");
    out
}
