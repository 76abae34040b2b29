//! EPG: a plain-text rotation-system format.
//!
//! ```text
//! epg 1
//! # comments run to end of line
//! v 0: 1 2
//! v 1: 2 0
//! v 2: 0 1
//! outer 0 1
//! ```
//!
//! Each `v` line gives the full clockwise rotation of one vertex; each
//! `outer` line names a dart on the outer face (one per component with
//! edges). The writer emits vertices in ascending order with rotations
//! starting at the smallest neighbour, so write -> parse -> write is exact.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{Dart, EmbedError, Embedding, VertexId};

pub fn write_epg(emb: &Embedding) -> String {
    let mut out = String::from("epg 1\n");
    for (v, nbrs) in emb.rotation_map() {
        let _ = write!(out, "v {v}:");
        for w in nbrs {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    for d in emb.outer_darts() {
        let _ = writeln!(out, "outer {} {}", d.origin, d.target);
    }
    out
}

pub fn parse_epg(text: &str) -> Result<Embedding, EmbedError> {
    let mut header_seen = false;
    let mut rotation: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut outer = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| EmbedError::Parse {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        if !header_seen {
            if keyword != "epg" || tokens.next() != Some("1") || tokens.next().is_some() {
                return Err(err("expected header `epg 1`".into()));
            }
            header_seen = true;
            continue;
        }
        match keyword {
            "v" => {
                let rest = line[1..].trim_start();
                let (id_part, nbr_part) = rest
                    .split_once(':')
                    .ok_or_else(|| err("vertex line needs `:`".into()))?;
                let v = parse_id(id_part.trim()).map_err(err)?;
                let nbrs = nbr_part
                    .split_whitespace()
                    .map(parse_id)
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                if rotation.insert(v, nbrs).is_some() {
                    return Err(EmbedError::DuplicateVertex(v));
                }
            }
            "outer" => {
                let ids = tokens
                    .map(parse_id)
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                match ids.as_slice() {
                    [u, v] => outer.push(Dart::new(*u, *v)),
                    _ => return Err(err("`outer` takes exactly two vertex ids".into())),
                }
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }
    if !header_seen {
        return Err(EmbedError::Parse {
            line: 0,
            message: "missing header `epg 1`".into(),
        });
    }
    Embedding::new(rotation, outer)
}

fn parse_id(tok: &str) -> Result<VertexId, String> {
    tok.parse::<VertexId>()
        .map_err(|_| format!("`{tok}` is not a vertex id"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "epg 1\nv 0: 1 2\nv 1: 0 2\nv 2: 0 1\nouter 0 2\n";

    #[test]
    fn canonical_text_round_trips() {
        let emb = parse_epg(TRIANGLE).unwrap();
        assert_eq!(write_epg(&emb), TRIANGLE);
    }

    #[test]
    fn comments_and_spacing() {
        let text = "# a triangle\nepg 1\n\nv 0 : 2 1   # rotated\nv 1: 0 2\nv 2: 1 0\nouter 2 0\n";
        let emb = parse_epg(text).unwrap();
        assert_eq!(emb.vertex_count(), 3);
        assert_eq!(emb.rotation(0), &[1, 2]);
    }

    #[test]
    fn isolated_vertex_line() {
        let emb = parse_epg("epg 1\nv 4:\n").unwrap();
        assert_eq!(emb.vertex_count(), 1);
        assert_eq!(write_epg(&emb), "epg 1\nv 4:\n");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_epg("v 0:\n"),
            Err(EmbedError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_epg("epg 1\nv x: 1\n"),
            Err(EmbedError::Parse { line: 2, .. })
        ));
        assert_eq!(
            parse_epg("epg 1\nv 0: 1\nv 1:\nouter 0 1\n").unwrap_err(),
            EmbedError::AsymmetricAdjacency(0, 1)
        );
    }
}
