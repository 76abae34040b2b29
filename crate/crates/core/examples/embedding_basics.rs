//! Build an embedding from a rotation system, walk its faces, and print it
//! as EPG and DOT.

use std::collections::BTreeMap;

use onionpeel::{build_embedding, parse_epg, to_dot, write_epg};

fn main() {
    // A square 0-1-2-3 with the chord 0-2. Rotations are clockwise.
    let rotation = BTreeMap::from([
        (0, vec![1, 2, 3]),
        (1, vec![2, 0]),
        (2, vec![3, 0, 1]),
        (3, vec![0, 2]),
    ]);
    let emb = build_embedding(&[0, 1, 2, 3], &rotation, &[(0, 1)]).expect("valid rotation system");

    println!(
        "V={} E={} F={}",
        emb.vertex_count(),
        emb.edge_count(),
        emb.face_count()
    );
    for (id, face) in emb.faces().iter().enumerate() {
        let walk: Vec<String> = face.vertices().map(|v| v.to_string()).collect();
        println!(
            "face {id}{}: {}",
            if face.is_outer() { " (outer)" } else { "" },
            walk.join(" ")
        );
    }
    println!("triangulated disk: {}", emb.is_triangulated_disk());

    let text = write_epg(&emb);
    print!("\n{text}");
    assert_eq!(parse_epg(&text).unwrap(), emb);

    let dual = emb.dual_graph().unwrap();
    println!(
        "\ndual: {} nodes, {} edges",
        dual.node_count,
        dual.edges.len()
    );

    print!("\n{}", to_dot(&emb));
}
