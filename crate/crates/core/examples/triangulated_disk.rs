//! Turn awkward inputs (two components, a cut vertex on the outer face, a
//! pendant inside a face) into triangulated disks without adding peels.

use onionpeel::triangulate::{to_triangulated_disk, Stage};
use onionpeel::{onion_peels, parse_epg, write_epg};

const INPUTS: [(&str, &str); 3] = [
    (
        "two triangles",
        "epg 1\nv 0: 1 2\nv 1: 2 0\nv 2: 0 1\nv 3: 4 5\nv 4: 5 3\nv 5: 3 4\nouter 0 2\nouter 3 5\n",
    ),
    (
        "bowtie",
        "epg 1\nv 0: 1 2\nv 1: 2 0\nv 2: 0 4 3 1\nv 3: 4 2\nv 4: 2 3\nouter 0 2\n",
    ),
    (
        "square with pendant",
        "epg 1\nv 0: 1 4 3\nv 1: 2 0\nv 2: 3 1\nv 3: 0 2\nv 4: 0\nouter 0 1\n",
    ),
];

fn main() {
    for (name, text) in INPUTS {
        let g = parse_epg(text).unwrap();
        let out = to_triangulated_disk(&g).unwrap();
        assert!(out.disk.is_triangulated_disk());
        assert_eq!(out.disk.outer_vertices(), g.outer_vertices());
        println!(
            "{name}: {} -> {} peels",
            onion_peels(&g).k(),
            onion_peels(&out.disk).k()
        );
        for stage in [
            Stage::Saturate,
            Stage::Connect,
            Stage::OuterCut,
            Stage::InnerCut,
            Stage::Ear,
        ] {
            let edges: Vec<String> = out
                .trace
                .added
                .iter()
                .filter(|a| a.stage == stage)
                .map(|a| format!("{}-{}", a.u, a.v))
                .collect();
            if !edges.is_empty() {
                println!("  {stage:?}: {}", edges.join(" "));
            }
        }
        print!("{}", write_epg(&out.disk));
    }
}
