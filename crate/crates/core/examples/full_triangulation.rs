//! Full triangulations cost at most one extra peel, and for the
//! counterexample gadgets they cost exactly one.

use onionpeel::{gen_counterexample, gen_cycle, onion_peels, to_full_triangulation, SimpleGraph};

fn main() {
    let square = gen_cycle(4).unwrap();
    let t = to_full_triangulation(&square).unwrap();
    assert_eq!(t.triangulation.graph(), SimpleGraph::complete(4));
    println!(
        "4-cycle: {} peel -> K4 with {} peels (apex {})",
        onion_peels(&square).k(),
        onion_peels(&t.triangulation).k(),
        t.apex
    );

    for k in 2..=5 {
        let g = gen_counterexample(k).unwrap();
        let t = to_full_triangulation(&g).unwrap();
        println!(
            "G_{k}: {} vertices, {} -> {} peels, {} edges added",
            g.vertex_count(),
            t.trace.k_in,
            t.trace.k_out,
            t.trace.added.len()
        );
    }
}
