//! Exhaustive branchwidth and outerplanarity against what the
//! constructions achieve on small graphs.

use onionpeel::generators::corpus;
use onionpeel::oracles::{brute_branchwidth, brute_outerplanarity, OracleBudget};
use onionpeel::{decompose_pipeline, onion_peels};

fn main() {
    let budget = OracleBudget::default();
    println!(
        "{:<28} {:>3} {:>3} {:>4} {:>6} {:>3}",
        "graph", "V", "E", "bw", "width", "op"
    );
    for (name, g) in corpus(3, 6) {
        if g.vertex_count() < 3 || g.edge_count() > budget.max_edges {
            continue;
        }
        let bw = brute_branchwidth(&g.graph(), &budget).unwrap();
        let width = decompose_pipeline(&g).unwrap().certificate.width;
        let op =
            brute_outerplanarity(&g.graph(), &budget).map_or("-".to_string(), |x| x.to_string());
        println!(
            "{name:<28} {:>3} {:>3} {bw:>4} {width:>6} {op:>3}  (peels {})",
            g.vertex_count(),
            g.edge_count(),
            onion_peels(&g).k()
        );
    }
}
