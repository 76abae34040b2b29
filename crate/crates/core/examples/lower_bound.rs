//! Every triangulation of the k-outerplanar gadget needs k+1 peels,
//! checked exhaustively for k = 1, 2, 3.

use onionpeel::oracles::{certify_theorem1, OracleBudget};

fn main() {
    let budget = OracleBudget::default();
    for k in 1..=3 {
        let r = certify_theorem1(k, &budget).unwrap();
        println!(
            "k={k}: {} vertices, {} triangulations, fewest peels {} (need >= {}): {}",
            r.vertices,
            r.triangulations,
            r.min_outerplanarity,
            r.lower_bound,
            if r.holds {
                "certified"
            } else {
                "NOT certified"
            }
        );
    }
}
