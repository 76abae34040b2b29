//! Branch decompositions of width at most 2k and the resulting treewidth
//! bound, with the decomposition of K4 printed as JSON.

use onionpeel::branch::BranchJson;
use onionpeel::generators::{gen_random_kouter, gen_wheel};
use onionpeel::{decompose_pipeline, gen_counterexample, gen_nested_triangles};

fn main() {
    let cases = [
        ("K4", gen_wheel(3).unwrap()),
        ("T_3", gen_nested_triangles(3).unwrap()),
        ("G_2", gen_counterexample(2).unwrap()),
        ("random k=4", gen_random_kouter(4, 6, 42).unwrap()),
    ];
    for (name, g) in &cases {
        let c = decompose_pipeline(g).unwrap().certificate;
        println!(
            "{name}: k={} height={} width={} (<= {}) treewidth <= {}",
            c.k, c.forest_height, c.width, c.width_bound, c.tw_bound
        );
    }

    let d = decompose_pipeline(&cases[0].1).unwrap();
    let json = BranchJson::new(&d.tree, &d.certificate);
    println!("{}", serde_json::to_string_pretty(&json).unwrap());
}
