//! Onion peels of nested triangles, checked against peeling by deletion,
//! plus the breadth-first forest whose height bounds them.

use onionpeel::peel::{onion_peels_by_removal, verify_forest_bound};
use onionpeel::{
    build_rooted_forest, gen_nested_triangles, onion_peels, saturate_inward_neighbors,
};

fn main() {
    for i in 1..=4 {
        let g = gen_nested_triangles(i).unwrap();
        let peels = onion_peels(&g);
        assert_eq!(peels, &onion_peels_by_removal(&g));

        let sat = saturate_inward_neighbors(&g);
        let forest = build_rooted_forest(&sat).unwrap();
        let bound = verify_forest_bound(&sat, &forest).unwrap();
        println!(
            "T_{i}: {} vertices, {} peels {:?}, forest height {}",
            g.vertex_count(),
            peels.k(),
            peels.layers(),
            bound.height
        );
    }
}
