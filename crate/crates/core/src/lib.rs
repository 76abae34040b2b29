//! Triangulating k-outerplanar graphs without losing control of their
//! outerplanarity, and branch decompositions of width at most `2k` from
//! outer-face-rooted spanning forests.
//!
//! Graphs are combinatorial embeddings ([`Embedding`]): a clockwise rotation
//! of neighbours at every vertex plus one outer dart per component. The
//! main entry points:
//!
//! - [`onion_peels`]: the peel decomposition and its count `k`.
//! - [`to_triangulated_disk`]: a triangulated disk with the same outer
//!   vertices and at most `k` peels.
//! - [`to_full_triangulation`]: a triangulation with at most `k + 1` peels.
//! - [`decompose_pipeline`]: a branch decomposition of width at most `2k`
//!   and the implied treewidth bound.
//! - [`oracles`]: exhaustive checks for small inputs.
//!
//! ```
//! use onionpeel::{gen_cycle, onion_peels, to_full_triangulation};
//!
//! let square = gen_cycle(4).unwrap();
//! assert_eq!(onion_peels(&square).k(), 1);
//! let k4 = to_full_triangulation(&square).unwrap().triangulation;
//! assert_eq!(onion_peels(&k4).k(), 2);
//! ```

pub mod branch;
pub mod cli;
pub mod embedding;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod peel;
pub mod triangulate;

pub use branch::{
    build_branch_tree, build_dual_tree, certify_width_bound, compute_width, decompose_pipeline,
    treewidth_bound, BranchDecomposition, WidthCertificate,
};
pub use embedding::{
    build_embedding, parse_epg, to_dot, write_epg, Dart, Edge, Embedding, FaceWalk, VertexId,
};
pub use generators::{
    gen_counterexample, gen_cycle, gen_k4_minus_edge, gen_nested_triangles, gen_path,
    gen_random_kouter, gen_wheel,
};
pub use graph::SimpleGraph;
pub use peel::{build_rooted_forest, onion_peels, saturate_inward_neighbors, RootedForest};
pub use triangulate::{to_full_triangulation, to_triangulated_disk};
