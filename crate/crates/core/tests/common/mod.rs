#![allow(dead_code)]

use std::collections::BTreeSet;

use onionpeel::generators::{
    gen_counterexample, gen_nested_triangles, gen_random_kouter, gen_wheel,
};
use onionpeel::Embedding;
use proptest::prelude::*;

/// Random k-outerplanar embeddings, sometimes with a random subset of outer
/// vertices deleted to produce cut vertices, pendants and several
/// components.
pub fn embedding(max_k: u32) -> impl Strategy<Value = Embedding> {
    (
        1..=max_k,
        3u32..8,
        any::<u64>(),
        any::<u64>(),
        any::<bool>(),
    )
        .prop_map(|(k, width, seed, mask, thin)| {
            let g = gen_random_kouter(k, width, seed).unwrap();
            if !thin {
                return g;
            }
            let outer: Vec<_> = g.outer_vertices().into_iter().collect();
            let drop: BTreeSet<_> = outer
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
                .map(|(_, &v)| v)
                .take(outer.len() - 1)
                .collect();
            let thinned = g.remove_vertices(&drop).unwrap();
            if thinned.vertex_count() >= 3 {
                thinned
            } else {
                g
            }
        })
}

pub fn gadget() -> impl Strategy<Value = Embedding> {
    prop_oneof![
        (1u32..5).prop_map(|i| gen_nested_triangles(i).unwrap()),
        (2u32..4).prop_map(|k| gen_counterexample(k).unwrap()),
        (3u32..9).prop_map(|n| gen_wheel(n).unwrap()),
    ]
}

pub fn any_embedding() -> impl Strategy<Value = Embedding> {
    prop_oneof![3 => embedding(4), 1 => gadget()]
}
