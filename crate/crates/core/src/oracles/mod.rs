//! Exhaustive ground truth for small instances. Nothing here shares code
//! with the constructions it is used to check, apart from the embedding
//! data type itself.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embedding::EmbedError;
use crate::generators::GenError;

mod branchwidth;
mod outerplanarity;
mod theorem1;
mod triangulations;

pub use branchwidth::brute_branchwidth;
pub use outerplanarity::{brute_outerplanarity, min_peels_over_faces};
pub use theorem1::{certify_theorem1, Theorem1Report};
pub use triangulations::{catalan, enumerate_face_triangulations, for_each_face_triangulation};

/// Hard caps on the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub max_edges: usize,
    pub max_vertices: usize,
    pub max_chord_sets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_edges: 9,
            max_vertices: 7,
            max_chord_sets: 1_000_000,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("BudgetExceeded: {what} is {needed}, budget {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        limit: u64,
    },
    #[error("NotPlanar: no rotation system of the graph has genus 0")]
    NotPlanar,
    #[error("FaceNotSimple: face repeats a vertex")]
    FaceNotSimple,
    #[error("BadParameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Gen(#[from] GenError),
}

/// Runs `f` on a pool capped by `ONIONPEEL_THREADS` when that is set.
pub(crate) fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var("ONIONPEEL_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    match threads.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}
