use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use crate::embedding::{Embedding, VertexId};
use crate::graph::SimpleGraph;

use super::{with_pool, OracleBudget, OracleError};

/// Peel count when face `outer` is the outer face: vertices on it form
/// layer 1, and each further layer collects the unlabelled vertices of the
/// faces touching the previous one.
fn radial_peels(faces: &[Vec<usize>], vertex_count: usize, outer: usize) -> usize {
    let mut faces_at: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
    for (f, vs) in faces.iter().enumerate() {
        for &v in vs {
            faces_at[v].push(f);
        }
    }
    let mut layer = vec![0usize; vertex_count];
    let mut face_used = vec![false; faces.len()];
    face_used[outer] = true;
    let mut queue = VecDeque::new();
    for &v in &faces[outer] {
        if layer[v] == 0 {
            layer[v] = 1;
            queue.push_back(v);
        }
    }
    let mut deepest = usize::from(!queue.is_empty());
    while let Some(v) = queue.pop_front() {
        for &f in &faces_at[v] {
            if std::mem::replace(&mut face_used[f], true) {
                continue;
            }
            for &w in &faces[f] {
                if layer[w] == 0 {
                    layer[w] = layer[v] + 1;
                    deepest = deepest.max(layer[w]);
                    queue.push_back(w);
                }
            }
        }
    }
    deepest
}

/// Faces of a rotation system on vertices `0..n` as vertex lists; `None`
/// unless it is a sphere embedding of a connected graph.
fn sphere_faces(rot: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = rot.len();
    let darts: usize = rot.iter().map(Vec::len).sum();
    let mut pos: Vec<Vec<usize>> = vec![vec![usize::MAX; n]; n];
    for (v, nbrs) in rot.iter().enumerate() {
        for (i, &w) in nbrs.iter().enumerate() {
            pos[v][w] = i;
        }
    }
    let mut seen = vec![vec![false; n]; n];
    let mut faces = Vec::new();
    for u in 0..n {
        for &v in &rot[u] {
            if seen[u][v] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while !seen[a][b] {
                seen[a][b] = true;
                face.push(a);
                let r = &rot[b];
                let c = r[(pos[b][a] + 1) % r.len()];
                (a, b) = (b, c);
            }
            faces.push(face);
        }
    }
    (n as isize - (darts / 2) as isize + faces.len() as isize == 2).then_some(faces)
}

/// Rotation system number `index` in mixed radix over the per-vertex
/// cyclic orders (first neighbour fixed, the rest permuted).
fn decode(nbrs: &[Vec<usize>], radix: &[u64], mut index: u64) -> Vec<Vec<usize>> {
    nbrs.iter()
        .zip(radix)
        .map(|(list, &r)| {
            let mut choice = index % r;
            index /= r;
            let mut pool: Vec<usize> = list[1..].to_vec();
            let mut out = vec![list[0]];
            for left in (1..=pool.len()).rev() {
                let f: u64 = (1..left as u64).product();
                let pick = (choice / f) as usize;
                choice %= f;
                out.push(pool.remove(pick));
            }
            out
        })
        .collect()
}

fn component_outerplanarity(graph: &SimpleGraph, comp: &[VertexId]) -> Result<usize, OracleError> {
    if comp.len() <= 2 {
        return Ok(1);
    }
    let index: BTreeMap<VertexId, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nbrs: Vec<Vec<usize>> = comp
        .iter()
        .map(|&v| graph.neighbors(v).map(|w| index[&w]).collect())
        .collect();
    let radix: Vec<u64> = nbrs
        .iter()
        .map(|l| (1..l.len().max(1) as u64).product())
        .collect();
    let total: u64 = radix.iter().product();
    let n = comp.len();
    with_pool(|| {
        (0..total)
            .into_par_iter()
            .filter_map(|i| {
                let faces = sphere_faces(&decode(&nbrs, &radix, i))?;
                (0..faces.len()).map(|f| radial_peels(&faces, n, f)).min()
            })
            .min()
    })
    .ok_or(OracleError::NotPlanar)
}

/// Exact outerplanarity of an abstract graph: over every rotation system
/// of every component that embeds in the sphere and every choice of outer
/// face, the fewest peels. Components are independent, so the answer is
/// the maximum over components.
pub fn brute_outerplanarity(
    graph: &SimpleGraph,
    budget: &OracleBudget,
) -> Result<usize, OracleError> {
    let n = graph.vertex_count();
    if n > budget.max_vertices {
        return Err(OracleError::BudgetExceeded {
            what: "vertex count",
            needed: n as u64,
            limit: budget.max_vertices as u64,
        });
    }
    let mut best = 0;
    for comp in graph.components() {
        best = best.max(component_outerplanarity(graph, &comp)?);
    }
    Ok(best)
}

/// Fewest peels of a connected embedding over all choices of outer face,
/// keeping its rotation system fixed.
pub fn min_peels_over_faces(emb: &Embedding) -> usize {
    let index: BTreeMap<VertexId, usize> =
        emb.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let faces: Vec<Vec<usize>> = emb
        .faces()
        .iter()
        .map(|f| f.vertices().map(|v| index[&v]).collect())
        .collect();
    if faces.is_empty() {
        return usize::from(emb.vertex_count() > 0);
    }
    (0..faces.len())
        .map(|f| radial_peels(&faces, index.len(), f))
        .min()
        .expect("at least one face")
}
