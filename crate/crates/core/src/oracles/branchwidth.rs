use crate::graph::SimpleGraph;

use super::{OracleBudget, OracleError};

struct Search {
    /// Per vertex, bitmask of incident edges.
    incidence: Vec<u32>,
    edge_count: usize,
    /// Leaves are nodes `0..edge_count`; internal nodes follow.
    arcs: Vec<(usize, usize)>,
    best: usize,
}

impl Search {
    /// Width of the current tree restricted to the leaves inserted so far.
    fn width(&self, inserted: usize) -> usize {
        let n = self.edge_count + self.arcs.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.arcs {
            adj[a].push(b);
            adj[b].push(a);
        }
        let present: u32 = (1u32 << inserted) - 1;
        let mut mask = vec![0u32; n];
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![0usize];
        parent[0] = 0;
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in &adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut width = 0;
        for &x in order.iter().rev() {
            if x < self.edge_count {
                mask[x] |= 1 << x;
            }
            if x == 0 {
                break;
            }
            let side = mask[x];
            let crossing = self
                .incidence
                .iter()
                .filter(|&&inc| inc & side != 0 && inc & !side & present != 0)
                .count();
            width = width.max(crossing);
            mask[parent[x]] |= side;
        }
        width
    }

    fn insert(&mut self, leaf: usize) {
        if leaf == self.edge_count {
            self.best = self.best.min(self.width(leaf));
            return;
        }
        for t in 0..self.arcs.len() {
            let (a, b) = self.arcs[t];
            let x = self.edge_count + self.arcs.len();
            self.arcs[t] = (a, x);
            self.arcs.push((x, b));
            self.arcs.push((x, leaf));
            if self.width(leaf + 1) < self.best {
                self.insert(leaf + 1);
            }
            self.arcs.truncate(self.arcs.len() - 2);
            self.arcs[t] = (a, b);
        }
    }
}

/// Exact branchwidth: minimum width over every unrooted tree with internal
/// degree 3 whose leaves are the edges, enumerated by inserting leaves one
/// at a time into every arc. A partial tree's width never exceeds that of
/// its completions, which prunes the search. Graphs with at most one edge
/// have branchwidth 0.
pub fn brute_branchwidth(graph: &SimpleGraph, budget: &OracleBudget) -> Result<usize, OracleError> {
    let edges = graph.edges();
    let m = edges.len();
    if m > budget.max_edges || m > 31 {
        return Err(OracleError::BudgetExceeded {
            what: "edge count",
            needed: m as u64,
            limit: budget.max_edges as u64,
        });
    }
    let vertices: Vec<_> = graph.vertices().collect();
    let incidence: Vec<u32> = vertices
        .iter()
        .map(|&v| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.contains(v))
                .fold(0, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    match m {
        0 | 1 => return Ok(0),
        2 => return Ok(incidence.iter().filter(|&&inc| inc == 0b11).count()),
        _ => {}
    }
    let mut search = Search {
        incidence,
        edge_count: m,
        arcs: vec![(0, m), (1, m), (2, m)],
        best: usize::MAX,
    };
    search.insert(3);
    Ok(search.best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(pairs: &[(u32, u32)]) -> usize {
        brute_branchwidth(&SimpleGraph::from_pairs(pairs), &OracleBudget::default()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(bw(&[]), 0);
        assert_eq!(bw(&[(0, 1)]), 0);
        assert_eq!(bw(&[(0, 1), (1, 2)]), 1);
        assert_eq!(bw(&[(0, 1), (1, 2), (2, 0)]), 2);
        assert_eq!(bw(&[(0, 1), (0, 2), (0, 3)]), 1);
        assert_eq!(bw(&[(0, 1), (1, 2), (2, 3), (3, 0)]), 2);
        let k4 = SimpleGraph::complete(4);
        assert_eq!(brute_branchwidth(&k4, &OracleBudget::default()).unwrap(), 3);
    }

    #[test]
    fn only_stars_have_width_one() {
        assert_eq!(bw(&[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]), 1);
        assert_eq!(bw(&[(0, 1), (1, 2), (2, 3)]), 2);
        assert_eq!(bw(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let k5 = SimpleGraph::complete(5);
        let err = brute_branchwidth(&k5, &OracleBudget::default()).unwrap_err();
        assert!(matches!(
            err,
            OracleError::BudgetExceeded { needed: 10, .. }
        ));
    }
}
