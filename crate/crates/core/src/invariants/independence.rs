use super::Caps;
use crate::bitset::{mask_bits, Bitset};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::IntPolynomial;

/// A maximum independent set, by branch and bound on the highest-degree
/// candidate.
pub fn maximum_independent_set(graph: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    mis_branch(graph, Bitset::full(graph.vertex_count()), &mut current, &mut best);
    best
}

fn mis_branch(graph: &Graph, cands: Bitset, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() + cands.count() <= best.len() {
        return;
    }
    let pivot = cands
        .iter()
        .map(|v| (graph.neighbors(v).intersection_count(&cands), v))
        .max();
    let Some((deg, v)) = pivot else {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    };
    if deg == 0 {
        // remaining candidates are pairwise non-adjacent
        let before = current.len();
        current.extend(cands.iter());
        if current.len() > best.len() {
            *best = current.clone();
        }
        current.truncate(before);
        return;
    }
    let mut with_v = cands.difference(graph.neighbors(v));
    with_v.remove(v);
    current.push(v);
    mis_branch(graph, with_v, current, best);
    current.pop();
    let mut without_v = cands;
    without_v.remove(v);
    mis_branch(graph, without_v, current, best);
}

pub fn independence_number(graph: &Graph) -> usize {
    maximum_independent_set(graph).len()
}

/// Minimum vertex cover size, `n - alpha`. The complement of the maximum
/// independent set found is checked to be a cover.
pub fn vertex_cover_number(graph: &Graph) -> Result<usize> {
    let mis = Bitset::from_indices(graph.vertex_count(), maximum_independent_set(graph));
    let cover = Bitset::full(graph.vertex_count()).difference(&mis);
    let uncovered = graph
        .edges()
        .into_iter()
        .find(|&(u, v)| !cover.contains(u) && !cover.contains(v));
    if let Some((u, v)) = uncovered {
        return Err(Error::InvalidGraph(format!(
            "complement of the independent set leaves edge ({u}, {v}) uncovered"
        )));
    }
    Ok(cover.count())
}

/// Counts independent sets by size via depth-first extension in increasing
/// vertex order, so each set is produced once.
pub fn independence_polynomial(graph: &Graph, caps: &Caps) -> Result<IntPolynomial> {
    Caps::ensure(caps.independence.min(super::MAX_CAP), "independence polynomial", graph)?;
    let adj = graph.masks();
    let n = adj.len();
    let mut counts = vec![0u64; n + 1];
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    count_independent(&adj, all, 0, &mut counts);
    Ok(IntPolynomial::from_coefficients(counts))
}

fn count_independent(adj: &[u64], cands: u64, size: usize, counts: &mut [u64]) {
    counts[size] += 1;
    for v in mask_bits(cands) {
        // only later vertices, and none adjacent to v
        let rest = cands & !((2u64 << v) - 1) & !adj[v];
        count_independent(adj, rest, size + 1, counts);
    }
}

/// Counts vertex covers by size by testing all `2^n` subsets directly.
pub fn vertex_cover_polynomial(graph: &Graph, caps: &Caps) -> Result<IntPolynomial> {
    Caps::ensure(caps.independence.min(super::MAX_CAP), "vertex cover polynomial", graph)?;
    let adj = graph.masks();
    let n = adj.len();
    let mut counts = vec![0u64; n + 1];
    let all = (1u64 << n) - 1;
    for mask in 0..=all {
        // a cover contains every neighbour of each vertex it leaves out
        if mask_bits(all & !mask).all(|v| adj[v] & !mask == 0) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(IntPolynomial::from_coefficients(counts))
}
