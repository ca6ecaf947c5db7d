use num_bigint::BigInt;

use super::Caps;
use crate::bitset::mask_bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::IntPolynomial;

/// Longest simple path length from `source` to every vertex, or `None` where
/// no path exists.
///
/// `ends[S]` is the set of vertices `w` such that some simple path starting
/// at `source` visits exactly `S` and stops at `w`. Extending a path only
/// adds bits, so ascending mask order is a valid topological order.
fn longest_from(adj: &[u64], source: usize) -> Vec<Option<u32>> {
    let n = adj.len();
    let mut ends = vec![0u32; 1 << n];
    let mut best: Vec<Option<u32>> = vec![None; n];
    let start = 1usize << source;
    ends[start] = 1 << source;
    for mask in start..ends.len() {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let len = mask.count_ones() - 1;
        for w in mask_bits(e as u64) {
            best[w] = Some(best[w].map_or(len, |b: u32| b.max(len)));
            let free = adj[w] & !(mask as u64);
            for x in mask_bits(free) {
                ends[mask | (1 << x)] |= 1 << x;
            }
        }
    }
    best
}

/// Matrix of detour (longest simple path) distances.
pub fn detour_matrix(graph: &Graph, caps: &Caps) -> Result<Vec<Vec<u32>>> {
    Caps::ensure(caps.detour.min(super::MAX_CAP), "detour distance", graph)?;
    let adj = graph.masks();
    let n = adj.len();
    let mut out = vec![vec![0u32; n]; n];
    for (u, out_row) in out.iter_mut().enumerate() {
        let row = longest_from(&adj, u);
        for (v, d) in row.into_iter().enumerate() {
            out_row[v] = d.ok_or(Error::Disconnected("detour distance"))?;
        }
    }
    Ok(out)
}

pub fn detour_distance(graph: &Graph, u: usize, v: usize, caps: &Caps) -> Result<u32> {
    graph.degree(u)?;
    graph.degree(v)?;
    Caps::ensure(caps.detour.min(super::MAX_CAP), "detour distance", graph)?;
    longest_from(&graph.masks(), u)[v].ok_or(Error::Disconnected("detour distance"))
}

/// `sum over unordered pairs {u, v}, u != v, of x^{D(u, v)}`
pub fn detour_polynomial(graph: &Graph, caps: &Caps) -> Result<IntPolynomial> {
    let m = detour_matrix(graph, caps)?;
    let mut p = IntPolynomial::zero();
    for (u, row) in m.iter().enumerate() {
        for &d in &row[u + 1..] {
            p.add_term(d, 1.into());
        }
    }
    Ok(p)
}

/// Derivative of the detour polynomial at 1.
pub fn detour_index(graph: &Graph, caps: &Caps) -> Result<BigInt> {
    Ok(detour_polynomial(graph, caps)?.derivative_at_one())
}
