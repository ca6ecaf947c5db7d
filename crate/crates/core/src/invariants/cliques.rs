use super::Caps;
use crate::bitset::{mask_bits, Bitset};
use crate::error::Result;
use crate::graph::Graph;

/// Size of a maximum clique (Bron–Kerbosch with Tomita pivoting plus a size
/// bound).
pub fn clique_number(graph: &Graph) -> usize {
    let n = graph.vertex_count();
    let mut best = 0;
    bron_kerbosch(graph, 0, Bitset::full(n), Bitset::new(n), &mut best);
    best
}

fn bron_kerbosch(graph: &Graph, size: usize, mut p: Bitset, mut x: Bitset, best: &mut usize) {
    if p.is_empty() {
        if x.is_empty() {
            *best = (*best).max(size);
        }
        return;
    }
    if size + p.count() <= *best {
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| graph.neighbors(u).intersection_count(&p))
        .expect("P is non-empty");
    let branch = p.difference(graph.neighbors(pivot));
    for v in branch.iter() {
        let nv = graph.neighbors(v);
        bron_kerbosch(graph, size + 1, p.intersection(nv), x.intersection(nv), best);
        p.remove(v);
        x.insert(v);
    }
}

/// Chromatic number: DSATUR gives an upper bound, the clique number a lower
/// bound, and exact backtracking decides every count in between.
pub fn chromatic_number(graph: &Graph, caps: &Caps) -> Result<usize> {
    Caps::ensure(caps.chromatic.min(64), "chromatic number", graph)?;
    let n = graph.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let adj = graph.masks();
    let upper = dsatur_greedy(&adj);
    let lower = clique_number(graph).max(1);
    for k in lower..upper {
        let mut colors = vec![None; n];
        if colorable(&adj, k, &mut colors, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn saturation(adj: &[u64], colors: &[Option<usize>], v: usize) -> u64 {
    mask_bits(adj[v])
        .filter_map(|u| colors[u])
        .fold(0u64, |acc, c| acc | 1 << c)
}

/// Uncoloured vertex with the most distinct neighbour colours, ties broken by
/// degree.
fn pick_vertex(adj: &[u64], colors: &[Option<usize>]) -> Option<(usize, u64)> {
    (0..adj.len())
        .filter(|&v| colors[v].is_none())
        .map(|v| (v, saturation(adj, colors, v)))
        .max_by_key(|&(v, s)| (s.count_ones(), adj[v].count_ones(), std::cmp::Reverse(v)))
}

/// Number of colours DSATUR uses.
fn dsatur_greedy(adj: &[u64]) -> usize {
    let mut colors = vec![None; adj.len()];
    let mut used = 0;
    while let Some((v, sat)) = pick_vertex(adj, &colors) {
        let c = (!sat).trailing_zeros() as usize;
        colors[v] = Some(c);
        used = used.max(c + 1);
    }
    used
}

fn colorable(adj: &[u64], k: usize, colors: &mut [Option<usize>], used: usize) -> bool {
    let Some((v, sat)) = pick_vertex(adj, colors) else {
        return true;
    };
    // a fresh colour is interchangeable with any other unused one
    for c in 0..k.min(used + 1) {
        if sat >> c & 1 == 1 {
            continue;
        }
        colors[v] = Some(c);
        if colorable(adj, k, colors, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = None;
    false
}
