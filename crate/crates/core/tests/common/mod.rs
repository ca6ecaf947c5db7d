//! Independent reference computations used as test oracles. Nothing here
//! calls the solvers under test.

#![allow(dead_code)]

use u6n::Graph;

/// Rewrites a word over `{a, b}` in `U_{6n}` to normal form `a^i b^k` using
/// only the rules `ba -> abb`, `a^{2n} -> 1`, `bbb -> 1`. Returns `None` if
/// the step cap is hit.
pub fn free_reduce(word: &str, n: usize, max_steps: usize) -> Option<(usize, usize)> {
    let a_run = "a".repeat(2 * n);
    let mut w = word.to_string();
    let mut steps = 0;
    loop {
        let next = if let Some(p) = w.find("ba") {
            format!("{}abb{}", &w[..p], &w[p + 2..])
        } else if let Some(p) = w.find(&a_run) {
            format!("{}{}", &w[..p], &w[p + a_run.len()..])
        } else if let Some(p) = w.find("bbb") {
            format!("{}{}", &w[..p], &w[p + 3..])
        } else {
            break;
        };
        w = next;
        steps += 1;
        if steps > max_steps {
            return None;
        }
    }
    let i = w.chars().take_while(|&c| c == 'a').count();
    let k = w.len() - i;
    assert!(w[i..].chars().all(|c| c == 'b'), "not in normal form: {w}");
    Some((i, k))
}

/// Word for `a^i b^k`.
pub fn word(i: usize, k: usize) -> String {
    format!("{}{}", "a".repeat(i), "b".repeat(k))
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub const INF: u32 = u32::MAX / 4;

/// Floyd–Warshall all-pairs distances.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let adj = adjacency(g);
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                d[u][v] = 0;
            } else if adj[u][v] {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn eccentricities(g: &Graph) -> Vec<u32> {
    floyd(g).iter().map(|row| *row.iter().max().unwrap()).collect()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn is_independent(g: &Graph, s: &[usize]) -> bool {
    s.iter().all(|&u| s.iter().all(|&v| u == v || !g.has_edge(u, v)))
}

pub fn is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v)))
}

pub fn is_cover(g: &Graph, s: &[usize]) -> bool {
    g.edges().iter().all(|(u, v)| s.contains(u) || s.contains(v))
}

/// Counts of subsets satisfying `pred`, indexed by size.
pub fn count_by_size(g: &Graph, pred: impl Fn(&Graph, &[usize]) -> bool) -> Vec<u64> {
    let n = g.vertex_count();
    let mut counts = vec![0; n + 1];
    for s in subsets(n) {
        if pred(g, &s) {
            counts[s.len()] += 1;
        }
    }
    counts
}

pub fn brute_alpha(g: &Graph) -> usize {
    subsets(g.vertex_count()).filter(|s| is_independent(g, s)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn brute_omega(g: &Graph) -> usize {
    subsets(g.vertex_count()).filter(|s| is_clique(g, s)).map(|s| s.len()).max().unwrap_or(0)
}

/// Smallest `k` with a proper `k`-colouring, by trying every assignment.
pub fn brute_chi(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    for k in 1..=n {
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colours: Vec<u64> = (0..n)
                .map(|_| {
                    let x = c % k as u64;
                    c /= k as u64;
                    x
                })
                .collect();
            if edges.iter().all(|&(u, v)| colours[u] != colours[v]) {
                return k;
            }
        }
    }
    n
}

/// Longest simple path between every pair by exhaustive DFS.
pub fn brute_detour(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.vertex_count();
    let adj = adjacency(g);
    let mut best = vec![vec![None; n]; n];
    fn dfs(adj: &[Vec<bool>], s: usize, u: usize, len: u32, seen: &mut [bool], best: &mut [Vec<Option<u32>>]) {
        let b = &mut best[s][u];
        *b = Some(b.map_or(len, |x: u32| x.max(len)));
        for v in 0..adj.len() {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                dfs(adj, s, v, len + 1, seen, best);
                seen[v] = false;
            }
        }
    }
    for s in 0..n {
        let mut seen = vec![false; n];
        seen[s] = true;
        dfs(&adj, s, s, 0, &mut seen, &mut best);
    }
    best
}

/// Resolving check from Floyd–Warshall distances and a quadratic pairwise
/// comparison.
pub fn brute_resolves(d: &[Vec<u32>], w: &[usize]) -> bool {
    let n = d.len();
    (0..n).all(|u| (u + 1..n).all(|v| w.iter().any(|&x| d[u][x] != d[v][x])))
}

pub fn brute_resolving_counts(g: &Graph) -> Vec<u64> {
    let d = floyd(g);
    let n = g.vertex_count();
    let mut counts = vec![0; n + 1];
    for s in subsets(n) {
        if brute_resolves(&d, &s) {
            counts[s.len()] += 1;
        }
    }
    counts
}

/// Random graph from a seed-like bit string over all pairs.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits.get(k).copied().unwrap_or(false) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::numbered(n, &edges).unwrap()
}
