use serde::{Deserialize, Serialize};

use super::distance::{distance_matrix, DistanceMatrix};
use super::Caps;
use crate::bitset::mask_bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::IntPolynomial;

/// Numbers of resolving sets of each cardinality from the metric dimension
/// up to the vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvingSequence {
    /// Cardinality of the first entry (the metric dimension).
    pub start: usize,
    pub counts: Vec<u64>,
}

/// Checks whether the representation vectors `r(v | W)` are pairwise
/// distinct. Vectors are packed into `u128` keys when they fit, then sorted.
struct Resolver {
    dm: DistanceMatrix,
    bits: u32,
    packed: Vec<u128>,
    wide: Vec<Vec<u32>>,
}

impl Resolver {
    fn new(graph: &Graph, op: &'static str) -> Result<Self> {
        let dm = distance_matrix(graph);
        if !dm.is_connected() {
            return Err(Error::Disconnected(op));
        }
        let bits = 32 - dm.diameter().max(1).leading_zeros();
        Ok(Resolver {
            dm,
            bits,
            packed: Vec::new(),
            wide: Vec::new(),
        })
    }

    fn resolves(&mut self, w: u64) -> bool {
        let n = self.dm.size();
        if (w.count_ones() * self.bits) as usize <= 128 {
            self.packed.clear();
            for v in 0..n {
                let key = mask_bits(w).fold(0u128, |k, x| k << self.bits | self.dm.raw(v, x) as u128);
                self.packed.push(key);
            }
            self.packed.sort_unstable();
            self.packed.windows(2).all(|p| p[0] != p[1])
        } else {
            self.wide.clear();
            for v in 0..n {
                self.wide.push(mask_bits(w).map(|x| self.dm.raw(v, x)).collect());
            }
            self.wide.sort_unstable();
            self.wide.windows(2).all(|p| p[0] != p[1])
        }
    }
}

/// True iff every vertex has a distinct distance vector to `w`.
pub fn is_resolving(graph: &Graph, w: &[usize]) -> Result<bool> {
    for &v in w {
        graph.degree(v)?;
    }
    let mut r = Resolver::new(graph, "resolving set")?;
    if graph.vertex_count() <= 64 {
        let mask = w.iter().fold(0u64, |m, &v| m | 1 << v);
        return Ok(r.resolves(mask));
    }
    let mut reps: Vec<Vec<u32>> = (0..graph.vertex_count())
        .map(|v| w.iter().map(|&x| r.dm.raw(v, x)).collect())
        .collect();
    reps.sort_unstable();
    Ok(reps.windows(2).all(|p| p[0] != p[1]))
}

/// Visits every `k`-subset of `0..n` as a mask, in colexicographic order.
fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    if k > n {
        return false;
    }
    if k == 0 {
        return f(0);
    }
    let mut m: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while m < limit {
        if f(m) {
            return true;
        }
        // Gosper's hack: next mask with the same popcount
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    false
}

/// Smallest size of a resolving set, by increasing-cardinality enumeration.
pub fn metric_dimension(graph: &Graph, caps: &Caps) -> Result<usize> {
    Caps::ensure(caps.metric.min(super::MAX_CAP), "metric dimension", graph)?;
    let mut r = Resolver::new(graph, "metric dimension")?;
    let n = graph.vertex_count();
    for k in 0..=n {
        if for_each_k_subset(n, k, |m| r.resolves(m)) {
            return Ok(k);
        }
    }
    unreachable!("the full vertex set always resolves a connected graph")
}

/// Counts resolving sets by cardinality over all `2^n` subsets.
pub fn resolving_polynomial(graph: &Graph, caps: &Caps) -> Result<(IntPolynomial, ResolvingSequence)> {
    Caps::ensure(caps.resolving.min(super::MAX_CAP), "resolving polynomial", graph)?;
    let mut r = Resolver::new(graph, "resolving polynomial")?;
    let n = graph.vertex_count();
    let full = (1u64 << n) - 1;
    let mut counts = vec![0u64; n + 1];
    let mut resolving = vec![false; 1 << n];
    for mask in 0..=full {
        if r.resolves(mask) {
            resolving[mask as usize] = true;
            counts[mask.count_ones() as usize] += 1;
        }
    }
    // supersets of resolving sets resolve
    debug_assert!((0..=full).filter(|&m| resolving[m as usize]).all(|m| {
        let free = full & !m;
        free == 0 || resolving[(m | (free & free.wrapping_neg())) as usize]
    }));
    let start = counts.iter().position(|&c| c > 0).expect("V resolves");
    let poly = IntPolynomial::from_coefficients(counts.iter().copied());
    Ok((
        poly,
        ResolvingSequence {
            start,
            counts: counts[start..].to_vec(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::non_commuting_graph;
    use crate::group::u6n_group;

    fn gamma(n: usize) -> Graph {
        non_commuting_graph(&u6n_group(n).unwrap()).unwrap()
    }

    fn ids(g: &Graph, labels: &[&str]) -> Vec<usize> {
        labels.iter().map(|l| g.find(l).unwrap()).collect()
    }

    #[test]
    fn resolving_sets_in_gamma1() {
        let g = gamma(1);
        assert!(is_resolving(&g, &ids(&g, &["a", "ab", "b"])).unwrap());
        assert!(!is_resolving(&g, &ids(&g, &["a", "ab"])).unwrap());
        assert!(is_resolving(&g, &(0..5).collect::<Vec<_>>()).unwrap());
    }

    #[test]
    fn dimension() {
        let caps = Caps::default();
        assert_eq!(metric_dimension(&gamma(1), &caps).unwrap(), 3);
        assert_eq!(metric_dimension(&gamma(2), &caps).unwrap(), 6);
        assert_eq!(metric_dimension(&Graph::path(4), &caps).unwrap(), 1);
        assert_eq!(metric_dimension(&Graph::complete(5), &caps).unwrap(), 4);
        assert_eq!(metric_dimension(&Graph::numbered(1, &[]).unwrap(), &caps).unwrap(), 0);
    }

    #[test]
    fn polynomials() {
        let caps = Caps::default();
        let (p1, s1) = resolving_polynomial(&gamma(1), &caps).unwrap();
        assert_eq!(p1.to_string(), "6*x^3 + 5*x^4 + x^5");
        assert_eq!(s1, ResolvingSequence { start: 3, counts: vec![6, 5, 1] });
        let (p2, s2) = resolving_polynomial(&gamma(2), &caps).unwrap();
        assert_eq!(p2.to_string(), "32*x^6 + 56*x^7 + 36*x^8 + 10*x^9 + x^10");
        assert_eq!(s2.counts, vec![32, 56, 36, 10, 1]);
        let (pk2, _) = resolving_polynomial(&Graph::complete(2), &caps).unwrap();
        assert_eq!(pk2.to_string(), "2*x + x^2");
    }

    #[test]
    fn errors() {
        let caps = Caps::default();
        let disconnected = Graph::numbered(3, &[(0, 1)]).unwrap();
        assert!(matches!(is_resolving(&disconnected, &[0]), Err(Error::Disconnected(_))));
        assert!(matches!(metric_dimension(&disconnected, &caps), Err(Error::Disconnected(_))));
        let small = Caps { resolving: 4, metric: 4, ..caps };
        assert!(matches!(resolving_polynomial(&gamma(1), &small), Err(Error::Capacity { .. })));
        assert!(matches!(metric_dimension(&gamma(1), &small), Err(Error::Capacity { .. })));
        assert!(is_resolving(&gamma(1), &[9]).is_err());
    }

    #[test]
    fn colex_subsets() {
        let mut seen = Vec::new();
        for_each_k_subset(4, 2, |m| {
            seen.push(m);
            false
        });
        assert_eq!(seen, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
    }
}
