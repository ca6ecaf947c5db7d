use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::IntPolynomial;

/// All-pairs hop distances; unreachable pairs hold [`DistanceMatrix::UNREACHABLE`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn size(&self) -> usize {
        self.n
    }

    /// `None` when `v` is unreachable from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.d[u * self.n + v];
        (d != Self::UNREACHABLE).then_some(d)
    }

    #[inline]
    pub(crate) fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&Self::UNREACHABLE)
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().filter(|&d| d != Self::UNREACHABLE).max().unwrap_or(0)
    }
}

/// BFS from every vertex.
pub fn distance_matrix(graph: &Graph) -> DistanceMatrix {
    let n = graph.vertex_count();
    let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for v in graph.neighbors(u).iter() {
                if row[v] == DistanceMatrix::UNREACHABLE {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

fn connected_matrix(graph: &Graph, op: &'static str) -> Result<DistanceMatrix> {
    let dm = distance_matrix(graph);
    if dm.is_connected() {
        Ok(dm)
    } else {
        Err(Error::Disconnected(op))
    }
}

pub fn eccentricity(graph: &Graph, v: usize) -> Result<u32> {
    graph.degree(v)?;
    let dm = connected_matrix(graph, "eccentricity")?;
    Ok(dm.row(v).iter().copied().max().unwrap_or(0))
}

/// Eccentricity of every vertex.
pub fn eccentricities(graph: &Graph) -> Result<Vec<u32>> {
    let dm = connected_matrix(graph, "eccentricity")?;
    Ok((0..dm.size())
        .map(|v| dm.row(v).iter().copied().max().unwrap_or(0))
        .collect())
}

/// `sum over u of x^{ecc(u)}`
pub fn total_eccentricity_polynomial(graph: &Graph) -> Result<IntPolynomial> {
    let mut p = IntPolynomial::zero();
    for e in eccentricities(graph)? {
        p.add_term(e, 1.into());
    }
    Ok(p)
}

/// `sum over u of deg(u) x^{ecc(u)}`
pub fn eccentric_connectivity_polynomial(graph: &Graph) -> Result<IntPolynomial> {
    let mut p = IntPolynomial::zero();
    for (e, d) in eccentricities(graph)?.into_iter().zip(graph.degrees()) {
        p.add_term(e, d.into());
    }
    Ok(p)
}
