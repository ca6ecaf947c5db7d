//! Simple undirected graphs with bitset adjacency, the non-commuting graph of
//! a finite group, and the structural checks run against it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Largest pattern accepted by [`find_induced`].
pub const MAX_PATTERN_ORDER: usize = 8;

/// A simple, loop-free undirected graph with uniquely labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    rows: Vec<Bitset>,
}

impl Graph {
    /// Graph without edges.
    pub fn empty_with_labels(labels: Vec<String>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex label `{l}`")));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            rows: vec![Bitset::new(n); n],
        })
    }

    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty_with_labels(labels)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on vertices `0..n` labelled by their index.
    pub fn numbered(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::numbered(n, &edges).expect("valid complete graph")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::numbered(n, &edges).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::numbered(n, &edges).expect("valid cycle")
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what: "graph",
                index: v,
                size: self.vertex_count(),
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Bitset::count).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Open neighbourhood of `v`.
    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.rows[v].count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(Bitset::count).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Adjacency rows as `u64` masks. Requires at most 64 vertices.
    pub(crate) fn masks(&self) -> Vec<u64> {
        assert!(self.vertex_count() <= 64);
        self.rows.iter().map(Bitset::as_u64).collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = Bitset::new(n);
        seen.insert(0);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for v in self.rows[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.count() == n
    }

    /// Subgraph induced by `vertices`, kept in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut pos = BTreeMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            self.check(v)?;
            if pos.insert(v, i).is_some() {
                return Err(Error::InvalidGraph(format!("vertex {v} listed twice")));
            }
        }
        let k = vertices.len();
        let mut rows = vec![Bitset::new(k); k];
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.rows[v].iter() {
                if let Some(&j) = pos.get(&w) {
                    rows[i].insert(j);
                }
            }
        }
        Ok(Graph {
            labels: vertices.iter().map(|&v| self.labels[v].clone()).collect(),
            rows,
        })
    }

    /// Complement graph on the same labels.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let rows = (0..n)
            .map(|v| {
                let mut r = Bitset::full(n).difference(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Graph {
            labels: self.labels.clone(),
            rows,
        }
    }
}

/// Non-commuting graph: the non-central elements in index order, adjacent
/// when they do not commute.
pub fn non_commuting_graph(g: &FiniteGroup) -> Result<Graph> {
    let center = g.center();
    let vertices: Vec<usize> = (0..g.order()).filter(|x| !center.contains(x)).collect();
    if vertices.is_empty() {
        return Err(Error::AbelianGroup);
    }
    let mut graph = Graph::empty_with_labels(vertices.iter().map(|&x| g.label(x).to_string()).collect())?;
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            if g.mul_unchecked(x, y) != g.mul_unchecked(y, x) {
                graph.add_edge(i, j)?;
            }
        }
    }
    Ok(graph)
}

/// Certificate that a graph is complete multipartite: independent classes
/// with every cross-class pair adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionWitness {
    pub classes: Vec<Vec<usize>>,
}

impl PartitionWitness {
    /// Class sizes in ascending order.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.classes.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }
}

/// Groups vertices with identical neighbourhoods and checks the
/// complete-multipartite certificate. Classes are ordered by their first
/// vertex.
pub fn is_complete_multipartite(graph: &Graph) -> Option<PartitionWitness> {
    let mut by_row: BTreeMap<&Bitset, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..graph.vertex_count() {
        let id = *by_row.entry(graph.neighbors(v)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
    }
    let n = graph.vertex_count();
    for class in &classes {
        let members = Bitset::from_indices(n, class.iter().copied());
        let outside = Bitset::full(n).difference(&members);
        // every member sees exactly the vertices outside its class
        if class.iter().any(|&v| graph.neighbors(v) != &outside) {
            return None;
        }
    }
    Some(PartitionWitness { classes })
}

/// Induced pattern for [`find_induced`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    Cycle(usize),
    Path(usize),
}

impl Pattern {
    pub fn order(self) -> usize {
        match self {
            Pattern::Cycle(k) | Pattern::Path(k) => k,
        }
    }
}

/// Searches all vertex subsets of the pattern's order for one inducing the
/// pattern. Returns the first such subset (ascending) or `None`.
pub fn find_induced(graph: &Graph, pattern: Pattern) -> Result<Option<Vec<usize>>> {
    let k = pattern.order();
    if k > MAX_PATTERN_ORDER {
        return Err(Error::InvalidParameter(format!(
            "pattern order {k} exceeds the cap of {MAX_PATTERN_ORDER}"
        )));
    }
    if let Pattern::Cycle(c) = pattern {
        if c < 3 {
            return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {c}")));
        }
    }
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut chosen = Vec::with_capacity(k);
    let mut deg = vec![0usize; graph.vertex_count()];
    Ok(search_induced(graph, pattern, 0, &mut chosen, &mut deg))
}

fn search_induced(
    graph: &Graph,
    pattern: Pattern,
    start: usize,
    chosen: &mut Vec<usize>,
    deg: &mut [usize],
) -> Option<Vec<usize>> {
    let k = pattern.order();
    if chosen.len() == k {
        return matches_pattern(graph, pattern, chosen, deg).then(|| chosen.clone());
    }
    let remaining = k - chosen.len();
    for v in start..graph.vertex_count() {
        if graph.vertex_count() - v < remaining {
            break;
        }
        // both patterns have maximum degree 2
        let new_deg = chosen.iter().filter(|&&u| graph.has_edge(u, v)).count();
        if new_deg > 2 || chosen.iter().any(|&u| graph.has_edge(u, v) && deg[u] == 2) {
            continue;
        }
        for &u in chosen.iter() {
            if graph.has_edge(u, v) {
                deg[u] += 1;
            }
        }
        deg[v] = new_deg;
        chosen.push(v);
        if let Some(found) = search_induced(graph, pattern, v + 1, chosen, deg) {
            return Some(found);
        }
        chosen.pop();
        for &u in chosen.iter() {
            if graph.has_edge(u, v) {
                deg[u] -= 1;
            }
        }
        deg[v] = 0;
    }
    None
}

fn matches_pattern(graph: &Graph, pattern: Pattern, set: &[usize], deg: &[usize]) -> bool {
    let k = set.len();
    let edges: usize = set.iter().map(|&v| deg[v]).sum::<usize>() / 2;
    let degree_ok = match pattern {
        Pattern::Cycle(_) => edges == k && set.iter().all(|&v| deg[v] == 2),
        Pattern::Path(_) => edges + 1 == k,
    };
    // max degree 2 and connected: a cycle when |E| = k, a path when |E| = k - 1
    degree_ok
        && graph
            .induced_subgraph(set)
            .map(|h| h.is_connected())
            .unwrap_or(false)
}

/// Common degree of a regular graph.
pub fn is_k_regular(graph: &Graph) -> Option<usize> {
    let degrees = graph.degrees();
    match degrees.first() {
        None => Some(0),
        Some(&d) => degrees.iter().all(|&x| x == d).then_some(d),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonVertex {
    pub id: usize,
    pub label: String,
}

/// JSON graph schema: vertices in index order, edges as sorted pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub vertices: Vec<JsonVertex>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for JsonGraph {
    fn from(g: &Graph) -> Self {
        JsonGraph {
            vertices: g
                .labels()
                .iter()
                .enumerate()
                .map(|(id, label)| JsonVertex { id, label: label.clone() })
                .collect(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<JsonGraph> for Graph {
    type Error = Error;

    fn try_from(j: JsonGraph) -> Result<Graph> {
        for (i, v) in j.vertices.iter().enumerate() {
            if v.id != i {
                return Err(Error::InvalidGraph(format!("vertex ids must be 0..n in order, found {} at {i}", v.id)));
            }
        }
        let edges: Vec<_> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(j.vertices.into_iter().map(|v| v.label).collect(), &edges)
    }
}

/// Deterministic serialization: vertices in index order, edges lexicographic.
pub fn export(graph: &Graph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => {
            serde_json::to_string(&JsonGraph::from(graph)).expect("graph JSON is serializable")
        }
        ExportFormat::Dot => {
            let mut out = String::from("graph G {\n");
            for label in graph.labels() {
                let _ = writeln!(out, "  \"{}\";", escape_dot(label));
            }
            for (u, v) in graph.edges() {
                let _ = writeln!(
                    out,
                    "  \"{}\" -- \"{}\";",
                    escape_dot(graph.label(u)),
                    escape_dot(graph.label(v))
                );
            }
            out.push_str("}\n");
            out
        }
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
