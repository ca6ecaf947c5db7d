//! Exact graph invariants computed by exhaustive search, without using any
//! knowledge of the graph's structure.
//!
//! The NP-hard quantities are guarded by vertex-count caps collected in
//! [`Caps`]; exceeding a cap is an [`Error::Capacity`], never an
//! approximation.

mod cliques;
mod detour;
mod distance;
mod independence;
mod resolving;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use cliques::{chromatic_number, clique_number};
pub use detour::{detour_distance, detour_index, detour_matrix, detour_polynomial};
pub use distance::{
    distance_matrix, eccentric_connectivity_polynomial, eccentricities, eccentricity,
    total_eccentricity_polynomial, DistanceMatrix,
};
pub use independence::{
    independence_number, independence_polynomial, maximum_independent_set, vertex_cover_number,
    vertex_cover_polynomial,
};
pub use resolving::{is_resolving, metric_dimension, resolving_polynomial, ResolvingSequence};

/// Vertex-count caps for the exponential-time solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Longest-path dynamic program.
    pub detour: usize,
    /// Full subset enumeration for the resolving polynomial.
    pub resolving: usize,
    /// Exact colouring.
    pub chromatic: usize,
    /// Independence and vertex-cover polynomials.
    pub independence: usize,
    /// Metric dimension search.
    pub metric: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            detour: 15,
            resolving: 16,
            chromatic: 40,
            independence: 24,
            metric: 20,
        }
    }
}

/// Hard upper bound for any cap: the solvers index subsets with `u64` masks
/// and tables of size `2^cap`.
pub const MAX_CAP: usize = 32;

impl Caps {
    pub(crate) fn ensure(cap: usize, operation: &'static str, graph: &Graph) -> Result<()> {
        let actual = graph.vertex_count();
        if actual > cap {
            Err(Error::Capacity { operation, cap, actual })
        } else {
            Ok(())
        }
    }
}

impl FromStr for Caps {
    type Err = Error;

    /// Parses overrides such as `detour=15,resolving=16,chromatic=40,indep=24`.
    fn from_str(s: &str) -> Result<Self> {
        let mut caps = Caps::default();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("cap override `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("cap `{key}` has non-integer value `{value}`")))?;
            let limit = if key.trim() == "chromatic" { 64 } else { MAX_CAP };
            if value > limit {
                return Err(Error::Parse(format!("cap `{key}` = {value} exceeds the hard limit {limit}")));
            }
            match key.trim() {
                "detour" => caps.detour = value,
                "resolving" => caps.resolving = value,
                "chromatic" => caps.chromatic = value,
                "indep" | "independence" => caps.independence = value,
                "metric" => caps.metric = value,
                other => return Err(Error::Parse(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }
}

impl fmt::Display for Caps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "detour={},resolving={},chromatic={},indep={},metric={}",
            self.detour, self.resolving, self.chromatic, self.independence, self.metric
        )
    }
}
