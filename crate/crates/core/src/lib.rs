//! Non-commuting graphs of the metacyclic groups
//! `U_{6n} = <a, b | a^{2n} = b^3 = 1, a^{-1} b a = b^{-1}>`.
//!
//! The crate builds the group from its presentation (or any finite group from
//! a Cayley table), constructs the non-commuting graph, computes graph
//! invariants and graph polynomials by exhaustive exact search, and compares
//! them with closed-form predictions in terms of `n`.
//!
//! ```
//! use u6n::{group::u6n_group, graph::non_commuting_graph};
//!
//! let g = u6n_group(2).unwrap();
//! let gamma = non_commuting_graph(&g).unwrap();
//! assert_eq!(gamma.vertex_count(), 10);
//! assert_eq!(gamma.edge_count(), 36);
//! ```

pub mod bitset;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod group;
pub mod invariants;
pub mod polynomial;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use group::{FiniteGroup, OmegaClass, OmegaPartition, U6nElement};
pub use invariants::Caps;
pub use polynomial::IntPolynomial;
