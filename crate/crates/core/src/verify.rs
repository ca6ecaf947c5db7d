//! Brute force versus closed forms: one report entry per result about
//! `Γ(U_{6n})`.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{self as cf, Prediction, Value};
use crate::error::Error;
use crate::graph::{self, Graph, Pattern};
use crate::group::{u6n_group, FiniteGroup, OmegaClass, OmegaPartition};
use crate::invariants::{self as inv, Caps, ResolvingSequence};
use crate::polynomial::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    KnownPaperException,
    SkippedCap,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::KnownPaperException => "known_paper_exception",
            Status::SkippedCap => "skipped_cap",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub predicted: Value,
    /// `None` when the computation was skipped.
    pub computed: Option<Value>,
    pub status: Status,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn has_mismatch(&self) -> bool {
        self.entries.iter().any(|e| e.status == Status::Mismatch)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Fixed-width table, one row per entry.
    pub fn to_text(&self) -> String {
        const W: usize = 40;
        let mut out = String::new();
        let _ = writeln!(out, "n = {}", self.n);
        let _ = writeln!(
            out,
            "{:<30} {:<W$} {:<W$} {:<22} {:>8}",
            "invariant", "predicted", "computed", "status", "ms"
        );
        let _ = writeln!(out, "{}", "-".repeat(30 + 2 * W + 22 + 8 + 4));
        for e in &self.entries {
            let computed = e.computed.as_ref().map_or_else(|| "-".to_string(), Value::to_string);
            let _ = writeln!(
                out,
                "{:<30} {:<W$} {:<W$} {:<22} {:>8}",
                e.name,
                clip(&e.predicted.to_string(), W),
                clip(&computed, W),
                e.status.as_str(),
                e.elapsed_ms
            );
        }
        let _ = writeln!(
            out,
            "{} match, {} mismatch, {} known_paper_exception, {} skipped_cap",
            self.count(Status::Match),
            self.count(Status::Mismatch),
            self.count(Status::KnownPaperException),
            self.count(Status::SkippedCap)
        );
        out
    }
}

fn clip(s: &str, width: usize) -> String {
    if s.chars().count() <= width {
        s.to_string()
    } else {
        let head: String = s.chars().take(width - 3).collect();
        format!("{head}...")
    }
}

/// Supplies the predicted side of a report.
pub trait PredictionSource {
    /// Predictions in report order.
    fn predictions(&self, n: usize) -> Vec<Prediction>;
}

/// The published closed forms.
#[derive(Debug, Clone, Copy, Default)]
pub struct PaperFormulas;

fn labels_of(elems: impl IntoIterator<Item = String>) -> String {
    format!("{{{}}}", elems.into_iter().collect::<Vec<_>>().join(", "))
}

impl PredictionSource for PaperFormulas {
    fn predictions(&self, n: usize) -> Vec<Prediction> {
        use Value::*;
        let mut out = vec![Prediction::new("center.size", n, Int(cf::cf_center_size(n)))];
        for class in OmegaClass::ALL {
            let rows = cf::cf_omega_class(class, n)
                .into_iter()
                .map(|x| {
                    let c = cf::cf_centralizer(class, x, n).expect("class member");
                    format!("{x}: {}", labels_of(c.iter().map(ToString::to_string)))
                })
                .collect();
            out.push(Prediction::new(format!("centralizer.{}", class.name()), n, Labels(rows)));
        }
        for class in OmegaClass::ALL {
            out.push(Prediction::new(
                format!("degree.{}", class.name()),
                n,
                Ints(vec![cf::cf_degree(class, n)]),
            ));
        }
        let mut classes: Vec<String> = OmegaClass::ALL
            .iter()
            .map(|&c| labels_of(cf::cf_omega_class(c, n).iter().map(ToString::to_string)))
            .collect();
        classes.sort();
        let ints = |v: i64| Ints(vec![v]);
        out.extend([
            Prediction::new("degree.centralizer_identity", n, Bool(true)),
            Prediction::new("edges", n, Int(cf::cf_edge_count(n))),
            Prediction::new("multipartite.sizes", n, Ints(cf::cf_partition_sizes(n))),
            Prediction::new("multipartite.classes", n, Labels(classes)),
            Prediction::new("alpha", n, Int(cf::cf_alpha(n))),
            Prediction::new("tau", n, Int(cf::cf_tau(n))),
            Prediction::new("alpha_plus_tau", n, Int(cf::cf_alpha(n) + cf::cf_tau(n))),
            Prediction::new("clique_number", n, Int(cf::cf_chi_omega(n))),
            Prediction::new("chromatic_number", n, Int(cf::cf_chi_omega(n))),
            Prediction::new("induced.c5", n, Bool(false)),
            Prediction::new("induced.p4", n, Bool(false)),
            Prediction::new("regular.omega123", n, ints(cf::cf_regular_degree(n))),
            Prediction::new("regular.full", n, Bool(false)),
            Prediction::new("metric_dimension", n, Int(cf::cf_metric_dimension(n))),
            Prediction::new("resolving.polynomial", n, Poly(cf::cf_resolving_polynomial(n))),
            Prediction::new("resolving.roots", n, Ints(cf::cf_resolving_roots(n))),
            Prediction::new("resolving.sequence", n, Ints(cf::cf_resolving_sequence(n))),
            Prediction::new("detour.distances", n, ints(cf::cf_detour_distance(n))),
            Prediction::new("detour.polynomial", n, Poly(cf::cf_detour_polynomial(n))),
            Prediction::new(
                "detour.index",
                n,
                Int(cf::cf_detour_index(n).to_i64().expect("detour index fits in i64")),
            ),
            cf::cf_eccentricity(n),
            cf::cf_total_eccentricity_polynomial(n),
            cf::cf_eccentric_connectivity_polynomial(n),
            Prediction::new("independence.polynomial", n, Poly(cf::cf_independence_polynomial(n))),
            Prediction::new("vertex_cover.polynomial", n, Poly(cf::cf_vertex_cover_polynomial(n))),
        ]);
        out
    }
}

#[derive(Debug, Clone)]
enum Failure {
    Cap,
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { .. } => Failure::Cap,
            other => Failure::Other(other.to_string()),
        }
    }
}

type Computed<T> = std::result::Result<T, Failure>;

/// Group, graph and lazily computed shared results for one `n`.
struct Instance {
    group: FiniteGroup,
    omega: OmegaPartition,
    graph: Graph,
    caps: Caps,
    resolving: OnceCell<Computed<(IntPolynomial, ResolvingSequence)>>,
    detour: OnceCell<Computed<Vec<Vec<u32>>>>,
}

impl Instance {
    fn new(n: usize, caps: Caps) -> crate::Result<Self> {
        let group = u6n_group(n)?;
        let omega = group.omega_partition()?;
        let graph = graph::non_commuting_graph(&group)?;
        Ok(Instance {
            group,
            omega,
            graph,
            caps,
            resolving: OnceCell::new(),
            detour: OnceCell::new(),
        })
    }

    /// Graph vertex of a group element.
    fn vertex(&self, x: usize) -> usize {
        self.graph.find(self.group.label(x)).expect("non-central element is a vertex")
    }

    fn vertices(&self, classes: &[OmegaClass]) -> Vec<usize> {
        let mut vs: Vec<usize> = classes
            .iter()
            .flat_map(|&c| self.omega.class(c).iter().map(|&x| self.vertex(x)))
            .collect();
        vs.sort_unstable();
        vs
    }

    fn resolving(&self) -> Computed<(IntPolynomial, ResolvingSequence)> {
        self.resolving
            .get_or_init(|| inv::resolving_polynomial(&self.graph, &self.caps).map_err(Failure::from))
            .clone()
    }

    fn detour(&self) -> Computed<Vec<Vec<u32>>> {
        self.detour
            .get_or_init(|| inv::detour_matrix(&self.graph, &self.caps).map_err(Failure::from))
            .clone()
    }

    fn class_of_name(name: &str) -> Option<OmegaClass> {
        OmegaClass::ALL.into_iter().find(|c| c.name() == name)
    }

    fn compute(&self, name: &str) -> Computed<Value> {
        use Value::*;
        let g = &self.graph;
        let caps = &self.caps;
        let distinct = |vals: Vec<i64>| Ints(vals.into_iter().collect::<BTreeSet<_>>().into_iter().collect());
        let value = match name {
            "center.size" => Int(self.group.center().len() as i64),
            "degree.centralizer_identity" => Bool(self.omega.union().iter().all(|&x| {
                let c = self.group.centralizer(x).expect("valid element").len();
                g.degree(self.vertex(x)).expect("valid vertex") == self.group.order() - c
            })),
            "edges" => Int(g.edge_count() as i64),
            "multipartite.sizes" => match graph::is_complete_multipartite(g) {
                Some(w) => Ints(w.sizes().into_iter().map(|s| s as i64).collect()),
                None => Bool(false),
            },
            "multipartite.classes" => match graph::is_complete_multipartite(g) {
                Some(w) => {
                    let mut classes: Vec<String> = w
                        .classes
                        .iter()
                        .map(|c| labels_of(c.iter().map(|&v| g.label(v).to_string())))
                        .collect();
                    classes.sort();
                    Labels(classes)
                }
                None => Bool(false),
            },
            "alpha" => Int(inv::independence_number(g) as i64),
            "tau" => Int(inv::vertex_cover_number(g)? as i64),
            "alpha_plus_tau" => Int((inv::independence_number(g) + inv::vertex_cover_number(g)?) as i64),
            "clique_number" => Int(inv::clique_number(g) as i64),
            "chromatic_number" => Int(inv::chromatic_number(g, caps)? as i64),
            "induced.c5" => Bool(graph::find_induced(g, Pattern::Cycle(5))?.is_some()),
            "induced.p4" => Bool(graph::find_induced(g, Pattern::Path(4))?.is_some()),
            "regular.omega123" => {
                let sub = g.induced_subgraph(&self.vertices(&OmegaClass::ALL[..3]))?;
                distinct(sub.degrees().into_iter().map(|d| d as i64).collect())
            }
            "regular.full" => Bool(graph::is_k_regular(g).is_some()),
            "metric_dimension" => Int(inv::metric_dimension(g, caps)? as i64),
            "resolving.polynomial" => Poly(self.resolving()?.0),
            "resolving.roots" => Ints(self.resolving()?.0.integer_roots()),
            "resolving.sequence" => Ints(self.resolving()?.1.counts.iter().map(|&c| c as i64).collect()),
            "detour.distances" => {
                let m = self.detour()?;
                distinct(
                    m.iter()
                        .enumerate()
                        .flat_map(|(u, row)| row[u + 1..].iter().map(|&d| d as i64))
                        .collect(),
                )
            }
            "detour.polynomial" => {
                let m = self.detour()?;
                let mut p = IntPolynomial::zero();
                for (u, row) in m.iter().enumerate() {
                    for &d in &row[u + 1..] {
                        p.add_term(d, 1.into());
                    }
                }
                Poly(p)
            }
            "detour.index" => {
                let m = self.detour()?;
                let total: u64 = m
                    .iter()
                    .enumerate()
                    .flat_map(|(u, row)| row[u + 1..].iter().map(|&d| d as u64))
                    .sum();
                Int(total as i64)
            }
            "eccentricity.values" => distinct(inv::eccentricities(g)?.into_iter().map(i64::from).collect()),
            "total_eccentricity" => Poly(inv::total_eccentricity_polynomial(g)?),
            "eccentric_connectivity" => Poly(inv::eccentric_connectivity_polynomial(g)?),
            "independence.polynomial" => Poly(inv::independence_polynomial(g, caps)?),
            "vertex_cover.polynomial" => Poly(inv::vertex_cover_polynomial(g, caps)?),
            other => {
                if let Some(class) = other.strip_prefix("centralizer.").and_then(Self::class_of_name) {
                    let rows = self
                        .omega
                        .class(class)
                        .iter()
                        .map(|&x| {
                            let c = self.group.centralizer(x).expect("valid element");
                            format!(
                                "{}: {}",
                                self.group.label(x),
                                labels_of(c.iter().map(|&y| self.group.label(y).to_string()))
                            )
                        })
                        .collect();
                    Labels(rows)
                } else if let Some(class) = other.strip_prefix("degree.").and_then(Self::class_of_name) {
                    distinct(
                        self.vertices(&[class])
                            .into_iter()
                            .map(|v| g.degree(v).expect("valid vertex") as i64)
                            .collect(),
                    )
                } else {
                    return Err(Failure::Other(format!("no brute-force computation named `{other}`")));
                }
            }
        };
        Ok(value)
    }
}

/// Verifies every closed form for `n` against exhaustive computation.
pub fn verify_all(n: usize, caps: &Caps) -> crate::Result<VerificationReport> {
    verify_with(n, caps, &PaperFormulas)
}

/// As [`verify_all`] with a custom prediction source.
pub fn verify_with(n: usize, caps: &Caps, source: &dyn PredictionSource) -> crate::Result<VerificationReport> {
    let instance = Instance::new(n, *caps)?;
    let entries = source
        .predictions(n)
        .into_iter()
        .map(|p| {
            let start = Instant::now();
            let outcome = instance.compute(&p.name);
            let elapsed_ms = start.elapsed().as_millis() as u64;
            let (computed, status) = match outcome {
                Err(Failure::Cap) => (None, Status::SkippedCap),
                Err(Failure::Other(msg)) => (Some(Value::Text(msg)), Status::Mismatch),
                Ok(v) if v == p.value => (Some(v), Status::Match),
                Ok(v) if !p.validity.covers(n) => (Some(v), Status::KnownPaperException),
                Ok(v) => (Some(v), Status::Mismatch),
            };
            Entry {
                name: p.name,
                predicted: p.value,
                computed,
                status,
                elapsed_ms,
            }
        })
        .collect();
    Ok(VerificationReport { n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_all_match() {
        let r = verify_all(2, &Caps::default()).unwrap();
        for e in &r.entries {
            assert_eq!(e.status, Status::Match, "{e:?}");
        }
        assert!(!r.has_mismatch());
    }

    #[test]
    fn n1_eccentricity_exceptions() {
        let r = verify_all(1, &Caps::default()).unwrap();
        let exceptions: Vec<&str> = r
            .entries
            .iter()
            .filter(|e| e.status != Status::Match)
            .map(|e| e.name.as_str())
            .collect();
        assert_eq!(exceptions, ["eccentricity.values", "total_eccentricity", "eccentric_connectivity"]);
        assert_eq!(r.count(Status::KnownPaperException), 3);
        let theta = r.entry("total_eccentricity").unwrap();
        assert_eq!(theta.computed.as_ref().unwrap().to_string(), "3*x + 2*x^2");
        let xi = r.entry("eccentric_connectivity").unwrap();
        assert_eq!(xi.computed.as_ref().unwrap().to_string(), "12*x + 6*x^2");
    }

    #[test]
    fn unknown_prediction_is_a_mismatch() {
        struct Odd;
        impl PredictionSource for Odd {
            fn predictions(&self, n: usize) -> Vec<Prediction> {
                vec![Prediction::new("girth", n, Value::Int(3))]
            }
        }
        let r = verify_with(1, &Caps::default(), &Odd).unwrap();
        assert_eq!(r.entries[0].status, Status::Mismatch);
    }

    #[test]
    fn text_table() {
        let r = verify_all(1, &Caps::default()).unwrap();
        let text = r.to_text();
        assert!(text.contains("known_paper_exception"));
        assert_eq!(text.lines().count(), r.entries.len() + 4);
        assert_eq!(clip("abcdef", 5), "ab...");
    }

    #[test]
    fn invalid_n() {
        assert!(verify_all(0, &Caps::default()).is_err());
    }
}
