//! Command-line frontend. Exit codes: 0 ok, 1 usage or I/O error, 2 when a
//! report contains a mismatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::closed_forms::{self as cf, Prediction, Value};
use crate::error::{Error, Result};
use crate::graph::{self, ExportFormat, Graph};
use crate::group::{u6n_group, FiniteGroup};
use crate::invariants::{self as inv, Caps};
use crate::polynomial::IntPolynomial;
use crate::verify::{verify_with, PaperFormulas, PredictionSource, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "u6n", version, about = "Non-commuting graphs of U_{6n}: exact invariants and closed-form checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summarize a group: order, identity, center, abelian or not.
    Build(GroupSource),
    /// Compute one invariant of the non-commuting graph.
    Graph {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_enum)]
        invariant: GraphInvariant,
        #[arg(long, value_parser = parse_caps, default_value_t = Caps::default())]
        caps: Caps,
    },
    /// Print a graph polynomial in canonical form.
    Poly {
        #[arg(value_enum)]
        kind: PolyKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PolySource::Brute)]
        source: PolySource,
        #[arg(long, value_parser = parse_caps, default_value_t = Caps::default())]
        caps: Caps,
    },
    /// Serialize the non-commuting graph.
    Export {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_enum, default_value_t = ExportArg::Dot)]
        format: ExportArg,
    },
    /// Compare every closed form with exhaustive computation.
    Verify {
        #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
        n: Option<usize>,
        /// Inclusive range `A:B`.
        #[arg(long, value_parser = parse_range)]
        n_range: Option<(usize, usize)>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// e.g. `detour=15,resolving=16,chromatic=40,indep=24,metric=20`
        #[arg(long, value_parser = parse_caps, default_value_t = Caps::default())]
        caps: Caps,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GroupSource {
    /// Build U_{6n}.
    #[arg(long)]
    n: Option<usize>,
    /// Load a Cayley table `{"labels": [...], "table": [[...]]}`.
    #[arg(long)]
    table: Option<PathBuf>,
}

impl GroupSource {
    fn load(&self) -> Result<FiniteGroup> {
        match (&self.n, &self.table) {
            (Some(n), _) => u6n_group(*n),
            (None, Some(path)) => FiniteGroup::from_json_file(path),
            (None, None) => Err(Error::InvalidParameter("one of --n or --table is required".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphInvariant {
    Edges,
    Alpha,
    Tau,
    Omega,
    Chi,
    Beta,
    Ecc,
    DetourIndex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Resolving,
    Detour,
    TotalEcc,
    EccConn,
    Independence,
    VertexCover,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolySource {
    Brute,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportArg {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn parse_caps(s: &str) -> std::result::Result<Caps, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected A:B, got `{s}`"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    if a == 0 || a > b {
        return Err(format!("range `{s}` must satisfy 1 <= A <= B"));
    }
    Ok((a, b))
}

/// Runs the CLI with the published closed forms.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, out, err, &PaperFormulas)
}

/// Runs the CLI with a custom prediction source for `verify`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, source: &dyn PredictionSource) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, out, source) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, source: &dyn PredictionSource) -> Result<i32> {
    match cmd {
        Command::Build(src) => {
            let g = src.load()?;
            writeln!(out, "order: {}", g.order())?;
            writeln!(out, "identity: {}", g.label(g.identity()))?;
            writeln!(out, "abelian: {}", g.is_abelian())?;
            let center: Vec<&str> = g.center().iter().map(|&x| g.label(x)).collect();
            writeln!(out, "center ({}): {{{}}}", center.len(), center.join(", "))?;
            if let Some(n) = g.parameter_n() {
                writeln!(out, "parameter n: {n}")?;
                let p = g.omega_partition()?;
                for class in crate::group::OmegaClass::ALL {
                    let members: Vec<&str> = p.class(class).iter().map(|&x| g.label(x)).collect();
                    writeln!(out, "{}: {{{}}}", class.name(), members.join(", "))?;
                }
            }
            writeln!(out, "elements: {}", g.labels().join(" "))?;
            Ok(EXIT_OK)
        }
        Command::Graph { source: src, invariant, caps } => {
            let g = graph::non_commuting_graph(&src.load()?)?;
            match invariant {
                GraphInvariant::Edges => writeln!(out, "{}", g.edge_count())?,
                GraphInvariant::Alpha => writeln!(out, "{}", inv::independence_number(&g))?,
                GraphInvariant::Tau => writeln!(out, "{}", inv::vertex_cover_number(&g)?)?,
                GraphInvariant::Omega => writeln!(out, "{}", inv::clique_number(&g))?,
                GraphInvariant::Chi => writeln!(out, "{}", inv::chromatic_number(&g, &caps)?)?,
                GraphInvariant::Beta => writeln!(out, "{}", inv::metric_dimension(&g, &caps)?)?,
                GraphInvariant::Ecc => {
                    for (v, e) in inv::eccentricities(&g)?.into_iter().enumerate() {
                        writeln!(out, "{} {e}", g.label(v))?;
                    }
                }
                GraphInvariant::DetourIndex => writeln!(out, "{}", inv::detour_index(&g, &caps)?)?,
            }
            Ok(EXIT_OK)
        }
        Command::Poly { kind, n, source: which, caps } => {
            let closed = closed_polynomial(kind, n)?;
            let brute = if which == PolySource::Closed {
                None
            } else {
                let g = graph::non_commuting_graph(&u6n_group(n)?)?;
                Some(brute_polynomial(kind, &g, &caps)?)
            };
            match (which, brute) {
                (PolySource::Closed, _) => writeln!(out, "{}", closed.value)?,
                (PolySource::Brute, Some(b)) => writeln!(out, "{b}")?,
                (_, Some(b)) => {
                    writeln!(out, "brute:  {b}")?;
                    writeln!(out, "closed: {}", closed.value)?;
                    if Value::Poly(b) != closed.value && closed.validity.covers(n) {
                        return Ok(EXIT_MISMATCH);
                    }
                }
                (_, None) => unreachable!("brute side computed unless --source closed"),
            }
            Ok(EXIT_OK)
        }
        Command::Export { source: src, format } => {
            let g = graph::non_commuting_graph(&src.load()?)?;
            let format = match format {
                ExportArg::Dot => ExportFormat::Dot,
                ExportArg::Json => ExportFormat::Json,
            };
            let text = graph::export(&g, format);
            write!(out, "{text}")?;
            if !text.ends_with('\n') {
                writeln!(out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { n, n_range, format, caps } => {
            let (lo, hi) = match (n, n_range) {
                (Some(n), _) => (n, n),
                (None, Some(r)) => r,
                (None, None) => return Err(Error::InvalidParameter("--n or --n-range is required".into())),
            };
            let reports = (lo..=hi)
                .map(|n| verify_with(n, &caps, source))
                .collect::<Result<Vec<VerificationReport>>>()?;
            match format {
                ReportFormat::Json if n.is_some() => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&reports[0])?)?;
                }
                ReportFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?,
                ReportFormat::Text => {
                    for r in &reports {
                        writeln!(out, "{}", r.to_text())?;
                    }
                }
            }
            Ok(if reports.iter().any(VerificationReport::has_mismatch) {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            })
        }
    }
}

fn closed_polynomial(kind: PolyKind, n: usize) -> Result<Prediction> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let plain = |name: &str, p: IntPolynomial| Prediction::new(name, n, Value::Poly(p));
    Ok(match kind {
        PolyKind::Resolving => plain("resolving.polynomial", cf::cf_resolving_polynomial(n)),
        PolyKind::Detour => plain("detour.polynomial", cf::cf_detour_polynomial(n)),
        PolyKind::TotalEcc => cf::cf_total_eccentricity_polynomial(n),
        PolyKind::EccConn => cf::cf_eccentric_connectivity_polynomial(n),
        PolyKind::Independence => plain("independence.polynomial", cf::cf_independence_polynomial(n)),
        PolyKind::VertexCover => plain("vertex_cover.polynomial", cf::cf_vertex_cover_polynomial(n)),
    })
}

fn brute_polynomial(kind: PolyKind, g: &Graph, caps: &Caps) -> Result<IntPolynomial> {
    match kind {
        PolyKind::Resolving => Ok(inv::resolving_polynomial(g, caps)?.0),
        PolyKind::Detour => inv::detour_polynomial(g, caps),
        PolyKind::TotalEcc => inv::total_eccentricity_polynomial(g),
        PolyKind::EccConn => inv::eccentric_connectivity_polynomial(g),
        PolyKind::Independence => inv::independence_polynomial(g, caps),
        PolyKind::VertexCover => inv::vertex_cover_polynomial(g, caps),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["u6n"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn poly_resolving() {
        let (code, out, _) = call(&["poly", "resolving", "--n", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "32*x^6 + 56*x^7 + 36*x^8 + 10*x^9 + x^10");
        let (code, out, _) = call(&["poly", "total-ecc", "--n", "1", "--source", "both"]);
        assert_eq!(code, 0, "n=1 exception does not flip the exit code");
        assert!(out.contains("brute:  3*x + 2*x^2"));
        let (_, out, _) = call(&["poly", "independence", "--n", "2", "--source", "closed"]);
        assert_eq!(out.trim(), "1 + 10*x + 9*x^2 + 4*x^3 + x^4");
    }

    #[test]
    fn graph_queries() {
        assert_eq!(call(&["graph", "--n", "2", "--invariant", "edges"]).1.trim(), "36");
        assert_eq!(call(&["graph", "--n", "2", "--invariant", "beta"]).1.trim(), "6");
        assert_eq!(call(&["graph", "--n", "1", "--invariant", "detour-index"]).1.trim(), "40");
        let (_, ecc, _) = call(&["graph", "--n", "1", "--invariant", "ecc"]);
        assert!(ecc.lines().any(|l| l == "a 1"));
        let (code, _, err) = call(&["graph", "--n", "4", "--invariant", "detour-index"]);
        assert_eq!(code, 1);
        assert!(err.contains("cap"));
    }

    #[test]
    fn export_dot() {
        let (code, out, _) = call(&["export", "--n", "1", "--format", "dot"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches(" -- ").count(), 9);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["verify", "--n", "2", "--bogus"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["verify"]).0, 1);
        assert_eq!(call(&["verify", "--n-range", "3:1"]).0, 1);
        assert_eq!(call(&["verify", "--n", "1", "--caps", "detour=x"]).0, 1);
        assert_eq!(call(&["build", "--table", "/nonexistent/table.json"]).0, 1);
        assert_eq!(call(&["build", "--n", "0"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn build_summary() {
        let (code, out, _) = call(&["build", "--n", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("order: 12"));
        assert!(out.contains("center (2): {1, a^2}"));
        assert!(out.contains("omega4: {b, b^2, a^2b, a^2b^2}"));
    }
}
