//! `kneser` command-line front end: generation, solving, bound reports,
//! certificate verification and the reproduction table.

pub mod repro;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use kneser_core::certify::check_max_degree;
use kneser_core::io::{
    kneser_from_json, kneser_to_json, parse_certificate, parse_dimacs, write_dimacs, CertificateJson,
};
use kneser_core::solver::{solve_kneser_graph, SearchBudget};
use kneser_core::subset::DEFAULT_VERTEX_CAP;
use kneser_core::{big_report, report, Error, GenericGraph, KneserGraph, VertexSet};

use crate::repro::{reproduce, Group, ReproConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable overriding the vertex-count cap.
pub const VERTEX_CAP_VAR: &str = "KNESER_VERTEX_CAP";

#[derive(Parser, Debug)]
#[command(name = "kneser", version, about = "Dissociation sets in Kneser graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write K(n,k) as DIMACS or JSON.
    Gen {
        n: u32,
        k: u32,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dimacs)]
        format: GraphFormat,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a maximum set of K(n,k) inducing maximum degree at most d.
    Solve {
        n: u32,
        k: u32,
        #[arg(long, default_value_t = 1)]
        max_degree: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print every bound on diss(K(n,k)) as JSON.
    Bound { n: u32, k: u32 },
    /// Check a certificate against a graph (DIMACS or Kneser JSON).
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
        /// Degree limit; defaults to the certificate's own `d`.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Recompute every claimed value and tabulate the agreement.
    Reproduce {
        /// Comma-separated row groups: k2, k3, odd, n0, katona, hall, double-count.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<String>,
        #[arg(long, default_value_t = repro::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        output: OutputFormat,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dimacs,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(clap::Args, Debug, Clone, Default)]
pub struct BudgetArgs {
    /// Wall-clock limit, e.g. `600s`, `10m`, `1h 30m`.
    #[arg(long, value_parser = humantime::parse_duration)]
    pub max_time: Option<Duration>,
    /// Limit on search nodes.
    #[arg(long)]
    pub max_nodes: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::unlimited().with_threads(self.threads.max(1));
        if let Some(t) = self.max_time {
            b = b.with_max_time(t);
        }
        if let Some(n) = self.max_nodes {
            b = b.with_max_nodes(n);
        }
        b
    }
}

/// Vertex cap from [`VERTEX_CAP_VAR`], falling back to the library default.
pub fn vertex_cap() -> Result<u64, String> {
    match std::env::var(VERTEX_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{VERTEX_CAP_VAR}={v:?} is not a count")),
        Err(_) => Ok(DEFAULT_VERTEX_CAP),
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`;
/// returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Gen { n, k, format, out: path } => cmd_gen(n, k, format, path.as_deref(), out),
        Command::Solve { n, k, max_degree, budget } => cmd_solve(n, k, max_degree, &budget, out, err),
        Command::Bound { n, k } => cmd_bound(n, k, out),
        Command::Verify { graph, certificate, max_degree } => cmd_verify(&graph, &certificate, max_degree, out),
        Command::Reproduce { rows, seed, output, budget } => cmd_reproduce(&rows, seed, output, &budget, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

struct CliError(i32, String);

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(EXIT_INPUT, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(EXIT_INPUT, e.to_string())
    }
}

fn input_error(msg: impl Into<String>) -> CliError {
    CliError(EXIT_INPUT, msg.into())
}

fn build(n: u32, k: u32) -> Result<KneserGraph, CliError> {
    let cap = vertex_cap().map_err(input_error)?;
    Ok(KneserGraph::build_with_cap(n, k, cap)?)
}

fn cmd_gen(n: u32, k: u32, format: GraphFormat, path: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = build(n, k)?;
    let text = match format {
        GraphFormat::Dimacs => write_dimacs(g.graph()),
        GraphFormat::Json => kneser_to_json(&g) + "\n",
    };
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_solve(
    n: u32,
    k: u32,
    d: usize,
    budget: &BudgetArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = build(n, k)?;
    let r = solve_kneser_graph(&g, d, &budget.budget())?;
    let json = r.to_json(&g).without_timing();
    writeln!(out, "{}", serde_json::to_string(&json).expect("solve result serializes"))?;
    let source = r.bound_source.as_deref().unwrap_or("search");
    writeln!(err, "{} nodes in {:?}, closed by {source}", r.nodes_explored, r.wall_time)?;
    Ok(if r.optimal { EXIT_OK } else { EXIT_BUDGET })
}

fn cmd_bound(n: u32, k: u32, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = match report(n, k) {
        Ok(rep) => serde_json::to_string_pretty(&rep),
        Err(Error::Overflow(_)) => serde_json::to_string_pretty(&big_report(n, k)?),
        Err(e) => return Err(e.into()),
    }
    .expect("bound report serializes");
    writeln!(out, "{text}")?;
    Ok(EXIT_OK)
}

/// A graph read from disk, remembering whether it carries Kneser labels.
enum LoadedGraph {
    Kneser(KneserGraph),
    Plain(GenericGraph),
}

fn load_graph(path: &Path) -> Result<LoadedGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        let cap = vertex_cap().map_err(input_error)?;
        Ok(LoadedGraph::Kneser(kneser_from_json(&text, cap)?))
    } else {
        Ok(LoadedGraph::Plain(parse_dimacs(&text)?))
    }
}

/// Maps a certificate onto vertex indices. Against a Kneser graph, entries
/// are `k`-subsets. Against a DIMACS graph they are subsets too when the
/// graph is exactly the canonical `K(n,k)`, and 1-based vertex numbers
/// (one per entry) otherwise.
fn resolve_set(graph: &LoadedGraph, cert: &CertificateJson) -> Result<(GenericGraph, VertexSet), CliError> {
    match graph {
        LoadedGraph::Kneser(g) => {
            let c = cert.resolve(g)?;
            Ok((g.graph().clone(), c.to_set(g.order())))
        }
        LoadedGraph::Plain(g) => {
            let canonical =
                KneserGraph::build_with_cap(cert.n, cert.k, g.order() as u64).ok().filter(|kg| kg.graph() == g);
            if let Some(kg) = canonical {
                let c = cert.resolve(&kg)?;
                return Ok((g.clone(), c.to_set(g.order())));
            }
            let mut set = VertexSet::with_capacity(g.order());
            for entry in &cert.set {
                match entry.as_slice() {
                    [v] if *v >= 1 && (*v as usize) <= g.order() => set.insert(*v as usize - 1),
                    _ => return Err(input_error(format!("{entry:?} is not a vertex number of the graph"))),
                }
            }
            Ok((g.clone(), set))
        }
    }
}

fn cmd_verify(graph: &Path, certificate: &Path, d: Option<usize>, out: &mut dyn Write) -> Result<i32, CliError> {
    let loaded = load_graph(graph)?;
    let text =
        std::fs::read_to_string(certificate).map_err(|e| input_error(format!("{}: {e}", certificate.display())))?;
    let mut cert = parse_certificate(&text)?;
    let (g, set) = resolve_set(&loaded, &cert)?;
    let d = d.unwrap_or(cert.d);
    let valid = check_max_degree(&g, &set, d);
    cert.d = d;
    cert.valid = Some(valid);
    writeln!(out, "{}", serde_json::to_string(&cert).expect("certificate serializes"))?;
    Ok(if valid { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_reproduce(
    rows: &[String],
    seed: u64,
    output: OutputFormat,
    budget: &BudgetArgs,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let groups = rows
        .iter()
        .map(|r| Group::parse(r.trim()).ok_or_else(|| input_error(format!("unknown row group {r:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let cfg = ReproConfig::new(budget.budget()).with_seed(seed).with_groups(groups);
    let table = reproduce(&cfg);
    let text = match output {
        OutputFormat::Json => repro::render_json(&table),
        OutputFormat::Table => repro::render_table(&table),
    };
    out.write_all(text.as_bytes())?;
    Ok(repro::exit_code(&table))
}
