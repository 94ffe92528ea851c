//! Command-line front end. Exit codes: 0 verified or found, 1 refuted or
//! unsat, 2 usage or input error, 3 search budget exhausted.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use srgint::certify::Certificate;
use srgint::design::Design;
use srgint::graph::{graph6_encode, is_srg, Graph};
use srgint::lattice::gram_mcl_report;
use srgint::registry::{self, Artifact};
use srgint::report::{self, ProfileTarget};
use srgint::search::{find_representation, SearchOutcome};

#[derive(Parser)]
#[command(
    name = "srgint",
    version,
    about = "Strongly regular graphs and their integral representations"
)]
struct Cli {
    /// Worker threads for parallel steps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph or design.
    Build {
        /// Registry name, e.g. hoffman-singleton, kmultipartite:3:2, s-4-7-23.
        name: String,
        /// Output file; stdout when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Run a check and print a JSON report.
    #[command(subcommand)]
    Verify(VerifyKind),
    /// Search for N with N^T N = s(A + tI).
    Search {
        /// Graph file (graph6 or JSON) or registry name.
        graph: String,
        #[arg(long, short)]
        s: i64,
        #[arg(long, short)]
        t: i64,
        /// Node budget.
        #[arg(long, env = "SRGINT_BUDGET", default_value_t = 10_000_000)]
        budget: u64,
        /// Comma-separated vertex order.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        /// Where to write a found certificate.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Solve the profile equation for a certificate row.
    Profiles {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value_t = 1)]
        gamma_abs: i64,
    },
}

#[derive(Subcommand)]
enum VerifyKind {
    /// Strong regularity of a graph.
    Srg { graph: String },
    /// A certificate file against a graph.
    Certificate { graph: String, certificate: PathBuf },
    /// A design file or registry name.
    Design { design: String },
    /// Gram matrix of the projected 275-vector system.
    GramMcl,
    /// Pentagon counts and structure in the Hoffman-Singleton graph.
    Pentagons {
        #[arg(long, env = "SRGINT_BUDGET", default_value_t = u64::MAX)]
        budget: u64,
    },
    /// McLaughlin complement plus a dominating clique.
    Extension {
        #[arg(long, default_value_t = 3)]
        added: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Hosi,
    Gq39c,
}

type CliResult = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Build { name, out, format } => build(&name, out.as_deref(), format),
        Command::Verify(kind) => verify(kind),
        Command::Search {
            graph,
            s,
            t,
            budget,
            order,
            out,
        } => search(&graph, s, t, budget, order, out.as_deref()),
        Command::Profiles { target, gamma_abs } => {
            let target = match target {
                Target::Hosi => ProfileTarget::Hosi,
                Target::Gq39c => ProfileTarget::Gq39c,
            };
            let r = report::profiles_report(target, gamma_abs).map_err(|e| e.to_string())?;
            emit(&r, r.matches)
        }
    }
}

fn emit<T: Serialize>(report: &T, ok: bool) -> CliResult {
    let text = serde_json::to_string_pretty(report).map_err(|e| e.to_string())?;
    say(&text);
    Ok(ExitCode::from(if ok { 0 } else { 1 }))
}

/// Prints a line, ignoring a closed pipe.
fn say(text: &str) {
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// A file path if it exists, otherwise a registry name.
fn load_graph(arg: &str) -> Result<Graph, String> {
    let path = Path::new(arg);
    if path.is_file() {
        Graph::parse_any(&read(path)?).map_err(|e| format!("{arg}: {e}"))
    } else {
        registry::build_graph(arg).map_err(|e| e.to_string())
    }
}

fn load_design(arg: &str) -> Result<Design, String> {
    let path = Path::new(arg);
    if path.is_file() {
        Design::from_text(&read(path)?).map_err(|e| format!("{arg}: {e}"))
    } else {
        registry::build_design(arg).map_err(|e| e.to_string())
    }
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct BuildSummary {
    name: String,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    srg: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    blocks: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    block_size: Option<usize>,
}

fn build(name: &str, out: Option<&Path>, format: GraphFormat) -> CliResult {
    let artifact = registry::build(name).map_err(|e| e.to_string())?;
    let (text, summary) = match &artifact {
        Artifact::Graph(g) => {
            let text = match format {
                GraphFormat::Graph6 => graph6_encode(g) + "\n",
                GraphFormat::Json => g.to_json() + "\n",
            };
            let summary = BuildSummary {
                name: name.into(),
                kind: "graph",
                vertices: Some(g.order()),
                srg: is_srg(g).map(|p| p.to_string()),
                points: None,
                blocks: None,
                block_size: None,
            };
            (text, summary)
        }
        Artifact::Design(d) => (
            d.to_text(),
            BuildSummary {
                name: name.into(),
                kind: "design",
                vertices: None,
                srg: None,
                points: Some(d.point_count()),
                blocks: Some(d.block_count()),
                block_size: Some(d.block_size()),
            },
        ),
    };
    write_or_print(out, &text)?;
    let summary = serde_json::to_string(&summary).map_err(|e| e.to_string())?;
    // keep stdout clean for the artifact itself
    if out.is_some() {
        say(&summary);
    } else {
        eprintln!("{summary}");
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(kind: VerifyKind) -> CliResult {
    match kind {
        VerifyKind::Srg { graph } => {
            let r = report::srg_report(&load_graph(&graph)?);
            emit(&r, r.verified())
        }
        VerifyKind::Certificate { graph, certificate } => {
            let g = load_graph(&graph)?;
            let c = Certificate::from_text(&read(&certificate)?)
                .map_err(|e| format!("{}: {e}", certificate.display()))?;
            let r = report::certificate_report(&g, &c).map_err(|e| e.to_string())?;
            emit(&r, r.verified())
        }
        VerifyKind::Design { design } => {
            let r = report::design_report(&load_design(&design)?);
            emit(&r, r.verified())
        }
        VerifyKind::GramMcl => {
            let r = gram_mcl_report().map_err(|e| e.to_string())?;
            emit(&r, r.matches)
        }
        VerifyKind::Pentagons { budget } => {
            let r = report::pentagons_report(budget);
            emit(&r, r.verified())
        }
        VerifyKind::Extension { added } => {
            let r = report::extension_report(added).map_err(|e| e.to_string())?;
            emit(&r, r.verified())
        }
    }
}

fn search(
    graph: &str,
    s: i64,
    t: i64,
    budget: u64,
    order: Option<Vec<usize>>,
    out: Option<&Path>,
) -> CliResult {
    let g = load_graph(graph)?;
    let result =
        find_representation(&g, s, t, order.as_deref(), budget).map_err(|e| e.to_string())?;
    let mut path = None;
    if let (SearchOutcome::Found(c), Some(p)) = (&result.outcome, out) {
        std::fs::write(p, c.to_text()).map_err(|e| format!("{}: {e}", p.display()))?;
        path = Some(p.display().to_string());
    }
    let text = serde_json::to_string_pretty(&result.report(path)).map_err(|e| e.to_string())?;
    say(&text);
    Ok(ExitCode::from(match result.outcome {
        SearchOutcome::Found(_) => 0,
        SearchOutcome::Unsat => 1,
        SearchOutcome::Unknown => 3,
    }))
}
