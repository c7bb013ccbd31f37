//! The `immersion-kit` command line.
//!
//! Exit codes: 0 success (pattern found, all leaves certified, certificate
//! valid), 1 negative answer or failed verification, 2 usage, input or
//! scale error, 3 some leaf uncertified.

use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::branchwidth::{branchwidth_exact_guarded, branchwidth_upper, cylinder};
use crate::decomposer::{
    decompose_with, leaf_histogram, parse_certificate, verify_certificate, write_certificate, DecomposeOptions,
};
use crate::error::{Error, Guard, Result};
use crate::generate::{random_connected_multigraph, random_planar};
use crate::multigraph::families;
use crate::multigraph::{parse_graph, MultiGraph};
use crate::relations::{find_model, Mode};
use crate::search::{search, SearchQuery};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNCERTIFIED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "immersion-kit", version, about = "Immersions, edge sums and certified decompositions of multigraphs")]
pub struct Cli {
    /// Seed for `gen:random:*` and `gen:planar:*` graph sources.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Lift the size guards of the exhaustive searches: no value turns them
    /// off, a value sets the limit.
    #[arg(long, global = true, num_args = 0..=1, value_name = "LIMIT")]
    pub guard_override: Option<Option<usize>>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is PATTERN immersed in GRAPH?
    Check {
        /// Host graph (a file, or `gen:<family>`).
        graph: String,
        /// `k5`, `k33`, or `file:<path>`.
        pattern: String,
        /// Require a strong immersion.
        #[arg(long)]
        strong: bool,
    },
    /// Split GRAPH along internal edge cuts and certify the leaves.
    Decompose {
        graph: String,
        /// Certificate output (standard output when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Re-check the certificate before exiting.
        #[arg(long)]
        verify: bool,
    },
    /// Re-check a certificate against GRAPH.
    Verify { graph: String, certificate: PathBuf },
    /// Branch-width of GRAPH with a witness decomposition.
    Branchwidth {
        graph: String,
        /// Heuristic upper bound only.
        #[arg(long)]
        upper: bool,
    },
    /// Enumerate small simple connected graphs by branch-width and degree.
    Search {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        bw_at_least: usize,
        /// Only graphs with maximum degree at least 4.
        #[arg(long)]
        non_subcubic: bool,
        /// Only graphs immersing neither K5 nor K3,3.
        #[arg(long)]
        immersion_free_only: bool,
        /// Report output (standard output when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Cli {
    pub fn guard(&self) -> Guard {
        match self.guard_override {
            None => Guard::Default,
            Some(None) => Guard::Off,
            Some(Some(limit)) => Guard::Limit(limit),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(err, "{e}");
            code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Check { graph, pattern, strong } => cmd_check(cli, graph, pattern, *strong, out),
        Command::Decompose { graph, out: path, verify } => cmd_decompose(cli, graph, path.as_deref(), *verify, out, err),
        Command::Verify { graph, certificate } => cmd_verify(cli, graph, certificate, out),
        Command::Branchwidth { graph, upper } => cmd_branchwidth(cli, graph, *upper, out),
        Command::Search {
            max_n,
            bw_at_least,
            non_subcubic,
            immersion_free_only,
            out: path,
        } => {
            let q = SearchQuery {
                max_n: *max_n,
                bw_at_least: *bw_at_least,
                non_subcubic: *non_subcubic,
                immersion_free_only: *immersion_free_only,
            };
            cmd_search(cli, q, path.as_deref(), out, err)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Reads a graph file, or builds `gen:<family>`: `k5`, `k33`, `petersen`,
/// `cube`, `twin-k4`, `complete:<n>`, `cycle:<n>`, `wheel:<k>`,
/// `cylinder:<r>:<q>`, `random:<n>:<m>` and `planar:<n>` (the last two
/// seeded by `--seed`).
pub fn load_graph(source: &str, seed: u64) -> Result<MultiGraph> {
    let Some(name) = source.strip_prefix("gen:") else {
        let text = std::fs::read_to_string(source).map_err(|e| Error::invalid(format!("cannot read {source}: {e}")))?;
        return parse_graph(&text);
    };
    let parts: Vec<&str> = name.split(':').collect();
    let arg = |i: usize| -> Result<usize> {
        parts
            .get(i)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::invalid(format!("generator {name:?} needs a numeric argument {i}")))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match parts[0] {
        "k5" => families::complete(5),
        "k33" => families::complete_bipartite(3, 3),
        "petersen" => families::petersen(),
        "cube" => families::cube(),
        "twin-k4" => families::twin_k4_bridged(),
        "complete" => families::complete(arg(1)?),
        "cycle" => families::cycle(arg(1)?),
        "wheel" => families::wheel(arg(1)?),
        "cylinder" => cylinder(arg(1)?, arg(2)?)?,
        "random" => random_connected_multigraph(&mut rng, arg(1)?, arg(2)?),
        "planar" => random_planar(&mut rng, arg(1)?, 4 * arg(1)?, true),
        other => return Err(Error::invalid(format!("unknown generator {other:?}"))),
    })
}

fn load_pattern(source: &str, seed: u64) -> Result<MultiGraph> {
    match source {
        "k5" => Ok(families::complete(5)),
        "k33" => Ok(families::complete_bipartite(3, 3)),
        _ => match source.strip_prefix("file:") {
            Some(path) => load_graph(path, seed),
            None => Err(Error::invalid(format!("pattern must be k5, k33 or file:<path>, got {source:?}"))),
        },
    }
}

fn write_to(path: Option<&FsPath>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::invalid(format!("cannot write {}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Error::invalid(format!("cannot write output: {e}"))),
    }
}

pub fn cmd_check(cli: &Cli, graph: &str, pattern: &str, strong: bool, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(graph, cli.seed)?;
    let h = load_pattern(pattern, cli.seed)?;
    let mode = if strong { Mode::Strong } else { Mode::Weak };
    match find_model(&g, &h, mode, cli.guard())? {
        Some(model) => {
            write_to(None, &format!("immersed\n{model}"), out)?;
            Ok(EXIT_OK)
        }
        None => {
            write_to(None, "not immersed\n", out)?;
            Ok(EXIT_NO)
        }
    }
}

pub fn cmd_decompose(
    cli: &Cli,
    graph: &str,
    path: Option<&FsPath>,
    verify: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let g = load_graph(graph, cli.seed)?;
    let options = DecomposeOptions {
        exact_guard: cli.guard(),
    };
    let trees = decompose_with(&g, options)?;
    let text = write_certificate(&trees);
    write_to(path, &text, out)?;
    let splits: usize = trees.iter().map(|t| t.split_count()).sum();
    let _ = writeln!(err, "components {} splits {splits}", trees.len());
    for (class, count) in leaf_histogram(&trees) {
        let _ = writeln!(err, "leaves {class}: {count}");
    }
    if verify {
        let report = verify_certificate(&g, &parse_certificate(&text)?);
        if !report.passed() {
            for f in report.failures() {
                let _ = writeln!(err, "{} {}: {}", f.node, f.check, f.outcome.as_ref().unwrap_err());
            }
            return Ok(EXIT_NO);
        }
        let _ = writeln!(err, "certificate verified");
    }
    Ok(if trees.iter().all(|t| t.is_fully_certified()) {
        EXIT_OK
    } else {
        EXIT_UNCERTIFIED
    })
}

pub fn cmd_verify(cli: &Cli, graph: &str, certificate: &FsPath, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(graph, cli.seed)?;
    let text = std::fs::read_to_string(certificate)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", certificate.display())))?;
    let trees = parse_certificate(&text)?;
    let report = verify_certificate(&g, &trees);
    write_to(None, &report.to_string(), out)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_NO })
}

pub fn cmd_branchwidth(cli: &Cli, graph: &str, upper: bool, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(graph, cli.seed)?;
    let (w, bd, how) = if upper {
        let (w, bd) = branchwidth_upper(&g);
        (w, bd, "upper bound")
    } else {
        let (w, bd) = branchwidth_exact_guarded(&g, cli.guard())?;
        (w, bd, "exact")
    };
    write_to(None, &format!("branchwidth {w} ({how})\n{bd}"), out)?;
    Ok(EXIT_OK)
}

pub fn cmd_search(cli: &Cli, q: SearchQuery, path: Option<&FsPath>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let report = search(q, cli.guard())?;
    write_to(path, &report.to_text(), out)?;
    let _ = writeln!(err, "{} graphs listed", report.results.len());
    Ok(EXIT_OK)
}
