//! Command-line front end.
//!
//! Exit statuses: `iso` returns 0 (isomorphic), 1 (not isomorphic) or 2
//! (input error); `check` and `uxs verify` return 1 when a check fails; every
//! subcommand returns 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::connectivity::{is_3_connected, is_connected, separation_pair};
use crate::corpus::gen_triangulation;
use crate::embed::embed_planar;
use crate::error::{Error, Result};
use crate::format::{parse_graph_file, write_colored, write_graph, GraphFile};
use crate::graph::DirectedEdge;
use crate::iso::{canonical_code_of, isomorphic_prepared, IsoOptions, Prepared};
use crate::regularize::regularize;
use crate::uxs::{
    base_length, provide_sequence_with_length, verify_uxs_report, walk, ExplorationSequence, ExploreConfig,
};

#[derive(Debug, Parser)]
#[command(
    name = "planiso",
    version,
    about = "Canonical codes and isomorphism for 3-connected planar graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the contracted canonical code of a graph.
    Canon {
        file: PathBuf,
        /// Print the code of the expanded, edge-coloured graph instead.
        #[arg(long)]
        colored: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide isomorphism of two graphs.
    Iso {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the vertex bijection as `u -> v` lines.
        #[arg(long)]
        emit_mapping: bool,
    },
    /// Report planarity and/or 3-connectivity (both when no flag is given).
    Check {
        file: PathBuf,
        #[arg(long)]
        planar: bool,
        #[arg(long)]
        three_connected: bool,
    },
    /// Emit the edge-coloured 3-regular expansion.
    Regularize { file: PathBuf },
    /// Emit a seeded stacked triangulation.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exploration sequence tools.
    Uxs {
        #[command(subcommand)]
        command: UxsCommand,
    },
}

#[derive(Debug, Subcommand)]
enum UxsCommand {
    /// Exhaustively check a seeded sequence on all cubic graphs up to n vertices.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sequence length (default 8 n^3 ceil(log2(n+1))).
        #[arg(long)]
        length: Option<usize>,
    },
    /// Print the walk transcript of a sequence file.
    Walk {
        file: PathBuf,
        /// Start edge as `u,v`.
        #[arg(long)]
        start: String,
        #[arg(long)]
        seq_file: PathBuf,
    },
}

/// Exit status for usage and input errors.
pub const EXIT_INPUT_ERROR: i32 = 2;

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_INPUT_ERROR } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return status;
        }
    };
    match dispatch(cli.command, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn read_graph(path: &Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_graph_file(&text)
}

fn prepare(file: &GraphFile) -> Result<Prepared> {
    match &file.rotation {
        Some(rho) => Prepared::with_embedding(&file.graph, rho.clone()),
        None => Prepared::new(&file.graph),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse {
        line: 0,
        message: format!("write failed: {e}"),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Canon { file, colored, seed } => {
            let p = prepare(&read_graph(&file)?)?;
            let code = canonical_code_of(&p, seed, &ExploreConfig::cover_prefix())?;
            let text = if colored { code.colored } else { code.contracted }.serialize();
            writeln!(out, "{text}").map_err(io)?;
            Ok(0)
        }
        Command::Iso {
            file1,
            file2,
            seed,
            emit_mapping,
        } => {
            let p1 = prepare(&read_graph(&file1)?)?;
            let p2 = prepare(&read_graph(&file2)?)?;
            let r = isomorphic_prepared(&p1, &p2, &IsoOptions::with_seed(seed))?;
            if let Some(mapping) = r.mapping.as_ref().filter(|_| r.is_isomorphic()) {
                writeln!(out, "isomorphic").map_err(io)?;
                if emit_mapping {
                    for (u, v) in mapping.iter().enumerate() {
                        writeln!(out, "{u} -> {v}").map_err(io)?;
                    }
                }
                Ok(0)
            } else {
                writeln!(out, "not isomorphic").map_err(io)?;
                Ok(1)
            }
        }
        Command::Check {
            file,
            planar,
            three_connected,
        } => {
            let g = read_graph(&file)?.graph;
            let (planar, three) = if planar || three_connected {
                (planar, three_connected)
            } else {
                (true, true)
            };
            let mut ok = true;
            if planar {
                let verdict = if !is_connected(&g) {
                    ok = false;
                    "not connected".to_string()
                } else if embed_planar(&g).is_ok() {
                    "planar".to_string()
                } else {
                    ok = false;
                    "not planar".to_string()
                };
                writeln!(out, "{verdict}").map_err(io)?;
            }
            if three {
                if is_3_connected(&g) {
                    writeln!(out, "3-connected").map_err(io)?;
                } else {
                    ok = false;
                    match separation_pair(&g).filter(|_| g.n() >= 4 && is_connected(&g)) {
                        Some((u, v)) => writeln!(out, "not 3-connected (separation pair {u} {v})"),
                        None => writeln!(out, "not 3-connected"),
                    }
                    .map_err(io)?;
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Regularize { file } => {
            let f = read_graph(&file)?;
            let rho = match f.rotation {
                Some(rho) => rho,
                None => embed_planar(&f.graph)?,
            };
            let c = regularize(&f.graph, &rho)?;
            out.write_all(write_colored(&c).as_bytes()).map_err(io)?;
            Ok(0)
        }
        Command::Gen { n, seed } => {
            if n < 4 {
                return Err(Error::InvalidGraph("--n must be at least 4".into()));
            }
            out.write_all(write_graph(&gen_triangulation(n, seed), None).as_bytes())
                .map_err(io)?;
            Ok(0)
        }
        Command::Uxs {
            command: UxsCommand::Verify { n, seed, length },
        } => {
            let n_prime = n.max(2);
            let length = length.unwrap_or_else(|| base_length(n_prime));
            if length == 0 {
                return Err(Error::InvalidGraph("--length must be positive".into()));
            }
            let seq = provide_sequence_with_length(n_prime, seed, length);
            let report = verify_uxs_report(n, &seq)?;
            writeln!(
                out,
                "n {n} length {length} graphs {} rotation_systems {} trials {} failures {}",
                report.graphs,
                report.rotation_systems,
                report.trials,
                report.failures.len()
            )
            .map_err(io)?;
            writeln!(out, "{}", if report.passed() { "pass" } else { "fail" }).map_err(io)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Uxs {
            command:
                UxsCommand::Walk {
                    file,
                    start,
                    seq_file,
                },
        } => {
            let f = read_graph(&file)?;
            let rho = match f.rotation {
                Some(rho) => rho,
                None => embed_planar(&f.graph)?,
            };
            let start = parse_start(&start)?;
            let text = std::fs::read_to_string(&seq_file).map_err(|e| Error::Parse {
                line: 0,
                message: format!("{}: {e}", seq_file.display()),
            })?;
            let seq = ExplorationSequence::parse(&text, f.graph.n())?;
            let transcript = walk(&rho, start, &seq)?;
            let line: Vec<String> = transcript.iter().map(usize::to_string).collect();
            writeln!(out, "{}", line.join(" ")).map_err(io)?;
            Ok(0)
        }
    }
}

fn parse_start(s: &str) -> Result<DirectedEdge> {
    let bad = || Error::Parse {
        line: 0,
        message: format!("--start expects `u,v`, got {s:?}"),
    };
    let (u, v) = s.split_once(',').ok_or_else(bad)?;
    Ok(DirectedEdge::new(
        u.trim().parse().map_err(|_| bad())?,
        v.trim().parse().map_err(|_| bad())?,
    ))
}
