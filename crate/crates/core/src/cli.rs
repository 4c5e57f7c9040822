//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven from tests; the binary is a thin wrapper around it.
//!
//! Reports go to standard output, diagnostics to standard error. The exit
//! status is 0 when every requested check passed, 1 when a check failed,
//! and 2 for usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::coloring::{chromatic_in_mode, Mode};
use crate::error::Error;
use crate::formats::{
    decode_graph6_lines, decode_planar_code, encode_graph6, encode_planar_code, PlanarCodeEntry,
    PLANAR_CODE_HEADER,
};
use crate::fullerene::{make_drum, verify_batch};
use crate::gadgets::{
    self, verify_gadget_lemmas, verify_lemma_triangulation, verify_lemma_wheel, GadgetId,
};
use crate::graph::Graph;
use crate::planarity::{is_planar, Embedding};
use crate::report::{BatchSummary, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[value(name = "graph6")]
    Graph6,
    #[value(name = "planar_code", alias = "planar-code")]
    PlanarCode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Wheel,
    Triangulation,
    Gadgets,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "exact-square",
    version,
    about = "Exact distance powers, exact-square colorings, and fullerene drums"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the exact distance-p power of every input graph as graph6.
    Power {
        /// Input file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        /// Input format; detected from the header when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Print the chromatic number of every input graph in the given mode.
    Chi {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value = "exact-square")]
        mode: Mode,
        /// Append a witness coloring (comma-separated, by vertex).
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Check a batch of fullerenes against an exact-square color bound.
    VerifyFullerenes {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        max_chi: u64,
        /// Write the JSON-lines report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Emit the k-drum.
    MakeDrum {
        k: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Emit a named gadget graph.
    Gadget {
        name: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Run the exhaustive gadget and list-coloring verifiers.
    VerifyLemmas {
        #[arg(long, value_enum, default_value = "all")]
        which: Which,
        /// Leave wall-clock times out of the output.
        #[arg(long)]
        no_timing: bool,
    },
    /// Convert between graph6 and planar_code.
    Convert {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        to: Format,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// Failure of a subcommand: either a bad input (exit 2) or a failed check
/// (exit 1).
enum Failure {
    Input(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_stdout = !e.use_stderr();
            let text = e.render().to_string();
            let _ = if to_stdout {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return if to_stdout { 0 } else { 2 };
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> std::result::Result<Vec<u8>, Failure> {
    if path == "-" {
        let mut buf = Vec::new();
        stdin.read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }
}

/// planar_code if the planar_code header is present, graph6 otherwise.
pub fn detect_format(bytes: &[u8]) -> Format {
    if bytes.starts_with(PLANAR_CODE_HEADER) {
        Format::PlanarCode
    } else {
        Format::Graph6
    }
}

/// Input as plane graphs where available: planar_code entries keep their
/// rotation, graph6 graphs are `Err(graph)`.
fn read_entries(
    bytes: &[u8],
    format: Option<Format>,
) -> std::result::Result<Vec<std::result::Result<PlanarCodeEntry, Graph>>, Failure> {
    Ok(match format.unwrap_or_else(|| detect_format(bytes)) {
        Format::PlanarCode => decode_planar_code(bytes)?.into_iter().map(Ok).collect(),
        Format::Graph6 => decode_graph6_lines(bytes)?.into_iter().map(Err).collect(),
    })
}

fn read_graphs(bytes: &[u8], format: Option<Format>) -> std::result::Result<Vec<Graph>, Failure> {
    Ok(read_entries(bytes, format)?
        .into_iter()
        .map(|e| e.map_or_else(|g| g, |p| p.graph()))
        .collect())
}

fn write_embedded(out: &mut dyn Write, e: &Embedding, format: Format) -> Outcome {
    match format {
        Format::Graph6 => {
            out.write_all(&encode_graph6(e.graph()))?;
            out.write_all(b"\n")?;
        }
        Format::PlanarCode => out.write_all(&encode_planar_code(&[e.to_planar_code()])?)?,
    }
    Ok(())
}

fn dispatch(
    cmd: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Outcome {
    match cmd {
        Command::Power { input, p, format } => {
            let graphs = read_graphs(&read_input(&input, stdin)?, format)?;
            for g in graphs {
                stdout.write_all(&encode_graph6(&g.exact_power(p as usize)?))?;
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
        Command::Chi {
            input,
            mode,
            witness,
            format,
            workers,
        } => {
            let graphs = read_graphs(&read_input(&input, stdin)?, format)?;
            log::info!(
                "chi: {} graphs, mode {mode}, {workers} workers",
                graphs.len()
            );
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers.max(1))
                .build()
                .map_err(|e| Failure::Input(e.to_string()))?;
            let results: Vec<_> = pool.install(|| {
                graphs
                    .par_iter()
                    .map(|g| chromatic_in_mode(g, mode))
                    .collect()
            });
            let header = if witness {
                "index\tn\tmode\tchi\twitness"
            } else {
                "index\tn\tmode\tchi"
            };
            writeln!(stdout, "{header}")?;
            for (i, (g, (k, c))) in graphs.iter().zip(results).enumerate() {
                write!(stdout, "{i}\t{}\t{mode}\t{k}", g.n())?;
                if witness {
                    write!(stdout, "\t{c}")?;
                }
                writeln!(stdout)?;
            }
            Ok(())
        }
        Command::VerifyFullerenes {
            input,
            max_chi,
            report,
            workers,
            format,
        } => {
            let entries: Vec<PlanarCodeEntry> = read_entries(&read_input(&input, stdin)?, format)?
                .into_iter()
                .map(|e| {
                    e.unwrap_or_else(|g| match is_planar(&g) {
                        Some(emb) => emb.to_planar_code(),
                        // Sorted rotations: kept only so the entry is reported
                        // as a non-fullerene.
                        None => PlanarCodeEntry {
                            rotations: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
                        },
                    })
                })
                .collect();
            let max_chi = max_chi as usize;
            log::info!(
                "verify-fullerenes: {} entries, max chi {max_chi}",
                entries.len()
            );
            let results = verify_batch(&entries, max_chi, workers);
            let summary = BatchSummary::of(&results, max_chi);
            let mut text = String::new();
            for r in &results {
                text.push_str(&serde_json::to_string(r).expect("serializable"));
                text.push('\n');
            }
            text.push_str(&serde_json::to_string(&summary).expect("serializable"));
            text.push('\n');
            match report {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
                None => stdout.write_all(text.as_bytes())?,
            }
            writeln!(
                stderr,
                "{} entries, {} fullerenes, {} drums, {} passed, {} failed (max chi {max_chi})",
                summary.entries, summary.fullerenes, summary.drums, summary.passed, summary.failed
            )?;
            for r in results.iter().filter(|r| !r.pass) {
                let why = if r.fullerene {
                    "bound or consistency"
                } else {
                    "not a fullerene"
                };
                writeln!(stderr, "entry {} failed: {why}", r.index)?;
            }
            if summary.all_pass {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::MakeDrum { k, format } => write_embedded(stdout, &make_drum(k)?, format),
        Command::Gadget { name, format } => {
            let id: GadgetId = name.parse()?;
            match format {
                Format::Graph6 => {
                    stdout.write_all(&encode_graph6(&gadgets::build(id)))?;
                    stdout.write_all(b"\n")?;
                    Ok(())
                }
                Format::PlanarCode => {
                    let e = gadgets::embedding(id)
                        .ok_or_else(|| Failure::Input(format!("{id} is not planar")))?;
                    write_embedded(stdout, &e, format)
                }
            }
        }
        Command::VerifyLemmas { which, no_timing } => {
            let mut reports: Vec<VerificationReport> = Vec::new();
            if matches!(which, Which::Gadgets | Which::All) {
                reports.push(verify_gadget_lemmas());
            }
            if matches!(which, Which::Wheel | Which::All) {
                reports.push(verify_lemma_wheel());
            }
            if matches!(which, Which::Triangulation | Which::All) {
                reports.push(verify_lemma_triangulation());
            }
            for r in &reports {
                log::info!("{}: {} instances in {:?}", r.check, r.instances, r.elapsed);
                writeln!(stdout, "{}", r.summary(!no_timing))?;
                for w in &r.failures {
                    writeln!(stdout, "  {w}")?;
                }
            }
            if reports.iter().all(VerificationReport::passed) {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Convert { input, to, format } => {
            let entries = read_entries(&read_input(&input, stdin)?, format)?;
            match to {
                Format::Graph6 => {
                    for e in entries {
                        let g = e.map_or_else(|g| g, |p| p.graph());
                        stdout.write_all(&encode_graph6(&g))?;
                        stdout.write_all(b"\n")?;
                    }
                }
                Format::PlanarCode => {
                    let mut out = Vec::new();
                    for (i, e) in entries.into_iter().enumerate() {
                        out.push(match e {
                            Ok(p) => p,
                            Err(g) => is_planar(&g)
                                .ok_or_else(|| Failure::Input(format!("graph {i} is not planar")))?
                                .to_planar_code(),
                        });
                    }
                    stdout.write_all(&encode_planar_code(&out)?)?;
                }
            }
            Ok(())
        }
    }
}
