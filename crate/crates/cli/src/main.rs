//! `gorenstein`: classify graphs, survey circulant families and check SQC graphs.
//!
//! Exit codes: 0 success, 1 a survey row or SQC cross-check contradicts the
//! closed form, 2 bad input, 3 the graph exceeds the vertex cap.

mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gorenstein_core::circulant::{self, Family, SurveyOptions};
use gorenstein_core::graph::DEFAULT_VERTEX_CAP;
use gorenstein_core::sqc::{self, CycleReading};
use gorenstein_core::{io as gio, CharSpec, CirculantSpec, EngineOptions, Error, Graph};

#[derive(Parser, Debug)]
#[command(name = "gorenstein", version, about = "Gorenstein / W2 / Cohen-Macaulay classification of edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: `all` (every field), `0`, or a prime.
    #[arg(long = "char", global = true, env = "GORENSTEIN_CHAR", default_value = "all")]
    characteristic: CharSpec,

    /// Largest vertex count the engine will accept (at most 64).
    #[arg(long, global = true, env = "GORENSTEIN_CAP", default_value_t = DEFAULT_VERTEX_CAP)]
    cap: usize,

    #[arg(long, global = true, env = "GORENSTEIN_FORMAT", value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Worker threads; 0 lets rayon decide.
    #[arg(long, global = true, env = "GORENSTEIN_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide well-covered, W2, CM and Gorenstein for one graph.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Evaluate every clause even after the verdict is settled.
        #[arg(long, env = "GORENSTEIN_EXHAUSTIVE")]
        exhaustive: bool,
    },
    /// Compare a circulant family's closed-form classification with brute force.
    Survey {
        #[arg(long, env = "GORENSTEIN_FAMILY")]
        family: Family,
        /// Largest n surveyed; defaults to 14 for quartic, 18 otherwise.
        #[arg(long, env = "GORENSTEIN_MAX_N")]
        max_n: Option<usize>,
        /// Record per-row wall-clock time.
        #[arg(long, env = "GORENSTEIN_TIMING")]
        timing: bool,
    },
    /// Find an SQC partition and cross-check the SQC criterion against the engine.
    Sqc {
        #[command(flatten)]
        input: Input,
        #[arg(long, env = "GORENSTEIN_READING", default_value = "walk")]
        reading: CycleReading,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Edge-list file (`u v` per line, optional `n=<k>` header).
    #[arg(long)]
    edges: Option<PathBuf>,
    /// graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// Circulant `n:s1,s2,...`.
    #[arg(long)]
    circulant: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Cap(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeCap { .. } | Error::TooManyVertices { .. } => Failure::Cap(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

fn parse_circulant(s: &str) -> Result<CirculantSpec, Failure> {
    let bad = || Failure::Input(format!("circulant spec {s:?} is not of the form n:s1,s2,..."));
    let (n, conns) = s.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let conns = conns
        .split(',')
        .map(|c| c.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CirculantSpec::new(n, conns)?)
}

fn load_graph(input: &Input, cap: usize) -> Result<Graph, Failure> {
    let g = if let Some(path) = &input.edges {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        gio::parse_edge_list(&text)?
    } else if let Some(s) = &input.g6 {
        gio::parse_graph6(s.trim())?
    } else if let Some(s) = &input.circulant {
        Graph::circulant(&parse_circulant(s)?)?
    } else {
        unreachable!("clap enforces exactly one input")
    };
    let g = g.with_vertex_cap(cap)?;
    g.check_cap()?;
    Ok(g)
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<bool, Failure> {
    match cli.command {
        Command::Classify { input, exhaustive } => {
            let g = load_graph(&input, cli.cap)?;
            let verdict = gorenstein_core::gorenstein::is_gorenstein_with(
                &g,
                cli.characteristic,
                EngineOptions { exhaustive },
            )?;
            report::classify(out, cli.format, &g, &verdict)?;
            Ok(true)
        }
        Command::Survey { family, max_n, timing } => {
            let opts = SurveyOptions {
                max_n: max_n.unwrap_or(family.default_max_n()),
                vertex_cap: cli.cap,
                characteristic: cli.characteristic,
                timing,
            };
            let rows = circulant::survey(family, &opts)?;
            report::survey(out, cli.format, &rows)?;
            Ok(circulant::all_match(&rows))
        }
        Command::Sqc { input, reading } => {
            let g = load_graph(&input, cli.cap)?;
            let partition = sqc::find_sqc_partition_with(&g, reading)?;
            let sqc_verdict = match sqc::sqc_gorenstein_with(&g, reading) {
                Ok(v) => Ok(v),
                Err(e @ (Error::NotSqc | Error::IsolatedVertex(_) | Error::Precondition(_))) => Err(e.to_string()),
                Err(e) => return Err(e.into()),
            };
            let engine = gorenstein_core::is_gorenstein(&g, cli.characteristic)?;
            let readings_disagree = sqc::readings_disagree(&g)?;
            let r = report::SqcReport {
                sqc: partition.is_some(),
                reading,
                partition,
                sqc_gorenstein: sqc_verdict.as_ref().ok().copied(),
                sqc_note: sqc_verdict.err(),
                engine_gorenstein: engine.gorenstein,
                agree: None,
                readings_disagree,
            }
            .with_agreement();
            let ok = r.agree != Some(false);
            report::sqc(out, cli.format, &r)?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build();
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    // Reports are rendered in full, then written in one go.
    let mut buf = Vec::new();
    let result = pool.install(|| run(cli, &mut buf));
    let mut stdout = io::stdout().lock();
    let flushed = stdout.write_all(&buf).and_then(|()| stdout.flush());
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(Failure::Cap(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        (Err(Failure::Input(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Err(Failure::Io(e)), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
