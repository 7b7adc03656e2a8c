//! `motifph`: weightings, diagrams and the experiment pipelines from the
//! command line.

mod commands;
mod config;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use motifph::Filtration;

#[derive(Debug, Parser)]
#[command(name = "motifph", version, about = "Persistent homology of graphs under cycle-density filtrations")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Filtrations, comma separated (eT, eS, eP, eSum, eO, eF, mV, eR, eH, eA, eB, nD, nC, nE, nG).
    #[arg(long, global = true, value_delimiter = ',', value_parser = parse_filtration)]
    pub filtration: Vec<Filtration>,
    /// Expansion levels, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub k: Vec<usize>,
    /// Base seed for every random choice.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output file (weights, ph) or directory (manifest commands).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Node values under edge filtrations: global-min or incident-min.
    #[arg(long, global = true)]
    pub node_rule: Option<String>,
    /// Graphlet orbits for nG: first11 or non-redundant.
    #[arg(long, global = true)]
    pub orbit_set: Option<String>,
    /// `key = value` file with defaults for the flags above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// More diagnostics on stderr (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Edge (and node) values of one graph under the selected filtrations.
    Weights {
        graph: PathBuf,
        /// Record to read from a multi-graph graph6 file.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Persistence diagram of one graph.
    Ph {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Also list zero-persistence pairs.
        #[arg(long)]
        keep_zero: bool,
        /// Write the filtered complex to this file.
        #[arg(long)]
        dump_complex: Option<PathBuf>,
    },
    /// Success rates over the pairs of a manifest.
    Iso { manifest: PathBuf },
    /// Perturbation sensitivity runs described by a manifest.
    Sensitivity {
        manifest: PathBuf,
        #[arg(long)]
        runs: Option<usize>,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Ego-distance baseline over the pairs of a manifest.
    Egodist { manifest: PathBuf },
    /// Persistence-image features and graph properties for every graph of a manifest.
    Export {
        manifest: PathBuf,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long)]
        bandwidth: Option<f64>,
    },
}

fn parse_filtration(s: &str) -> Result<Filtration, String> {
    s.parse().map_err(|e: motifph::filtration::UnknownFiltration| e.to_string())
}

/// Bad flags, config or arguments detected before any work starts.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// 2 for usage, parse and input problems; 3 for failures while running.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<UsageError>() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<motifph::Error>() {
            return match e {
                motifph::Error::Soundness(_) => 3,
                _ => 2,
            };
        }
    }
    3
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.global.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .format_timestamp(None)
        .init();

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let opts = commands::Options::resolve(&cli.global)?;
    if let Some(jobs) = opts.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| usage(format!("--jobs: {e}")))?;
    }
    match cli.command {
        Command::Weights { graph, index } => commands::weights(&opts, &graph, index),
        Command::Ph {
            graph,
            index,
            keep_zero,
            dump_complex,
        } => commands::ph(&opts, &graph, index, keep_zero, dump_complex.as_deref()),
        Command::Iso { manifest } => commands::iso(&opts, &manifest),
        Command::Sensitivity { manifest, runs, steps } => commands::sensitivity(&opts, &manifest, runs, steps),
        Command::Egodist { manifest } => commands::egodist(&opts, &manifest),
        Command::Export {
            manifest,
            rows,
            cols,
            bandwidth,
        } => commands::export(&opts, &manifest, rows, cols, bandwidth),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&usage("x")), 2);
        assert_eq!(exit_code(&motifph::Error::Input("x".into()).into()), 2);
        assert_eq!(exit_code(&motifph::Error::Soundness("x".into()).into()), 3);
        assert_eq!(exit_code(&anyhow::anyhow!("disk full")), 3);
        let wrapped = usage("bad").context("while loading");
        assert_eq!(exit_code(&wrapped), 2);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
