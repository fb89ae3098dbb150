//! Argument parsing and command execution for the `qkdlab` binary.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qkdlab_core::bb84::{detect, run_bb84, sift, Bb84Config, Eavesdropper};
use qkdlab_core::games::{named_suite, SuiteConfig};
use qkdlab_core::quantum::StateVector;
use qkdlab_core::seed::derived_rng;
use qkdlab_core::teleport::{teleport, teleport_fidelity};
use serde::Serialize;

use crate::demo::{bell_demo, ensemble_demo, BELL_HEADER, ENSEMBLE_HEADER};
use crate::records::{
    write_csv, Bb84Summary, GameReport, SweepRow, TeleportRow, TranscriptRow, GAME_HEADER,
    SUMMARY_HEADER, SWEEP_HEADER, TELEPORT_HEADER, TRANSCRIPT_HEADER,
};
use crate::DEFAULT_SEED;

const TELEPORT_STREAM: u64 = 0x7e1e;

const AFTER_HELP: &str = "\
Every randomized command takes --seed; the default seed is 1984, so runs \
without --seed are reproducible. CSV output writes one table with a header \
row and reals at 6 decimal places. Entropies are in nats.";

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "qkdlab", version, about = "BB84, teleportation, entropy and attack-game experiments", after_help = AFTER_HELP)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write output to this file instead of standard out.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Run BB84 once and optionally sweep the detection probability.
    ///
    /// CSV output is the sweep table with --sweep-k, else the round
    /// transcript with --transcript, else the one-row summary.
    Bb84(Bb84Args),
    /// Teleport random single-qubit states.
    Teleport(TeleportArgs),
    /// Estimate adversary advantages over a named game suite.
    Games(GamesArgs),
    /// Print a built-in entropy demonstration.
    Entropy(EntropyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EveArg {
    None,
    InterceptResend,
}

impl From<EveArg> for Eavesdropper {
    fn from(e: EveArg) -> Self {
        match e {
            EveArg::None => Eavesdropper::None,
            EveArg::InterceptResend => Eavesdropper::InterceptResend,
        }
    }
}

impl EveArg {
    fn name(self) -> &'static str {
        match self {
            EveArg::None => "none",
            EveArg::InterceptResend => "intercept-resend",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct Bb84Args {
    /// Number of qubits Alice sends.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub qubits: u64,
    #[arg(long, value_enum, default_value_t = EveArg::None)]
    pub eve: EveArg,
    /// Sifted bits revealed for eavesdropper detection.
    #[arg(long, default_value_t = 0)]
    pub reveal: usize,
    /// Also tabulate detection frequency against 1 - (3/4)^k for k = 1..K.
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..=64))]
    pub sweep_k: Option<u64>,
    /// Runs per k in the sweep.
    #[arg(long, default_value_t = 1000, requires = "sweep_k", value_parser = clap::value_parser!(u64).range(1..))]
    pub runs: u64,
    /// Emit the per-round transcript.
    #[arg(long)]
    pub transcript: bool,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct TeleportArgs {
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct GamesArgs {
    /// Suite name: default, separations or empty.
    #[arg(long, default_value = "default")]
    pub suite: String,
    /// Trials per suite row (at least 100).
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Demo {
    Bell,
    Ensembles,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct EntropyArgs {
    #[arg(long, value_enum)]
    pub demo: Demo,
}

/// Parses arguments that follow the program name.
pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args =
        std::iter::once(std::ffi::OsString::from("qkdlab")).chain(argv.into_iter().map(Into::into));
    Cli::try_parse_from(args)
}

#[derive(Serialize)]
struct Bb84Output {
    summary: Bb84Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    sweep: Option<Vec<SweepRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    transcript: Option<Vec<TranscriptRow>>,
}

#[derive(Serialize)]
struct TeleportOutput {
    trials: u64,
    seed: u64,
    histogram: BTreeMap<String, u64>,
    min_fidelity: f64,
    rows: Vec<TeleportRow>,
}

#[derive(Serialize)]
struct EntropyOutput<T> {
    demo: &'static str,
    units: &'static str,
    rows: Vec<T>,
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Executes a parsed command, writing one JSON document or one CSV table.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Bb84(a) => run_bb84_cmd(a, cli.format, out),
        Command::Teleport(a) => run_teleport(a, cli.format, out),
        Command::Games(a) => run_games(a, cli.format, out),
        Command::Entropy(a) => run_entropy(a, cli.format, out),
    }
}

fn run_bb84_cmd(a: &Bb84Args, format: Format, out: &mut dyn Write) -> Result<()> {
    let config = Bb84Config::new(a.qubits as usize, a.eve.into(), a.seed).with_reveal(a.reveal);
    let transcript = run_bb84(&config);
    let sifted = sift(&transcript);
    let detection = detect(&sifted, a.reveal)?;
    let summary = Bb84Summary {
        qubits: config.n_rounds,
        eve: a.eve.name().to_string(),
        seed: a.seed,
        sifted: sifted.len(),
        sift_fraction: sifted.sift_fraction,
        qber: sifted.qber,
        revealed: a.reveal,
        detected: detection.detected,
        key_len: detection.final_key_alice.len(),
    };
    let sweep = a.sweep_k.map(|k| {
        crate::sweep::detection_sweep(k as usize, a.runs as usize, a.seed)
            .iter()
            .map(SweepRow::from)
            .collect::<Vec<_>>()
    });
    let rounds = a.transcript.then(|| {
        transcript
            .rounds
            .iter()
            .map(TranscriptRow::from)
            .collect::<Vec<_>>()
    });
    match format {
        Format::Json => write_json(
            out,
            &Bb84Output {
                summary,
                sweep,
                transcript: rounds,
            },
        ),
        Format::Csv => {
            if let Some(rows) = sweep {
                write_csv(out, &SWEEP_HEADER, rows.iter().map(SweepRow::csv_fields))
            } else if let Some(rows) = rounds {
                write_csv(
                    out,
                    &TRANSCRIPT_HEADER,
                    rows.iter().map(TranscriptRow::csv_fields),
                )
            } else {
                write_csv(out, &SUMMARY_HEADER, [summary.csv_fields()])
            }
        }
    }
}

fn run_teleport(a: &TeleportArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    let mut histogram: BTreeMap<String, u64> = ["00", "01", "10", "11"]
        .iter()
        .map(|s| (s.to_string(), 0))
        .collect();
    let mut rows = Vec::with_capacity(a.trials as usize);
    for trial in 0..a.trials {
        let mut rng = derived_rng(a.seed, TELEPORT_STREAM, trial);
        let psi = StateVector::random(1, &mut rng)?;
        let outcome = teleport(&psi, &mut rng)?;
        let [m1, m2] = outcome.classical_bits();
        let bits = format!("{}{}", m1 as u8, m2 as u8);
        *histogram.entry(bits.clone()).or_default() += 1;
        rows.push(TeleportRow {
            trial,
            outcome_bits: bits,
            fidelity: teleport_fidelity(&psi, &outcome)?,
        });
    }
    match format {
        Format::Json => {
            let min_fidelity = rows
                .iter()
                .map(|r| r.fidelity)
                .fold(f64::INFINITY, f64::min);
            write_json(
                out,
                &TeleportOutput {
                    trials: a.trials,
                    seed: a.seed,
                    histogram,
                    min_fidelity,
                    rows,
                },
            )
        }
        Format::Csv => write_csv(
            out,
            &TELEPORT_HEADER,
            rows.iter().map(TeleportRow::csv_fields),
        ),
    }
}

fn run_games(a: &GamesArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    let config = SuiteConfig {
        master_seed: a.seed,
        entries: named_suite(&a.suite, a.trials)?,
    };
    let report = GameReport::new(&a.suite, &crate::sweep::run_game_suite(&config)?);
    match format {
        Format::Json => write_json(out, &report),
        Format::Csv => write_csv(
            out,
            &GAME_HEADER,
            report.rows.iter().map(|r| r.csv_fields()),
        ),
    }
}

fn run_entropy(a: &EntropyArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    match a.demo {
        Demo::Bell => {
            let rows = bell_demo()?;
            match format {
                Format::Json => write_json(
                    out,
                    &EntropyOutput {
                        demo: "bell",
                        units: "nats",
                        rows,
                    },
                ),
                Format::Csv => write_csv(out, &BELL_HEADER, rows.iter().map(|r| r.csv_fields())),
            }
        }
        Demo::Ensembles => {
            let rows = ensemble_demo()?;
            match format {
                Format::Json => write_json(
                    out,
                    &EntropyOutput {
                        demo: "ensembles",
                        units: "nats",
                        rows,
                    },
                ),
                Format::Csv => {
                    write_csv(out, &ENSEMBLE_HEADER, rows.iter().map(|r| r.csv_fields()))
                }
            }
        }
    }
}
