//! Serializable output records and their CSV rendering.

use std::collections::BTreeMap;
use std::io::Write;

use anyhow::{bail, Result};
use qkdlab_core::bb84::{DetectionRow, RoundRecord};
use qkdlab_core::games::{SuiteReport, SuiteRow};
use qkdlab_core::quantum::MeasurementBasis;
use serde::{Deserialize, Serialize};

/// Formats a real for CSV output.
pub fn fixed(x: f64) -> String {
    format!("{x:.6}")
}

/// Writes a header and rows as CSV.
pub fn write_csv<W: Write>(
    out: W,
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn basis_name(b: MeasurementBasis) -> String {
    b.symbol().to_string()
}

fn parse_basis(s: &str) -> Result<MeasurementBasis> {
    match s {
        "Z" => Ok(MeasurementBasis::Z),
        "X" => Ok(MeasurementBasis::X),
        other => bail!("unknown basis {other:?}"),
    }
}

/// One BB84 round, with qubits written as `"0"`, `"1"`, `"+"` or `"-"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptRow {
    pub n: usize,
    pub a_bit: u8,
    pub a_basis: String,
    pub a_qubit: String,
    pub e_basis: Option<String>,
    pub e_bit: Option<u8>,
    pub b_basis: String,
    pub b_bit: u8,
    pub kept: bool,
}

pub const TRANSCRIPT_HEADER: [&str; 9] = [
    "n", "a_bit", "a_basis", "a_qubit", "e_basis", "e_bit", "b_basis", "b_bit", "kept",
];

impl From<&RoundRecord> for TranscriptRow {
    fn from(r: &RoundRecord) -> Self {
        Self {
            n: r.index,
            a_bit: r.alice_bit as u8,
            a_basis: basis_name(r.alice_basis),
            a_qubit: qkdlab_core::bb84::qubit_label(r.alice_bit, r.alice_basis).to_string(),
            e_basis: r.eve_basis.map(basis_name),
            e_bit: r.eve_bit.map(u8::from),
            b_basis: basis_name(r.bob_basis),
            b_bit: r.bob_bit as u8,
            kept: r.kept,
        }
    }
}

impl TranscriptRow {
    /// Rebuilds the round, checking that the recorded qubit and `kept` flag
    /// agree with the recorded choices.
    pub fn to_record(&self) -> Result<RoundRecord> {
        let a_basis = parse_basis(&self.a_basis)?;
        let eve = match (&self.e_basis, self.e_bit) {
            (Some(b), Some(bit)) => Some((parse_basis(b)?, bit == 1)),
            (None, None) => None,
            _ => bail!(
                "round {}: eve basis and bit must both be present or both absent",
                self.n
            ),
        };
        let record = RoundRecord::new(
            self.n,
            (self.a_bit == 1, a_basis),
            eve,
            (parse_basis(&self.b_basis)?, self.b_bit == 1),
        );
        if TranscriptRow::from(&record) != *self {
            bail!("round {} is inconsistent", self.n);
        }
        Ok(record)
    }

    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.a_bit.to_string(),
            self.a_basis.clone(),
            self.a_qubit.clone(),
            self.e_basis.clone().unwrap_or_default(),
            self.e_bit.map(|b| b.to_string()).unwrap_or_default(),
            self.b_basis.clone(),
            self.b_bit.to_string(),
            self.kept.to_string(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bb84Summary {
    pub qubits: usize,
    pub eve: String,
    pub seed: u64,
    pub sifted: usize,
    pub sift_fraction: f64,
    pub qber: f64,
    pub revealed: usize,
    pub detected: bool,
    pub key_len: usize,
}

pub const SUMMARY_HEADER: [&str; 7] = [
    "qubits",
    "sifted",
    "sift_fraction",
    "qber",
    "revealed",
    "detected",
    "key_len",
];

impl Bb84Summary {
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.qubits.to_string(),
            self.sifted.to_string(),
            fixed(self.sift_fraction),
            fixed(self.qber),
            self.revealed.to_string(),
            self.detected.to_string(),
            self.key_len.to_string(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub k: usize,
    pub runs: usize,
    pub detected: usize,
    pub empirical: f64,
    pub closed_form: f64,
    pub abs_diff: f64,
}

pub const SWEEP_HEADER: [&str; 6] = [
    "k",
    "runs",
    "detected",
    "empirical",
    "closed_form",
    "abs_diff",
];

impl From<&DetectionRow> for SweepRow {
    fn from(r: &DetectionRow) -> Self {
        Self {
            k: r.k,
            runs: r.runs,
            detected: r.detected,
            empirical: r.empirical,
            closed_form: r.closed_form,
            abs_diff: (r.empirical - r.closed_form).abs(),
        }
    }
}

impl SweepRow {
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.k.to_string(),
            self.runs.to_string(),
            self.detected.to_string(),
            fixed(self.empirical),
            fixed(self.closed_form),
            fixed(self.abs_diff),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TeleportRow {
    pub trial: u64,
    pub outcome_bits: String,
    pub fidelity: f64,
}

pub const TELEPORT_HEADER: [&str; 3] = ["trial", "outcome_bits", "fidelity"];

impl TeleportRow {
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.trial.to_string(),
            self.outcome_bits.clone(),
            fixed(self.fidelity),
        ]
    }
}

/// One row of a game-suite report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameRow {
    pub game: String,
    pub scheme: String,
    pub adversary: String,
    pub trials: u64,
    pub advantage: f64,
    pub ci_half_width: f64,
    pub wins: BTreeMap<String, u64>,
}

pub const GAME_HEADER: [&str; 7] = [
    "game",
    "scheme",
    "adversary",
    "trials",
    "advantage",
    "ci_half_width",
    "wins",
];

impl From<&SuiteRow> for GameRow {
    fn from(r: &SuiteRow) -> Self {
        Self {
            game: r.estimate.game.clone(),
            scheme: r.scheme.clone(),
            adversary: r.adversary.clone(),
            trials: r.estimate.trials,
            advantage: r.estimate.advantage,
            ci_half_width: r.estimate.ci_half_width,
            wins: r.estimate.wins.clone(),
        }
    }
}

impl GameRow {
    /// Counts are rendered as `key=value` pairs joined by `;`.
    pub fn csv_fields(&self) -> Vec<String> {
        let wins: Vec<String> = self.wins.iter().map(|(k, v)| format!("{k}={v}")).collect();
        vec![
            self.game.clone(),
            self.scheme.clone(),
            self.adversary.clone(),
            self.trials.to_string(),
            fixed(self.advantage),
            fixed(self.ci_half_width),
            wins.join(";"),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameReport {
    pub suite: String,
    pub master_seed: u64,
    pub rows: Vec<GameRow>,
}

impl GameReport {
    pub fn new(suite: &str, report: &SuiteReport) -> Self {
        Self {
            suite: suite.to_string(),
            master_seed: report.master_seed,
            rows: report.rows.iter().map(GameRow::from).collect(),
        }
    }
}
