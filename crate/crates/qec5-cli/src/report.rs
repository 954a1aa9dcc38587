//! Serializable report types. Complex numbers serialize as `[re, im]`
//! pairs; χ matrices as 4×4 arrays of pairs in the documented basis order
//! `["E", "X", "-iY", "Z"]`. Reports carry no timestamps, so identical
//! invocations serialize byte-identically.

use serde::Serialize;

use qec5::code::{codeword_terms, codewords};
use qec5::experiment::{
    AdvantageOutcome, BaselineOutcome, ExperimentOutcome, SweepOutcome, BASELINE_REFERENCE,
};
use qec5::recovery::SyndromeTable;
use qec5::tomography::{ChiMatrix, BASIS_LABELS};

use crate::config::StagesConfig;

pub type ComplexPair = [f64; 2];

pub fn chi_to_pairs(chi: &ChiMatrix) -> Vec<Vec<ComplexPair>> {
    (0..4)
        .map(|k| {
            (0..4)
                .map(|l| {
                    let v = chi.get(k, l);
                    [v.re, v.im]
                })
                .collect()
        })
        .collect()
}

/// Run metadata, deterministic across identical invocations.
#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub tool_version: &'static str,
    /// Reserved: the pipelines are deterministic, but a seed passed on the
    /// command line is echoed here.
    pub seed: Option<u64>,
}

impl Meta {
    pub fn new(seed: Option<u64>) -> Meta {
        Meta {
            tool_version: env!("CARGO_PKG_VERSION"),
            seed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CodewordReport {
    /// Signed ket terms, e.g. `+|00000⟩`.
    pub kets: Vec<String>,
    /// Common magnitude of all eight amplitudes (1/√8).
    pub amplitude: f64,
    pub norm: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CodewordsReport {
    pub zero_l: CodewordReport,
    pub one_l: CodewordReport,
    /// |⟨0_L|1_L⟩|, zero for orthogonal codewords.
    pub overlap: f64,
    pub verified: bool,
    pub meta: Meta,
}

fn ket_strings(one: bool) -> Vec<String> {
    codeword_terms(one)
        .iter()
        .map(|&(idx, sign)| {
            let s = if sign >= 0.0 { '+' } else { '-' };
            format!("{s}|{idx:05b}⟩")
        })
        .collect()
}

pub fn codewords_report(seed: Option<u64>) -> CodewordsReport {
    let cw = codewords();
    let amp = 1.0 / 8f64.sqrt();
    let verify = |v: &qec5::StateVector, one: bool| -> (bool, CodewordReport) {
        let mut ok = true;
        let mut nonzero = 0;
        for (idx, a) in v.amps().iter().enumerate() {
            let want = codeword_terms(one)
                .iter()
                .find(|(i, _)| *i == idx)
                .map_or(0.0, |(_, sign)| sign * amp);
            if (a.re - want).abs() > 1e-12 || a.im.abs() > 1e-12 {
                ok = false;
            }
            if a.norm() > 0.0 {
                nonzero += 1;
            }
        }
        ok &= nonzero == 8;
        (
            ok,
            CodewordReport {
                kets: ket_strings(one),
                amplitude: amp,
                norm: v.norm(),
            },
        )
    };
    let (ok0, zero_l) = verify(&cw.zero_l, false);
    let (ok1, one_l) = verify(&cw.one_l, true);
    let overlap = cw.zero_l.inner(&cw.one_l).norm();
    let verified = ok0
        && ok1
        && overlap < 1e-12
        && (zero_l.norm - 1.0).abs() < 1e-12
        && (one_l.norm - 1.0).abs() < 1e-12;
    CodewordsReport {
        zero_l,
        one_l,
        overlap,
        verified,
        meta: Meta::new(seed),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SyndromeRow {
    /// Syndrome bits of qubits 2–5, e.g. `"0001"`.
    pub syndrome: String,
    pub condition: String,
    pub correction: String,
    pub phase: ComplexPair,
}

#[derive(Debug, Clone, Serialize)]
pub struct SyndromeTableReport {
    pub entries: Vec<SyndromeRow>,
    pub meta: Meta,
}

pub fn syndrome_table_report(table: &SyndromeTable, seed: Option<u64>) -> SyndromeTableReport {
    SyndromeTableReport {
        entries: table
            .entries()
            .iter()
            .map(|e| SyndromeRow {
                syndrome: format!("{:04b}", e.syndrome),
                condition: e.condition.label().to_string(),
                correction: e.correction.label().to_string(),
                phase: [e.phase.re, e.phase.im],
            })
            .collect(),
        meta: Meta::new(seed),
    }
}

impl SyndromeTableReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("syndrome,condition,correction,phase_re,phase_im\n");
        for row in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.syndrome, row.condition, row.correction, row.phase[0], row.phase[1]
            ));
        }
        out
    }
}

/// One experiment in a sweep (shared fields hoisted to the envelope).
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentEntry {
    pub gate: String,
    pub error: String,
    pub fidelity: f64,
    /// Syndrome observed on qubits 2–5 (noiseless runs only).
    pub syndrome: Option<String>,
    pub chi_effective: Vec<Vec<ComplexPair>>,
    pub chi_ideal: Vec<Vec<ComplexPair>>,
    /// Max-abs deviation of the measured identity response from E
    /// (absent when the response was assumed).
    pub identity_response_deviation: Option<f64>,
}

impl ExperimentEntry {
    pub fn from_outcome(outcome: &ExperimentOutcome) -> ExperimentEntry {
        ExperimentEntry {
            gate: outcome.gate.label().to_string(),
            error: outcome.error.label().to_string(),
            fidelity: outcome.fidelity,
            syndrome: outcome.syndrome.map(|s| format!("{s:04b}")),
            chi_effective: chi_to_pairs(&outcome.chi_effective),
            chi_ideal: chi_to_pairs(&outcome.chi_ideal),
            identity_response_deviation: outcome.identity_deviation,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    #[serde(flatten)]
    pub experiment: ExperimentEntry,
    pub chi_basis: [&'static str; 4],
    pub identity_response_assumed: bool,
    pub noise: Option<StagesConfig>,
    pub meta: Meta,
}

pub fn experiment_report(
    outcome: &ExperimentOutcome,
    assumed: bool,
    noise: Option<StagesConfig>,
    seed: Option<u64>,
) -> ExperimentReport {
    ExperimentReport {
        experiment: ExperimentEntry::from_outcome(outcome),
        chi_basis: BASIS_LABELS,
        identity_response_assumed: assumed,
        noise,
        meta: Meta::new(seed),
    }
}

impl ExperimentReport {
    pub fn to_csv(&self) -> String {
        format!(
            "gate,error,fidelity\n{},{},{}\n",
            self.experiment.gate, self.experiment.error, self.experiment.fidelity
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GateAverageReport {
    pub gate: String,
    pub mean_fidelity: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub experiments: Vec<ExperimentEntry>,
    pub averages: Vec<GateAverageReport>,
    pub chi_basis: [&'static str; 4],
    pub identity_response_assumed: bool,
    pub noise: Option<StagesConfig>,
    pub meta: Meta,
}

pub fn sweep_report(
    outcome: &SweepOutcome,
    assumed: bool,
    noise: Option<StagesConfig>,
    seed: Option<u64>,
) -> SweepReport {
    SweepReport {
        experiments: outcome
            .experiments
            .iter()
            .map(ExperimentEntry::from_outcome)
            .collect(),
        averages: outcome
            .averages
            .iter()
            .map(|a| GateAverageReport {
                gate: a.gate.label().to_string(),
                mean_fidelity: a.mean_fidelity,
            })
            .collect(),
        chi_basis: BASIS_LABELS,
        identity_response_assumed: assumed,
        noise,
        meta: Meta::new(seed),
    }
}

impl SweepReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("gate,error,fidelity\n");
        for e in &self.experiments {
            out.push_str(&format!("{},{},{}\n", e.gate, e.error, e.fidelity));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BaselineFidelityRow {
    pub error: String,
    pub fidelity: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BaselineGateReport {
    pub gate: String,
    pub fidelities: Vec<BaselineFidelityRow>,
    pub mean: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BaselineReport {
    /// 13/16: three register-qubit errors score 0, the other 13 score 1.
    pub reference: f64,
    pub gates: Vec<BaselineGateReport>,
    pub meta: Meta,
}

pub fn baseline_report(outcomes: &[BaselineOutcome], seed: Option<u64>) -> BaselineReport {
    BaselineReport {
        reference: BASELINE_REFERENCE,
        gates: outcomes
            .iter()
            .map(|o| BaselineGateReport {
                gate: o.gate.label().to_string(),
                fidelities: o
                    .fidelities
                    .iter()
                    .map(|(error, f)| BaselineFidelityRow {
                        error: error.label().to_string(),
                        fidelity: *f,
                    })
                    .collect(),
                mean: o.mean,
            })
            .collect(),
        meta: Meta::new(seed),
    }
}

impl BaselineReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("gate,error,fidelity\n");
        for g in &self.gates {
            for row in &g.fidelities {
                out.push_str(&format!("{},{},{}\n", g.gate, row.error, row.fidelity));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MarginReport {
    pub gate: String,
    pub average: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AdvantageReport {
    pub reference: f64,
    pub gates: Vec<MarginReport>,
    pub noise: Option<StagesConfig>,
    pub meta: Meta,
}

pub fn advantage_report(
    outcome: &AdvantageOutcome,
    noise: Option<StagesConfig>,
    seed: Option<u64>,
) -> AdvantageReport {
    AdvantageReport {
        reference: outcome.reference,
        gates: outcome
            .margins
            .iter()
            .map(|m| MarginReport {
                gate: m.gate.label().to_string(),
                average: m.average,
                margin: m.margin,
            })
            .collect(),
        noise,
        meta: Meta::new(seed),
    }
}

impl AdvantageReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("gate,average,margin\n");
        for g in &self.gates {
            out.push_str(&format!("{},{},{}\n", g.gate, g.average, g.margin));
        }
        out
    }
}
