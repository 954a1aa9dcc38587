//! Noise-schedule configuration: JSON schema and CLI flag resolution.
//!
//! A config file provides exactly one of three forms:
//!
//! ```json
//! { "uniform_dephasing_p": 0.05 }
//! { "duration_ms": 40, "t2_ms": [100, 100, 100, 100, 100] }
//! { "stages": { "after_encode": [ { "type": "dephasing", "p": 0.05 }, ... ] } }
//! ```
//!
//! The `stages` form lists one channel spec per qubit (five entries) for
//! each of the four stage boundaries. The duration form derives per-stage
//! dephasing probabilities `p = (1 − exp(−t/T2*))/2` with `t` a quarter of
//! the total duration; missing `t2_ms` defaults to 100 ms per qubit.

use serde::{Deserialize, Serialize};

use qec5::noise::{ChannelSpec, NoiseSchedule, StageNoise};
use qec5::NUM_QUBITS;

use crate::{CliError, CliResult};

/// Placeholder per-qubit T2* used when a duration is given without
/// explicit relaxation times.
pub const DEFAULT_T2_MS: f64 = 100.0;

/// One channel spec in the JSON schema.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ChannelSpecConfig {
    None,
    Dephasing { p: f64 },
    Depolarizing { p: f64 },
}

impl From<ChannelSpecConfig> for ChannelSpec {
    fn from(c: ChannelSpecConfig) -> ChannelSpec {
        match c {
            ChannelSpecConfig::None => ChannelSpec::None,
            ChannelSpecConfig::Dephasing { p } => ChannelSpec::Dephasing { p },
            ChannelSpecConfig::Depolarizing { p } => ChannelSpec::Depolarizing { p },
        }
    }
}

impl From<ChannelSpec> for ChannelSpecConfig {
    fn from(c: ChannelSpec) -> ChannelSpecConfig {
        match c {
            ChannelSpec::None => ChannelSpecConfig::None,
            ChannelSpec::Dephasing { p } => ChannelSpecConfig::Dephasing { p },
            ChannelSpec::Depolarizing { p } => ChannelSpecConfig::Depolarizing { p },
        }
    }
}

/// Explicit per-stage, per-qubit channel table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StagesConfig {
    pub after_encode: [ChannelSpecConfig; NUM_QUBITS],
    pub after_gate: [ChannelSpecConfig; NUM_QUBITS],
    pub after_error: [ChannelSpecConfig; NUM_QUBITS],
    pub after_decode: [ChannelSpecConfig; NUM_QUBITS],
}

fn stage_to_core(specs: &[ChannelSpecConfig; NUM_QUBITS]) -> StageNoise {
    let mut core = [ChannelSpec::None; NUM_QUBITS];
    for (dst, src) in core.iter_mut().zip(specs.iter()) {
        *dst = (*src).into();
    }
    StageNoise::from_specs(core)
}

fn stage_from_core(stage: &StageNoise) -> [ChannelSpecConfig; NUM_QUBITS] {
    let mut out = [ChannelSpecConfig::None; NUM_QUBITS];
    for (dst, src) in out.iter_mut().zip(stage.specs().iter()) {
        *dst = (*src).into();
    }
    out
}

impl StagesConfig {
    pub fn to_schedule(&self) -> NoiseSchedule {
        NoiseSchedule {
            after_encode: stage_to_core(&self.after_encode),
            after_gate: stage_to_core(&self.after_gate),
            after_error: stage_to_core(&self.after_error),
            after_decode: stage_to_core(&self.after_decode),
        }
    }

    pub fn from_schedule(schedule: &NoiseSchedule) -> StagesConfig {
        StagesConfig {
            after_encode: stage_from_core(&schedule.after_encode),
            after_gate: stage_from_core(&schedule.after_gate),
            after_error: stage_from_core(&schedule.after_error),
            after_decode: stage_from_core(&schedule.after_decode),
        }
    }
}

/// Top-level noise config file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uniform_dephasing_p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t2_ms: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stages: Option<StagesConfig>,
}

/// Expand a 1- or 5-element T2* list to per-qubit values.
pub fn expand_t2(values: &[f64]) -> CliResult<[f64; NUM_QUBITS]> {
    match values {
        [single] => Ok([*single; NUM_QUBITS]),
        [a, b, c, d, e] => Ok([*a, *b, *c, *d, *e]),
        other => Err(CliError::Usage(format!(
            "expected 1 or 5 T2* values, got {}",
            other.len()
        ))),
    }
}

impl NoiseConfig {
    /// Resolve the config into a noise schedule; `None` when the file is
    /// empty of noise. Mixing forms is rejected.
    pub fn resolve(&self) -> CliResult<Option<NoiseSchedule>> {
        let forms = [
            self.uniform_dephasing_p.is_some(),
            self.duration_ms.is_some() || self.t2_ms.is_some(),
            self.stages.is_some(),
        ];
        if forms.iter().filter(|f| **f).count() > 1 {
            return Err(CliError::Usage(
                "noise config mixes uniform_dephasing_p, duration/t2 and stages forms".into(),
            ));
        }
        if let Some(p) = self.uniform_dephasing_p {
            validate_probability(p)?;
            return Ok(Some(NoiseSchedule::uniform_dephasing(p)));
        }
        if self.duration_ms.is_some() || self.t2_ms.is_some() {
            let duration = self.duration_ms.ok_or_else(|| {
                CliError::Usage("t2_ms requires duration_ms in the noise config".into())
            })?;
            if duration < 0.0 {
                return Err(CliError::Usage(format!(
                    "duration_ms must be non-negative, got {duration}"
                )));
            }
            let t2 = match &self.t2_ms {
                Some(values) => expand_t2(values)?,
                None => [DEFAULT_T2_MS; NUM_QUBITS],
            };
            let schedule = NoiseSchedule::from_t2(duration, &t2)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            return Ok(Some(schedule));
        }
        if let Some(stages) = &self.stages {
            for stage in [
                &stages.after_encode,
                &stages.after_gate,
                &stages.after_error,
                &stages.after_decode,
            ] {
                for spec in stage.iter() {
                    match spec {
                        ChannelSpecConfig::Dephasing { p }
                        | ChannelSpecConfig::Depolarizing { p } => validate_probability(*p)?,
                        ChannelSpecConfig::None => {}
                    }
                }
            }
            return Ok(Some(stages.to_schedule()));
        }
        Ok(None)
    }
}

pub fn validate_probability(p: f64) -> CliResult<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("probability {p} outside [0, 1]")))
    }
}

/// Load and resolve a noise config file.
pub fn load_noise_file(path: &std::path::Path) -> CliResult<Option<NoiseSchedule>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let config: NoiseConfig = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid noise config {}: {e}", path.display())))?;
    config.resolve()
}
