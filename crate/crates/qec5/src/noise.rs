//! Configurable Kraus noise channels and per-stage schedules.
//!
//! Noise is digitized: ideal unitary stages alternate with single-qubit
//! channels applied between them. A schedule holds one entry per pipeline
//! stage boundary (after encode, after gate, after error, after decode),
//! each entry one channel spec per qubit. Dephasing probabilities can be
//! derived from a stage duration and per-qubit T2* via
//! `p = (1 − exp(−t/T2*))/2`.

use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::c64;
use crate::operator::{embed_matrix, KrausChannel};
use crate::pauli::Pauli;
use crate::state::DensityOperator;
use crate::{Qubit, DIM, NUM_QUBITS};

/// Dephasing channel on one qubit of the five-qubit space:
/// Kraus set `{√(1−p)·I, √p·Z_q}`.
pub fn dephasing_channel(p: f64, qubit: Qubit) -> Result<KrausChannel> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let k0 = crate::linalg::CMatrix::identity(DIM).scale(c64((1.0 - p).sqrt(), 0.0));
    let k1 = embed_matrix(&Pauli::Z.matrix(), qubit)?.scale(c64(p.sqrt(), 0.0));
    KrausChannel::new(vec![k0, k1])
}

/// Depolarizing channel on one qubit: `{√(1−p)·I, √(p/3)·X, √(p/3)·Y, √(p/3)·Z}`.
/// Probabilities up to 1 are accepted; p = 3/4 already erases the qubit's
/// Bloch vector, and beyond that the transverse components change sign.
pub fn depolarizing_channel(p: f64, qubit: Qubit) -> Result<KrausChannel> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let k0 = crate::linalg::CMatrix::identity(DIM).scale(c64((1.0 - p).sqrt(), 0.0));
    let w = c64((p / 3.0).sqrt(), 0.0);
    let kx = embed_matrix(&Pauli::X.matrix(), qubit)?.scale(w);
    let ky = embed_matrix(&Pauli::Y.matrix(), qubit)?.scale(w);
    let kz = embed_matrix(&Pauli::Z.matrix(), qubit)?.scale(w);
    KrausChannel::new(vec![k0, kx, ky, kz])
}

/// Dephasing probability accumulated over `t` milliseconds at a given T2*:
/// `(1 − exp(−t/t2))/2`, monotone in `t` with limit 1/2.
pub fn p_from_t2(t_ms: f64, t2_ms: f64) -> Result<f64> {
    if t2_ms <= 0.0 {
        return Err(Error::NonpositiveT2(t2_ms));
    }
    if t_ms < 0.0 {
        return Err(Error::InvalidProbability(t_ms));
    }
    Ok((1.0 - (-t_ms / t2_ms).exp()) / 2.0)
}

/// Channel on a single qubit at one stage boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChannelSpec {
    None,
    Dephasing { p: f64 },
    Depolarizing { p: f64 },
}

impl ChannelSpec {
    fn build(self, qubit: Qubit) -> Result<Option<KrausChannel>> {
        match self {
            ChannelSpec::None => Ok(None),
            ChannelSpec::Dephasing { p: 0.0 } | ChannelSpec::Depolarizing { p: 0.0 } => Ok(None),
            ChannelSpec::Dephasing { p } => dephasing_channel(p, qubit).map(Some),
            ChannelSpec::Depolarizing { p } => depolarizing_channel(p, qubit).map(Some),
        }
    }

    pub fn is_none(self) -> bool {
        matches!(
            self,
            ChannelSpec::None
                | ChannelSpec::Dephasing { p: 0.0 }
                | ChannelSpec::Depolarizing { p: 0.0 }
        )
    }
}

/// Per-qubit channel specs applied at one stage boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct StageNoise {
    specs: [ChannelSpec; NUM_QUBITS],
}

impl StageNoise {
    pub fn none() -> Self {
        StageNoise {
            specs: [ChannelSpec::None; NUM_QUBITS],
        }
    }

    pub fn from_specs(specs: [ChannelSpec; NUM_QUBITS]) -> Self {
        StageNoise { specs }
    }

    pub fn uniform_dephasing(p: f64) -> Self {
        StageNoise {
            specs: [ChannelSpec::Dephasing { p }; NUM_QUBITS],
        }
    }

    pub fn uniform_depolarizing(p: f64) -> Self {
        StageNoise {
            specs: [ChannelSpec::Depolarizing { p }; NUM_QUBITS],
        }
    }

    pub fn specs(&self) -> &[ChannelSpec; NUM_QUBITS] {
        &self.specs
    }

    pub fn is_none(&self) -> bool {
        self.specs.iter().all(|s| s.is_none())
    }

    /// Instantiate the non-trivial per-qubit channels, in qubit order.
    pub fn channels(&self) -> Result<Vec<KrausChannel>> {
        let mut out = Vec::new();
        for (i, spec) in self.specs.iter().enumerate() {
            let qubit = Qubit::new(i as u8 + 1).expect("index in range");
            if let Some(ch) = spec.build(qubit)? {
                out.push(ch);
            }
        }
        Ok(out)
    }

    /// Apply every per-qubit channel in sequence (they commute, acting on
    /// distinct qubits).
    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        let mut out = rho.clone();
        for ch in self.channels()? {
            out = ch.apply(&out)?;
        }
        Ok(out)
    }
}

/// Noise schedule over the four stage boundaries of the pipeline.
#[derive(Clone, Debug, PartialEq)]
pub struct NoiseSchedule {
    pub after_encode: StageNoise,
    pub after_gate: StageNoise,
    pub after_error: StageNoise,
    pub after_decode: StageNoise,
}

impl NoiseSchedule {
    /// Uniform dephasing with the same probability on every qubit at every
    /// stage boundary.
    pub fn uniform_dephasing(p: f64) -> Self {
        NoiseSchedule {
            after_encode: StageNoise::uniform_dephasing(p),
            after_gate: StageNoise::uniform_dephasing(p),
            after_error: StageNoise::uniform_dephasing(p),
            after_decode: StageNoise::uniform_dephasing(p),
        }
    }

    /// Dephasing derived from a total experiment duration and per-qubit
    /// T2* values; each of the four stages lasts `duration/4`.
    pub fn from_t2(duration_ms: f64, t2_ms: &[f64; NUM_QUBITS]) -> Result<Self> {
        let stage_t = duration_ms / 4.0;
        let mut specs = [ChannelSpec::None; NUM_QUBITS];
        for (spec, &t2) in specs.iter_mut().zip(t2_ms.iter()) {
            *spec = ChannelSpec::Dephasing {
                p: p_from_t2(stage_t, t2)?,
            };
        }
        let stage = StageNoise::from_specs(specs);
        Ok(NoiseSchedule {
            after_encode: stage.clone(),
            after_gate: stage.clone(),
            after_error: stage.clone(),
            after_decode: stage,
        })
    }

    pub fn is_none(&self) -> bool {
        self.after_encode.is_none()
            && self.after_gate.is_none()
            && self.after_error.is_none()
            && self.after_decode.is_none()
    }

    pub fn stages(&self) -> [&StageNoise; 4] {
        [
            &self.after_encode,
            &self.after_gate,
            &self.after_error,
            &self.after_decode,
        ]
    }
}
