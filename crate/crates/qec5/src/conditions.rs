//! The 16 single-qubit error conditions.
//!
//! A run of the pipeline injects exactly one of: the no-error condition E,
//! a bit flip Bk (Pauli X on qubit k), a phase flip Sk (Pauli Z), or a
//! combined bit-and-phase flip BSk (Pauli Y), for k = 1..5. Errors are
//! represented phase-free: a π rotation differs from the Pauli only by a
//! global phase, which cancels under conjugation and in the fidelity.

use crate::operator::{embedded_pauli, identity32, UnitaryOperator};
use crate::pauli::Pauli;
use crate::Qubit;

/// One of the 16 error conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorCondition {
    /// No error (label "E").
    Identity,
    /// Bit flip on a qubit (labels "B1".."B5").
    BitFlip(Qubit),
    /// Phase flip on a qubit (labels "S1".."S5").
    PhaseFlip(Qubit),
    /// Combined bit and phase flip on a qubit (labels "BS1".."BS5").
    BitPhaseFlip(Qubit),
}

impl ErrorCondition {
    /// All 16 conditions in canonical order: E, B1..B5, S1..S5, BS1..BS5.
    pub fn all() -> [ErrorCondition; 16] {
        let q = Qubit::ALL;
        [
            ErrorCondition::Identity,
            ErrorCondition::BitFlip(q[0]),
            ErrorCondition::BitFlip(q[1]),
            ErrorCondition::BitFlip(q[2]),
            ErrorCondition::BitFlip(q[3]),
            ErrorCondition::BitFlip(q[4]),
            ErrorCondition::PhaseFlip(q[0]),
            ErrorCondition::PhaseFlip(q[1]),
            ErrorCondition::PhaseFlip(q[2]),
            ErrorCondition::PhaseFlip(q[3]),
            ErrorCondition::PhaseFlip(q[4]),
            ErrorCondition::BitPhaseFlip(q[0]),
            ErrorCondition::BitPhaseFlip(q[1]),
            ErrorCondition::BitPhaseFlip(q[2]),
            ErrorCondition::BitPhaseFlip(q[3]),
            ErrorCondition::BitPhaseFlip(q[4]),
        ]
    }

    /// Position in the canonical order, 0..16.
    pub fn canonical_index(self) -> usize {
        match self {
            ErrorCondition::Identity => 0,
            ErrorCondition::BitFlip(q) => q.index() as usize,
            ErrorCondition::PhaseFlip(q) => 5 + q.index() as usize,
            ErrorCondition::BitPhaseFlip(q) => 10 + q.index() as usize,
        }
    }

    /// The qubit the error acts on; `None` for the no-error condition.
    pub fn target(self) -> Option<Qubit> {
        match self {
            ErrorCondition::Identity => None,
            ErrorCondition::BitFlip(q)
            | ErrorCondition::PhaseFlip(q)
            | ErrorCondition::BitPhaseFlip(q) => Some(q),
        }
    }

    /// The Pauli type of the error (I for the no-error condition).
    pub fn pauli(self) -> Pauli {
        match self {
            ErrorCondition::Identity => Pauli::I,
            ErrorCondition::BitFlip(_) => Pauli::X,
            ErrorCondition::PhaseFlip(_) => Pauli::Z,
            ErrorCondition::BitPhaseFlip(_) => Pauli::Y,
        }
    }

    /// The 32×32 error unitary.
    pub fn unitary(self) -> UnitaryOperator {
        match self.target() {
            None => identity32(),
            Some(q) => embedded_pauli(self.pauli(), q),
        }
    }

    pub fn label(self) -> &'static str {
        const B: [&str; 5] = ["B1", "B2", "B3", "B4", "B5"];
        const S: [&str; 5] = ["S1", "S2", "S3", "S4", "S5"];
        const BS: [&str; 5] = ["BS1", "BS2", "BS3", "BS4", "BS5"];
        match self {
            ErrorCondition::Identity => "E",
            ErrorCondition::BitFlip(q) => B[q.index() as usize - 1],
            ErrorCondition::PhaseFlip(q) => S[q.index() as usize - 1],
            ErrorCondition::BitPhaseFlip(q) => BS[q.index() as usize - 1],
        }
    }

    pub fn from_label(s: &str) -> Option<ErrorCondition> {
        ErrorCondition::all().into_iter().find(|c| c.label() == s)
    }
}

impl core::fmt::Display for ErrorCondition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}
