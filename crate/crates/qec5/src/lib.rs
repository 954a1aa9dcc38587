//! Simulator of the five-qubit perfect quantum error correcting code.
//!
//! The crate models the full coherent pipeline on a register of five qubits:
//! encode one logical qubit into the code, apply an encoded gate (identity,
//! NOT or Hadamard), inject one of the 16 single-qubit error conditions,
//! decode, and correct the register qubit with a unitary controlled by the
//! four syndrome qubits. Pipelines are characterized by quantum process
//! tomography: the effective single-qubit channel is reconstructed as a 4×4
//! χ matrix in the operator basis (E, X, −iY, Z) and compared to the ideal
//! gate via the process fidelity
//! `F_χ = |Tr(χ_a χ_b†)| / √(Tr(χ_a χ_a†) Tr(χ_b χ_b†))`.
//!
//! Everything is dense complex linear algebra over the 32-dimensional
//! Hilbert space; the whole crate is deterministic and `no_std`-compatible
//! (`alloc` required).

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod code;
pub mod conditions;
pub mod error;
pub mod experiment;
pub mod linalg;
pub mod logical;
pub mod noise;
pub mod operator;
pub mod pauli;
pub mod recovery;
pub mod state;
pub mod tomography;

pub use num_complex::Complex64;

pub use code::{build_decoder, build_encoder, codewords, CodewordPair, EncoderFrame};
pub use conditions::ErrorCondition;
pub use error::{Error, Result};
pub use logical::LogicalGate;
pub use noise::NoiseSchedule;
pub use operator::{embed, KrausChannel, UnitaryOperator};
pub use pauli::Pauli;
pub use recovery::{derive_syndrome_table, Pipeline, SyndromeTable};
pub use state::{DensityOperator, StateVector};
pub use tomography::{process_fidelity, ChiMatrix};

/// Number of physical qubits in the code.
pub const NUM_QUBITS: usize = 5;

/// Dimension of the five-qubit Hilbert space.
pub const DIM: usize = 32;

/// Default tolerance for exactness checks. The space is 32-dimensional, so
/// double precision leaves plenty of headroom; routines that need a looser
/// or tighter bound take an explicit tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;

/// A physical qubit index, 1-based. Qubit 1 is the register qubit and the
/// most significant bit of a basis label `b1 b2 b3 b4 b5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Qubit(u8);

impl Qubit {
    /// All five qubits in order.
    pub const ALL: [Qubit; 5] = [Qubit(1), Qubit(2), Qubit(3), Qubit(4), Qubit(5)];

    /// Construct a qubit index, rejecting anything outside `1..=5`.
    pub fn new(index: u8) -> Result<Self> {
        if (1..=NUM_QUBITS as u8).contains(&index) {
            Ok(Qubit(index))
        } else {
            Err(Error::QubitOutOfRange(index))
        }
    }

    /// The 1-based index.
    pub fn index(self) -> u8 {
        self.0
    }
}

impl core::fmt::Display for Qubit {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}
