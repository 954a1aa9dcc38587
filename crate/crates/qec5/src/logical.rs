//! The three encoded gate operations: identity, NOT and Hadamard.
//!
//! The NOT is transversal: a π rotation about y on every physical qubit
//! maps one codeword to the other. We fix the global phase so that the
//! logical block is exactly Pauli Y, i.e. `N_L = Y⊗Y⊗Y⊗Y⊗Y`, which equals
//! the product of rotations `Ry(π)^⊗5` times the phase `i`. With that
//! convention `⟨1_L|N_L|0_L⟩ = i` and `⟨0_L|N_L|1_L⟩ = −i`.
//!
//! The Hadamard is not transversal in this code; it is realized directly as
//! a π rotation about the (1,0,1) axis of the logical subspace and the
//! identity on the 30-dimensional complement.

#[allow(unused_imports)]
use num_traits::Float;

use crate::code::codewords;
use crate::linalg::{c64, CMatrix};
use crate::operator::UnitaryOperator;
use crate::pauli::Pauli;
use crate::DIM;

/// Encoded identity: the full 32×32 identity.
pub fn logical_identity() -> UnitaryOperator {
    UnitaryOperator::identity(DIM)
}

/// Encoded NOT, `Y^⊗5`.
pub fn logical_not() -> UnitaryOperator {
    let y = Pauli::Y.matrix();
    let mut m = y.clone();
    for _ in 1..5 {
        m = m.kron(&y);
    }
    UnitaryOperator::new(m).expect("tensor power of a unitary is unitary")
}

/// Encoded Hadamard: Hadamard on span{|0_L⟩, |1_L⟩}, identity elsewhere.
pub fn logical_hadamard() -> UnitaryOperator {
    let cw = codewords();
    let p00 = CMatrix::outer(cw.zero_l.amps(), cw.zero_l.amps());
    let p01 = CMatrix::outer(cw.zero_l.amps(), cw.one_l.amps());
    let p10 = CMatrix::outer(cw.one_l.amps(), cw.zero_l.amps());
    let p11 = CMatrix::outer(cw.one_l.amps(), cw.one_l.amps());
    let h = 1.0 / 2f64.sqrt();
    let block = p00
        .scale(c64(h, 0.0))
        .add(&p01.scale(c64(h, 0.0)))
        .add(&p10.scale(c64(h, 0.0)))
        .add(&p11.scale(c64(-h, 0.0)));
    let complement = CMatrix::identity(DIM).sub(&p00).sub(&p11);
    UnitaryOperator::new(block.add(&complement)).expect("H_L is unitary by construction")
}

/// The single-qubit Hadamard matrix.
pub fn hadamard2() -> CMatrix {
    let h = 1.0 / 2f64.sqrt();
    CMatrix::from_rows(&[&[c64(h, 0.0), c64(h, 0.0)], &[c64(h, 0.0), c64(-h, 0.0)]])
}

/// One of the three encoded gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LogicalGate {
    Identity,
    Not,
    Hadamard,
}

impl LogicalGate {
    pub const ALL: [LogicalGate; 3] = [
        LogicalGate::Identity,
        LogicalGate::Not,
        LogicalGate::Hadamard,
    ];

    pub fn label(self) -> &'static str {
        match self {
            LogicalGate::Identity => "id",
            LogicalGate::Not => "not",
            LogicalGate::Hadamard => "had",
        }
    }

    pub fn from_label(s: &str) -> Option<LogicalGate> {
        match s {
            "id" => Some(LogicalGate::Identity),
            "not" => Some(LogicalGate::Not),
            "had" => Some(LogicalGate::Hadamard),
            _ => None,
        }
    }

    /// The 32×32 encoded gate unitary.
    pub fn encoded(self) -> UnitaryOperator {
        match self {
            LogicalGate::Identity => logical_identity(),
            LogicalGate::Not => logical_not(),
            LogicalGate::Hadamard => logical_hadamard(),
        }
    }

    /// The ideal single-qubit action the encoded pipeline should implement
    /// (I, Y, or H as a 2×2 matrix).
    pub fn ideal_action(self) -> CMatrix {
        match self {
            LogicalGate::Identity => CMatrix::identity(2),
            LogicalGate::Not => Pauli::Y.matrix(),
            LogicalGate::Hadamard => hadamard2(),
        }
    }
}

impl core::fmt::Display for LogicalGate {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

/// The 2×2 block of a 32×32 operator in the ordered logical basis
/// `(|0_L⟩, |1_L⟩)`: entry `[r][c] = ⟨r_L| G |c_L⟩`.
pub fn logical_block(gate: &UnitaryOperator) -> CMatrix {
    let cw = codewords();
    let basis = [&cw.zero_l, &cw.one_l];
    CMatrix::from_fn(2, 2, |r, c| {
        let col = gate.mat().mul_vec(basis[c].amps());
        crate::linalg::inner_vec(basis[r].amps(), &col)
    })
}
