//! Single-qubit Pauli operators.

use crate::linalg::{CMatrix, C_I, C_ONE, C_ZERO};

/// One of the four Pauli operators (including the identity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    /// The 2×2 matrix representation.
    pub fn matrix(self) -> CMatrix {
        match self {
            Pauli::I => CMatrix::identity(2),
            Pauli::X => CMatrix::from_rows(&[&[C_ZERO, C_ONE], &[C_ONE, C_ZERO]]),
            Pauli::Y => CMatrix::from_rows(&[&[C_ZERO, -C_I], &[C_I, C_ZERO]]),
            Pauli::Z => CMatrix::from_rows(&[&[C_ONE, C_ZERO], &[C_ZERO, -C_ONE]]),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Pauli::I => "I",
            Pauli::X => "X",
            Pauli::Y => "Y",
            Pauli::Z => "Z",
        }
    }

    pub fn from_label(s: &str) -> Option<Pauli> {
        match s {
            "I" => Some(Pauli::I),
            "X" => Some(Pauli::X),
            "Y" => Some(Pauli::Y),
            "Z" => Some(Pauli::Z),
            _ => None,
        }
    }

    /// Paulis are Hermitian, so each one is its own adjoint.
    pub fn adjoint(self) -> Pauli {
        self
    }
}

impl core::fmt::Display for Pauli {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}
