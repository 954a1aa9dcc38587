//! Unitary operators, single-qubit embedding, and Kraus channels.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::state::{DensityOperator, StateVector};
use crate::{Qubit, DEFAULT_TOL, DIM, NUM_QUBITS};

/// A validated unitary matrix (2×2, 4×4 or 32×32 in this crate).
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryOperator {
    mat: CMatrix,
}

impl UnitaryOperator {
    /// Validate unitarity within [`DEFAULT_TOL`].
    pub fn new(mat: CMatrix) -> Result<Self> {
        Self::new_with_tol(mat, DEFAULT_TOL)
    }

    pub fn new_with_tol(mat: CMatrix, tol: f64) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::DimensionMismatch {
                expected: mat.rows(),
                got: mat.cols(),
            });
        }
        let dev = mat.unitarity_deviation();
        if dev > tol {
            return Err(Error::NotUnitary { deviation: dev });
        }
        Ok(UnitaryOperator { mat })
    }

    pub fn identity(dim: usize) -> Self {
        UnitaryOperator {
            mat: CMatrix::identity(dim),
        }
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    /// Conjugate transpose; the inverse of a unitary.
    pub fn adjoint(&self) -> UnitaryOperator {
        UnitaryOperator {
            mat: self.mat.adjoint(),
        }
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &UnitaryOperator) -> Result<UnitaryOperator> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: rhs.dim(),
            });
        }
        Ok(UnitaryOperator {
            mat: self.mat.mul(&rhs.mat),
        })
    }

    /// `U|ψ⟩`; norm is preserved.
    pub fn apply_state(&self, s: &StateVector) -> Result<StateVector> {
        if self.dim() != s.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: s.dim(),
            });
        }
        Ok(StateVector::from_amps_unchecked(self.mat.mul_vec(s.amps())))
    }

    /// `U ρ U†`; trace is preserved and the physical/deviation flag carries over.
    pub fn apply_density(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        if self.dim() != rho.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: rho.dim(),
            });
        }
        let mat = self.mat.mul(rho.mat()).mul(&self.mat.adjoint());
        Ok(DensityOperator::with_flag_unchecked(mat, rho.is_physical()))
    }
}

/// Embed a 2×2 matrix on the given qubit of the five-qubit space:
/// `I ⊗ … ⊗ op ⊗ … ⊗ I` under the qubit-1-most-significant convention.
/// No unitarity is required; Kraus operators embed through here too.
pub fn embed_matrix(op: &CMatrix, qubit: Qubit) -> Result<CMatrix> {
    if op.rows() != 2 || op.cols() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: op.rows().max(op.cols()),
        });
    }
    let q = qubit.index() as usize;
    let left = CMatrix::identity(1 << (q - 1));
    let right = CMatrix::identity(1 << (NUM_QUBITS - q));
    Ok(left.kron(op).kron(&right))
}

/// Embed a single-qubit unitary on the given qubit, yielding a 32×32 unitary.
pub fn embed(op: &CMatrix, qubit: Qubit) -> Result<UnitaryOperator> {
    UnitaryOperator::new(embed_matrix(op, qubit)?)
}

/// A trace-preserving channel given by its Kraus operators.
#[derive(Clone, Debug)]
pub struct KrausChannel {
    ops: Vec<CMatrix>,
}

impl KrausChannel {
    /// Validate completeness `Σ K† K = I` within [`DEFAULT_TOL`].
    pub fn new(ops: Vec<CMatrix>) -> Result<Self> {
        let dim = match ops.first() {
            Some(k) => k.rows(),
            None => {
                return Err(Error::DimensionMismatch {
                    expected: 1,
                    got: 0,
                })
            }
        };
        let mut sum = CMatrix::zeros(dim, dim);
        for k in &ops {
            if !k.is_square() || k.rows() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: k.rows(),
                });
            }
            sum = sum.add(&k.adjoint().mul(k));
        }
        let dev = sum.max_abs_diff(&CMatrix::identity(dim));
        if dev > DEFAULT_TOL {
            return Err(Error::NotTracePreserving { deviation: dev });
        }
        Ok(KrausChannel { ops })
    }

    /// The do-nothing channel.
    pub fn identity(dim: usize) -> Self {
        KrausChannel {
            ops: alloc::vec![CMatrix::identity(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.ops[0].rows()
    }

    pub fn ops(&self) -> &[CMatrix] {
        &self.ops
    }

    /// `Σ K ρ K†` on a raw matrix; linear, so deviation operators are fine.
    pub fn apply_mat(&self, rho: &CMatrix) -> Result<CMatrix> {
        if rho.rows() != self.dim() || rho.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: rho.rows(),
            });
        }
        let mut out = CMatrix::zeros(self.dim(), self.dim());
        for k in &self.ops {
            out = out.add(&k.mul(rho).mul(&k.adjoint()));
        }
        Ok(out)
    }

    /// Apply the channel; trace is preserved for physical states and the
    /// extension to deviation operators is by linearity.
    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        let mat = self.apply_mat(rho.mat())?;
        Ok(DensityOperator::with_flag_unchecked(mat, rho.is_physical()))
    }
}

/// A 32×32 Pauli unitary acting on one qubit.
pub fn embedded_pauli(p: crate::pauli::Pauli, qubit: Qubit) -> UnitaryOperator {
    embed(&p.matrix(), qubit).expect("Pauli matrices are 2x2 unitaries")
}

/// Identity on the full five-qubit space.
pub fn identity32() -> UnitaryOperator {
    UnitaryOperator::identity(DIM)
}
