//! Pure states and density operators.
//!
//! Basis labels follow the ket convention `|b1 b2 b3 b4 b5⟩` with qubit 1
//! the most significant bit, so a five-qubit codeword amplitude table can be
//! indexed directly by its binary label.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, C_ONE, C_ZERO};
use crate::{DEFAULT_TOL, NUM_QUBITS};

/// Pure state as a dense amplitude vector of power-of-two length.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Wrap an amplitude vector, requiring unit norm within [`DEFAULT_TOL`].
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        let norm = linalg::norm_vec(&amps);
        if (norm - 1.0).abs() > DEFAULT_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(StateVector { amps })
    }

    /// Computational basis state `|index⟩` of `num_qubits` qubits.
    pub fn basis(num_qubits: usize, index: usize) -> Self {
        let dim = 1 << num_qubits;
        assert!(index < dim, "basis index out of range");
        let mut amps = vec![C_ZERO; dim];
        amps[index] = C_ONE;
        StateVector { amps }
    }

    /// Single-qubit state `α|0⟩ + β|1⟩`; the amplitudes must be normalized.
    pub fn qubit(alpha: Complex64, beta: Complex64) -> Result<Self> {
        StateVector::new(vec![alpha, beta])
    }

    pub fn ket0() -> Self {
        StateVector::basis(1, 0)
    }

    pub fn ket1() -> Self {
        StateVector::basis(1, 1)
    }

    pub fn plus() -> Self {
        let h = 1.0 / 2f64.sqrt();
        StateVector {
            amps: vec![linalg::c64(h, 0.0), linalg::c64(h, 0.0)],
        }
    }

    pub fn minus() -> Self {
        let h = 1.0 / 2f64.sqrt();
        StateVector {
            amps: vec![linalg::c64(h, 0.0), linalg::c64(-h, 0.0)],
        }
    }

    pub fn plus_i() -> Self {
        let h = 1.0 / 2f64.sqrt();
        StateVector {
            amps: vec![linalg::c64(h, 0.0), linalg::c64(0.0, h)],
        }
    }

    pub fn minus_i() -> Self {
        let h = 1.0 / 2f64.sqrt();
        StateVector {
            amps: vec![linalg::c64(h, 0.0), linalg::c64(0.0, -h)],
        }
    }

    pub(crate) fn from_amps_unchecked(amps: Vec<Complex64>) -> Self {
        StateVector { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn num_qubits(&self) -> usize {
        debug_assert!(self.amps.len().is_power_of_two());
        self.amps.len().trailing_zeros() as usize
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        linalg::norm_vec(&self.amps)
    }

    /// Tensor product, `self`'s qubits most significant.
    pub fn kron(&self, other: &StateVector) -> StateVector {
        StateVector {
            amps: linalg::kron_vec(&self.amps, &other.amps),
        }
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        linalg::inner_vec(&self.amps, &other.amps)
    }

    /// Projector `|ψ⟩⟨ψ|` as a physical density operator.
    pub fn to_density(&self) -> DensityOperator {
        DensityOperator {
            mat: CMatrix::outer(&self.amps, &self.amps),
            physical: true,
        }
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        assert_eq!(self.dim(), other.dim());
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Density operator, either a physical state (Hermitian, unit trace,
/// positive semidefinite) or a trace-free "deviation operator" used as a
/// linear input to channels, as in ensemble tomography. Only Hermiticity is
/// enforced for deviation operators.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator {
    mat: CMatrix,
    physical: bool,
}

impl DensityOperator {
    /// Wrap a matrix as a physical state, validating Hermiticity, unit
    /// trace, and positivity (eigenvalues ≥ −1e-9).
    pub fn physical(mat: CMatrix) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::DimensionMismatch {
                expected: mat.rows(),
                got: mat.cols(),
            });
        }
        let herm = mat.hermiticity_deviation();
        if herm > DEFAULT_TOL {
            return Err(Error::NotHermitian { deviation: herm });
        }
        let trace = mat.trace();
        if (trace.re - 1.0).abs() > DEFAULT_TOL || trace.im.abs() > DEFAULT_TOL {
            return Err(Error::TraceNotOne { trace: trace.re });
        }
        let min_ev = linalg::min_hermitian_eigenvalue(&mat);
        if min_ev < -1e-9 {
            return Err(Error::NotPositive {
                min_eigenvalue: min_ev,
            });
        }
        Ok(DensityOperator {
            mat,
            physical: true,
        })
    }

    /// Wrap a matrix as a deviation operator (Hermitian, trace unconstrained).
    pub fn deviation(mat: CMatrix) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::DimensionMismatch {
                expected: mat.rows(),
                got: mat.cols(),
            });
        }
        let herm = mat.hermiticity_deviation();
        if herm > DEFAULT_TOL {
            return Err(Error::NotHermitian { deviation: herm });
        }
        Ok(DensityOperator {
            mat,
            physical: false,
        })
    }

    pub(crate) fn with_flag_unchecked(mat: CMatrix, physical: bool) -> Self {
        DensityOperator { mat, physical }
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn num_qubits(&self) -> usize {
        debug_assert!(self.dim().is_power_of_two());
        self.dim().trailing_zeros() as usize
    }

    pub fn is_physical(&self) -> bool {
        self.physical
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.trace()
    }

    /// Reduce to the given qubits (1-based, qubit 1 most significant),
    /// tracing out the rest. Trace is preserved.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityOperator> {
        let n = self.num_qubits();
        if !self.dim().is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                got: self.dim(),
            });
        }
        let reduced = partial_trace_mat(&self.mat, keep, n)?;
        Ok(DensityOperator {
            mat: reduced,
            physical: self.physical,
        })
    }

    /// State fidelity `⟨ψ|ρ|ψ⟩` against a pure target.
    pub fn overlap(&self, psi: &StateVector) -> f64 {
        assert_eq!(self.dim(), psi.dim());
        let rho_psi = self.mat.mul_vec(psi.amps());
        linalg::inner_vec(psi.amps(), &rho_psi).re
    }
}

/// Partial trace on a raw matrix over an `n`-qubit space; `keep` lists the
/// 1-based qubit indices to retain, qubit 1 being the most significant bit.
pub(crate) fn partial_trace_mat(mat: &CMatrix, keep: &[usize], n: usize) -> Result<CMatrix> {
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let mut kept: Vec<usize> = Vec::new();
    for &q in keep {
        if q < 1 || q > n {
            return Err(Error::QubitOutOfRange(q as u8));
        }
        if !kept.contains(&q) {
            kept.push(q);
        }
    }
    kept.sort_unstable();
    let traced: Vec<usize> = (1..=n).filter(|q| !kept.contains(q)).collect();

    // Bit position of qubit q within a full index (qubit 1 = MSB).
    let bit = |q: usize| n - q;

    let compose = |kept_idx: usize, traced_idx: usize| -> usize {
        let mut full = 0usize;
        for (pos, &q) in kept.iter().enumerate() {
            let b = (kept_idx >> (kept.len() - 1 - pos)) & 1;
            full |= b << bit(q);
        }
        for (pos, &q) in traced.iter().enumerate() {
            let b = (traced_idx >> (traced.len() - 1 - pos)) & 1;
            full |= b << bit(q);
        }
        full
    };

    let kd = 1usize << kept.len();
    let td = 1usize << traced.len();
    let mut out = CMatrix::zeros(kd, kd);
    for i in 0..kd {
        for j in 0..kd {
            let mut acc = C_ZERO;
            for t in 0..td {
                acc += mat[(compose(i, t), compose(j, t))];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// The 16×16 projector `|0000⟩⟨0000|` onto the reset syndrome register.
pub fn syndrome_ground_projector() -> CMatrix {
    let mut p = CMatrix::zeros(1 << (NUM_QUBITS - 1), 1 << (NUM_QUBITS - 1));
    p[(0, 0)] = C_ONE;
    p
}
