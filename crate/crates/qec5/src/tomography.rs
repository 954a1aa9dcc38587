//! Quantum process tomography of the effective single-qubit channel.
//!
//! A channel Λ is expanded over the fixed operator basis
//! `(e1, e2, e3, e4) = (E, X, −iY, Z)` as
//! `Λ(ρ) = Σ_{kl} χ_{kl} e_k ρ e_l†`, and the 4×4 χ matrix is recovered by
//! solving the 16-unknown linear system obtained from the responses
//! `Λ(e_m)` expanded in Pauli coefficients. The responses themselves come
//! from feeding the Hermitian operator inputs E, X, Y, Z through the
//! channel (operator-input tomography); a state-input variant using the
//! four pure states |0⟩, |1⟩, |+⟩, |+i⟩ is provided as a cross-validation
//! path. Simulated channels are exactly linear, so the raw inversion is
//! exact and no positivity projection is applied.

use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{c64, solve, CMatrix, C_I, C_ONE};
use crate::logical::LogicalGate;
use crate::pauli::Pauli;
use crate::state::{DensityOperator, StateVector};

/// Labels of the process basis, in order.
pub const BASIS_LABELS: [&str; 4] = ["E", "X", "-iY", "Z"];

/// The process basis `(E, X, −iY, Z)` as 2×2 matrices.
pub fn operator_basis() -> [CMatrix; 4] {
    [
        Pauli::I.matrix(),
        Pauli::X.matrix(),
        Pauli::Y.matrix().scale(-C_I),
        Pauli::Z.matrix(),
    ]
}

/// 4×4 process matrix in the `(E, X, −iY, Z)` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiMatrix {
    mat: CMatrix,
}

impl ChiMatrix {
    pub fn from_matrix(mat: CMatrix) -> Result<Self> {
        if mat.rows() != 4 || mat.cols() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                got: mat.rows().max(mat.cols()),
            });
        }
        Ok(ChiMatrix { mat })
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    /// Entry `χ_{kl}`, zero-indexed.
    pub fn get(&self, k: usize, l: usize) -> Complex64 {
        self.mat[(k, l)]
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.mat.is_hermitian(tol)
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.trace()
    }

    pub fn max_abs_diff(&self, other: &ChiMatrix) -> f64 {
        self.mat.max_abs_diff(&other.mat)
    }
}

/// Responses `Λ(e_m)` of a channel to the four basis operators.
#[derive(Clone, Debug)]
pub struct OperatorResponses {
    responses: [CMatrix; 4],
    identity_measured: bool,
}

impl OperatorResponses {
    /// The response to basis element `m` (0-indexed into `(E, X, −iY, Z)`).
    pub fn response(&self, m: usize) -> &CMatrix {
        &self.responses[m]
    }

    /// Whether the identity response was actually measured (as opposed to
    /// assumed to be E).
    pub fn identity_measured(&self) -> bool {
        self.identity_measured
    }

    /// Max-abs deviation of the measured identity response from E; `None`
    /// when the response was assumed. Quantifies how far the channel is
    /// from unital.
    pub fn identity_deviation(&self) -> Option<f64> {
        if self.identity_measured {
            Some(self.responses[0].max_abs_diff(&CMatrix::identity(2)))
        } else {
            None
        }
    }
}

/// Operator-input tomography: feed the Hermitian inputs through the channel
/// and assemble the basis responses (the −iY response follows by linearity).
/// With `include_identity` cleared, the identity response is assumed to be
/// E without running the channel.
pub fn measure_responses<F>(mut channel: F, include_identity: bool) -> Result<OperatorResponses>
where
    F: FnMut(&DensityOperator) -> Result<DensityOperator>,
{
    let mut run = |input: CMatrix| -> Result<CMatrix> {
        let out = channel(&DensityOperator::deviation(input)?)?;
        Ok(out.mat().clone())
    };
    let identity = if include_identity {
        run(Pauli::I.matrix())?
    } else {
        CMatrix::identity(2)
    };
    let x = run(Pauli::X.matrix())?;
    let y = run(Pauli::Y.matrix())?;
    let z = run(Pauli::Z.matrix())?;
    Ok(OperatorResponses {
        responses: [identity, x, y.scale(-C_I), z],
        identity_measured: include_identity,
    })
}

/// State-input tomography: run the four pure states |0⟩, |1⟩, |+⟩, |+i⟩
/// through the channel and recover the operator responses by linearity.
pub fn measure_responses_from_states<F>(mut channel: F) -> Result<OperatorResponses>
where
    F: FnMut(&DensityOperator) -> Result<DensityOperator>,
{
    let mut run = |psi: StateVector| -> Result<CMatrix> {
        let out = channel(&psi.to_density())?;
        Ok(out.mat().clone())
    };
    let r0 = run(StateVector::ket0())?;
    let r1 = run(StateVector::ket1())?;
    let rp = run(StateVector::plus())?;
    let ri = run(StateVector::plus_i())?;

    let identity = r0.add(&r1);
    let x = rp.scale(c64(2.0, 0.0)).sub(&identity);
    let y = ri.scale(c64(2.0, 0.0)).sub(&identity);
    let z = r0.sub(&r1);
    Ok(OperatorResponses {
        responses: [identity, x, y.scale(-C_I), z],
        identity_measured: true,
    })
}

/// Transfer matrix of the χ reconstruction: row `(m, n)` and column
/// `(k, l)` hold the Pauli-n coefficient of `e_k e_m e_l†`.
fn transfer_matrix() -> CMatrix {
    let basis = operator_basis();
    let paulis = [
        Pauli::I.matrix(),
        Pauli::X.matrix(),
        Pauli::Y.matrix(),
        Pauli::Z.matrix(),
    ];
    CMatrix::from_fn(16, 16, |row, col| {
        let (m, n) = (row / 4, row % 4);
        let (k, l) = (col / 4, col % 4);
        let prod = basis[k].mul(&basis[m]).mul(&basis[l].adjoint());
        paulis[n].hs_inner(&prod) / 2.0
    })
}

/// Solve for the χ matrix from measured basis responses.
pub fn chi_from_responses(responses: &OperatorResponses) -> Result<ChiMatrix> {
    let paulis = [
        Pauli::I.matrix(),
        Pauli::X.matrix(),
        Pauli::Y.matrix(),
        Pauli::Z.matrix(),
    ];
    let a = transfer_matrix();
    let mut b = Vec::with_capacity(16);
    for m in 0..4 {
        for p in &paulis {
            b.push(p.hs_inner(responses.response(m)) / 2.0);
        }
    }
    let x = solve(&a, &b)?;
    let mat = CMatrix::from_fn(4, 4, |k, l| x[k * 4 + l]);
    ChiMatrix::from_matrix(mat)
}

/// Closed-form ideal χ matrices of the three gates: `χ11 = 1` for the
/// identity, `χ33 = 1` for the NOT, and `χ22 = χ44 = χ24 = χ42 = 0.5` for
/// the Hadamard (1-indexed), everything else zero.
pub fn ideal_chi(gate: LogicalGate) -> ChiMatrix {
    let mut m = CMatrix::zeros(4, 4);
    match gate {
        LogicalGate::Identity => {
            m[(0, 0)] = C_ONE;
        }
        LogicalGate::Not => {
            m[(2, 2)] = C_ONE;
        }
        LogicalGate::Hadamard => {
            let h = c64(0.5, 0.0);
            m[(1, 1)] = h;
            m[(3, 3)] = h;
            m[(1, 3)] = h;
            m[(3, 1)] = h;
        }
    }
    ChiMatrix { mat: m }
}

/// Analytic rank-1 χ of a single-qubit unitary `V = Σ_k c_k e_k`:
/// `χ_{kl} = c_k conj(c_l)`.
pub fn chi_of_unitary(v: &CMatrix) -> Result<ChiMatrix> {
    if v.rows() != 2 || v.cols() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: v.rows().max(v.cols()),
        });
    }
    let basis = operator_basis();
    let coeffs: Vec<Complex64> = basis.iter().map(|e| e.hs_inner(v) / 2.0).collect();
    let mat = CMatrix::from_fn(4, 4, |k, l| coeffs[k] * coeffs[l].conj());
    Ok(ChiMatrix { mat })
}

/// Process fidelity between two χ matrices:
/// `|Tr(a b†)| / √(Tr(a a†) Tr(b b†))`. Symmetric, 1 for equal nonzero
/// arguments, and equal to `|Tr(V†W)|²/4` for unitary processes.
pub fn process_fidelity(a: &ChiMatrix, b: &ChiMatrix) -> Result<f64> {
    let aa = a.mat.hs_inner(&a.mat).re;
    let bb = b.mat.hs_inner(&b.mat).re;
    if aa <= 1e-30 || bb <= 1e-30 {
        return Err(Error::ZeroMatrix);
    }
    // Tr(a b†) = conj(Tr(b a†)) = conj(⟨a, b⟩_HS)
    let cross = b.mat.hs_inner(&a.mat).norm();
    Ok(cross / (aa * bb).sqrt())
}
