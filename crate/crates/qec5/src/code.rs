//! Codewords and the encoder/decoder of the five-qubit perfect code.
//!
//! The encoder is built constructively, column by column: for every error
//! condition `a` with error unitary `E_a`, the frame assigns a syndrome
//! `s_a` on qubits 2–5 and a register Pauli `P_a` on qubit 1, and the
//! encoder is defined by
//!
//! ```text
//!     U_en · (P_a|x⟩ ⊗ |s_a⟩) = E_a |x_L⟩        x ∈ {0, 1}
//! ```
//!
//! The no-error condition is pinned to `s = 0000`, `P = I`, which forces
//! `U_en(|x⟩ ⊗ |0000⟩) = |x_L⟩` and hence
//! `U_en(α|0⟩ + β|1⟩)|0000⟩ = α|0⟩_L + β|1⟩_L`. The construction is a valid
//! unitary precisely because the 32 image vectors `{E_a|x_L⟩}` are
//! orthonormal — the defining property of a perfect code — and that
//! orthonormality is checked at build time. Decoding is the adjoint.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::conditions::ErrorCondition;
use crate::error::{Error, Result};
use crate::linalg::{c64, CMatrix, C_ZERO};
use crate::operator::UnitaryOperator;
use crate::pauli::Pauli;
use crate::state::StateVector;
use crate::DIM;

/// Signed basis terms of the logical zero codeword, `amplitude = sign/√8`.
const ZERO_L_TERMS: [(usize, f64); 8] = [
    (0b00000, 1.0),
    (0b10111, -1.0),
    (0b01011, -1.0),
    (0b11100, 1.0),
    (0b10010, 1.0),
    (0b00101, 1.0),
    (0b11001, 1.0),
    (0b01110, 1.0),
];

/// Signed basis terms of the logical one codeword.
const ONE_L_TERMS: [(usize, f64); 8] = [
    (0b11111, 1.0),
    (0b01000, -1.0),
    (0b10100, 1.0),
    (0b00011, -1.0),
    (0b01101, 1.0),
    (0b11010, 1.0),
    (0b00110, -1.0),
    (0b10001, -1.0),
];

/// The two codewords spanning the logical subspace.
#[derive(Clone, Debug)]
pub struct CodewordPair {
    pub zero_l: StateVector,
    pub one_l: StateVector,
}

fn ket_from_terms(terms: &[(usize, f64)]) -> StateVector {
    let amp = 1.0 / 8f64.sqrt();
    let mut amps = vec![C_ZERO; DIM];
    for &(idx, sign) in terms {
        amps[idx] = c64(sign * amp, 0.0);
    }
    StateVector::from_amps_unchecked(amps)
}

/// The computational basis states of the logical qubit, with exact ±1/√8
/// amplitudes on eight kets each.
pub fn codewords() -> CodewordPair {
    CodewordPair {
        zero_l: ket_from_terms(&ZERO_L_TERMS),
        one_l: ket_from_terms(&ONE_L_TERMS),
    }
}

/// The signed ket terms of a codeword, for display purposes.
pub fn codeword_terms(one: bool) -> &'static [(usize, f64); 8] {
    if one {
        &ONE_L_TERMS
    } else {
        &ZERO_L_TERMS
    }
}

/// Assignment of a syndrome (4-bit label on qubits 2–5) and a register
/// Pauli frame to each of the 16 error conditions.
///
/// Any bijective syndrome assignment with the no-error condition pinned to
/// `(0000, I)` is a valid frame; the codeword columns of the encoder do not
/// depend on the choice, only the other 30 columns do. The default frame
/// parks each qubit-1 error on the register (so the controlled correction
/// step has real work to do) and numbers syndromes in canonical condition
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncoderFrame {
    syndrome: [u8; 16],
    register: [Pauli; 16],
}

impl EncoderFrame {
    /// Build a frame from explicit `(condition, syndrome, register Pauli)`
    /// rows; every condition must appear exactly once, syndromes must be a
    /// bijection onto 0..16, and the no-error row must be `(E, 0000, I)`.
    pub fn new(rows: &[(ErrorCondition, u8, Pauli)]) -> Result<Self> {
        if rows.len() != 16 {
            return Err(Error::InvalidFrame(format!(
                "expected 16 rows, got {}",
                rows.len()
            )));
        }
        let mut syndrome = [0u8; 16];
        let mut register = [Pauli::I; 16];
        let mut seen_cond = [false; 16];
        let mut seen_syn = [false; 16];
        for &(cond, s, p) in rows {
            let ci = cond.canonical_index();
            if seen_cond[ci] {
                return Err(Error::InvalidFrame(format!("duplicate condition {cond}")));
            }
            seen_cond[ci] = true;
            if s >= 16 {
                return Err(Error::InvalidFrame(format!("syndrome {s} out of range")));
            }
            if seen_syn[s as usize] {
                return Err(Error::SyndromeCollision { syndrome: s });
            }
            seen_syn[s as usize] = true;
            syndrome[ci] = s;
            register[ci] = p;
        }
        if syndrome[0] != 0 || register[0] != Pauli::I {
            return Err(Error::InvalidFrame(
                "the no-error condition must map to syndrome 0000 with register I".into(),
            ));
        }
        Ok(EncoderFrame { syndrome, register })
    }

    pub fn syndrome(&self, cond: ErrorCondition) -> u8 {
        self.syndrome[cond.canonical_index()]
    }

    pub fn register_pauli(&self, cond: ErrorCondition) -> Pauli {
        self.register[cond.canonical_index()]
    }
}

impl Default for EncoderFrame {
    fn default() -> Self {
        let mut syndrome = [0u8; 16];
        let mut register = [Pauli::I; 16];
        for cond in ErrorCondition::all() {
            let ci = cond.canonical_index();
            syndrome[ci] = ci as u8;
            register[ci] = match cond.target() {
                Some(q) if q.index() == 1 => cond.pauli(),
                _ => Pauli::I,
            };
        }
        EncoderFrame { syndrome, register }
    }
}

/// Build the 32×32 encoder for the given frame.
///
/// Fails with [`Error::NonOrthonormalImages`] if the 32 image vectors are
/// not orthonormal within 1e-9, which would falsify the perfect-code
/// condition.
pub fn build_encoder(frame: &EncoderFrame) -> Result<UnitaryOperator> {
    let cw = codewords();
    let mut u = CMatrix::zeros(DIM, DIM);
    for cond in ErrorCondition::all() {
        let err = cond.unitary();
        let s = frame.syndrome(cond) as usize;
        let p = frame.register_pauli(cond).matrix();
        for (x, logical) in [(0usize, &cw.zero_l), (1usize, &cw.one_l)] {
            let image = err.mat().mul_vec(logical.amps());
            // domain basis vector (P_a |x⟩) ⊗ |s_a⟩
            let mut basis: Vec<Complex64> = vec![C_ZERO; DIM];
            for b in 0..2 {
                basis[b * 16 + s] = p[(b, x)];
            }
            u = u.add(&CMatrix::outer(&image, &basis));
        }
    }
    // The domain basis {(P_a|x⟩) ⊗ |s_a⟩} is exactly orthonormal, so any
    // deviation of U†U from the identity is a deviation of the image Gram
    // matrix from orthonormality.
    let gram_dev = u.adjoint().mul(&u).max_abs_diff(&CMatrix::identity(DIM));
    if gram_dev > 1e-9 {
        return Err(Error::NonOrthonormalImages {
            deviation: gram_dev,
        });
    }
    UnitaryOperator::new_with_tol(u, 1e-9)
}

/// The decoder is the adjoint of the encoder.
pub fn build_decoder(encoder: &UnitaryOperator) -> UnitaryOperator {
    encoder.adjoint()
}
