//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes of construction and simulation routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand dimensions do not match.
    DimensionMismatch { expected: usize, got: usize },
    /// Qubit index outside `1..=5`.
    QubitOutOfRange(u8),
    /// State vector norm differs from 1 beyond tolerance.
    NotNormalized { norm: f64 },
    /// Matrix expected to be Hermitian is not.
    NotHermitian { deviation: f64 },
    /// Matrix expected to be unitary is not.
    NotUnitary { deviation: f64 },
    /// Physical density operator with trace away from 1.
    TraceNotOne { trace: f64 },
    /// Physical density operator with a negative eigenvalue.
    NotPositive { min_eigenvalue: f64 },
    /// Kraus operators do not sum to the identity.
    NotTracePreserving { deviation: f64 },
    /// Probability parameter outside `[0, 1]`.
    InvalidProbability(f64),
    /// Relaxation time must be strictly positive.
    NonpositiveT2(f64),
    /// Partial trace must keep at least one qubit.
    EmptyKeepSet,
    /// Encoder image vectors are not orthonormal; the error set does not
    /// satisfy the perfect-code condition under the requested frame.
    NonOrthonormalImages { deviation: f64 },
    /// Invalid encoder frame (duplicate entries, bad no-error row, ...).
    InvalidFrame(String),
    /// Decoding an injected error did not yield a register ⊗ syndrome
    /// product state with a Pauli acting on the register.
    NonProductDecoding { condition: String },
    /// Two error conditions decode to the same syndrome.
    SyndromeCollision { syndrome: u8 },
    /// The linear system of the process-matrix solve is singular.
    SingularSystem,
    /// Process fidelity is undefined for an all-zero matrix.
    ZeroMatrix,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::QubitOutOfRange(q) => write!(f, "qubit index {q} outside 1..=5"),
            Error::NotNormalized { norm } => write!(f, "state vector has norm {norm}, not 1"),
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (max deviation {deviation:.3e})")
            }
            Error::NotUnitary { deviation } => {
                write!(f, "matrix is not unitary (max deviation {deviation:.3e})")
            }
            Error::TraceNotOne { trace } => {
                write!(f, "density operator has trace {trace}, not 1")
            }
            Error::NotPositive { min_eigenvalue } => {
                write!(
                    f,
                    "density operator has negative eigenvalue {min_eigenvalue:.3e}"
                )
            }
            Error::NotTracePreserving { deviation } => {
                write!(
                    f,
                    "Kraus operators violate completeness (max deviation {deviation:.3e})"
                )
            }
            Error::InvalidProbability(p) => write!(f, "probability {p} outside [0, 1]"),
            Error::NonpositiveT2(t2) => write!(f, "T2* must be positive, got {t2}"),
            Error::EmptyKeepSet => write!(f, "partial trace must keep at least one qubit"),
            Error::NonOrthonormalImages { deviation } => write!(
                f,
                "encoder images are not orthonormal (max deviation {deviation:.3e}); \
                 the 32 error images must form an orthonormal basis"
            ),
            Error::InvalidFrame(msg) => write!(f, "invalid encoder frame: {msg}"),
            Error::NonProductDecoding { condition } => write!(
                f,
                "decoding condition {condition} did not produce a register ⊗ syndrome product state"
            ),
            Error::SyndromeCollision { syndrome } => {
                write!(f, "two error conditions share syndrome {syndrome:04b}")
            }
            Error::SingularSystem => write!(f, "singular linear system in χ reconstruction"),
            Error::ZeroMatrix => write!(f, "process fidelity undefined for a zero matrix"),
        }
    }
}

impl core::error::Error for Error {}
