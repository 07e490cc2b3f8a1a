//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid layout: n={n}, c={c}, r={r} ({reason})")]
    InvalidLayout { n: usize, c: usize, r: usize, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("operator length mismatch: expected {expected} {side} qubits, got {got}")]
    LengthMismatch { side: &'static str, expected: usize, got: usize },

    #[error("operator must be supported on Alice qubits only, found {0} support on Bob")]
    BobSupport(String),

    #[error("region {0} requires a layout")]
    RegionNeedsLayout(&'static str),

    #[error("codeword list is empty")]
    EmptyCodewords,

    #[error("codeword {0} is not canonical: gauge coordinates must be zero")]
    NonCanonicalCodeword(String),

    #[error("duplicate codeword {0}")]
    DuplicateCodeword(String),

    #[error("codeword list must start with the zero word")]
    MissingZeroCodeword,

    #[error("ancilla pattern collision: {0}")]
    PatternCollision(String),

    #[error("candidate space needs {bits} bits, above the cap of {cap}")]
    SearchTooLarge { bits: usize, cap: usize },

    #[error("requested error weight {weight} exceeds register size {n}")]
    WeightTooLarge { weight: usize, n: usize },

    #[error("dense register of {qubits} qubits exceeds the cap of {cap} (set {env} to raise it)")]
    DenseTooLarge { qubits: usize, cap: usize, env: &'static str },

    #[error("projector chain annihilated the state at generator {0}; generator set is inconsistent")]
    ProjectorAnnihilated(String),

    #[error("dense state invariant violated: {0}")]
    DenseInvariant(String),

    #[error("dense basis is not orthonormal (max Gram deviation {0:.3e}); codeword set is inconsistent")]
    NonOrthonormalBasis(f64),

    #[error("exhaustive solver limited to {limit} vertices, instance has {got}")]
    ExhaustiveTooLarge { limit: usize, got: usize },

    #[error("certificate error: {0}")]
    Certificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
