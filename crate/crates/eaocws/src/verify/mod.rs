//! Two independent verification routes for an assembled code.
//!
//! The symplectic route works in the GF(2) picture: it reduces each channel
//! error to its effective word and checks the collision and commutation
//! conditions pair by pair. The dense route builds the actual basis states
//! as complex amplitude vectors and checks the operator-algebra block
//! conditions numerically. The two routes share no code beyond the Pauli
//! type, which is the point: agreement between them is evidence, not
//! tautology.

pub mod dense;
pub mod symplectic;

use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
}

/// The first concrete condition violation a verifier met.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A channel error's effective word equals the difference of two
    /// codewords, so the error maps one codeword state onto another.
    Collision {
        error: String,
        word: String,
        codewords: (usize, usize),
    },
    /// A channel error is gauge-equivalent to the identity word but
    /// anticommutes with a codeword-difference operator, so it imprints a
    /// codeword-dependent phase.
    Degeneracy {
        error: String,
        codewords: (usize, usize),
    },
    /// A numeric block condition failed: either an off-diagonal logical
    /// block of ⟨basis| E_a E_b |basis⟩ is nonzero, or the diagonal gauge
    /// blocks depend on the logical index.
    Dense {
        left_error: String,
        right_error: String,
        residual: f64,
    },
}

/// Record of one verification pass, embeddable in a certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyRun {
    pub method: String,
    pub claimed_distance: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    pub checked_errors: usize,
    pub elapsed_ms: u64,
    pub timestamp: u64,
}

pub(crate) fn unix_timestamp() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

/// Side-by-side verdicts of the two routes over identical error sets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossReport {
    pub detection_symplectic: Verdict,
    pub detection_dense: Verdict,
    pub correction_symplectic: Verdict,
    pub correction_dense: Verdict,
    pub detection_errors: usize,
    pub correction_pairs: usize,
}

impl CrossReport {
    pub fn agree(&self) -> bool {
        self.detection_symplectic == self.detection_dense
            && self.correction_symplectic == self.correction_dense
    }
}
