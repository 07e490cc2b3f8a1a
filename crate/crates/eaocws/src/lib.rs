//! Entanglement-assisted operator codeword-stabilized (EAOCWS) quantum codes:
//! construction from graphs and classical binary codes, clique search for
//! codeword sets, and independent symplectic / dense-matrix verification.

pub mod bits;
pub mod builder;
pub mod certificate;
pub mod error;
pub mod graph;
pub mod group;
pub mod induce;
pub mod layout;
pub mod pauli;
pub mod reference;
pub mod search;
pub mod verify;
pub mod word;

pub use bits::BitWord;
pub use builder::{AncillaClass, CodeParams, EaocwsCode};
pub use certificate::{Certificate, SearchMeta};
pub use error::{Error, Result};
pub use graph::Graph;
pub use group::GaugeGroup;
pub use induce::EffectiveErrors;
pub use layout::{CodeLayout, Region, Role};
pub use pauli::PauliOp;
pub use search::{Budget, SearchMode, SearchOutcome, SearchProblem};
pub use verify::dense::{cross_validate, dense_verify};
pub use verify::symplectic::symplectic_verify;
pub use verify::{CrossReport, Verdict, VerifyRun, Witness};
pub use word::BinaryWord;

/// Dense state with f64 amplitudes, the default verification lane.
pub type DenseState64 = verify::dense::DenseState<f64>;
/// Dense state with f32 amplitudes, for memory-constrained sweeps.
pub type DenseState32 = verify::dense::DenseState<f32>;
