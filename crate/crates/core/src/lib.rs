//! Exact verification of fusion-map identities for finite-dimensional
//! semibialgebras given by structure constants.

pub mod catalog;
pub mod cli;
pub mod fusion;
pub mod scalar;
pub mod structures;
pub mod tensor;

pub use scalar::{Field, Scalar};
pub use structures::{AxiomId, AxiomReport, CheckResult, Label, Structure, Verdict};
pub use tensor::LinMap;
