//! Brute-force verification in the full d^N Hilbert space.
//!
//! Sites are tensor factors with site 0 the most significant: the basis
//! index of a configuration (ν_0, …, ν_{N−1}) is Σ_i ν_i d^(N−1−i), so a
//! single excitation ν at site i sits at index ν·d^(N−1−i).

mod experiment;
mod generators;
mod operators;

pub use experiment::{
    full_transfer_experiment, AgreementError, AmplitudeRow, ArrivalReport, ExperimentChecks,
    ExperimentReport,
};
pub use generators::{appendix_identity_check, appendix_identity_residual, su_generators, GeneratorSet};
pub use operators::{
    basis_index, embed_two_site, heisenberg_term, one_particle_restriction,
    one_particle_restriction_check, swap_operator, CorrectionTerm, RestrictionReport,
};

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

pub type DenseOperator = DMatrix<Complex64>;

/// Largest Hilbert-space dimension for which operators are built densely.
pub const OPERATOR_CAP: usize = 4096;
/// Largest dimension for which a full eigendecomposition is attempted.
pub const EXPERIMENT_CAP: usize = 1024;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("level count d = {0} is outside 2..=6")]
    LevelCount(usize),
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("sites {0} and {1} must be distinct and below {2}")]
    Sites(usize, usize, usize),
    #[error("excitation level {0} must lie in 1..{1}")]
    Level(usize, usize),
    #[error("the network has no explicit graph")]
    NoGraph,
    #[error("input amplitudes: expected {expected} values of unit norm")]
    Input { expected: usize },
    #[error("design has {design} couplings but the network has diameter {diameter}")]
    DesignMismatch { design: usize, diameter: usize },
}

/// d^N, or an error if it exceeds `cap`.
pub(crate) fn checked_dim(d: usize, n: usize, cap: usize) -> Result<usize, OracleError> {
    let dim = (0..n).fold(1usize, |acc, _| acc.saturating_mul(d));
    if dim > cap {
        return Err(OracleError::DimensionCap { dim, cap });
    }
    Ok(dim)
}
