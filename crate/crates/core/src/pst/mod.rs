//! Coupling design for perfect transfer to the antipode and the reduced
//! (one-particle Krylov) dynamics that certifies it.

mod design;
mod evolve;
mod feasibility;
mod pmatrix;

pub use design::{
    design_couplings, round_trip_error, system_residual, CouplingDesign, DesignParams, PhaseFactor,
};
pub use evolve::{amplitudes, evolve, reduced_hamiltonian_eigenvalues, time_grid, TransferReport};
pub use feasibility::{pst_feasibility, Feasibility, Obstruction};
pub use pmatrix::{build_p_matrix, PMatrix};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PstError {
    #[error("P·W·Pᵗ deviates from the identity by {0:e}")]
    InverseIdentity(f64),
    #[error("polynomial set has diameter {polys} but the distribution has {nodes} nodes")]
    DimensionMismatch { polys: usize, nodes: usize },
    #[error("network is not feasible for perfect transfer: {0}")]
    Infeasible(String),
    #[error("expected {expected} branch integers, got {got}")]
    BranchLength { expected: usize, got: usize },
    #[error("sign override entries must be 0 or 1")]
    InvalidSignOverride,
    #[error("transfer time must be positive and finite, got {0}")]
    InvalidTime(f64),
    #[error("t0 = {0} is not a point of the time grid")]
    TimeNotInGrid(f64),
    #[error("phase factor must be one of 1/2, 1, 2; got {0}")]
    InvalidPhaseFactor(f64),
}
