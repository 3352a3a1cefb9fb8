//! Perfect qudit state transfer over pseudo-distance-regular networks:
//! stratification, Szegő–Jacobi spectral data, coupling design and
//! dense verification of the engineered Hamiltonian.

pub mod catalog;
pub mod graph;
pub mod oracle;
pub mod pipeline;
pub mod pst;
pub mod spectral;
mod tolerance;

pub use tolerance::Tolerances;
