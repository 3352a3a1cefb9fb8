/// Numerical thresholds used across the pipeline.
///
/// Defaults are the contract values; the CLI may override the transfer family
/// (feasibility, round-trip, fidelity) from the environment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Minimum gap between adjacent quadrature nodes.
    pub node_separation: f64,
    /// Smallest admissible quadrature weight.
    pub weight_positivity: f64,
    /// Golub–Welsch weights versus residue weights.
    pub weight_cross_check: f64,
    /// Max-norm of P·W·Pᵗ − I accepted when building the P matrix.
    pub inverse_identity: f64,
    /// |P_D(x_k)| = 1 test.
    pub feasibility: f64,
    /// Phase round-trip of a coupling design.
    pub round_trip: f64,
    /// Fidelity deficit and leakage accepted as perfect transfer.
    pub transfer: f64,
    /// Minimum distance of a Stieltjes evaluation point from any node.
    pub pole: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            node_separation: 1e-8,
            weight_positivity: 1e-12,
            weight_cross_check: 1e-9,
            inverse_identity: 1e-8,
            feasibility: 1e-9,
            round_trip: 1e-9,
            transfer: 1e-9,
            pole: 1e-8,
        }
    }
}

impl Tolerances {
    /// Replaces the 1e-9 transfer family with `tol`.
    pub fn with_transfer_family(mut self, tol: f64) -> Self {
        self.feasibility = tol;
        self.round_trip = tol;
        self.transfer = tol;
        self
    }
}
