use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use super::{Feasibility, PMatrix, PstError};

/// The constant c in the reduced eigenvalues E_k = c·Σ_m J_m P_m(x_k).
///
/// `Two` reproduces the phases e^{−2it_0ΣJ_mP_m(x_k)} of the transfer
/// system; `One` is H = Σ J_m P_m(A) taken at face value; `Half` is what the
/// literal many-body Hamiltonian reduces to on a one-particle subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PhaseFactor {
    Half,
    One,
    #[default]
    Two,
}

impl PhaseFactor {
    pub const ALL: [PhaseFactor; 3] = [PhaseFactor::Half, PhaseFactor::One, PhaseFactor::Two];

    pub fn value(self) -> f64 {
        match self {
            PhaseFactor::Half => 0.5,
            PhaseFactor::One => 1.0,
            PhaseFactor::Two => 2.0,
        }
    }

    pub fn from_value(c: f64) -> Result<Self, PstError> {
        Self::ALL
            .into_iter()
            .find(|p| p.value() == c)
            .ok_or(PstError::InvalidPhaseFactor(c))
    }
}

impl Serialize for PhaseFactor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.value())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DesignParams {
    pub theta: f64,
    pub t0: f64,
    /// One integer per node; `None` means all zero.
    pub branch_l: Option<Vec<i64>>,
    /// Replaces the sign rule for f(m) when given.
    pub override_f: Option<Vec<u8>>,
    pub phase_factor: PhaseFactor,
}

impl Default for DesignParams {
    fn default() -> Self {
        Self {
            theta: 0.0,
            t0: 1.0,
            branch_l: None,
            override_f: None,
            phase_factor: PhaseFactor::Two,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CouplingDesign {
    #[serde(rename = "J")]
    pub j: Vec<f64>,
    pub theta: f64,
    pub t0: f64,
    pub branch_l: Vec<i64>,
    #[serde(rename = "f")]
    pub branch_f: Vec<u8>,
    pub phase_factor: PhaseFactor,
}

/// J_k = −(1/(c·t_0)) Σ_m [θ + (2l_m + f(m))π] (W·Pᵗ)_{mk}, with f(m) = 0 iff
/// (W·Pᵗ)_{mD} ≥ 0. For c = 2 this is the classical 1/(2t_0) prefactor.
pub fn design_couplings(
    pm: &PMatrix,
    feasibility: &Feasibility,
    params: &DesignParams,
) -> Result<CouplingDesign, PstError> {
    if !feasibility.is_feasible() {
        return Err(PstError::Infeasible(feasibility.describe()));
    }
    if !(params.t0 > 0.0 && params.t0.is_finite()) {
        return Err(PstError::InvalidTime(params.t0));
    }
    let n = pm.dim();
    let d = pm.diameter();
    let branch_l = params.branch_l.clone().unwrap_or_else(|| vec![0; n]);
    if branch_l.len() != n {
        return Err(PstError::BranchLength {
            expected: n,
            got: branch_l.len(),
        });
    }
    let inv = pm.inverse();
    let branch_f = match &params.override_f {
        Some(f) if f.len() != n => {
            return Err(PstError::BranchLength {
                expected: n,
                got: f.len(),
            })
        }
        Some(f) if f.iter().any(|&v| v > 1) => return Err(PstError::InvalidSignOverride),
        Some(f) => f.clone(),
        None => inv.iter().map(|row| u8::from(row[d] < 0.0)).collect(),
    };
    let phases: Vec<f64> = (0..n)
        .map(|m| params.theta + (2 * branch_l[m] + i64::from(branch_f[m])) as f64 * PI)
        .collect();
    let scale = -1.0 / (params.phase_factor.value() * params.t0);
    let j = (0..n)
        .map(|k| scale * (0..n).map(|m| phases[m] * inv[m][k]).sum::<f64>())
        .collect();
    Ok(CouplingDesign {
        j,
        theta: params.theta,
        t0: params.t0,
        branch_l,
        branch_f,
        phase_factor: params.phase_factor,
    })
}

impl CouplingDesign {
    /// A design from couplings written as J_k = (a_k θ + b_k π)/t_0, with the
    /// branch integers read back from the phases they produce.
    pub fn from_printed(
        pm: &PMatrix,
        theta: f64,
        t0: f64,
        coeffs: &[(f64, f64)],
        phase_factor: PhaseFactor,
    ) -> Self {
        let j: Vec<f64> = coeffs.iter().map(|&(a, b)| (a * theta + b * PI) / t0).collect();
        let mut design = CouplingDesign {
            j,
            theta,
            t0,
            branch_l: Vec::new(),
            branch_f: Vec::new(),
            phase_factor,
        };
        for phase in design.node_phases(pm) {
            let n = ((phase - theta) / PI).round() as i64;
            let f = n.rem_euclid(2);
            design.branch_l.push((n - f) / 2);
            design.branch_f.push(f as u8);
        }
        design
    }

    pub fn diameter(&self) -> usize {
        self.j.len() - 1
    }

    /// −c·t_0·Σ_m J_m P_m(x_k) for each node, the argument of η_k.
    pub fn node_phases(&self, pm: &PMatrix) -> Vec<f64> {
        let c = self.phase_factor.value();
        (0..pm.dim())
            .map(|k| {
                let s: f64 = self.j.iter().enumerate().map(|(m, jm)| jm * pm.get(m, k)).sum();
                -c * self.t0 * s
            })
            .collect()
    }

    /// η_k = e^{−i c t_0 Σ_m J_m P_m(x_k)}.
    pub fn etas(&self, pm: &PMatrix) -> Vec<Complex64> {
        self.node_phases(pm)
            .into_iter()
            .map(|p| Complex64::from_polar(1.0, p))
            .collect()
    }

    /// The same transfer at time s·t_0: every J_k is divided by s.
    pub fn rescaled(&self, s: f64) -> Self {
        Self {
            j: self.j.iter().map(|j| j / s).collect(),
            t0: self.t0 * s,
            ..self.clone()
        }
    }
}

/// max_k |γ_k η_k − e^{iθ}(W·Pᵗ)_{kD}|.
pub fn round_trip_error(design: &CouplingDesign, pm: &PMatrix) -> f64 {
    let d = pm.diameter();
    let inv = pm.inverse();
    let target = Complex64::from_polar(1.0, design.theta);
    design
        .etas(pm)
        .iter()
        .enumerate()
        .map(|(k, eta)| (eta * pm.weights()[k] - target * inv[k][d]).norm())
        .fold(0.0, f64::max)
}

/// max_i |Σ_k P_i(x_k) η_k γ_k − δ_{iD} e^{iθ}|, the transfer system itself.
pub fn system_residual(design: &CouplingDesign, pm: &PMatrix) -> f64 {
    let d = pm.diameter();
    let etas = design.etas(pm);
    let target = Complex64::from_polar(1.0, design.theta);
    (0..=d)
        .map(|i| {
            let s: Complex64 = (0..=d)
                .map(|k| etas[k] * (pm.get(i, k) * pm.weights()[k]))
                .sum();
            let t = if i == d { target } else { Complex64::new(0.0, 0.0) };
            (s - t).norm()
        })
        .fold(0.0, f64::max)
}
