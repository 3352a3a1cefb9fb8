use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;

use super::{CouplingDesign, PMatrix, PstError};
use crate::Tolerances;

/// E_k = c·Σ_m J_m P_m(x_k), the spectrum of the coupling Hamiltonian on the
/// Krylov subspace.
pub fn reduced_hamiltonian_eigenvalues(design: &CouplingDesign, pm: &PMatrix) -> Vec<f64> {
    let c = design.phase_factor.value();
    (0..pm.dim())
        .map(|k| c * design.j.iter().enumerate().map(|(m, j)| j * pm.get(m, k)).sum::<f64>())
        .collect()
}

/// f_i(t) = ⟨φ_i|e^{−iHt}|φ_0⟩ = Σ_k γ_k P_i(x_k) e^{−iE_k t}, i = 0..D.
pub fn amplitudes(design: &CouplingDesign, pm: &PMatrix, t: f64) -> Vec<Complex64> {
    let energies = reduced_hamiltonian_eigenvalues(design, pm);
    let phases: Vec<Complex64> = energies
        .iter()
        .zip(pm.weights())
        .map(|(e, w)| Complex64::from_polar(*w, -e * t))
        .collect();
    (0..pm.dim())
        .map(|i| (0..pm.dim()).map(|k| phases[k] * pm.get(i, k)).sum())
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct TransferReport {
    pub t0: f64,
    pub fidelity_at_t0: f64,
    pub phase_at_t0: f64,
    pub max_leakage: f64,
    /// max_t |Σ_i |f_i(t)|² − 1|.
    pub unitarity_error: f64,
    pub perfect: bool,
    #[serde(skip)]
    pub times: Vec<f64>,
    /// |f_i(t)| per sample.
    #[serde(skip)]
    pub curve: Vec<Vec<f64>>,
    /// f_D(t) per sample.
    #[serde(skip)]
    pub target: Vec<Complex64>,
}

/// Evaluates the reduced dynamics on `times`, which must contain t_0.
/// Transfer is perfect iff |f_D(t_0)| ≥ 1 − tol and every other |f_i(t_0)| ≤ tol.
pub fn evolve(
    design: &CouplingDesign,
    pm: &PMatrix,
    times: &[f64],
    tol: &Tolerances,
) -> Result<TransferReport, PstError> {
    let t0 = design.t0;
    let at = times
        .iter()
        .position(|&t| (t - t0).abs() <= 1e-12 * t0.abs().max(1.0))
        .ok_or(PstError::TimeNotInGrid(t0))?;
    let d = pm.diameter();
    let mut curve = Vec::with_capacity(times.len());
    let mut target = Vec::with_capacity(times.len());
    let mut unitarity_error = 0.0f64;
    for &t in times {
        let f = amplitudes(design, pm, t);
        let norm: f64 = f.iter().map(|z| z.norm_sqr()).sum();
        unitarity_error = unitarity_error.max((norm - 1.0).abs());
        curve.push(f.iter().map(|z| z.norm()).collect::<Vec<_>>());
        target.push(f[d]);
    }
    let at_t0 = amplitudes(design, pm, times[at]);
    let fidelity_at_t0 = at_t0[d].norm();
    let max_leakage = at_t0[..d].iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(TransferReport {
        t0,
        fidelity_at_t0,
        phase_at_t0: at_t0[d].arg(),
        max_leakage,
        unitarity_error,
        perfect: fidelity_at_t0 >= 1.0 - tol.transfer && max_leakage <= tol.transfer,
        times: times.to_vec(),
        curve,
        target,
    })
}

impl TransferReport {
    /// Columns `t, abs_f_0..abs_f_D, re_f_D, im_f_D`; LF line endings.
    pub fn to_csv(&self) -> String {
        let n = self.curve.first().map_or(0, Vec::len);
        let mut out = String::from("t");
        for i in 0..n {
            write!(out, ",abs_f_{i}").unwrap();
        }
        let d = n.saturating_sub(1);
        writeln!(out, ",re_f_{d},im_f_{d}").unwrap();
        for ((t, row), z) in self.times.iter().zip(&self.curve).zip(&self.target) {
            write!(out, "{t:.11e}").unwrap();
            for v in row {
                write!(out, ",{v:.11e}").unwrap();
            }
            writeln!(out, ",{:.11e},{:.11e}", z.re, z.im).unwrap();
        }
        out
    }
}

/// `samples` evenly spaced points on [t_min, t_max], with t_0 inserted if
/// it is not already one of them.
pub fn time_grid(t_min: f64, t_max: f64, samples: usize, t0: f64) -> Vec<f64> {
    let mut grid: Vec<f64> = if samples < 2 {
        vec![t_min]
    } else {
        let step = (t_max - t_min) / (samples - 1) as f64;
        (0..samples).map(|i| t_min + step * i as f64).collect()
    };
    if !grid.iter().any(|&t| (t - t0).abs() <= 1e-12 * t0.abs().max(1.0)) {
        grid.push(t0);
        grid.sort_by(f64::total_cmp);
    }
    grid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pst::{build_p_matrix, design_couplings, pst_feasibility, DesignParams};
    use crate::spectral::{build_polynomials, spectral_distribution, QdParams};

    fn c4_design() -> (CouplingDesign, PMatrix) {
        let qd = QdParams::from_integers(&[0, 0, 0], &[2, 2]).unwrap();
        let tol = Tolerances::default();
        let pm = build_p_matrix(&build_polynomials(&qd), &spectral_distribution(&qd).unwrap(), &tol)
            .unwrap();
        let f = pst_feasibility(&[1, 2, 1], &pm, &tol);
        let params = DesignParams { theta: 0.4, t0: 1.5, ..Default::default() };
        (design_couplings(&pm, &f, &params).unwrap(), pm)
    }

    #[test]
    fn starts_at_the_reference() {
        let (d, pm) = c4_design();
        let f = amplitudes(&d, &pm, 0.0);
        assert!((f[0] - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        assert!(f[1..].iter().all(|z| z.norm() < 1e-14));
    }

    #[test]
    fn arrives_with_the_designed_phase() {
        let (d, pm) = c4_design();
        let grid = time_grid(0.0, 3.0, 31, d.t0);
        let r = evolve(&d, &pm, &grid, &Tolerances::default()).unwrap();
        assert!(r.perfect);
        assert!((r.phase_at_t0 - 0.4).abs() < 1e-12);
        assert!(r.unitarity_error < 1e-13);
    }

    #[test]
    fn constant_couplings_give_flat_spectrum() {
        let (mut d, pm) = c4_design();
        d.j = vec![0.7, 0.0, 0.0];
        let e = reduced_hamiltonian_eigenvalues(&d, &pm);
        assert!(e.iter().all(|&x| (x - 1.4).abs() < 1e-15));
    }

    #[test]
    fn grid_must_contain_t0() {
        let (d, pm) = c4_design();
        let err = evolve(&d, &pm, &[0.0, 1.0], &Tolerances::default()).unwrap_err();
        assert_eq!(err, PstError::TimeNotInGrid(1.5));
        assert_eq!(time_grid(0.0, 2.0, 3, 1.0), vec![0.0, 1.0, 2.0]);
        assert_eq!(time_grid(0.0, 2.0, 3, 1.5), vec![0.0, 1.0, 1.5, 2.0]);
    }

    #[test]
    fn csv_layout() {
        let (d, pm) = c4_design();
        let r = evolve(&d, &pm, &[0.0, 1.5], &Tolerances::default()).unwrap();
        let csv = r.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,abs_f_0,abs_f_1,abs_f_2,re_f_2,im_f_2"));
        assert!(lines.next().unwrap().starts_with("0.00000000000e0,1.00000000000e0,"));
        assert_eq!(csv.lines().count(), 3);
        assert!(!csv.contains('\r'));
    }
}
