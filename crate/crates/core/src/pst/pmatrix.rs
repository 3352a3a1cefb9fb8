use super::PstError;
use crate::spectral::{OrthoPolySet, SpectralDistribution};
use crate::Tolerances;

/// P[i][j] = P_i(x_j) together with W = diag(γ) and the quadrature inverse
/// P⁻¹ = W·Pᵗ.
#[derive(Debug, Clone, PartialEq)]
pub struct PMatrix {
    p: Vec<Vec<f64>>,
    weights: Vec<f64>,
    nodes: Vec<f64>,
}

pub fn build_p_matrix(
    polys: &OrthoPolySet,
    dist: &SpectralDistribution,
    tol: &Tolerances,
) -> Result<PMatrix, PstError> {
    let d = polys.diameter();
    if dist.len() != d + 1 {
        return Err(PstError::DimensionMismatch {
            polys: d,
            nodes: dist.len(),
        });
    }
    let columns: Vec<Vec<f64>> = dist.nodes().iter().map(|&x| polys.p_values(x)).collect();
    let p = (0..=d)
        .map(|i| columns.iter().map(|col| col[i]).collect())
        .collect();
    let pm = PMatrix {
        p,
        weights: dist.weights().to_vec(),
        nodes: dist.nodes().to_vec(),
    };
    let residual = pm.inverse_identity_residual();
    if residual > tol.inverse_identity {
        return Err(PstError::InverseIdentity(residual));
    }
    Ok(pm)
}

impl PMatrix {
    pub fn dim(&self) -> usize {
        self.p.len()
    }

    pub fn diameter(&self) -> usize {
        self.p.len() - 1
    }

    pub fn entries(&self) -> &[Vec<f64>] {
        &self.p
    }

    /// P_i(x_j).
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.p[i][j]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// W·Pᵗ, so entry (k, m) is γ_k P_m(x_k).
    pub fn inverse(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        (0..n)
            .map(|k| (0..n).map(|m| self.weights[k] * self.p[m][k]).collect())
            .collect()
    }

    /// max |(P·W·Pᵗ − I)_ij|.
    pub fn inverse_identity_residual(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let s: f64 = (0..n)
                    .map(|k| self.p[i][k] * self.weights[k] * self.p[j][k])
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - target).abs());
            }
        }
        worst
    }

    /// max |(P·(W·Pᵗ) − I)_ij|, the product taken literally.
    pub fn product_residual(&self) -> f64 {
        let inv = self.inverse();
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let s: f64 = (0..n).map(|k| self.p[i][k] * inv[k][j]).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - target).abs());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{build_polynomials, spectral_distribution, QdParams};

    fn pm(alpha: &[i64], omega: &[i64]) -> PMatrix {
        let qd = QdParams::from_integers(alpha, omega).unwrap();
        build_p_matrix(
            &build_polynomials(&qd),
            &spectral_distribution(&qd).unwrap(),
            &Tolerances::default(),
        )
        .unwrap()
    }

    #[test]
    fn k2_is_a_hadamard_matrix() {
        let m = pm(&[0, 0], &[1]);
        let close = |a: &[Vec<f64>], b: &[[f64; 2]; 2]| {
            a.iter().zip(b).all(|(r, s)| r.iter().zip(s).all(|(x, y)| (x - y).abs() < 1e-15))
        };
        assert!(close(m.entries(), &[[1.0, 1.0], [1.0, -1.0]]));
        assert!(close(&m.inverse(), &[[0.5, 0.5], [0.5, -0.5]]));
        assert!(m.product_residual() < 1e-15);
    }

    #[test]
    fn c4_last_column_of_inverse() {
        let m = pm(&[0, 0, 0], &[2, 2]);
        let inv = m.inverse();
        for (k, e) in [0.25, -0.5, 0.25].into_iter().enumerate() {
            assert!((inv[k][2] - e).abs() < 1e-14);
        }
        assert!(m.entries()[0].iter().all(|&v| v == 1.0));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = QdParams::from_integers(&[0, 0], &[1]).unwrap();
        let b = QdParams::from_integers(&[0, 0, 0], &[2, 2]).unwrap();
        let err = build_p_matrix(
            &build_polynomials(&a),
            &spectral_distribution(&b).unwrap(),
            &Tolerances::default(),
        )
        .unwrap_err();
        assert_eq!(err, PstError::DimensionMismatch { polys: 1, nodes: 3 });
    }
}
