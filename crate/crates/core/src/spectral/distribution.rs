use num_complex::Complex64;

use super::{build_polynomials, symmetric_tridiagonal_eigen, OrthoPolySet, QdParams, SpectralError};
use crate::Tolerances;

/// How the nodes of a [`SpectralDistribution`] are ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeOrdering {
    Descending,
    /// `perm[i]` is the descending-order index of the i-th stored node.
    Permuted(Vec<usize>),
}

/// Discrete measure Σ_l γ_l δ(x − x_l) attached to the reference vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDistribution {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    ordering: NodeOrdering,
}

impl SpectralDistribution {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn ordering(&self) -> &NodeOrdering {
        &self.ordering
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Reorders a descending distribution; `perm[i]` names the descending
    /// index that becomes position i.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(self.ordering, NodeOrdering::Descending);
        assert_eq!(perm.len(), self.len());
        Self {
            nodes: perm.iter().map(|&j| self.nodes[j]).collect(),
            weights: perm.iter().map(|&j| self.weights[j]).collect(),
            ordering: NodeOrdering::Permuted(perm.to_vec()),
        }
    }

    /// ∫ x^m dμ.
    pub fn moment(&self, m: u32) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * x.powi(m as i32))
            .sum()
    }
}

pub fn spectral_distribution(qd: &QdParams) -> Result<SpectralDistribution, SpectralError> {
    spectral_distribution_with(qd, &Tolerances::default())
}

/// Nodes and weights from the Jacobi matrix (diagonal α, off-diagonal √ω):
/// nodes are its eigenvalues and weights the squared first components of
/// its normalized eigenvectors. The weights are cross-checked against the
/// residues Q^(1)_D(x_l)/Q′_{D+1}(x_l).
pub fn spectral_distribution_with(
    qd: &QdParams,
    tol: &Tolerances,
) -> Result<SpectralDistribution, SpectralError> {
    let diag = qd.alpha_f64();
    let off: Vec<f64> = qd.omega_f64().iter().map(|w| w.sqrt()).collect();
    let (values, vectors) = symmetric_tridiagonal_eigen(&diag, &off)?;
    let mut pairs: Vec<(f64, f64)> = values
        .iter()
        .enumerate()
        .map(|(k, &x)| (x, vectors[0][k] * vectors[0][k]))
        .collect();
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));

    for w in pairs.windows(2) {
        if w[0].0 - w[1].0 <= tol.node_separation {
            return Err(SpectralError::DegenerateNodes(w[0].0, w[1].0));
        }
    }
    if let Some(&(x, w)) = pairs.iter().find(|p| p.1 <= tol.weight_positivity) {
        return Err(SpectralError::NonPositiveWeight(x, w));
    }

    let dist = SpectralDistribution {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
        ordering: NodeOrdering::Descending,
    };
    let polys = build_polynomials(qd);
    let residues = residue_weights(&polys, &dist.nodes);
    let worst = residues
        .iter()
        .zip(&dist.weights)
        .map(|(r, w)| (r - w).abs())
        .fold(0.0, f64::max);
    if worst > tol.weight_cross_check {
        return Err(SpectralError::WeightMismatch(worst));
    }
    Ok(dist)
}

/// γ_l = Q^(1)_D(x_l) / Q′_{D+1}(x_l), the residues of Q^(1)_D / Q_{D+1}.
pub fn residue_weights(polys: &OrthoPolySet, nodes: &[f64]) -> Vec<f64> {
    let d = polys.diameter();
    let numerator = &polys.assoc()[d];
    let denominator = polys.q()[d + 1].derivative();
    nodes
        .iter()
        .map(|&x| numerator.eval(x) / denominator.eval(x))
        .collect()
}

/// G_μ(z) as the finite continued fraction
/// 1/(z − α_0 − ω_1/(z − α_1 − … − ω_D/(z − α_D))).
pub fn stieltjes_eval(qd: &QdParams, z: Complex64) -> Result<Complex64, SpectralError> {
    let tol = Tolerances::default();
    let dist = spectral_distribution_with(qd, &tol)?;
    if let Some(&x) = dist
        .nodes()
        .iter()
        .find(|&&x| (z - x).norm() <= tol.pole)
    {
        return Err(SpectralError::PoleProximity(tol.pole, x));
    }
    let alpha = qd.alpha_f64();
    let omega = qd.omega_f64();
    let d = qd.diameter();
    let mut tail = z - alpha[d];
    for l in (0..d).rev() {
        tail = z - alpha[l] - omega[l] / tail;
    }
    Ok(tail.inv())
}

/// Σ_l γ_l / (z − x_l).
pub fn stieltjes_partial_fractions(dist: &SpectralDistribution, z: Complex64) -> Complex64 {
    dist.nodes()
        .iter()
        .zip(dist.weights())
        .map(|(&x, &w)| w / (z - x))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{DMatrix, SymmetricEigen};

    fn qd(alpha: &[i64], omega: &[i64]) -> QdParams {
        QdParams::from_integers(alpha, omega).unwrap()
    }

    /// Brute-force dense diagonalization of the Jacobi matrix.
    fn dense_oracle(qd: &QdParams) -> Vec<(f64, f64)> {
        let a = qd.alpha_f64();
        let w = qd.omega_f64();
        let n = a.len();
        let m = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                a[i]
            } else if i + 1 == j {
                w[i].sqrt()
            } else if j + 1 == i {
                w[j].sqrt()
            } else {
                0.0
            }
        });
        let eig = SymmetricEigen::new(m);
        let mut out: Vec<(f64, f64)> = (0..n)
            .map(|k| (eig.eigenvalues[k], eig.eigenvectors[(0, k)].powi(2)))
            .collect();
        out.sort_by(|x, y| y.0.total_cmp(&x.0));
        out
    }

    #[test]
    fn c4_by_hand_and_oracle() {
        let c4 = qd(&[0, 0, 0], &[2, 2]);
        let dist = spectral_distribution(&c4).unwrap();
        // Eigenvectors of [[0,√2,0],[√2,0,√2],[0,√2,0]]: (1,√2,1)/2, (1,0,−1)/√2, (1,−√2,1)/2.
        let expected = [(2.0, 0.25), (0.0, 0.5), (-2.0, 0.25)];
        for ((x, w), (ex, ew)) in dist.nodes().iter().zip(dist.weights()).zip(expected) {
            assert!((x - ex).abs() < 1e-14);
            assert!((w - ew).abs() < 1e-14);
        }
        for ((x, w), (ox, ow)) in dist.nodes().iter().zip(dist.weights()).zip(dense_oracle(&c4)) {
            assert!((x - ox).abs() < 1e-12 && (w - ow).abs() < 1e-12);
        }
    }

    #[test]
    fn glued_tree_g2() {
        let dist = spectral_distribution(&qd(&[0; 5], &[2; 4])).unwrap();
        let s6 = 6f64.sqrt();
        let s2 = 2f64.sqrt();
        let nodes = [s6, s2, 0.0, -s2, -s6];
        let weights = [1.0 / 12.0, 0.25, 1.0 / 3.0, 0.25, 1.0 / 12.0];
        for l in 0..5 {
            assert!((dist.nodes()[l] - nodes[l]).abs() < 1e-12);
            assert!((dist.weights()[l] - weights[l]).abs() < 1e-12);
        }
    }

    #[test]
    fn icosahedron_in_printed_order() {
        let dist = spectral_distribution(&qd(&[0, 2, 2, 0], &[5, 4, 5])).unwrap();
        // Descending is (5, √5, −1, −√5); printed order is (−1, 5, √5, −√5).
        let printed = dist.permuted(&[2, 0, 1, 3]);
        let s5 = 5f64.sqrt();
        for (x, e) in printed.nodes().iter().zip([-1.0, 5.0, s5, -s5]) {
            assert!((x - e).abs() < 1e-12);
        }
        for (w, e) in printed.weights().iter().zip([5.0 / 12.0, 1.0 / 12.0, 0.25, 0.25]) {
            assert!((w - e).abs() < 1e-12);
        }
        assert_eq!(printed.ordering(), &NodeOrdering::Permuted(vec![2, 0, 1, 3]));
    }

    #[test]
    fn stieltjes_two_point_measure() {
        let k2 = qd(&[0, 0], &[1]);
        let g = stieltjes_eval(&k2, Complex64::new(2.0, 0.0)).unwrap();
        assert!((g - Complex64::new(2.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn stieltjes_modified_glued_tree_closed_form() {
        let m = qd(&[0, 0, 0, 1, 0], &[3, 2, 2, 3]);
        let g = stieltjes_eval(&m, Complex64::new(4.0, 0.0)).unwrap();
        assert!((g.re - 94.0 / 292.0).abs() < 1e-14 && g.im.abs() < 1e-15);
    }

    #[test]
    fn stieltjes_rejects_node() {
        let k2 = qd(&[0, 0], &[1]);
        assert!(matches!(
            stieltjes_eval(&k2, Complex64::new(1.0, 0.0)),
            Err(SpectralError::PoleProximity(..))
        ));
    }

    #[test]
    fn moments_of_c4() {
        let dist = spectral_distribution(&qd(&[0, 0, 0], &[2, 2])).unwrap();
        // Closed walks of length 0, 2, 4 from a vertex of C_4: 1, 2, 8.
        assert!((dist.moment(0) - 1.0).abs() < 1e-14);
        assert!((dist.moment(2) - 2.0).abs() < 1e-13);
        assert!((dist.moment(4) - 8.0).abs() < 1e-12);
    }
}
