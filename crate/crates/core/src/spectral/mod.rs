//! Szegő–Jacobi parameters, the attached orthogonal-polynomial families and
//! the discrete spectral distribution of the reference vertex.

mod distribution;
mod poly;
mod report;
mod tridiag;

pub use distribution::{
    residue_weights, spectral_distribution, spectral_distribution_with, stieltjes_eval,
    stieltjes_partial_fractions, NodeOrdering, SpectralDistribution,
};
pub use poly::{build_polynomials, OrthoPolySet, Poly};
pub use report::SpectralReport;
pub use tridiag::symmetric_tridiagonal_eigen;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{Degree, Graph, IntersectionNumbers, Stratification};

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("omega_{0} = {1} is not positive")]
    NonPositiveOmega(usize, String),
    #[error("expected {expected} alpha values for {omega} omega values, got {got}")]
    LengthMismatch {
        expected: usize,
        omega: usize,
        got: usize,
    },
    #[error("stratum {stratum} does not span a Krylov-invariant subspace: {detail}")]
    NotKrylovInvariant { stratum: usize, detail: String },
    #[error("nodes {0} and {1} are closer than the separation tolerance")]
    DegenerateNodes(f64, f64),
    #[error("weight {1} at node {0} is not positive")]
    NonPositiveWeight(f64, f64),
    #[error("Golub–Welsch and residue weights differ by {0:e}")]
    WeightMismatch(f64),
    #[error("evaluation point lies within {0:e} of node {1}")]
    PoleProximity(f64, f64),
    #[error("tridiagonal eigensolver did not converge")]
    NoConvergence,
}

/// Szegő–Jacobi sequences α_0..α_D and ω_1..ω_D, kept as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QdParams {
    alpha: Vec<Rational64>,
    omega: Vec<Rational64>,
}

impl QdParams {
    pub fn new(alpha: Vec<Rational64>, omega: Vec<Rational64>) -> Result<Self, SpectralError> {
        if alpha.len() != omega.len() + 1 {
            return Err(SpectralError::LengthMismatch {
                expected: omega.len() + 1,
                omega: omega.len(),
                got: alpha.len(),
            });
        }
        if let Some((l, w)) = omega.iter().enumerate().find(|(_, w)| **w <= Rational64::zero()) {
            return Err(SpectralError::NonPositiveOmega(l + 1, w.to_string()));
        }
        Ok(Self { alpha, omega })
    }

    pub fn from_integers(alpha: &[i64], omega: &[i64]) -> Result<Self, SpectralError> {
        Self::new(
            alpha.iter().map(|&x| x.into()).collect(),
            omega.iter().map(|&x| x.into()).collect(),
        )
    }

    pub fn diameter(&self) -> usize {
        self.omega.len()
    }

    pub fn alpha(&self) -> &[Rational64] {
        &self.alpha
    }

    /// ω_1..ω_D (index 0 holds ω_1).
    pub fn omega(&self) -> &[Rational64] {
        &self.omega
    }

    pub fn alpha_f64(&self) -> Vec<f64> {
        self.alpha.iter().map(ratio_to_f64).collect()
    }

    pub fn omega_f64(&self) -> Vec<f64> {
        self.omega.iter().map(ratio_to_f64).collect()
    }

    /// Integer copies of (α, ω) when every parameter is integral.
    pub fn integral(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let ints = |v: &[Rational64]| -> Option<Vec<i64>> {
            v.iter()
                .map(|r| r.is_integer().then(|| r.to_integer()))
                .collect()
        };
        Some((ints(&self.alpha)?, ints(&self.omega)?))
    }

    /// True when every α_l vanishes.
    pub fn is_bipartite_type(&self) -> bool {
        self.alpha.iter().all(Zero::is_zero)
    }
}

pub(crate) fn ratio_to_f64(r: &Rational64) -> f64 {
    r.to_f64().expect("finite rational")
}

/// QD parameters from intersection numbers.
///
/// Regular numbers use α_l = κ − b_l − c_l and ω_l = b_{l−1} c_l. For
/// degree-weighted numbers of a non-regular graph, α_l = a_l and
/// ω_l = b_{l−1} c_l; the degree weights cancel in both whenever the degree
/// is constant on each stratum.
pub fn qd_from_intersection(num: &IntersectionNumbers) -> Result<QdParams, SpectralError> {
    let d = num.diameter();
    let alpha = match num.degree() {
        Degree::Regular(k) => {
            let k = Rational64::from(*k as i64);
            (0..=d).map(|l| k - num.b(l) - num.c(l)).collect()
        }
        Degree::Irregular(_) => (0..=d).map(|l| num.a(l)).collect(),
    };
    let omega = (1..=d).map(|l| num.b(l - 1) * num.c(l)).collect();
    QdParams::new(alpha, omega)
}

/// QD parameters read straight off the stratification: α_l is the number of
/// same-stratum neighbours of any j ∈ Γ_l and ω_{l+1} = (κ_{l+1}/κ_l)·κ_−(j)²
/// with κ_−(j) the number of Γ_l-neighbours of j ∈ Γ_{l+1}.
///
/// Fails unless every vertex of a stratum sees the same number of neighbours
/// in the previous, same and next stratum, which is exactly when the
/// normalized stratum vectors span an A-invariant Krylov subspace.
pub fn qd_from_stratification(g: &Graph, s: &Stratification) -> Result<QdParams, SpectralError> {
    let d = s.diameter();
    let mut counts = Vec::with_capacity(d + 1);
    for (k, stratum) in s.strata().iter().enumerate() {
        let count = |v: usize| {
            let mut c = [0i64; 3];
            for &u in g.neighbors(v) {
                let lu = s.level_of(u);
                let slot = if lu + 1 == k {
                    0
                } else if lu == k {
                    1
                } else {
                    2
                };
                c[slot] += 1;
            }
            c
        };
        let first = count(stratum[0]);
        if let Some(&v) = stratum.iter().find(|&&v| count(v) != first) {
            return Err(SpectralError::NotKrylovInvariant {
                stratum: k,
                detail: format!(
                    "vertex {v} has (back, same, forward) counts {:?} but vertex {} has {:?}",
                    count(v),
                    stratum[0],
                    first
                ),
            });
        }
        counts.push(first);
    }
    let kappa = s.valencies();
    let alpha = counts.iter().map(|c| Rational64::from(c[1])).collect();
    let omega = (0..d)
        .map(|l| {
            let back = Rational64::from(counts[l + 1][0]);
            Rational64::new(kappa[l + 1] as i64, kappa[l] as i64) * back * back
        })
        .collect();
    QdParams::new(alpha, omega)
}
