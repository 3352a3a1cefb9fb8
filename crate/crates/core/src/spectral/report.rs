use serde::Serialize;

use super::{OrthoPolySet, QdParams, SpectralDistribution};

/// Serializable summary of the spectral stage.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    pub alpha: Vec<f64>,
    pub omega: Vec<f64>,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<f64>>,
    #[serde(rename = "P")]
    pub p: Vec<Vec<f64>>,
}

impl SpectralReport {
    pub fn new(qd: &QdParams, polys: &OrthoPolySet, dist: &SpectralDistribution) -> Self {
        Self {
            alpha: qd.alpha_f64(),
            omega: qd.omega_f64(),
            nodes: dist.nodes().to_vec(),
            weights: dist.weights().to_vec(),
            q: polys.q().iter().map(|p| p.coeffs().to_vec()).collect(),
            p: polys.p().iter().map(|p| p.coeffs().to_vec()).collect(),
        }
    }
}
