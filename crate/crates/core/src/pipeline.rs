//! End-to-end plumbing from an input (graph, intersection array or bare QD
//! parameters) to the P matrix and feasibility verdict.

use thiserror::Error;

use crate::graph::{
    check_consistency, intersection_numbers, stratify, valencies_from_array, Graph, GraphError,
    InputDocument, IntersectionNumbers, PdrReport, PdrWitness, Stratification,
};
use crate::pst::{
    build_p_matrix, design_couplings, pst_feasibility, CouplingDesign, DesignParams, Feasibility,
    PMatrix, PstError,
};
use crate::spectral::{
    build_polynomials, qd_from_intersection, qd_from_stratification, spectral_distribution_with,
    OrthoPolySet, QdParams, SpectralDistribution, SpectralError, SpectralReport,
};
use crate::Tolerances;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not pseudo-distance-regular around the reference: {0:?}")]
    NotPseudoDistanceRegular(PdrWitness),
    #[error("intersection numbers violate the counting identities")]
    Inconsistent,
    #[error("QD parameters from intersection numbers ({numbers:?}) and from stratum counts ({strata:?}) disagree")]
    RouteMismatch { numbers: QdParams, strata: QdParams },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Pst(#[from] PstError),
}

#[derive(Debug, Clone)]
pub enum Source {
    Graph {
        graph: Graph,
        stratification: Stratification,
    },
    Array,
    Qd,
}

/// A network reduced to what the transfer problem needs: valencies and QD
/// parameters around a reference vertex.
#[derive(Debug, Clone)]
pub struct Network {
    name: String,
    source: Source,
    valencies: Vec<u64>,
    numbers: Option<IntersectionNumbers>,
    qd: QdParams,
}

impl Network {
    /// Stratifies `graph` around `reference`, extracts its intersection
    /// numbers and derives the QD parameters along two independent routes,
    /// which must agree.
    pub fn from_graph(graph: Graph, reference: usize) -> Result<Self, PipelineError> {
        let s = stratify(&graph, reference)?;
        let numbers = match intersection_numbers(&graph, &s) {
            PdrReport::PseudoDistanceRegular(n) => n,
            PdrReport::NotPseudoDistanceRegular(w) => {
                return Err(PipelineError::NotPseudoDistanceRegular(w))
            }
        };
        let valencies = s.valencies();
        if !check_consistency(&numbers, &valencies, Some(&s)) {
            return Err(PipelineError::Inconsistent);
        }
        let via_numbers = qd_from_intersection(&numbers)?;
        let via_strata = qd_from_stratification(&graph, &s)?;
        if via_numbers != via_strata {
            return Err(PipelineError::RouteMismatch {
                numbers: via_numbers,
                strata: via_strata,
            });
        }
        Ok(Self {
            name: graph.name().unwrap_or("graph").to_string(),
            source: Source::Graph {
                graph,
                stratification: s,
            },
            valencies,
            numbers: Some(numbers),
            qd: via_numbers,
        })
    }

    pub fn from_numbers(name: &str, numbers: IntersectionNumbers) -> Result<Self, PipelineError> {
        let valencies = valencies_from_array(&numbers)?;
        if !check_consistency(&numbers, &valencies, None) {
            return Err(PipelineError::Inconsistent);
        }
        let qd = qd_from_intersection(&numbers)?;
        Ok(Self {
            name: name.to_string(),
            source: Source::Array,
            valencies,
            numbers: Some(numbers),
            qd,
        })
    }

    pub fn from_qd(name: &str, qd: QdParams, valencies: Vec<u64>) -> Self {
        Self {
            name: name.to_string(),
            source: Source::Qd,
            valencies,
            numbers: None,
            qd,
        }
    }

    pub fn from_document(doc: InputDocument, reference: usize) -> Result<Self, PipelineError> {
        match doc {
            InputDocument::Graph(g) => Self::from_graph(g.into_graph()?, reference),
            InputDocument::Array(a) => {
                let name = a.name.clone().unwrap_or_else(|| "array".to_string());
                Self::from_numbers(&name, a.to_numbers()?)
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn graph(&self) -> Option<&Graph> {
        match &self.source {
            Source::Graph { graph, .. } => Some(graph),
            _ => None,
        }
    }

    pub fn stratification(&self) -> Option<&Stratification> {
        match &self.source {
            Source::Graph { stratification, .. } => Some(stratification),
            _ => None,
        }
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }

    pub fn numbers(&self) -> Option<&IntersectionNumbers> {
        self.numbers.as_ref()
    }

    pub fn qd(&self) -> &QdParams {
        &self.qd
    }

    pub fn diameter(&self) -> usize {
        self.qd.diameter()
    }

    pub fn analyze(&self, tol: &Tolerances) -> Result<Analysis, PipelineError> {
        let polys = build_polynomials(&self.qd);
        let dist = spectral_distribution_with(&self.qd, tol)?;
        let pm = build_p_matrix(&polys, &dist, tol)?;
        let feasibility = pst_feasibility(&self.valencies, &pm, tol);
        Ok(Analysis {
            qd: self.qd.clone(),
            polys,
            dist,
            pm,
            feasibility,
        })
    }
}

/// Spectral data and feasibility of one network, in descending node order.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub qd: QdParams,
    pub polys: OrthoPolySet,
    pub dist: SpectralDistribution,
    pub pm: PMatrix,
    pub feasibility: Feasibility,
}

impl Analysis {
    pub fn design(&self, params: &DesignParams) -> Result<CouplingDesign, PstError> {
        design_couplings(&self.pm, &self.feasibility, params)
    }

    pub fn report(&self) -> SpectralReport {
        SpectralReport::new(&self.qd, &self.polys, &self.dist)
    }
}
