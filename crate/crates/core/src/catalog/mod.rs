//! Named example networks with their reference data.
//!
//! Node-indexed reference data (nodes, weights, P snapshots) is stored in
//! the order the values were originally tabulated; `printed_order[i]` gives
//! the descending-order index of the i-th tabulated node.

mod graphs;

pub use graphs::{
    complete, cycle, glued_trees, hypercube, icosahedron, modified_glued_trees_array, octahedron,
    simplex3, star, CatalogError,
};

use std::f64::consts::PI;

use crate::graph::{ArrayDocument, Graph, InputDocument, IntersectionNumbers};
use crate::pipeline::{Network, PipelineError};
use crate::spectral::QdParams;

#[derive(Debug, Clone)]
pub enum Construction {
    Graph(Graph),
    Array(IntersectionNumbers),
    /// QD parameters as tabulated, with the valencies they were quoted with.
    Qd { qd: QdParams, valencies: Vec<u64> },
}

/// Couplings written as J_k = (theta_k θ + pi_k π)/t_0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedCoupling {
    pub theta: f64,
    pub pi: f64,
}

const fn jc(theta: f64, pi: f64) -> PrintedCoupling {
    PrintedCoupling { theta, pi }
}

impl PrintedCoupling {
    pub fn value(&self, theta: f64, t0: f64) -> f64 {
        (self.theta * theta + self.pi * PI) / t0
    }

    pub fn pairs(set: &[PrintedCoupling]) -> Vec<(f64, f64)> {
        set.iter().map(|c| (c.theta, c.pi)).collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub alpha: Vec<i64>,
    pub omega: Vec<i64>,
    pub valencies: Vec<u64>,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub printed_order: Vec<usize>,
    /// Absolute tolerance of the tabulated nodes and weights.
    pub tolerance: f64,
    pub p_matrix: Option<Vec<Vec<f64>>>,
    pub inverse: Option<Vec<Vec<f64>>>,
    pub couplings: Option<Vec<PrintedCoupling>>,
    pub feasible: bool,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub construction: Construction,
    pub reference: usize,
    pub expected: Expected,
    pub notes: Vec<&'static str>,
}

impl CatalogEntry {
    pub fn network(&self) -> Result<Network, PipelineError> {
        match &self.construction {
            Construction::Graph(g) => Network::from_graph(g.clone(), self.reference),
            Construction::Array(num) => Network::from_numbers(self.name, num.clone()),
            Construction::Qd { qd, valencies } => {
                Ok(Network::from_qd(self.name, qd.clone(), valencies.clone()))
            }
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match &self.construction {
            Construction::Graph(g) => Some(g),
            _ => None,
        }
    }

    /// Graph entries export their edge list, the others their intersection
    /// array (for tabulated QD parameters, the array they were quoted for).
    pub fn document(&self) -> InputDocument {
        match &self.construction {
            Construction::Graph(g) => {
                let mut doc = g.to_document();
                doc.name = Some(self.name.to_string());
                InputDocument::Graph(doc)
            }
            Construction::Array(_) | Construction::Qd { .. } => {
                let num = match &self.construction {
                    Construction::Array(num) => num.clone(),
                    _ => modified_glued_trees_array(2).expect("n = 2 is valid"),
                };
                let ints = |v: &[num_rational::Rational64]| v.iter().map(|r| r.to_integer()).collect();
                InputDocument::Array(ArrayDocument {
                    name: Some(self.name.to_string()),
                    b: ints(num.b_array()),
                    c: ints(num.c_array()),
                    kappa: None,
                })
            }
        }
    }
}

pub fn names() -> Vec<&'static str> {
    entries().iter().map(|e| e.name).collect()
}

pub fn entry(name: &str) -> Result<CatalogEntry, CatalogError> {
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::Unknown(name.to_string()))
}

fn scaled(rows: &[&[f64]], s: f64) -> Vec<Vec<f64>> {
    rows.iter().map(|r| r.iter().map(|v| v * s).collect()).collect()
}

pub fn entries() -> Vec<CatalogEntry> {
    let s2 = 2f64.sqrt();
    let s3 = 3f64.sqrt();
    let s5 = 5f64.sqrt();
    let s6 = 6f64.sqrt();

    vec![
        CatalogEntry {
            name: "k2",
            description: "single edge",
            construction: Construction::Graph(complete(2)),
            reference: 0,
            expected: Expected {
                alpha: vec![0, 0],
                omega: vec![1],
                valencies: vec![1, 1],
                nodes: vec![1.0, -1.0],
                weights: vec![0.5, 0.5],
                printed_order: vec![0, 1],
                tolerance: 1e-12,
                p_matrix: Some(vec![vec![1.0, 1.0], vec![1.0, -1.0]]),
                inverse: Some(vec![vec![0.5, 0.5], vec![0.5, -0.5]]),
                couplings: None,
                feasible: true,
            },
            notes: vec!["two-point measure; P is the 2×2 Hadamard matrix"],
        },
        CatalogEntry {
            name: "c4",
            description: "4-cycle",
            construction: Construction::Graph(cycle(4)),
            reference: 0,
            expected: Expected {
                alpha: vec![0, 0, 0],
                omega: vec![2, 2],
                valencies: vec![1, 2, 1],
                nodes: vec![2.0, 0.0, -2.0],
                weights: vec![0.25, 0.5, 0.25],
                printed_order: vec![0, 1, 2],
                tolerance: 1e-12,
                p_matrix: None,
                inverse: None,
                couplings: None,
                feasible: true,
            },
            notes: vec!["hand diagonalization of the 3×3 Jacobi matrix with ω = (2, 2)"],
        },
        CatalogEntry {
            name: "k3",
            description: "triangle",
            construction: Construction::Graph(complete(3)),
            reference: 0,
            expected: Expected {
                alpha: vec![0, 1],
                omega: vec![2],
                valencies: vec![1, 2],
                nodes: vec![2.0, -1.0],
                weights: vec![1.0 / 3.0, 2.0 / 3.0],
                printed_order: vec![0, 1],
                tolerance: 1e-12,
                feasible: false,
                ..Default::default()
            },
            notes: vec!["negative control: the antipodal stratum has two vertices"],
        },
        CatalogEntry {
            name: "star3",
            description: "star K_{1,3} seen from its centre",
            construction: Construction::Graph(star(3)),
            reference: 0,
            expected: Expected {
                alpha: vec![0, 0],
                omega: vec![3],
                valencies: vec![1, 3],
                nodes: vec![3f64.sqrt(), -(3f64.sqrt())],
                weights: vec![0.5, 0.5],
                printed_order: vec![0, 1],
                tolerance: 1e-12,
                feasible: false,
                ..Default::default()
            },
            notes: vec!["non-regular; used for the one-particle restriction identity"],
        },
        CatalogEntry {
            name: "g2",
            description: "glued binary trees of height 2",
            construction: Construction::Graph(glued_trees(2).expect("n = 2 is valid")),
            reference: 0,
            expected: Expected {
                alpha: vec![0; 5],
                omega: vec![2; 4],
                valencies: vec![1, 2, 4, 2, 1],
                nodes: vec![s6, s2, 0.0, -s2, -s6],
                weights: vec![1.0 / 12.0, 0.25, 1.0 / 3.0, 0.25, 1.0 / 12.0],
                printed_order: vec![0, 1, 2, 3, 4],
                tolerance: 1e-12,
                p_matrix: Some(vec![
                    vec![1.0, 1.0, 1.0, 1.0, 1.0],
                    vec![s3, 1.0, 0.0, -1.0, -s3],
                    vec![2.0, 0.0, -1.0, 0.0, 2.0],
                    vec![s3, -1.0, 0.0, 1.0, -s3],
                    vec![1.0, -1.0, 1.0, -1.0, 1.0],
                ]),
                inverse: Some(scaled(
                    &[
                        &[1.0, s3, 2.0, s3, 1.0],
                        &[3.0, 3.0, 0.0, -3.0, -3.0],
                        &[4.0, 0.0, -4.0, 0.0, 4.0],
                        &[3.0, -3.0, 0.0, 3.0, -3.0],
                        &[1.0, -s3, 2.0, -s3, 1.0],
                    ],
                    1.0 / 12.0,
                )),
                couplings: Some(vec![
                    jc(-0.5, -1.0 / 3.0),
                    jc(0.0, 1.0 / (4.0 * s3)),
                    jc(0.0, -1.0 / 6.0),
                    jc(0.0, 1.0 / (4.0 * s3)),
                    jc(0.0, 1.0 / 6.0),
                ]),
                feasible: true,
            },
            notes: vec![
                "2^(n+1) + 2^n − 2 = 10 vertices; strata (1, 2, 4, 2, 1)",
                "tabulated weights are positive; the closed form carries a (−1)^(l+1) sign",
            ],
        },
        CatalogEntry {
            name: "modified_g2",
            description: "modified glued trees, n = 2, QD parameters as tabulated (α_3 = 1)",
            construction: Construction::Qd {
                qd: QdParams::from_integers(&[0, 0, 0, 1, 0], &[3, 2, 2, 3]).expect("valid"),
                valencies: vec![1, 3, 6, 3, 1],
            },
            reference: 0,
            expected: Expected {
                alpha: vec![0, 0, 0, 1, 0],
                omega: vec![3, 2, 2, 3],
                valencies: vec![1, 3, 6, 3, 1],
                nodes: vec![0.0, 3.0, -2.4728, -1.4626, 1.9354],
                weights: vec![2.0 / 7.0, 1.0 / 26.0, 0.3101, 0.1786, 0.1872],
                printed_order: vec![2, 0, 4, 3, 1],
                tolerance: 5e-4,
                p_matrix: Some(vec![
                    vec![1.0, 1.0, 1.0, 1.0, 1.0],
                    vec![0.0, s3, -1.4277, -0.8445, 1.1174],
                    vec![-1.3417, 0.0, 1.3930, -0.3850, 0.1492],
                    vec![0.0, 2.0 * s3, -0.4594, 0.6974, 0.4046],
                    vec![1.0, 2.0, 0.5572, -1.4304, -0.6270],
                ]),
                inverse: Some(vec![
                    vec![0.2869, -0.0155, -0.3725, -0.1982, 0.2133],
                    vec![-0.0303, -0.0157, 0.0493, 0.2495, 0.0965],
                    vec![0.2509, -0.1527, 0.2961, -0.0807, 0.1465],
                    vec![0.0712, -0.3078, -0.1565, 0.2957, -0.2813],
                    vec![0.4213, 0.4916, 0.1836, -0.2664, -0.1750],
                ]),
                couplings: Some(vec![
                    jc(-0.5, -0.4925 / 2.0),
                    jc(0.0, -0.1838 / 2.0),
                    jc(0.0, -0.0271 / 2.0),
                    jc(0.0, -0.0293 / 2.0),
                    jc(0.0, 0.4563 / 2.0),
                ]),
                feasible: false,
            },
            notes: vec![
                "α_3 = 1 does not follow from the array {3,2,1,1;1,1,2,3}, which gives α_2 = 1",
                "P_4(3) = 2, so no unimodular phases solve the transfer system",
                "tabulated γ_2..γ_4 belong to x_4, x_2, x_3 respectively",
                "tabulated P rows 2 and 3 and the tabulated inverse do not match the recurrence",
            ],
        },
        CatalogEntry {
            name: "modified_g2_array",
            description: "modified glued trees, n = 2, from the intersection array",
            construction: Construction::Array(modified_glued_trees_array(2).expect("n = 2 is valid")),
            reference: 0,
            expected: Expected {
                alpha: vec![0, 0, 1, 0, 0],
                omega: vec![3, 2, 2, 3],
                valencies: vec![1, 3, 6, 3, 1],
                feasible: true,
                ..Default::default()
            },
            notes: vec!["mirror-symmetric Jacobi matrix; P_4(x_k) = ±1"],
        },
        CatalogEntry {
            name: "icosahedron",
            description: "icosahedron, array {5,2,1;1,2,5}",
            construction: Construction::Graph(icosahedron()),
            reference: 0,
            expected: Expected {
                alpha: vec![0, 2, 2, 0],
                omega: vec![5, 4, 5],
                valencies: vec![1, 5, 5, 1],
                nodes: vec![-1.0, 5.0, s5, -s5],
                weights: vec![5.0 / 12.0, 1.0 / 12.0, 0.25, 0.25],
                printed_order: vec![2, 0, 1, 3],
                tolerance: 1e-12,
                p_matrix: Some(vec![
                    vec![1.0, 1.0, 1.0, 1.0],
                    vec![-1.0 / s5, s5, 1.0, -1.0],
                    vec![-1.0 / s5, s5, -1.0, 1.0],
                    vec![1.0, 1.0, -1.0, -1.0],
                ]),
                inverse: Some(scaled(
                    &[
                        &[5.0, -s5, -s5, 5.0],
                        &[1.0, s5, s5, 1.0],
                        &[3.0, 3.0, -3.0, -3.0],
                        &[3.0, -3.0, 3.0, -3.0],
                    ],
                    1.0 / 12.0,
                )),
                couplings: Some(vec![jc(-0.5, -0.25), jc(0.0, 0.0), jc(0.0, 0.0), jc(0.0, 0.25)]),
                feasible: true,
            },
            notes: vec!["distance-regular; antipode is the bottom vertex 11"],
        },
        CatalogEntry {
            name: "simplex3",
            description: "3-simplex fractal with decimation number 2 (octahedron)",
            construction: Construction::Graph(simplex3()),
            reference: 0,
            expected: Expected {
                alpha: vec![0, 2, 0],
                omega: vec![4, 4],
                valencies: vec![1, 4, 1],
                nodes: vec![0.0, 4.0, -2.0],
                weights: vec![0.5, 1.0 / 6.0, 1.0 / 3.0],
                printed_order: vec![1, 0, 2],
                tolerance: 1e-12,
                p_matrix: Some(vec![
                    vec![1.0, 1.0, 1.0],
                    vec![0.0, 2.0, -1.0],
                    vec![-1.0, 1.0, 1.0],
                ]),
                inverse: Some(scaled(
                    &[&[3.0, 0.0, -3.0], &[1.0, 2.0, 1.0], &[2.0, -2.0, 2.0]],
                    1.0 / 6.0,
                )),
                couplings: Some(vec![jc(-0.5, -5.0 / 12.0), jc(0.0, -1.0 / 3.0), jc(0.0, 1.0 / 12.0)]),
                feasible: true,
            },
            notes: vec![
                "array {4,1;1,4}; N = n(n−1)/2 = 6, κ = 2(n−2) = 4 for n = 4",
                "vertex i is opposite vertex i + 3",
            ],
        },
        CatalogEntry {
            name: "hypercube4",
            description: "4-cube, array {4,3,2,1;1,2,3,4}",
            construction: Construction::Graph(hypercube(4).expect("k = 4 is valid")),
            reference: 0,
            expected: Expected {
                alpha: vec![0; 5],
                omega: vec![4, 6, 6, 4],
                valencies: vec![1, 4, 6, 4, 1],
                nodes: vec![0.0, 2.0, -2.0, 4.0, -4.0],
                weights: vec![3.0 / 8.0, 0.25, 0.25, 1.0 / 16.0, 1.0 / 16.0],
                printed_order: vec![2, 1, 3, 0, 4],
                tolerance: 1e-12,
                p_matrix: Some(vec![
                    vec![1.0, 1.0, 1.0, 1.0, 1.0],
                    vec![0.0, 1.0, -1.0, 2.0, -2.0],
                    vec![-s6 / 3.0, 0.0, 0.0, s6, s6],
                    vec![0.0, -1.0, 1.0, 2.0, -2.0],
                    vec![1.0, -1.0, -1.0, 1.0, 1.0],
                ]),
                inverse: Some(scaled(
                    &[
                        &[6.0, 0.0, -2.0 * s6, 0.0, 6.0],
                        &[4.0, 4.0, 0.0, -4.0, -4.0],
                        &[4.0, -4.0, 0.0, 4.0, -4.0],
                        &[1.0, 2.0, s6, 2.0, 1.0],
                        &[1.0, -2.0, s6, -2.0, 1.0],
                    ],
                    1.0 / 16.0,
                )),
                couplings: Some(vec![
                    jc(-0.5, -5.0 / 16.0),
                    jc(0.0, -1.0 / 8.0),
                    jc(0.0, -3.0 / (8.0 * s6)),
                    jc(0.0, -1.0 / 8.0),
                    jc(0.0, 3.0 / 16.0),
                ]),
                feasible: true,
            },
            notes: vec![
                "stands in for the 16-node Hadamard-derived network: same array, valencies and ω",
            ],
        },
    ]
}
