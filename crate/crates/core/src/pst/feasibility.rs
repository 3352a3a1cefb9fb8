use serde::Serialize;

use super::PMatrix;
use crate::Tolerances;

/// Why a network cannot carry perfect transfer to its antipode.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// The last stratum holds more than one vertex.
    LastStratumSize { size: u64 },
    /// |P_D(x_k)| ≠ 1, so no unimodular η_k solves the transfer system.
    Mirror { node: usize, x: f64, p_d: f64 },
}

impl std::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Obstruction::LastStratumSize { size } => {
                write!(f, "last stratum has {size} vertices (κ_D = {size}, need 1)")
            }
            Obstruction::Mirror { node, x, p_d } => {
                write!(f, "|P_D(x_{node})| = |{p_d}| ≠ 1 at x = {x}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Feasibility {
    pub feasible: bool,
    pub obstructions: Vec<Obstruction>,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        self.feasible
    }

    pub fn describe(&self) -> String {
        if self.feasible {
            "feasible".to_string()
        } else {
            self.obstructions
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        }
    }
}

/// Feasible iff κ_D = 1 and |P_D(x_k)| = 1 for every node.
pub fn pst_feasibility(valencies: &[u64], pm: &PMatrix, tol: &Tolerances) -> Feasibility {
    let mut obstructions = Vec::new();
    let last = *valencies.last().expect("at least one stratum");
    if last != 1 {
        obstructions.push(Obstruction::LastStratumSize { size: last });
    }
    let d = pm.diameter();
    for (k, &x) in pm.nodes().iter().enumerate() {
        let p_d = pm.get(d, k);
        if (p_d.abs() - 1.0).abs() > tol.feasibility {
            obstructions.push(Obstruction::Mirror { node: k, x, p_d });
        }
    }
    Feasibility {
        feasible: obstructions.is_empty(),
        obstructions,
    }
}
