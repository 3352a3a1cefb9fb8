use std::collections::VecDeque;

use serde::Serialize;

use super::{Graph, GraphError, Vertex};

/// Partition of the vertex set by distance from a reference vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratification {
    reference: Vertex,
    strata: Vec<Vec<Vertex>>,
    /// Stratum index of every vertex.
    #[serde(skip)]
    level: Vec<usize>,
}

impl Stratification {
    pub fn reference(&self) -> Vertex {
        self.reference
    }

    pub fn strata(&self) -> &[Vec<Vertex>] {
        &self.strata
    }

    pub fn stratum(&self, i: usize) -> &[Vertex] {
        &self.strata[i]
    }

    pub fn diameter(&self) -> usize {
        self.strata.len() - 1
    }

    /// κ_0..κ_D.
    pub fn valencies(&self) -> Vec<u64> {
        self.strata.iter().map(|s| s.len() as u64).collect()
    }

    pub fn level_of(&self, v: Vertex) -> usize {
        self.level[v]
    }
}

pub(super) fn distances_unchecked(g: &Graph, o: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n_vertices()];
    let mut queue = VecDeque::from([o]);
    dist[o] = Some(0);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap_or_default();
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Breadth-first shortest-walk distance from `o` to every vertex.
pub fn distances(g: &Graph, o: Vertex) -> Result<Vec<usize>, GraphError> {
    g.check_vertex(o)?;
    // Graphs are connected by construction.
    Ok(distances_unchecked(g, o)
        .into_iter()
        .map(|d| d.expect("graph is connected"))
        .collect())
}

pub fn stratify(g: &Graph, o: Vertex) -> Result<Stratification, GraphError> {
    let level = distances(g, o)?;
    let diameter = level.iter().copied().max().unwrap_or(0);
    let mut strata = vec![Vec::new(); diameter + 1];
    for (v, &l) in level.iter().enumerate() {
        strata[l].push(v);
    }
    Ok(Stratification {
        reference: o,
        strata,
        level,
    })
}
