//! Finite simple undirected graphs, their distance stratification around a
//! reference vertex, and intersection-number extraction.

mod document;
mod intersection;
mod strata;

pub use document::{load_document, load_graph, ArrayDocument, GraphDocument, InputDocument};
pub use intersection::{
    check_consistency, intersection_numbers, valencies_from_array, Degree, IntersectionNumbers,
    PdrReport, PdrWitness,
};
pub use strata::{distances, stratify, Stratification};

use std::collections::BTreeSet;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("failed to parse graph document: {0}")]
    Parse(String),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(Vertex),
    #[error("reference vertex {0} is outside 0..{1}")]
    ReferenceOutOfRange(Vertex, usize),
    #[error("invalid intersection array: {0}")]
    InvalidArray(String),
}

/// A connected simple graph on the dense vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    name: Option<String>,
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Validates and builds a graph. Edges are kept in the order given so that
    /// documents round-trip unchanged.
    pub fn new(
        name: Option<String>,
        n: usize,
        edges: Vec<(Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let graph = Self {
            name,
            n,
            edges,
            adjacency,
        };
        if let Some(v) = strata::distances_unchecked(&graph, 0)
            .iter()
            .position(Option::is_none)
        {
            return Err(GraphError::Disconnected(v));
        }
        Ok(graph)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        self.adjacency.iter().all(|a| a.len() == k).then_some(k)
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Dense symmetric 0/1 adjacency matrix with zero diagonal.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::ReferenceOutOfRange(v, self.n))
        }
    }
}
