//! JSON ingestion formats: an explicit edge list or a bare intersection array.
//!
//! Canonical form is compact JSON followed by a single newline; documents in
//! canonical form survive a parse/serialize round-trip byte for byte.

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, IntersectionNumbers};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrayDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub b: Vec<i64>,
    pub c: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InputDocument {
    Graph(GraphDocument),
    Array(ArrayDocument),
}

pub fn load_document(text: &str) -> Result<InputDocument, GraphError> {
    serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))
}

impl InputDocument {
    pub fn to_canonical(&self) -> String {
        let mut out = serde_json::to_string(self).expect("documents always serialize");
        out.push('\n');
        out
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Self::Graph(g) => g.name.as_deref(),
            Self::Array(a) => a.name.as_deref(),
        }
    }
}

impl GraphDocument {
    pub fn into_graph(self) -> Result<Graph, GraphError> {
        let edges = self.edges.into_iter().map(|[u, v]| (u, v)).collect();
        Graph::new(self.name, self.n, edges)
    }
}

impl ArrayDocument {
    pub fn to_numbers(&self) -> Result<IntersectionNumbers, GraphError> {
        IntersectionNumbers::from_array(&self.b, &self.c, self.kappa)
    }
}

impl Graph {
    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            name: self.name().map(str::to_owned),
            n: self.n_vertices(),
            edges: self.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// Parses a graph document (edge-list form only).
pub fn load_graph(text: &str) -> Result<Graph, GraphError> {
    match load_document(text)? {
        InputDocument::Graph(doc) => doc.into_graph(),
        InputDocument::Array(_) => Err(GraphError::Parse(
            "expected an edge-list graph document, found an intersection array".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn loads_k2_and_c4() {
        let k2 = load_graph(r#"{"n":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(k2.n_edges(), 1);
        let c4 = load_graph(r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]}"#).unwrap();
        assert_eq!(c4.regular_degree(), Some(2));
    }

    #[test]
    fn rejects_disconnected_and_garbage() {
        assert_eq!(
            load_graph(r#"{"n":3,"edges":[[0,1]]}"#).unwrap_err(),
            GraphError::Disconnected(2)
        );
        assert!(matches!(load_graph("{n: 3"), Err(GraphError::Parse(_))));
        assert!(matches!(
            load_graph(r#"{"n":2,"edges":[[0,1]],"extra":1}"#),
            Err(GraphError::Parse(_))
        ));
    }

    #[test]
    fn array_document() {
        let doc = load_document(r#"{"name":"icosahedron","b":[5,2,1],"c":[1,2,5]}"#).unwrap();
        let InputDocument::Array(a) = doc else {
            panic!("expected array document");
        };
        assert_eq!(a.to_numbers().unwrap().diameter(), 3);
    }

    #[test]
    fn canonical_round_trip_examples() {
        for text in [
            "{\"name\":\"c4\",\"n\":4,\"edges\":[[0,1],[1,2],[2,3],[3,0]]}\n",
            "{\"n\":2,\"edges\":[[0,1]]}\n",
            "{\"name\":\"hadamard\",\"b\":[4,3,2,1],\"c\":[1,2,3,4]}\n",
            "{\"b\":[2],\"c\":[1],\"kappa\":2}\n",
        ] {
            assert_eq!(load_document(text).unwrap().to_canonical(), text);
        }
    }

    proptest! {
        #[test]
        fn graph_document_round_trips(n in 2usize..12, extra in proptest::collection::vec((0usize..12, 0usize..12), 0..20)) {
            // A path keeps the graph connected; extra chords are filtered to stay simple.
            let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            for (u, v) in extra {
                let (u, v) = (u % n, v % n);
                if u != v && !edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                    edges.push((u, v));
                }
            }
            let g = Graph::new(Some(format!("g{n}")), n, edges).unwrap();
            let text = InputDocument::Graph(g.to_document()).to_canonical();
            let back = load_graph(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(InputDocument::Graph(back.to_document()).to_canonical(), text);
        }
    }
}
