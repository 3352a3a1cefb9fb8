use thiserror::Error;

use crate::graph::{Graph, GraphError, IntersectionNumbers};

#[derive(Debug, Error, PartialEq)]
pub enum CatalogError {
    #[error("{what} = {value} is outside {range}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: &'static str,
    },
    #[error("no catalog entry named {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn build(name: &str, n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(Some(name.to_string()), n, edges).expect("catalog constructions are valid")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(&format!("K_{n}"), n, edges)
}

pub fn cycle(n: usize) -> Graph {
    build(&format!("C_{n}"), n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// K_{1,leaves} with the centre at vertex 0.
pub fn star(leaves: usize) -> Graph {
    build(
        &format!("K_1,{leaves}"),
        leaves + 1,
        (1..=leaves).map(|v| (0, v)).collect(),
    )
}

/// Two complete binary trees of height n glued leaf to leaf.
///
/// The left tree is numbered in heap order from its root 0; the 2^n shared
/// leaves keep their left-tree numbers; the right tree's internal vertices
/// are numbered backwards from the last vertex, so the right root is
/// 3·2^n − 3.
pub fn glued_trees(n: usize) -> Result<Graph, CatalogError> {
    if !(1..=8).contains(&n) {
        return Err(CatalogError::OutOfRange {
            what: "n",
            value: n,
            range: "1..=8",
        });
    }
    let internal = (1usize << n) - 1;
    let left = (1usize << (n + 1)) - 1;
    let total = left + internal;
    let mut edges = Vec::with_capacity(2 * (left - 1));
    for v in 0..internal {
        edges.push((v, 2 * v + 1));
        edges.push((v, 2 * v + 2));
    }
    let right = |h: usize| if h < internal { total - 1 - h } else { h };
    for h in 0..internal {
        edges.push((right(h), right(2 * h + 1)));
        edges.push((right(h), right(2 * h + 2)));
    }
    Ok(build(&format!("G_{n}"), total, edges))
}

/// {3, 2^(n−1), 1^n; 1^n, 2^(n−1), 3}.
pub fn modified_glued_trees_array(n: usize) -> Result<IntersectionNumbers, CatalogError> {
    if n == 0 {
        return Err(CatalogError::OutOfRange {
            what: "n",
            value: n,
            range: "n >= 1",
        });
    }
    let mut b = vec![3i64];
    b.extend(std::iter::repeat_n(2, n - 1));
    b.extend(std::iter::repeat_n(1, n));
    let mut c = vec![1i64; n];
    c.extend(std::iter::repeat_n(2, n - 1));
    c.push(3);
    Ok(IntersectionNumbers::from_array(&b, &c, None)?)
}

/// Top 0, upper pentagon 1..=5, lower pentagon 6..=10, bottom 11.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::with_capacity(30);
    for i in 1..=5 {
        let next = i % 5 + 1;
        edges.push((0, i));
        edges.push((i, next));
        edges.push((5 + i, 5 + next));
        edges.push((i, 5 + i));
        edges.push((i, 5 + next));
        edges.push((5 + i, 11));
    }
    build("icosahedron", 12, edges)
}

/// The octahedron K_{2,2,2}; vertex i is opposite i + 3.
pub fn octahedron() -> Graph {
    let edges = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| v != u + 3)
        .collect();
    build("octahedron", 6, edges)
}

/// 3-simplex fractal with decimation number 2, realised as the octahedron.
pub fn simplex3() -> Graph {
    octahedron().with_name("simplex3")
}

pub fn hypercube(k: usize) -> Result<Graph, CatalogError> {
    if k > 6 {
        return Err(CatalogError::OutOfRange {
            what: "k",
            value: k,
            range: "0..=6",
        });
    }
    let n = 1usize << k;
    let edges = (0..n)
        .flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Ok(build(&format!("Q_{k}"), n, edges))
}
