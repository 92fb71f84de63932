//! The complete graph on a convex polygon and its crossing structure.
//!
//! Vertices are labelled clockwise 1..=n; edges cross iff their endpoints
//! strictly interleave. The map (i, j) -> e_{i, j+1} identifies the boxes of
//! the staircase core of size n with the edges of the polygon of size n+1
//! and turns core adjacency into edge crossing, so non-crossing subgraphs
//! count independent sets.

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::cores::{core_d, Graph};
use crate::grids::GridBox;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolygonError {
    #[error("edge endpoints must satisfy 1 <= i < j <= {0}")]
    BadEndpoints(usize),
    #[error("box ({0},{1}) is not a staircase box of size {2}")]
    OutsideStaircase(usize, usize, usize),
}

/// An edge of the polygon K_n, stored with i < j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolygonEdge {
    i: usize,
    j: usize,
}

impl PolygonEdge {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self, PolygonError> {
        if i == 0 || i >= j || j > n {
            return Err(PolygonError::BadEndpoints(n));
        }
        Ok(PolygonEdge { i, j })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

impl std::fmt::Display for PolygonEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e({},{})", self.i, self.j)
    }
}

/// True iff the endpoints strictly interleave; edges sharing an endpoint do
/// not cross.
pub fn cross(e: &PolygonEdge, f: &PolygonEdge) -> bool {
    let (a, b) = (e.min(f), e.max(f));
    a.i < b.i && b.i < a.j && a.j < b.j
}

/// All edges of K_n in lexicographic order.
pub fn polygon_edges(n: usize) -> Vec<PolygonEdge> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(PolygonEdge { i, j });
        }
    }
    out
}

/// The box (i, j) of the staircase core of size n maps to e_{i, j+1} in
/// K_{n+1}.
pub fn phi(n: usize, b: &GridBox) -> Result<PolygonEdge, PolygonError> {
    if b.row == 0 || b.row > b.col || b.col > n {
        return Err(PolygonError::OutsideStaircase(b.row, b.col, n));
    }
    Ok(PolygonEdge {
        i: b.row,
        j: b.col + 1,
    })
}

/// Graph whose vertices are the edges of K_n and whose adjacency is crossing.
pub fn crossing_graph(n: usize) -> Graph {
    let edges = polygon_edges(n);
    let mut g = Graph::new(edges.len()).expect("crossing graph within size limit");
    for (u, e) in edges.iter().enumerate() {
        for (v, f) in edges.iter().enumerate().skip(u + 1) {
            if cross(e, f) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Numbers of non-crossing subgraphs of K_{n+1} by edge count.
pub fn noncrossing_profile(n: usize) -> Vec<BigUint> {
    crossing_graph(n + 1).independent_set_profile()
}

/// Number of k-edge subgraphs of K_{n+1} with pairwise non-crossing edges.
pub fn count_noncrossing(n: usize, k: usize) -> BigUint {
    noncrossing_profile(n)
        .get(k)
        .cloned()
        .unwrap_or_else(BigUint::zero)
}

/// Checks that core adjacency corresponds exactly to crossing of the image
/// edges, for every pair of staircase boxes.
pub fn verify_star(n: usize) -> bool {
    let core = core_d(n);
    let boxes = core.boxes();
    for (u, a) in boxes.iter().enumerate() {
        for (v, b) in boxes.iter().enumerate().skip(u + 1) {
            let ea = phi(n, a).unwrap();
            let eb = phi(n, b).unwrap();
            if core.graph().has_edge(u, v) != cross(&ea, &eb) {
                return false;
            }
        }
    }
    true
}
