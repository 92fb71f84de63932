//! Exact enumeration of pattern-avoiding permutation classes.
//!
//! Permutations avoiding small patterns are encoded as weighted independent
//! sets in "core" graphs built on boundary grids. The crate provides
//!
//! - [`perm`]: permutations, classical and vincular pattern containment,
//!   boundary statistics and brute-force class enumeration (the universal
//!   oracle used by every cross-check);
//! - [`grids`]: staircase and boundary grids together with the staircase
//!   encoding of a permutation;
//! - [`cores`]: down/up/updown core graphs on grids, exact clique and
//!   independent-set counting, purity, and small-graph isomorphism;
//! - [`polygon`]: the complete graph on a convex polygon, the edge-crossing
//!   predicate and the vertex-to-edge bijection onto staircase cores;
//! - [`series`]: exact bivariate truncated power series and the generating
//!   functions for all supported classes;
//! - [`tables`]: counting triangles with CSV/b-file export;
//! - [`oracle`]: executable cross-checks tying all of the above together.

pub mod comb;
pub mod cores;
pub mod grids;
pub mod oracle;
pub mod perm;
pub mod polygon;
pub mod series;
pub mod tables;

pub use grids::{BoundaryGrid, GridBox, StaircaseEncoding};
pub use perm::{PatternBasis, PermError, Permutation, VincularPattern};
