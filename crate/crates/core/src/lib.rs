//! Dirichlet arrangements of electrical networks.
//!
//! A network `(g, B, u)` pins the values of the boundary nodes `B` and leaves
//! the interior free; its arrangement consists of the hyperplanes `x_i = x_j`
//! for the edges of `g`, restricted to that slice. This crate computes the
//! exact combinatorics of such arrangements (precoloring polynomials, chamber
//! counts, intersection posets, supersolvability) and solves the fixed-energy
//! inverse problem through critical points of the master function.

pub mod chordal;
pub mod corpus;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod harmonic;
pub mod io;
pub mod limits;
pub mod linalg;
pub mod master;
pub mod network;
pub mod orientations;
pub mod polynomials;
pub mod poset;
pub mod rational;

pub use chordal::{
    is_supersolvable, perfect_elimination_ordering, weighted_elimination_ordering, Chordality,
    EliminationOrdering, OrderingKind, SupersolvabilityReport,
};
pub use error::{Error, ErrorCategory, Result};
pub use graph::{Graph, Multigraph};
pub use harmonic::{EdgeWeights, HarmonicFunction, Laplacian};
pub use limits::Limits;
pub use linalg::SquareMatrix;
pub use master::{CriticalPointSolution, MasterFunction, SolverOptions};
pub use network::{NetworkInstance, PsiAssignment};
pub use orientations::{ClassMode, InteriorPoint, Orientation, OrientationClass};
pub use polynomials::{ChamberCounts, IntPolynomial};
pub use poset::{ConnectedPartition, FinitePoset};
