//! Exact integer-polynomial engine: chromatic and precoloring polynomials and
//! the chamber counts they determine.

mod chromatic;
mod poly;
mod precoloring;

pub use chromatic::{acyclic_orientation_count, beta_invariant, chromatic_polynomial, falling_factorial};
pub use poly::IntPolynomial;
pub use precoloring::{
    chamber_counts, is_log_concave, precoloring_count, precoloring_interpolated,
    precoloring_polynomial, ChamberCounts,
};
