//! Exact-arithmetic toolkit for lattice polytopes built from finite simple graphs.
//!
//! The library constructs stable set polytopes `Q_G`, the merged polytopes
//! `Γ(P,Q) = conv(P ∪ -Q)` and `Ω(P,Q) = conv(P×{1} ∪ -Q×{-1})`, and decides
//! their geometric properties (reflexivity, integer decomposition property,
//! Ehrhart δ-polynomials) alongside the matching algebraic certificates
//! (squarefree initial ideals of toric ideals under reverse-lexicographic
//! orders). Every computation is exact: integer and rational arithmetic only,
//! no floating point.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod cases;
pub mod constructions;
pub mod decomposition;
pub mod ehrhart;
mod error;
pub mod geometry;
pub mod graph;
mod linalg;
pub mod toric;

pub use error::{Error, Result};
