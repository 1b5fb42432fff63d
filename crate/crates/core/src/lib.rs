//! Exact computations with the subdivision and bracket algebras of types C
//! and D: signed-graph reductions, coned root polytopes of type C, their
//! triangulations, volumes and Ehrhart polynomials, and a noncommutative
//! Gröbner basis check.

pub mod bracket;
pub mod combinatorics;
pub mod ehrhart;
pub mod error;
pub mod grobner;
pub mod linalg;
pub mod notation;
pub mod root_geometry;
pub mod signed_graph;
pub mod strategy;
pub mod subdivision;
pub mod verify;
pub mod volume;

pub use error::{Error, Result};
pub use linalg::Rational;
pub use signed_graph::{Incidence, LabeledGraph, NcWord, Sign, SignedEdge, SignedGraph};
pub use strategy::Strategy;
