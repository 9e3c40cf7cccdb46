//! Exact computations on GKM graphs of Hamiltonian torus actions: graph
//! cohomology, equivariant Thom classes, localization integrals and the hard
//! Lefschetz property for six-dimensional moment graphs.

pub mod cohomology;
pub mod corpus;
pub mod document;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod lefschetz;
pub mod linalg;
pub mod localization;
pub mod polyring;
pub mod render;
pub mod report;

pub use error::{GkmError, Result};
pub use graph::{Edge, GkmGraph, MorseProfile, OrientedGkmGraph, ValidationReport, Vertex};
pub use polyring::{Monomial, Polynomial, Rational, WeightVector};
