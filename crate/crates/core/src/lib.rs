//! LCD codes over `F_2` and `F_3`, their orthogonal projectors, and the
//! graphs and two-graphs those projectors are adjacency matrices of.

pub mod bitmat;
pub mod bounds;
pub mod code;
pub mod correspondence;
pub mod error;
pub mod field;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod registry;
pub mod sample;
pub mod strategy;
pub mod twograph;
pub mod verify;

pub use code::{LinearCode, Monomial, WeightDistribution};
pub use error::{Error, Result};
pub use field::{FieldOp, FieldSpec};
pub use graph::{AdjacencyKind, SimpleGraph, SrgParams};
pub use matrix::{ExactMatrix, IntMatrix};
pub use twograph::TwoGraph;
