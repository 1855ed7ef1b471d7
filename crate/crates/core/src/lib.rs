//! Exact computations with finite-dimensional Lie, associative and Jordan
//! algebras over GF(p) and Q: Jordan elements and their quotient algebras,
//! sl₂ triples and gradings, sandwich and sequence reachability, and towers
//! of matrix pairs with involution.

pub mod algebra;
pub mod budget;
pub mod constructions;
pub mod degeneracy;
pub mod echelon;
pub mod error;
pub mod field;
pub mod grading;
pub mod io;
pub mod jordan;
pub mod matrix;
pub mod pipeline;
pub mod poly;
pub mod report;
pub mod sampling;
pub mod subspace;
pub mod suites;
pub mod tower;
pub mod vector;

pub use algebra::{AlgebraElement, AlgebraKind, AlgebraPresentation, StructureTable};
pub use constructions::{build_matrix_lie, InvolutionMap, MatrixLieAlgebra, Series};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::ExactMatrix;
pub use report::{CheckOutcome, RunReport, Status};
pub use subspace::Subspace;
