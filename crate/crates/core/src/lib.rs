//! Exact structure-constant toolkit for Carnot (stratified nilpotent) Lie
//! algebras: validation, adjoint-rank stratification, invariant first-layer
//! subspaces, product constructions, BCH group geometry and rigidity
//! certificates.

pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod format;
pub mod group;
pub mod linalg;
pub mod rank;
pub mod rational;
pub mod rigidity;

pub use algebra::{CarnotAlgebra, Element, GradedMapCheck, ValidationReport};
pub use error::{CarnotError, Result};
pub use exec::Execution;
pub use linalg::{Matrix, Subspace};
pub use rational::Q;
