//! Regular gradings on finite-dimensional algebras over finite abelian groups.
//!
//! The crate builds graded algebras exactly over cyclotomic fields, decides whether a
//! grading is regular and whether its decomposition is minimal, computes Jacobson radicals,
//! and computes graded and ordinary multilinear codimensions.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod builtins;
pub mod group;
pub mod identities;
pub mod io;
pub mod linalg;
pub mod pairing;
pub mod regularity;
pub mod scalar;
pub mod verify;

pub use group::{GroupElement, GroupError, GroupSpec};
pub use scalar::{Cyclotomic, Rational, ScalarError};
