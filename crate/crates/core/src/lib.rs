//! Exact computations with g-alternative and alternative algebras: law
//! checking, derived actions, bimultiplication and actor algebras, soci and
//! asoci, and reconstruction of counterexamples.

pub mod action;
pub mod algebra;
pub mod cli;
pub mod error;
pub mod io;
pub mod linalg;
pub mod multiplier;
pub mod socle;
pub mod witness;

pub use algebra::{Algebra, Law, LawReport};
pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Scalar, Subspace};
