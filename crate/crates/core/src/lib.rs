//! Kempf–Lascoux–Weyman complexes for quiver determinantal varieties of
//! generalized Kronecker quivers and for subspace varieties of 3-tensors.
//!
//! Everything is exact: Kronecker coefficients and Schur functor dimensions
//! are integers, degrees are computed in rational arithmetic and checked to
//! be integral.

pub mod bott;
pub mod characters;
pub mod error;
pub mod exec;
pub mod klw;
pub mod manifest;
pub mod modp;
pub mod partition;
pub mod quiver;
pub mod shorthand;
pub mod tensor;

pub use error::{Error, Result};
