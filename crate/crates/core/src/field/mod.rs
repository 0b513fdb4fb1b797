//! Exact arithmetic over `Q` and `Q(sqrt 5)`, matrices, and canonical subspaces.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{dot, rref, Echelon, Matrix};
pub use scalar::{Field, FieldScalar};
pub use subspace::{canonical_subspace, Subspace};
