//! Exact scalars, dense matrices and canonical subspaces.

pub mod enumerate;
mod field;
mod matrix;
mod subspace;

pub use field::{FieldSpec, Scalar};
pub use matrix::{flip, Matrix, Rref};
pub use subspace::{QuotientData, Subspace};

pub(crate) use field::Elem;
pub(crate) use matrix::{elems_to_scalars, scalars_to_elems};

#[cfg(test)]
mod proptests;
