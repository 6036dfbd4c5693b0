//! Algebras, coalgebras and Hopf algebras given by structure constants.
//!
//! All maps are matrices over the ground field acting on coordinate columns.
//! Tensor products are flattened with the last factor varying fastest, so
//! `e_i ⊗ e_j` of `k^n ⊗ k^m` is coordinate `i·m + j`.

mod construct;
mod convolution;
mod structure;
mod validate;

pub use construct::{
    check_group_table, coopposite, cyclic_group, cyclic_labels, dual, ground_hopf, group_algebra,
    group_algebra_labeled, opposite, sweedler, symmetric_group, taft,
};
pub use convolution::{convolution_inverse, convolve, LinearHom};
pub use structure::{AlgebraData, CoalgebraData, HopfAlgebraData, StructurePart};
pub use validate::{validate_hopf, AxiomCheck, ValidationReport};

pub(crate) use structure::tensor_product_mult;
