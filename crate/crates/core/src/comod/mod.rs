//! Comodule algebras, coinvariants, the dual module algebra and cleft
//! extensions.
//!
//! Coactions are on the right, `δ : A → A ⊗ H`. Left coactions enter through
//! [`ComoduleAlgebraData::from_left_coaction`].

mod cleft;
mod comodule;
mod module;

pub use cleft::{trivial_cleft, verify_cleft, CleftData, CleftVerdict};
pub use comodule::{
    coinvariants, coinvariants_q, regular, trivial, validate_comodule_algebra, ComoduleAlgebraData,
};
pub use module::{
    hom_canonical, invariants, to_module_algebra, validate_module_algebra, HomCanonical,
    ModuleAlgebraData,
};

