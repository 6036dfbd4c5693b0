//! The Galois connection between subalgebras of a comodule algebra and
//! generalised quotients of the Hopf algebra.

mod bigalois;
mod canonical;
mod closure;
mod connection;
mod montgomery;
mod normal;
mod tensor;

pub use bigalois::{bigalois_i, bigalois_space};
pub use canonical::{canonical_inverse_regular, canonical_map, is_q_galois, CanonicalMapData};
pub use closure::{check_fdim_bijection, check_mono_on_qgalois, closure_report, ClosureReport, FdimCertificate};
pub use connection::{phi, psi_enum, psi_regular, GaloisConnectionInstance};
pub use montgomery::{check_montgomery_conditions, MontgomeryReport};
pub use normal::{check_normal_restriction, is_normal_ideal, is_normal_subalgebra, NormalReport};
pub use tensor::{tensor_over, TensorOver};
