//! Exact computation of the Galois correspondence between subalgebras of a
//! comodule algebra and generalised quotients of a finite dimensional Hopf
//! algebra.
//!
//! ```
//! use hopf_galois::comod::regular;
//! use hopf_galois::exactla::enumerate::DEFAULT_CAP;
//! use hopf_galois::exactla::FieldSpec;
//! use hopf_galois::galois::closure_report;
//! use hopf_galois::hopf::sweedler;
//!
//! let h = sweedler(FieldSpec::Prime(3)).unwrap();
//! let r = closure_report(&regular(&h), DEFAULT_CAP).unwrap();
//! assert!(r.closed_equals_q_galois());
//! ```

pub mod comod;
pub mod error;
pub mod exactla;
pub mod galois;
pub mod hopf;
pub mod quotlat;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-linear-algebra.md")]
    mod exact_linear_algebra {}
    #[doc = include_str!("../../../book/src/hopf-algebras.md")]
    mod hopf_algebras {}
    #[doc = include_str!("../../../book/src/comodule-algebras.md")]
    mod comodule_algebras {}
    #[doc = include_str!("../../../book/src/generalised-quotients.md")]
    mod generalised_quotients {}
    #[doc = include_str!("../../../book/src/galois-connection.md")]
    mod galois_connection {}
    #[doc = include_str!("../../../book/src/galois-extensions.md")]
    mod galois_extensions {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
