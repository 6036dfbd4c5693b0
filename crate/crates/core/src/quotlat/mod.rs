//! Generalised quotients `H/I` for coideal right ideals `I`, coideal
//! subalgebras, and finite posets of either.

mod coideal;
mod enumerate;
mod poset;
mod quotient;
mod reason;

pub use coideal::{validate_coideal_subalgebra, validate_right_coideal_subalgebra, CoidealSubalgebra};
pub use enumerate::{enumerate_coideal_subalgebras, enumerate_ricos, enumerate_subalgebras_over};
pub use poset::{crosscheck_quotient_lattice, poset_report, FinitePoset, PosetReport};
pub use quotient::{cogenerated_rico, join_q, meet_q, validate_rico, GeneralisedQuotient};
pub use reason::InvalidReason;
