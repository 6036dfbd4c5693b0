use std::fmt;

use crate::exactla::Scalar;

/// Why a subspace fails to be a coideal right ideal or a coideal subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InvalidReason {
    #[error("subspace lives in dimension {found}, expected {expected}")]
    Ambient { expected: usize, found: usize },
    #[error("counit does not vanish on {}", Vector(.0))]
    Counit(Vec<Scalar>),
    #[error("not a coideal: Δ({}) ∉ I⊗H + H⊗I", Vector(.0))]
    Coideal(Vec<Scalar>),
    #[error("not a right ideal: {} ∉ I", Vector(.0))]
    RightIdeal(Vec<Scalar>),
    #[error("does not contain the unit")]
    Unit,
    #[error("not closed under multiplication: {} ∉ K", Vector(.0))]
    Multiplicative(Vec<Scalar>),
    #[error("not a left coideal: Δ({}) ∉ H⊗K", Vector(.0))]
    LeftCoideal(Vec<Scalar>),
    #[error("not a right coideal: Δ({}) ∉ K⊗H", Vector(.0))]
    RightCoideal(Vec<Scalar>),
    #[error("induced structure on the quotient is inconsistent: {0}")]
    Induced(String),
}

/// Displays a coordinate vector as `[a, b, c]`.
pub(crate) struct Vector<'a>(pub &'a [Scalar]);

impl fmt::Display for Vector<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}
