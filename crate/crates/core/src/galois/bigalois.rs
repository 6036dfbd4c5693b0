use super::tensor::tensor_over;
use crate::comod::ComoduleAlgebraData;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};

/// `a ⊗ b ↦ a₍₀₎ ⊗ b₍₀₎ ⊗ a₍₁₎b₍₁₎` on `A ⊗ A`.
fn codiagonal(a: &ComoduleAlgebraData) -> Matrix {
    let h = a.hopf();
    let f = h.field();
    let (m, n) = (a.dim(), h.dim());
    Matrix::identity(f, m * m)
        .kron(h.mult())
        .mul(&a.coaction().kron(a.coaction()).flip_rows(m, n, m, n))
}

fn coinvariants_of(coaction: &Matrix, dim: usize, a: &ComoduleAlgebraData) -> Subspace {
    let f = a.hopf().field();
    coaction.sub(&Matrix::identity(f, dim).kron(a.hopf().unit())).kernel()
}

/// `(A ⊗ A)^{co H}` under the codiagonal coaction.
pub fn bigalois_space(a: &ComoduleAlgebraData) -> Subspace {
    let m = a.dim();
    coinvariants_of(&codiagonal(a), m * m, a)
}

/// `(A ⊗_B A)^{co H}`, in the coordinates of `tensor_over(A, B)`.
///
/// Fails with [`Error::Precondition`] when the codiagonal coaction does not
/// descend to `A ⊗_B A`.
pub fn bigalois_i(a: &ComoduleAlgebraData, b: &Subspace) -> Result<Subspace> {
    if !a.algebra().is_unital_subalgebra(b) {
        return Err(Error::Precondition(format!("B = {b} is not a unital subalgebra of A")));
    }
    let t = tensor_over(a.algebra(), b)?;
    let n = a.hopf().dim();
    let lift = t.proj.kron(&Matrix::identity(a.hopf().field(), n)).mul(&codiagonal(a));
    if !t.relations.is_zero() && !lift.mul(&t.relations.basis_columns()).is_zero() {
        return Err(Error::Precondition(format!(
            "the codiagonal coaction does not descend to A ⊗_B A for B = {b}"
        )));
    }
    Ok(coinvariants_of(&lift.mul(&t.section), t.dim(), a))
}
