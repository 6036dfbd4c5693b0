use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::hopf::AlgebraData;

/// `A ⊗_B A` as the quotient of `A ⊗ A` by `R = span{ab⊗a′ − a⊗ba′}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOver {
    pub relations: Subspace,
    /// `A⊗A → A⊗_B A`.
    pub proj: Matrix,
    /// Coordinate section `A⊗_B A → A⊗A`.
    pub section: Matrix,
}

impl TensorOver {
    pub fn dim(&self) -> usize {
        self.proj.rows()
    }
}

/// Balanced tensor product over a subalgebra `B ⊆ A`.
pub fn tensor_over(a: &AlgebraData, b: &Subspace) -> Result<TensorOver> {
    let m = a.dim();
    if b.ambient() != m {
        return Err(Error::Dimension(format!("B lives in dimension {}, A in {m}", b.ambient())));
    }
    let f = a.field();
    let id = Matrix::identity(f, m);
    let mut gens = Matrix::zeros(f, m * m, 0);
    for v in b.basis_elems() {
        // a⊗a′ ↦ a·v ⊗ a′ − a ⊗ v·a′
        let g = a.right_mult(&v).kron(&id).sub(&id.kron(&a.left_mult(&v)));
        gens = gens.hstack(&g);
    }
    let relations = gens.image();
    let q = relations.quotient_data();
    Ok(TensorOver { relations, proj: q.proj, section: q.section })
}
