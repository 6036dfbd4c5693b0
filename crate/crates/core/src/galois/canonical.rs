use super::connection::psi_regular;
use super::tensor::tensor_over;
use crate::comod::{coinvariants_q, regular, ComoduleAlgebraData};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::hopf::HopfAlgebraData;
use crate::quotlat::{CoidealSubalgebra, GeneralisedQuotient};

/// `can_Q : A ⊗_B A → A ⊗ Q` with `B = A^{co Q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalMapData {
    pub base: Subspace,
    pub relations: Subspace,
    /// `dim(A ⊗_B A)`.
    pub tensor_dim: usize,
    pub q_dim: usize,
    /// `(m·q) × tensor_dim`.
    pub matrix: Matrix,
    pub rank: usize,
    pub bijective: bool,
}

impl CanonicalMapData {
    pub fn is_surjective(&self) -> bool {
        self.rank == self.matrix.rows()
    }
}

/// `x ⊗ y ↦ x·y₍₀₎ ⊗ π(y₍₁₎)` on `A ⊗ A`.
fn lifted_canonical(a: &ComoduleAlgebraData, proj: &Matrix) -> Matrix {
    let m = a.dim();
    let f = a.hopf().field();
    a.algebra()
        .mult()
        .kron(proj)
        .mul(&Matrix::identity(f, m).kron(a.coaction()))
}

pub fn canonical_map(a: &ComoduleAlgebraData, q: &GeneralisedQuotient) -> Result<CanonicalMapData> {
    let base = coinvariants_q(a, q.ideal())?;
    let t = tensor_over(a.algebra(), &base)?;
    let lifted = lifted_canonical(a, q.proj());
    if !t.relations.is_zero() && !lifted.mul(&t.relations.basis_columns()).is_zero() {
        return Err(Error::Invariant(
            "can_Q does not vanish on the balancing relations; B ⊄ A^{co Q}".into(),
        ));
    }
    let matrix = lifted.mul(&t.section);
    let rank = matrix.rank();
    let target = a.dim() * q.q_dim();
    Ok(CanonicalMapData {
        base,
        relations: t.relations.clone(),
        tensor_dim: t.dim(),
        q_dim: q.q_dim(),
        bijective: t.dim() == target && rank == target,
        matrix,
        rank,
    })
}

/// `A^{co Q} ⊆ A` is `Q`-Galois when `can_Q` is bijective.
pub fn is_q_galois(a: &ComoduleAlgebraData, q: &GeneralisedQuotient) -> Result<bool> {
    Ok(canonical_map(a, q)?.bijective)
}

/// The inverse of `can` for `A = H`, `Q = H/K⁺H`, from the formula
/// `x ⊗ ȳ ↦ x S(y₍₁₎) ⊗_B y₍₂₎`.
///
/// Returns the `dim(A⊗_B A) × (n·q)` matrix after checking both composites
/// against the identity.
pub fn canonical_inverse_regular(h: &HopfAlgebraData, k: &CoidealSubalgebra) -> Result<Matrix> {
    let q = psi_regular(h, k)?;
    let a = regular(h);
    let can = canonical_map(&a, &q)?;
    let f = h.field();
    let n = h.dim();
    let id = Matrix::identity(f, n);
    // x ⊗ y ↦ x S(y₁) ⊗ y₂ on H ⊗ H
    let formula = h
        .mult()
        .kron(&id)
        .mul(&id.kron(&h.antipode().kron(&id)))
        .mul(&id.kron(h.comult()));
    let t = tensor_over(h.algebra(), &can.base)?;
    if !q.ideal().is_zero() && !t.proj.mul(&formula).mul(&id.kron(&q.ideal().basis_columns())).is_zero() {
        return Err(Error::Falsified(format!(
            "the inverse formula does not descend to H ⊗ H/I for I = {}",
            q.ideal()
        )));
    }
    let inverse = t.proj.mul(&formula).mul(&id.kron(q.section()));
    if can.matrix.mul(&inverse) != Matrix::identity(f, n * q.q_dim()) {
        return Err(Error::Falsified("can ∘ can⁻¹ ≠ id".into()));
    }
    if inverse.mul(&can.matrix) != Matrix::identity(f, can.tensor_dim) {
        return Err(Error::Falsified("can⁻¹ ∘ can ≠ id".into()));
    }
    Ok(inverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comod::trivial;
    use crate::exactla::FieldSpec;
    use crate::hopf::{cyclic_group, group_algebra, sweedler};
    use crate::quotlat::{validate_coideal_subalgebra, validate_rico};

    const GF3: FieldSpec = FieldSpec::Prime(3);

    #[test]
    fn regular_c2_is_galois_for_both_quotients() {
        let h = group_algebra(&cyclic_group(2), GF3).unwrap();
        let a = regular(&h);
        let top = validate_rico(&h, &Subspace::zero(GF3, 2)).unwrap();
        let c = canonical_map(&a, &top).unwrap();
        assert!(c.bijective);
        // a basis permutation: one nonzero entry per column
        assert!((0..4).all(|j| (0..4).filter(|&i| !c.matrix.get(i, j).is_zero()).count() == 1));
        let bottom = validate_rico(&h, &h.augmentation_ideal()).unwrap();
        let c = canonical_map(&a, &bottom).unwrap();
        assert!(c.bijective);
        assert_eq!((c.tensor_dim, c.q_dim), (2, 1));
    }

    #[test]
    fn sweedler_quotient_by_x_is_galois() {
        let h = sweedler(GF3).unwrap();
        let i = Subspace::span_i64(GF3, 4, &[[0, 0, 1, 0], [0, 0, 0, 1]]);
        assert!(is_q_galois(&regular(&h), &validate_rico(&h, &i).unwrap()).unwrap());
    }

    #[test]
    fn trivial_coaction_is_galois_only_for_k() {
        let h = sweedler(GF3).unwrap();
        let b = group_algebra(&cyclic_group(2), GF3).unwrap();
        let a = trivial(&h, b.algebra()).unwrap();
        let top = validate_rico(&h, &Subspace::zero(GF3, 4)).unwrap();
        assert!(!is_q_galois(&a, &top).unwrap());
        let bottom = validate_rico(&h, &h.augmentation_ideal()).unwrap();
        assert!(is_q_galois(&a, &bottom).unwrap());
    }

    #[test]
    fn explicit_inverse() {
        let h = sweedler(GF3).unwrap();
        for rows in [vec![[1, 0, 0, 0]], vec![[1, 0, 0, 0], [0, 0, 1, 0]]] {
            let k = validate_coideal_subalgebra(&h, &Subspace::span_i64(GF3, 4, &rows)).unwrap();
            canonical_inverse_regular(&h, &k).unwrap();
        }
        let c2 = group_algebra(&cyclic_group(2), GF3).unwrap();
        let k = validate_coideal_subalgebra(&c2, &Subspace::full(GF3, 2)).unwrap();
        assert_eq!(canonical_inverse_regular(&c2, &k).unwrap().rows(), 2);
    }
}
