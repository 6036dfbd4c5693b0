use super::reason::InvalidReason;
use crate::exactla::{elems_to_scalars, Matrix, Subspace};
use crate::hopf::HopfAlgebraData;

/// A unital subalgebra `K ⊆ H` with `Δ(K) ⊆ H ⊗ K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoidealSubalgebra {
    space: Subspace,
}

impl CoidealSubalgebra {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

fn validate(h: &HopfAlgebraData, k: &Subspace, side: Side) -> Result<CoidealSubalgebra, InvalidReason> {
    let n = h.dim();
    if k.ambient() != n || k.field() != h.field() {
        return Err(InvalidReason::Ambient { expected: n, found: k.ambient() });
    }
    let f = h.field();
    let proj = k.quotient_data().proj;
    let id = Matrix::identity(f, n);
    // Δ(v) ∈ H⊗K iff (id⊗π_K)Δ(v) = 0, and symmetrically on the left leg
    let test = match side {
        Side::Left => id.kron(&proj).mul(h.comult()),
        Side::Right => proj.kron(&id).mul(h.comult()),
    };
    if let Some(b) = k.basis_elems().into_iter().find(|b| test.apply(b).iter().any(|e| !f.is_zero(e))) {
        let w = elems_to_scalars(f, &b);
        return Err(match side {
            Side::Left => InvalidReason::LeftCoideal(w),
            Side::Right => InvalidReason::RightCoideal(w),
        });
    }
    match h.algebra().check_unital_subalgebra(k) {
        Ok(()) => Ok(CoidealSubalgebra { space: k.clone() }),
        Err(v) if v == h.unit_elems() && !k.contains_elems(&v) => Err(InvalidReason::Unit),
        Err(v) => Err(InvalidReason::Multiplicative(elems_to_scalars(f, &v))),
    }
}

/// Checks `1 ∈ K`, `K·K ⊆ K` and `Δ(K) ⊆ H⊗K`.
pub fn validate_coideal_subalgebra(h: &HopfAlgebraData, k: &Subspace) -> Result<CoidealSubalgebra, InvalidReason> {
    validate(h, k, Side::Left)
}

/// Mirror of [`validate_coideal_subalgebra`] with `Δ(K) ⊆ K⊗H`.
pub fn validate_right_coideal_subalgebra(
    h: &HopfAlgebraData,
    k: &Subspace,
) -> Result<CoidealSubalgebra, InvalidReason> {
    validate(h, k, Side::Right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::hopf::{coopposite, sweedler};

    const GF3: FieldSpec = FieldSpec::Prime(3);

    #[test]
    fn sweedler_examples() {
        let h = sweedler(GF3).unwrap();
        for k in [
            Subspace::span_i64(GF3, 4, &[[1, 0, 0, 0]]),
            Subspace::full(GF3, 4),
            Subspace::span_i64(GF3, 4, &[[1, 0, 0, 0], [0, 0, 1, 0]]),
        ] {
            validate_coideal_subalgebra(&h, &k).unwrap();
        }
        let x_only = Subspace::span_i64(GF3, 4, &[[0, 0, 1, 0]]);
        assert!(validate_coideal_subalgebra(&h, &x_only).is_err());
        // span{1, gx}: Δ(gx) = gx⊗g + 1⊗gx lies in K⊗H but not in H⊗K
        let gx = Subspace::span_i64(GF3, 4, &[[1, 0, 0, 0], [0, 0, 0, 1]]);
        assert!(matches!(validate_coideal_subalgebra(&h, &gx), Err(InvalidReason::LeftCoideal(_))));
        assert!(validate_right_coideal_subalgebra(&h, &gx).is_ok());
    }

    #[test]
    fn mirror_through_coopposite() {
        let h = sweedler(GF3).unwrap();
        let cop = coopposite(&h).unwrap();
        for k in crate::exactla::enumerate::all_subspaces(GF3, 4).unwrap() {
            assert_eq!(
                validate_coideal_subalgebra(&h, &k).is_ok(),
                validate_right_coideal_subalgebra(&cop, &k).is_ok()
            );
        }
    }
}
