use super::connection::{phi, psi_regular};
use crate::comod::regular;
use crate::error::Result;
use crate::exactla::{Matrix, Subspace};
use crate::hopf::HopfAlgebraData;
use crate::quotlat::{enumerate_coideal_subalgebras, enumerate_ricos, validate_coideal_subalgebra};

fn image_within(map: &Matrix, domain: &Matrix, target: &Subspace) -> bool {
    map.mul(domain).image().is_subset_of(target)
}

/// `h ⊗ k ↦ h₍₁₎ k S(h₍₂₎)`.
fn left_adjoint(h: &HopfAlgebraData) -> Matrix {
    let f = h.field();
    let n = h.dim();
    let id = Matrix::identity(f, n);
    h.mult()
        .mul(&h.mult().kron(h.antipode()))
        .mul(&h.comult().kron(&id).flip_rows(n, n, n, 1))
}

/// `h ⊗ k ↦ S(h₍₁₎) k h₍₂₎`.
fn right_adjoint(h: &HopfAlgebraData) -> Matrix {
    let f = h.field();
    let n = h.dim();
    let id = Matrix::identity(f, n);
    h.mult()
        .mul(&h.mult().kron(&id))
        .mul(&h.antipode().kron(&id).kron(&id))
        .mul(&h.comult().kron(&id).flip_rows(n, n, n, 1))
}

/// `x ↦ x₍₁₎ ⊗ x₍₂₎ ⊗ x₍₃₎`.
fn double_comult(h: &HopfAlgebraData) -> Matrix {
    let id = Matrix::identity(h.field(), h.dim());
    h.comult().kron(&id).mul(h.comult())
}

/// A sub-Hopf algebra stable under `h₍₁₎kS(h₍₂₎)` and `S(h₍₁₎)kh₍₂₎`.
pub fn is_normal_subalgebra(h: &HopfAlgebraData, k: &Subspace) -> bool {
    if k.ambient() != h.dim() || !h.algebra().is_unital_subalgebra(k) {
        return false;
    }
    let f = h.field();
    let basis = k.basis_columns();
    let id = Matrix::identity(f, h.dim());
    let hk = id.kron(&basis);
    image_within(h.comult(), &basis, &k.tensor(k))
        && image_within(h.antipode(), &basis, k)
        && image_within(&left_adjoint(h), &hk, k)
        && image_within(&right_adjoint(h), &hk, k)
}

/// A Hopf ideal stable under the coadjoint coactions
/// `x ↦ x₍₁₎S(x₍₃₎) ⊗ x₍₂₎` and `x ↦ x₍₂₎ ⊗ S(x₍₁₎)x₍₃₎`.
pub fn is_normal_ideal(h: &HopfAlgebraData, i: &Subspace) -> bool {
    let n = h.dim();
    if i.ambient() != n {
        return false;
    }
    let f = h.field();
    let id = Matrix::identity(f, n);
    let basis = i.basis_columns();
    let full = Subspace::full(f, n);
    let two_sided = image_within(h.mult(), &basis.kron(&id), i) && image_within(h.mult(), &id.kron(&basis), i);
    let coideal = image_within(h.comult(), &basis, &i.tensor(&full).sum(&full.tensor(i)).expect("same field"));
    let counit = h.counit().mul(&basis).is_zero();
    let antipode = image_within(h.antipode(), &basis, i);
    if !(two_sided && coideal && counit && antipode) {
        return false;
    }
    let d2 = double_comult(h);
    let left = h
        .mult()
        .kron(&id)
        .mul(&id.kron(h.antipode()).kron(&id))
        .mul(&d2.flip_rows(n, n, n, 1));
    let right = id
        .kron(h.mult())
        .mul(&id.kron(h.antipode()).kron(&id))
        .mul(&d2.flip_rows(1, n, n, n));
    image_within(&left, &basis, &full.tensor(i)) && image_within(&right, &basis, &i.tensor(&full))
}

/// Normal elements of both enumerated posets of `regular(H)` and whether the
/// correspondence maps each set into the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalReport {
    pub normal_subalgebras: Vec<Subspace>,
    pub normal_ideals: Vec<Subspace>,
    /// Normal `K` whose `K⁺H` is not a normal ideal.
    pub psi_violations: Vec<Subspace>,
    /// Normal `I` whose coinvariants are not a normal subalgebra.
    pub phi_violations: Vec<Subspace>,
}

impl NormalReport {
    pub fn holds(&self) -> bool {
        self.psi_violations.is_empty() && self.phi_violations.is_empty()
    }
}

pub fn check_normal_restriction(h: &HopfAlgebraData, cap: usize) -> Result<NormalReport> {
    let a = regular(h);
    let mut normal_subalgebras = Vec::new();
    let mut psi_violations = Vec::new();
    for k in enumerate_coideal_subalgebras(h, cap)?.into_elements() {
        if is_normal_subalgebra(h, k.space()) {
            let q = psi_regular(h, &k)?;
            if !is_normal_ideal(h, q.ideal()) {
                psi_violations.push(k.space().clone());
            }
            normal_subalgebras.push(k.into_space());
        }
    }
    let mut normal_ideals = Vec::new();
    let mut phi_violations = Vec::new();
    for q in enumerate_ricos(h, cap)?.into_elements() {
        if is_normal_ideal(h, q.ideal()) {
            let b = phi(&a, &q)?;
            if validate_coideal_subalgebra(h, &b).is_err() || !is_normal_subalgebra(h, &b) {
                phi_violations.push(q.ideal().clone());
            }
            normal_ideals.push(q.ideal().clone());
        }
    }
    Ok(NormalReport { normal_subalgebras, normal_ideals, psi_violations, phi_violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::enumerate::DEFAULT_CAP;
    use crate::exactla::FieldSpec;
    use crate::hopf::{group_algebra, sweedler, symmetric_group};

    const GF2: FieldSpec = FieldSpec::Prime(2);
    const GF3: FieldSpec = FieldSpec::Prime(3);

    fn subgroup_span(n: usize, elems: &[usize]) -> Subspace {
        let rows: Vec<Vec<i64>> = elems
            .iter()
            .map(|&g| (0..n).map(|i| i64::from(i == g)).collect())
            .collect();
        Subspace::span_i64(GF2, n, &rows)
    }

    #[test]
    fn extremes_are_normal() {
        let h = sweedler(GF3).unwrap();
        assert!(is_normal_subalgebra(&h, &Subspace::span_i64(GF3, 4, &[[1, 0, 0, 0]])));
        assert!(is_normal_subalgebra(&h, &Subspace::full(GF3, 4)));
        assert!(is_normal_ideal(&h, &h.augmentation_ideal()));
        assert!(is_normal_ideal(&h, &Subspace::zero(GF3, 4)));
    }

    #[test]
    fn subgroups_of_s3() {
        let (t, labels) = symmetric_group(3);
        let h = group_algebra(&t, GF2).unwrap();
        let idx = |l: &str| labels.iter().position(|x| x == l).unwrap();
        let a3 = subgroup_span(6, &[idx("()"), idx("(123)"), idx("(132)")]);
        assert!(is_normal_subalgebra(&h, &a3));
        let c2 = subgroup_span(6, &[idx("()"), idx("(12)")]);
        assert!(!is_normal_subalgebra(&h, &c2));
    }

    #[test]
    fn sweedler_kg_is_not_normal() {
        // x·g·S(x)-type terms leave k[g]
        let h = sweedler(GF3).unwrap();
        assert!(!is_normal_subalgebra(&h, &Subspace::span_i64(GF3, 4, &[[1, 0, 0, 0], [0, 1, 0, 0]])));
    }

    #[test]
    fn restriction_holds_on_corpus() {
        let (t, _) = symmetric_group(3);
        let s3 = group_algebra(&t, GF2).unwrap();
        let r = check_normal_restriction(&s3, DEFAULT_CAP).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.normal_subalgebras.len(), 3);
        assert_eq!(r.normal_ideals.len(), 3);
        let r = check_normal_restriction(&sweedler(GF3).unwrap(), DEFAULT_CAP).unwrap();
        assert!(r.holds(), "{r:?}");
    }
}
