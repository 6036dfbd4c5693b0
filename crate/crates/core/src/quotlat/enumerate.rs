use rayon::prelude::*;

use super::coideal::{validate_coideal_subalgebra, CoidealSubalgebra};
use super::poset::FinitePoset;
use super::quotient::{validate_rico, GeneralisedQuotient};
use crate::error::{Error, Result};
use crate::exactla::enumerate::{all_subspaces, subspaces_containing};
use crate::exactla::{FieldSpec, Subspace};
use crate::hopf::{AlgebraData, HopfAlgebraData};

fn check_cap(field: FieldSpec, dim: usize, cap: usize, what: &str) -> Result<()> {
    if !field.is_finite() {
        return Err(Error::EnumerationUnsupported(format!(
            "{what} over Q is infinite; use psi_regular or coinvariants_q directly"
        )));
    }
    if dim > cap {
        return Err(Error::EnumerationUnsupported(format!(
            "{what}: dimension {dim} exceeds the enumeration cap {cap}; raise the cap to proceed"
        )));
    }
    Ok(())
}

/// `Quot_gen(H)` over a prime field, ordered by `Q ⪯ Q′ ⟺ I_{Q′} ⊆ I_Q`.
///
/// Every coideal right ideal lies in `ker ε`, so only subspaces of `ker ε`
/// are tested. Elements are sorted by the canonical order of their ideals,
/// which puts `H` (the zero ideal) first.
pub fn enumerate_ricos(h: &HopfAlgebraData, cap: usize) -> Result<FinitePoset<GeneralisedQuotient>> {
    check_cap(h.field(), h.dim(), cap, "Quot_gen(H)")?;
    let aug = h.augmentation_ideal();
    let embed = aug.basis_columns();
    let candidates = all_subspaces(h.field(), aug.dim())?;
    let mut found: Vec<GeneralisedQuotient> = candidates
        .par_iter()
        .filter_map(|s| validate_rico(h, &s.image_under(&embed)).ok())
        .collect();
    found.sort_by(|a, b| a.ideal().cmp(b.ideal()));
    Ok(FinitePoset::new(found, |a, b| a.precedes(b), true))
}

/// Left coideal subalgebras of `H` over a prime field, ordered by inclusion.
pub fn enumerate_coideal_subalgebras(h: &HopfAlgebraData, cap: usize) -> Result<FinitePoset<CoidealSubalgebra>> {
    check_cap(h.field(), h.dim(), cap, "coideal subalgebras of H")?;
    let one = Subspace::from_matrix_rows(&h.unit().transpose());
    let candidates = subspaces_containing(&one)?;
    let mut found: Vec<CoidealSubalgebra> = candidates
        .par_iter()
        .filter_map(|s| validate_coideal_subalgebra(h, s).ok())
        .collect();
    found.sort();
    Ok(FinitePoset::new(found, |a, b| a.space().is_subset_of(b.space()), true))
}

/// Unital subalgebras `B` with `b0 ⊆ B ⊆ A`, ordered by inclusion.
///
/// The cap bounds the dimension of `A / b0`, the space actually enumerated.
pub fn enumerate_subalgebras_over(a: &AlgebraData, b0: &Subspace, cap: usize) -> Result<FinitePoset<Subspace>> {
    if b0.ambient() != a.dim() {
        return Err(Error::Dimension(format!("B₀ lives in dimension {}, A in {}", b0.ambient(), a.dim())));
    }
    check_cap(a.field(), a.dim() - b0.dim(), cap, "subalgebras over B₀")?;
    let candidates = subspaces_containing(b0)?;
    let found: Vec<Subspace> = candidates
        .into_par_iter()
        .filter(|s| a.is_unital_subalgebra(s))
        .collect();
    Ok(FinitePoset::new(found, |x, y| x.is_subset_of(y), true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::enumerate::DEFAULT_CAP;
    use crate::hopf::{cyclic_group, ground_hopf, group_algebra, sweedler};
    use crate::quotlat::poset_report;

    const GF3: FieldSpec = FieldSpec::Prime(3);

    #[test]
    fn c2_has_two_quotients_and_two_coideal_subalgebras() {
        let h = group_algebra(&cyclic_group(2), GF3).unwrap();
        let q = enumerate_ricos(&h, DEFAULT_CAP).unwrap();
        assert_eq!(q.len(), 2);
        assert!(q.get(0).ideal().is_zero());
        assert_eq!(q.get(1).ideal(), &Subspace::span_i64(GF3, 2, &[[-1, 1]]));
        assert_eq!(enumerate_coideal_subalgebras(&h, DEFAULT_CAP).unwrap().len(), 2);
    }

    #[test]
    fn ground_field_has_one_quotient() {
        assert_eq!(enumerate_ricos(&ground_hopf(GF3), DEFAULT_CAP).unwrap().len(), 1);
    }

    /// Hand count: k, k[g], H and the family span{1, x + λ(1 − g)}, λ ∈ GF(3).
    #[test]
    fn sweedler_counts() {
        let h = sweedler(GF3).unwrap();
        let q = enumerate_ricos(&h, DEFAULT_CAP).unwrap();
        let k = enumerate_coideal_subalgebras(&h, DEFAULT_CAP).unwrap();
        assert_eq!(k.len(), 6);
        assert_eq!(q.len(), 6);
        let r = poset_report(&q).unwrap();
        assert!(r.is_lattice);
        assert_eq!(r.top, Some(0));
        assert!(q.get(r.bottom.unwrap()).ideal() == &h.augmentation_ideal());
    }

    #[test]
    fn subgroups_of_s3() {
        let (t, _) = crate::hopf::symmetric_group(3);
        let h = group_algebra(&t, FieldSpec::Prime(2)).unwrap();
        assert_eq!(enumerate_ricos(&h, DEFAULT_CAP).unwrap().len(), 6);
    }

    #[test]
    fn refusals() {
        let h = sweedler(FieldSpec::Rational).unwrap();
        assert!(matches!(enumerate_ricos(&h, DEFAULT_CAP), Err(Error::EnumerationUnsupported(_))));
        let h = sweedler(GF3).unwrap();
        assert!(matches!(enumerate_ricos(&h, 3), Err(Error::EnumerationUnsupported(_))));
    }

    #[test]
    fn subalgebras_of_sweedler_over_scalars() {
        let h = sweedler(GF3).unwrap();
        let one = Subspace::span_i64(GF3, 4, &[[1, 0, 0, 0]]);
        let p = enumerate_subalgebras_over(h.algebra(), &one, DEFAULT_CAP).unwrap();
        assert!(p.elements().iter().all(|s| h.algebra().is_unital_subalgebra(s)));
        assert!(p.elements().contains(&one) && p.elements().contains(&Subspace::full(GF3, 4)));
    }
}
