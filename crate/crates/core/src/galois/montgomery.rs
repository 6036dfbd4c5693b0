use rayon::prelude::*;

use super::canonical::is_q_galois;
use super::connection::{phi, psi_regular};
use crate::comod::regular;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraData;
use crate::quotlat::{enumerate_coideal_subalgebras, enumerate_ricos, validate_coideal_subalgebra};

/// The two conditions characterising when the correspondence between coideal
/// subalgebras and generalised quotients of `H` is bijective.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MontgomeryReport {
    /// Every `Q` is `Q`-Galois for `regular(H)`.
    pub cond1: bool,
    /// `φψ(K) ⊆ K` for every coideal subalgebra `K`.
    pub cond2: bool,
    /// `φ` and `ψ` are mutually inverse on the enumerated posets.
    pub bijection: bool,
}

pub fn check_montgomery_conditions(h: &HopfAlgebraData, cap: usize) -> Result<MontgomeryReport> {
    let a = regular(h);
    let quotients = enumerate_ricos(h, cap)?;
    let subalgebras = enumerate_coideal_subalgebras(h, cap)?;

    let q_side = quotients
        .elements()
        .par_iter()
        .map(|q| {
            let b = phi(&a, q)?;
            let back = match validate_coideal_subalgebra(h, &b) {
                Ok(k) => psi_regular(h, &k)?.ideal() == q.ideal(),
                Err(_) => false,
            };
            Ok((is_q_galois(&a, q)?, back))
        })
        .collect::<Result<Vec<_>>>()?;
    let k_side = subalgebras
        .elements()
        .par_iter()
        .map(|k| {
            let closure = phi(&a, &psi_regular(h, k)?)?;
            Ok((closure.is_subset_of(k.space()), &closure == k.space()))
        })
        .collect::<Result<Vec<_>>>()?;

    let cond1 = q_side.iter().all(|&(g, _)| g);
    let cond2 = k_side.iter().all(|&(c, _)| c);
    let bijection = q_side.iter().all(|&(_, b)| b) && k_side.iter().all(|&(_, b)| b);
    if bijection != (cond1 && cond2) {
        return Err(Error::Falsified(format!(
            "bijection is {bijection} but cond1 ∧ cond2 is {}",
            cond1 && cond2
        )));
    }
    Ok(MontgomeryReport { cond1, cond2, bijection })
}
