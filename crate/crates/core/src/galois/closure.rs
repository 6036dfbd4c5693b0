use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canonical::{canonical_map, is_q_galois};
use super::connection::GaloisConnectionInstance;
use crate::comod::ComoduleAlgebraData;
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::quotlat::{validate_rico, GeneralisedQuotient};

/// Closed elements of the Galois connection of a comodule algebra.
///
/// Quotients are the enumerated `Quot_gen(H)`. Closed subalgebras are the
/// images of `φ`, sorted canonically.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub quotients: Vec<GeneralisedQuotient>,
    /// `φ(Q_i)`.
    pub phi: Vec<Subspace>,
    /// Index of `ψφ(Q_i)`.
    pub psi_phi: Vec<usize>,
    pub q_galois: Vec<bool>,
    pub closed_quotients: Vec<usize>,
    pub closed_subalgebras: Vec<Subspace>,
    /// Index in `closed_subalgebras` of `φψ(B_j)`.
    pub phi_psi: Vec<usize>,
    /// Whether `can_H : A ⊗_{A^{co H}} A → A ⊗ H` is onto.
    pub can_h_surjective: bool,
}

impl ClosureReport {
    pub fn is_closed(&self, i: usize) -> bool {
        self.psi_phi[i] == i
    }

    pub fn q_galois_quotients(&self) -> Vec<usize> {
        (0..self.quotients.len()).filter(|&i| self.q_galois[i]).collect()
    }

    /// Whether the closed quotients are exactly the `Q`-Galois ones.
    pub fn closed_equals_q_galois(&self) -> bool {
        self.closed_quotients == self.q_galois_quotients()
    }
}

fn falsified<T>(msg: String) -> Result<T> {
    Err(Error::Falsified(msg))
}

/// Computes the closure tables and checks the closure-operator laws.
///
/// Fails with [`Error::Falsified`] if a closure map is not idempotent, if `φ`
/// and `ψ` are not mutually inverse on closed elements, or if `can_H` is onto
/// and some `Q`-Galois quotient is not closed.
pub fn closure_report(a: &ComoduleAlgebraData, cap: usize) -> Result<ClosureReport> {
    let g = GaloisConnectionInstance::new(a, cap)?;
    report_from(&g)
}

pub(crate) fn report_from(g: &GaloisConnectionInstance) -> Result<ClosureReport> {
    let a = g.comodule();
    let quotients = g.quotients().elements().to_vec();
    let phi = g.phi_values().to_vec();
    let n = quotients.len();
    let (psi_phi, q_galois): (Vec<usize>, Vec<bool>) = quotients
        .par_iter()
        .zip(&phi)
        .map(|(q, p)| Ok((g.psi_index(p)?, is_q_galois(a, q)?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    let top = validate_rico(a.hopf(), &Subspace::zero(a.hopf().field(), a.hopf().dim()))?;
    let can_h_surjective = canonical_map(a, &top)?.is_surjective();

    for i in 0..n {
        if psi_phi[psi_phi[i]] != psi_phi[i] {
            return falsified(format!("ψφ is not idempotent at quotient {i}"));
        }
        if !quotients[i].precedes(&quotients[psi_phi[i]]) {
            return falsified(format!("quotient {i} does not precede its closure"));
        }
    }
    let closed_quotients: Vec<usize> = (0..n).filter(|&i| psi_phi[i] == i).collect();
    let image: BTreeSet<usize> = psi_phi.iter().copied().collect();
    if image.into_iter().collect::<Vec<_>>() != closed_quotients {
        return falsified("closed quotients differ from the image of ψ".into());
    }

    let mut closed_subalgebras: Vec<Subspace> = phi.clone();
    closed_subalgebras.sort();
    closed_subalgebras.dedup();
    let phi_psi = closed_subalgebras
        .iter()
        .map(|b| {
            let back = &phi[g.psi_index(b)?];
            Ok(closed_subalgebras.binary_search(back).ok())
        })
        .collect::<Result<Vec<_>>>()?;
    let phi_psi = phi_psi
        .into_iter()
        .enumerate()
        .map(|(j, k)| match k {
            Some(k) if k == j => Ok(k),
            _ => falsified(format!("φψ moves the φ-image {}", closed_subalgebras[j])),
        })
        .collect::<Result<Vec<_>>>()?;

    // φ and ψ are inverse bijections between the closed sets
    let mut seen = BTreeSet::new();
    for &i in &closed_quotients {
        if !seen.insert(&phi[i]) {
            return falsified(format!("φ is not injective on closed quotients: {}", phi[i]));
        }
    }
    if seen.len() != closed_subalgebras.len() {
        return falsified("φ does not map the closed quotients onto the closed subalgebras".into());
    }

    if can_h_surjective {
        if let Some(i) = (0..n).find(|&i| q_galois[i] && psi_phi[i] != i) {
            return falsified(format!(
                "quotient by {} is Q-Galois but not closed",
                quotients[i].ideal()
            ));
        }
    }

    Ok(ClosureReport {
        quotients,
        phi,
        psi_phi,
        q_galois,
        closed_quotients,
        closed_subalgebras,
        phi_psi,
        can_h_surjective,
    })
}

/// Pairs `(I_Q, A^{co Q})` of the anti-isomorphism `Quot_gen(H) ≅ Sub_{H-ext}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdimCertificate {
    pub pairs: Vec<(Subspace, Subspace)>,
}

/// For an `H`-Galois extension, checks that every generalised quotient is
/// `Q`-Galois and closed, and that `Q ↦ A^{co Q}` is an order anti-embedding.
pub fn check_fdim_bijection(a: &ComoduleAlgebraData, cap: usize) -> Result<FdimCertificate> {
    let top = validate_rico(a.hopf(), &Subspace::zero(a.hopf().field(), a.hopf().dim()))?;
    let can = canonical_map(a, &top)?;
    if !can.bijective {
        return Err(Error::Precondition(format!(
            "can_H : A⊗_B A → A⊗H is not bijective (domain {}, codomain {}, rank {}); A/A^{{co H}} is not H-Galois",
            can.tensor_dim,
            can.matrix.rows(),
            can.rank
        )));
    }
    let g = GaloisConnectionInstance::new(a, cap)?;
    let r = report_from(&g)?;
    let p = g.quotients();
    let n = p.len();
    if let Some(i) = (0..n).find(|&i| !r.q_galois[i]) {
        return falsified(format!("quotient by {} is not Q-Galois", p.get(i).ideal()));
    }
    if let Some(i) = (0..n).find(|&i| !r.is_closed(i)) {
        return falsified(format!("quotient by {} is not closed", p.get(i).ideal()));
    }
    for i in 0..n {
        for j in 0..n {
            let reversed = r.phi[j].is_subset_of(&r.phi[i]);
            if p.leq(i, j) != reversed {
                return falsified(format!(
                    "order is not reversed between quotients {i} and {j}: Q_i ⪯ Q_j is {}, φ(Q_j) ⊆ φ(Q_i) is {reversed}",
                    p.leq(i, j)
                ));
            }
        }
    }
    Ok(FdimCertificate {
        pairs: p.elements().iter().zip(r.phi).map(|(q, b)| (q.ideal().clone(), b)).collect(),
    })
}

/// Checks `A^{co Q₁} = A^{co Q₂} ⇒ Q₁ = Q₂` for two `Q`-Galois quotients when
/// `can_H` is onto.
pub fn check_mono_on_qgalois(
    a: &ComoduleAlgebraData,
    q1: &GeneralisedQuotient,
    q2: &GeneralisedQuotient,
) -> Result<bool> {
    let top = validate_rico(a.hopf(), &Subspace::zero(a.hopf().field(), a.hopf().dim()))?;
    if !canonical_map(a, &top)?.is_surjective() {
        return Err(Error::Precondition("can_H is not surjective".into()));
    }
    let c1 = canonical_map(a, q1)?;
    let c2 = canonical_map(a, q2)?;
    for (c, q) in [(&c1, q1), (&c2, q2)] {
        if !c.bijective {
            return Err(Error::Precondition(format!("quotient by {} is not Q-Galois", q.ideal())));
        }
    }
    Ok(c1.base != c2.base || q1.ideal() == q2.ideal())
}
