use rayon::prelude::*;

use crate::comod::{coinvariants_q, ComoduleAlgebraData};
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::hopf::HopfAlgebraData;
use crate::quotlat::{
    cogenerated_rico, enumerate_ricos, validate_rico, CoidealSubalgebra, FinitePoset, GeneralisedQuotient,
};

fn check_quotient(a: &ComoduleAlgebraData, q: &GeneralisedQuotient) -> Result<()> {
    if q.ideal().ambient() != a.hopf().dim() || q.ideal().field() != a.hopf().field() {
        return Err(Error::Dimension("quotient belongs to a different Hopf algebra".into()));
    }
    Ok(())
}

/// `φ(Q) = A^{co Q}`.
pub fn phi(a: &ComoduleAlgebraData, q: &GeneralisedQuotient) -> Result<Subspace> {
    check_quotient(a, q)?;
    coinvariants_q(a, q.ideal())
}

/// `ψ(B) = ⋁ {Q : B ⊆ A^{co Q}}` over an exhaustively enumerated `Quot_gen(H)`.
///
/// The join in `Quot_gen(H)` is the quotient by the largest coideal right
/// ideal inside the intersection of the selected ideals. Over `Q` no
/// exhaustive poset exists; use [`psi_regular`] for `A = H`.
pub fn psi_enum(
    a: &ComoduleAlgebraData,
    b: &Subspace,
    quotients: &FinitePoset<GeneralisedQuotient>,
) -> Result<GeneralisedQuotient> {
    if !quotients.is_exhaustive() {
        return Err(Error::Precondition(
            "ψ is a join over all of Quot_gen(H); a partial enumeration gives wrong answers".into(),
        ));
    }
    let phis = quotients
        .elements()
        .par_iter()
        .map(|q| phi(a, q))
        .collect::<Result<Vec<_>>>()?;
    join_selected(a.hopf(), b, quotients.elements(), &phis)
}

fn join_selected(
    h: &HopfAlgebraData,
    b: &Subspace,
    quotients: &[GeneralisedQuotient],
    phis: &[Subspace],
) -> Result<GeneralisedQuotient> {
    if b.ambient() != phis.first().map_or(b.ambient(), Subspace::ambient) {
        return Err(Error::Dimension("B does not live in A".into()));
    }
    let mut meet = Subspace::full(h.field(), h.dim());
    for (q, p) in quotients.iter().zip(phis) {
        if b.is_subset_of(p) {
            meet = meet.intersect(q.ideal())?;
        }
    }
    Ok(validate_rico(h, &cogenerated_rico(h, &meet)?)?)
}

/// `ψ(K) = H / K⁺H` for a coideal subalgebra of `H` coacting on itself.
pub fn psi_regular(h: &HopfAlgebraData, k: &CoidealSubalgebra) -> Result<GeneralisedQuotient> {
    let plus = k.space().intersect(&h.augmentation_ideal())?;
    let f = h.field();
    let n = h.dim();
    let mut products = Vec::with_capacity(plus.dim() * n);
    for v in plus.basis_elems() {
        for e in 0..n {
            let mut unit = vec![f.zero(); n];
            unit[e] = f.one();
            products.push(h.algebra().product(&v, &unit));
        }
    }
    let ideal = Subspace::from_elem_vectors(f, n, products);
    Ok(validate_rico(h, &ideal)?)
}

/// A comodule algebra together with its enumerated `Quot_gen(H)` and the
/// cached values of `φ`.
#[derive(Clone, Debug)]
pub struct GaloisConnectionInstance {
    comodule: ComoduleAlgebraData,
    quotients: FinitePoset<GeneralisedQuotient>,
    phi: Vec<Subspace>,
}

impl GaloisConnectionInstance {
    pub fn new(a: &ComoduleAlgebraData, cap: usize) -> Result<Self> {
        Self::from_quotients(a, enumerate_ricos(a.hopf(), cap)?)
    }

    pub fn from_quotients(a: &ComoduleAlgebraData, quotients: FinitePoset<GeneralisedQuotient>) -> Result<Self> {
        if !quotients.is_exhaustive() {
            return Err(Error::Precondition("the Galois connection needs all of Quot_gen(H)".into()));
        }
        let phi = quotients
            .elements()
            .par_iter()
            .map(|q| phi(a, q))
            .collect::<Result<Vec<_>>>()?;
        Ok(GaloisConnectionInstance { comodule: a.clone(), quotients, phi })
    }

    pub fn comodule(&self) -> &ComoduleAlgebraData {
        &self.comodule
    }

    pub fn quotients(&self) -> &FinitePoset<GeneralisedQuotient> {
        &self.quotients
    }

    /// `φ(Q_i)`.
    pub fn phi(&self, i: usize) -> &Subspace {
        &self.phi[i]
    }

    pub fn phi_values(&self) -> &[Subspace] {
        &self.phi
    }

    /// Index of `ψ(B)` among the enumerated quotients.
    pub fn psi_index(&self, b: &Subspace) -> Result<usize> {
        let q = join_selected(self.comodule.hopf(), b, self.quotients.elements(), &self.phi)?;
        self.index_of(q.ideal())
    }

    pub fn psi(&self, b: &Subspace) -> Result<&GeneralisedQuotient> {
        Ok(self.quotients.get(self.psi_index(b)?))
    }

    pub fn index_of(&self, ideal: &Subspace) -> Result<usize> {
        self.quotients
            .position(|q| q.ideal() == ideal)
            .ok_or_else(|| Error::Invariant(format!("{ideal} is missing from the enumerated Quot_gen(H)")))
    }

    /// Checks `B ⊆ φψ(B)` for each given subalgebra and `Q ⪯ ψφ(Q)` for every
    /// enumerated quotient.
    pub fn check_galois_property(&self, subalgebras: &[Subspace]) -> Result<()> {
        for b in subalgebras {
            let back = self.phi(self.psi_index(b)?);
            if !b.is_subset_of(back) {
                return Err(Error::Falsified(format!("B = {b} is not contained in φψ(B) = {back}")));
            }
        }
        for (i, q) in self.quotients.elements().iter().enumerate() {
            let j = self.psi_index(self.phi(i))?;
            if !q.precedes(self.quotients.get(j)) {
                return Err(Error::Falsified(format!(
                    "Q with ideal {} does not precede ψφ(Q) with ideal {}",
                    q.ideal(),
                    self.quotients.get(j).ideal()
                )));
            }
        }
        Ok(())
    }
}
