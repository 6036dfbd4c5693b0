use super::reason::InvalidReason;
use crate::error::{Error, Result};
use crate::exactla::{elems_to_scalars, Elem, Matrix, Subspace};
use crate::hopf::HopfAlgebraData;

/// A generalised quotient `Q = H/I` for a coideal right ideal `I`.
///
/// Holds the projection `π : H → Q`, the coordinate section `σ : Q → H`, and
/// the induced coalgebra and right `H`-module structure on `Q`. The action
/// matrix is `q × (q·n)` with column `x·n + h` holding `x̄ · e_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralisedQuotient {
    ideal: Subspace,
    proj: Matrix,
    section: Matrix,
    comult: Matrix,
    counit: Matrix,
    action: Matrix,
}

impl GeneralisedQuotient {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn proj(&self) -> &Matrix {
        &self.proj
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    pub fn q_dim(&self) -> usize {
        self.proj.rows()
    }

    /// `Q ⪯ other` in `Quot_gen(H)`, i.e. `I_other ⊆ I_self`.
    pub fn precedes(&self, other: &GeneralisedQuotient) -> bool {
        other.ideal.is_subset_of(&self.ideal)
    }
}

fn witness(h: &HopfAlgebraData, v: &[Elem]) -> Vec<crate::exactla::Scalar> {
    elems_to_scalars(h.field(), v)
}

/// First basis vector `b` of `ideal` with `b·e_h ∉ ideal`, as the product.
pub(crate) fn right_ideal_failure(h: &HopfAlgebraData, ideal: &Subspace) -> Option<Vec<Elem>> {
    let n = h.dim();
    let f = h.field();
    for b in ideal.basis_elems() {
        for e in 0..n {
            let mut unit = vec![f.zero(); n];
            unit[e] = f.one();
            let p = h.algebra().product(&b, &unit);
            if !ideal.contains_elems(&p) {
                return Some(p);
            }
        }
    }
    None
}

/// First basis vector of `ideal` whose coproduct leaves `I⊗H + H⊗I`.
///
/// `I⊗H + H⊗I` is the kernel of `π⊗π`, so membership is one matrix product.
pub(crate) fn coideal_failure(h: &HopfAlgebraData, ideal: &Subspace, proj: &Matrix) -> Option<Vec<Elem>> {
    let f = h.field();
    let pp = proj.kron(proj);
    ideal
        .basis_elems()
        .into_iter()
        .find(|b| pp.apply(&h.comult().apply(b)).iter().any(|e| !f.is_zero(e)))
}

/// Checks that `I` is a coideal right ideal and builds `H/I`.
pub fn validate_rico(h: &HopfAlgebraData, ideal: &Subspace) -> Result<GeneralisedQuotient, InvalidReason> {
    let n = h.dim();
    if ideal.ambient() != n || ideal.field() != h.field() {
        return Err(InvalidReason::Ambient { expected: n, found: ideal.ambient() });
    }
    let f = h.field();
    let eps = h.counit();
    if let Some(b) = ideal.basis_elems().into_iter().find(|b| !f.is_zero(&eps.apply(b)[0])) {
        return Err(InvalidReason::Counit(witness(h, &b)));
    }
    if let Some(p) = right_ideal_failure(h, ideal) {
        return Err(InvalidReason::RightIdeal(witness(h, &p)));
    }
    let q = ideal.quotient_data();
    if let Some(b) = coideal_failure(h, ideal, &q.proj) {
        return Err(InvalidReason::Coideal(witness(h, &b)));
    }
    let quotient = build(h, ideal.clone(), q.proj, q.section);
    check_induced(h, &quotient)?;
    Ok(quotient)
}

fn build(h: &HopfAlgebraData, ideal: Subspace, proj: Matrix, section: Matrix) -> GeneralisedQuotient {
    let comult = proj.kron(&proj).mul(h.comult()).mul(&section);
    let counit = h.counit().mul(&section);
    let id_h = Matrix::identity(h.field(), h.dim());
    let action = proj.mul(h.mult()).mul(&section.kron(&id_h));
    GeneralisedQuotient { ideal, proj, section, comult, counit, action }
}

fn check_induced(h: &HopfAlgebraData, q: &GeneralisedQuotient) -> Result<(), InvalidReason> {
    let f = h.field();
    let qd = q.q_dim();
    let id_q = Matrix::identity(f, qd);
    let id_h = Matrix::identity(f, h.dim());
    let (d, e, act) = (&q.comult, &q.counit, &q.action);
    let fail = |what: &str| Err(InvalidReason::Induced(what.into()));
    if d.kron(&id_q).mul(d) != id_q.kron(d).mul(d) {
        return fail("comultiplication of H/I is not coassociative");
    }
    if e.kron(&id_q).mul(d) != id_q || id_q.kron(e).mul(d) != id_q {
        return fail("counit of H/I fails the counit law");
    }
    if act.mul(&act.kron(&id_h)) != act.mul(&id_q.kron(h.mult())) {
        return fail("right H-action on H/I is not associative");
    }
    if act.mul(&id_q.kron(h.unit())) != id_q {
        return fail("1 does not act as the identity on H/I");
    }
    let one = q.proj.mul(h.unit());
    if d.mul(&one) != one.kron(&one) || e.mul(&one) != Matrix::identity(f, 1) {
        return fail("π(1) is not group-like");
    }
    Ok(())
}

/// Largest coideal right ideal contained in `y`.
///
/// Decreasing fixpoint starting from `y ∩ ker ε`: each round keeps the
/// vectors whose coproduct lies in `I⊗H + H⊗I` and whose right multiples stay
/// in `I`, solved as a kernel on the coefficients over the current basis.
pub fn cogenerated_rico(h: &HopfAlgebraData, y: &Subspace) -> Result<Subspace> {
    if y.ambient() != h.dim() {
        return Err(Error::Dimension(format!(
            "subspace lives in dimension {}, H has dimension {}",
            y.ambient(),
            h.dim()
        )));
    }
    let f = h.field();
    let n = h.dim();
    let mut current = y.intersect(&h.augmentation_ideal())?;
    loop {
        if current.is_zero() {
            return Ok(current);
        }
        let q = current.quotient_data();
        let pp = q.proj.kron(&q.proj);
        let basis = current.basis_elems();
        let mut columns = Vec::with_capacity(basis.len());
        for b in &basis {
            let mut col = pp.apply(&h.comult().apply(b));
            for e in 0..n {
                let mut unit = vec![f.zero(); n];
                unit[e] = f.one();
                col.extend(q.proj.apply(&h.algebra().product(b, &unit)));
            }
            columns.push(col);
        }
        let rows = columns[0].len();
        let conditions = Matrix::from_elem_columns(f, rows, &columns);
        let kept = conditions.kernel();
        if kept.dim() == current.dim() {
            return Ok(current);
        }
        let vectors: Vec<Vec<Elem>> = kept
            .basis_elems()
            .iter()
            .map(|c| {
                let mut v = vec![f.zero(); n];
                for (ci, b) in c.iter().zip(&basis) {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        f.mul_add_assign(vi, ci, bi);
                    }
                }
                v
            })
            .collect();
        current = Subspace::from_elem_vectors(f, n, vectors);
    }
}

fn check_same_ambient(h: &HopfAlgebraData, a: &GeneralisedQuotient, b: &GeneralisedQuotient) -> Result<()> {
    if a.ideal.ambient() != h.dim() || b.ideal.ambient() != h.dim() {
        return Err(Error::Dimension("quotients of different Hopf algebras".into()));
    }
    Ok(())
}

/// `H/(I₁ + I₂)`: the sum of the ideals.
pub fn join_q(h: &HopfAlgebraData, a: &GeneralisedQuotient, b: &GeneralisedQuotient) -> Result<GeneralisedQuotient> {
    check_same_ambient(h, a, b)?;
    Ok(validate_rico(h, &a.ideal.sum(&b.ideal)?)?)
}

/// `H/J` for `J` the largest coideal right ideal inside `I₁ ∩ I₂`.
pub fn meet_q(h: &HopfAlgebraData, a: &GeneralisedQuotient, b: &GeneralisedQuotient) -> Result<GeneralisedQuotient> {
    check_same_ambient(h, a, b)?;
    let j = cogenerated_rico(h, &a.ideal.intersect(&b.ideal)?)?;
    Ok(validate_rico(h, &j)?)
}
