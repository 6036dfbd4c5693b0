use crate::error::{Error, Result};
use crate::exactla::{flip, Matrix, Subspace};
use crate::hopf::{coopposite, tensor_product_mult, AlgebraData, HopfAlgebraData, ValidationReport};

/// A right `H`-comodule algebra `δ : A → A ⊗ H`.
///
/// `coaction` is the `(m·n) × m` matrix of `δ`; row `a·n + h` holds the
/// coefficient of `e_a ⊗ e_h`. The coinvariant subalgebra is computed once at
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebraData {
    hopf: HopfAlgebraData,
    algebra: AlgebraData,
    coaction: Matrix,
    coinvariants: Subspace,
}

impl ComoduleAlgebraData {
    /// Checks shapes only; see [`validate_comodule_algebra`] for the axioms.
    pub fn new(hopf: HopfAlgebraData, algebra: AlgebraData, coaction: Matrix) -> Result<Self> {
        let (m, n) = (algebra.dim(), hopf.dim());
        if coaction.rows() != m * n || coaction.cols() != m {
            return Err(Error::Dimension(format!(
                "coaction must be {}×{m}, got {}×{}",
                m * n,
                coaction.rows(),
                coaction.cols()
            )));
        }
        for f in [algebra.field(), coaction.field()] {
            if f != hopf.field() {
                return Err(Error::FieldMismatch(hopf.field(), f));
            }
        }
        let coinvariants = coinvariant_map(&hopf, &algebra, &coaction).kernel();
        Ok(ComoduleAlgebraData { hopf, algebra, coaction, coinvariants })
    }

    /// Builds the comodule algebra from a left coaction `λ : A → H ⊗ A`,
    /// read as the right `H^cop`-coaction `τ ∘ λ`.
    pub fn from_left_coaction(hopf: &HopfAlgebraData, algebra: AlgebraData, left: Matrix) -> Result<Self> {
        let (m, n) = (algebra.dim(), hopf.dim());
        if left.rows() != n * m || left.cols() != m {
            return Err(Error::Dimension(format!("left coaction must be {}×{m}", n * m)));
        }
        let right = flip(hopf.field(), n, m).mul(&left);
        ComoduleAlgebraData::new(coopposite(hopf)?, algebra, right)
    }

    pub fn hopf(&self) -> &HopfAlgebraData {
        &self.hopf
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `A^{co H}`.
    pub fn coinvariants(&self) -> &Subspace {
        &self.coinvariants
    }
}

/// `a ↦ δ(a) − a ⊗ 1`.
fn coinvariant_map(h: &HopfAlgebraData, a: &AlgebraData, coaction: &Matrix) -> Matrix {
    let a_one = Matrix::identity(h.field(), a.dim()).kron(h.unit());
    coaction.sub(&a_one)
}

/// Checks the four comodule-algebra axioms as matrix identities.
pub fn validate_comodule_algebra(a: &ComoduleAlgebraData) -> ValidationReport {
    let h = a.hopf();
    let f = h.field();
    let (m, n) = (a.dim(), h.dim());
    let d = a.coaction();
    let id_a = Matrix::identity(f, m);
    let id_h = Matrix::identity(f, n);
    let mut r = ValidationReport::new("comodule algebra", a.algebra().labels().to_vec());

    r.compare("coassociativity", &d.kron(&id_h).mul(d), &id_a.kron(h.comult()).mul(d), &[m]);
    r.compare("counit", &id_a.kron(h.counit()).mul(d), &id_a, &[m]);
    let m_ah = tensor_product_mult(a.algebra().mult(), m, h.mult(), n);
    r.compare(
        "coaction is multiplicative",
        &d.mul(a.algebra().mult()),
        &m_ah.mul(&d.kron(d)),
        &[m, m],
    );
    r.compare("coaction is unital", &d.mul(a.algebra().unit()), &a.algebra().unit().kron(h.unit()), &[]);
    r
}

fn validated(a: ComoduleAlgebraData) -> Result<ComoduleAlgebraData> {
    let report = validate_comodule_algebra(&a);
    if report.all_pass() {
        Ok(a)
    } else {
        Err(Error::Axioms(report))
    }
}

/// `H` coacting on itself by `Δ`.
pub fn regular(h: &HopfAlgebraData) -> ComoduleAlgebraData {
    ComoduleAlgebraData::new(h.clone(), h.algebra().clone(), h.comult().clone())
        .expect("Δ has the shape of a coaction")
}

/// `δ(a) = a ⊗ 1`.
pub fn trivial(h: &HopfAlgebraData, algebra: &AlgebraData) -> Result<ComoduleAlgebraData> {
    let coaction = Matrix::identity(h.field(), algebra.dim()).kron(h.unit());
    validated(ComoduleAlgebraData::new(h.clone(), algebra.clone(), coaction)?)
}

/// `A^{co H}`, checked to be a unital subalgebra.
pub fn coinvariants(a: &ComoduleAlgebraData) -> Result<Subspace> {
    let s = a.coinvariants().clone();
    ensure_subalgebra(a, &s, "coinvariants")?;
    Ok(s)
}

/// `A^{co H/I} = {a : δ(a) − a⊗1 ∈ A⊗I}`.
///
/// Membership in `A ⊗ I` is tested by projecting the `H` leg onto `H/I`.
/// For a coideal right ideal `I` the result is a unital subalgebra; this is
/// checked and reported as an invariant violation otherwise.
pub fn coinvariants_q(a: &ComoduleAlgebraData, ideal: &Subspace) -> Result<Subspace> {
    let s = coinvariants_q_unchecked(a, ideal)?;
    ensure_subalgebra(a, &s, "coinvariants_q")?;
    Ok(s)
}

pub(crate) fn coinvariants_q_unchecked(a: &ComoduleAlgebraData, ideal: &Subspace) -> Result<Subspace> {
    let h = a.hopf();
    if ideal.ambient() != h.dim() {
        return Err(Error::Dimension(format!(
            "ideal lives in dimension {}, but H has dimension {}",
            ideal.ambient(),
            h.dim()
        )));
    }
    if ideal.field() != h.field() {
        return Err(Error::FieldMismatch(h.field(), ideal.field()));
    }
    if ideal.is_zero() {
        return Ok(a.coinvariants().clone());
    }
    let proj = ideal.quotient_data().proj;
    let lifted = Matrix::identity(h.field(), a.dim()).kron(&proj);
    Ok(lifted.mul(&coinvariant_map(h, a.algebra(), a.coaction())).kernel())
}

fn ensure_subalgebra(a: &ComoduleAlgebraData, s: &Subspace, what: &str) -> Result<()> {
    if a.algebra().is_unital_subalgebra(s) {
        Ok(())
    } else {
        Err(Error::Invariant(format!("{what} returned {s}, which is not a unital subalgebra")))
    }
}
