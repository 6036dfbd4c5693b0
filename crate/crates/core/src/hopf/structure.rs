use crate::error::{Error, Result};
use crate::exactla::{elems_to_scalars, flip, Elem, FieldSpec, Matrix, Scalar, Subspace};

/// A finite-dimensional unital algebra given by structure constants.
///
/// `mult` is the `n × n²` matrix of `m : A ⊗ A → A`, so column `i·n + j`
/// holds the coordinates of `e_i e_j`. `unit` is the `n × 1` column of `1_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    mult: Matrix,
    unit: Matrix,
    labels: Vec<String>,
}

/// A finite-dimensional coalgebra: `comult` is `n² × n`, `counit` is `1 × n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    comult: Matrix,
    counit: Matrix,
}

/// A finite-dimensional Hopf algebra on a single basis.
///
/// Construction only checks shapes and fields. Use
/// [`validate_hopf`](crate::hopf::validate_hopf) for the axioms; the built-in
/// constructors in [`crate::hopf`] validate eagerly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
    antipode: Matrix,
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

impl AlgebraData {
    pub fn new(mult: Matrix, unit: Matrix, labels: Vec<String>) -> Result<Self> {
        let n = mult.rows();
        if mult.cols() != n * n {
            return Err(Error::Dimension(format!(
                "multiplication must be {n}×{}, got {}×{}",
                n * n,
                mult.rows(),
                mult.cols()
            )));
        }
        if unit.rows() != n || unit.cols() != 1 {
            return Err(Error::Dimension(format!("unit must be a column of length {n}")));
        }
        if unit.field() != mult.field() {
            return Err(Error::FieldMismatch(mult.field(), unit.field()));
        }
        let labels = if labels.is_empty() { default_labels(n) } else { labels };
        if labels.len() != n {
            return Err(Error::Dimension(format!("{} labels for dimension {n}", labels.len())));
        }
        Ok(AlgebraData { mult, unit, labels })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: FieldSpec) -> Self {
        AlgebraData {
            mult: Matrix::identity(field, 1),
            unit: Matrix::identity(field, 1),
            labels: vec!["1".into()],
        }
    }

    pub fn dim(&self) -> usize {
        self.mult.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.mult.field()
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::Dimension("label count differs from dimension".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub(crate) fn unit_elems(&self) -> Vec<Elem> {
        self.unit.column(0)
    }

    pub(crate) fn product(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let n = self.dim();
        let mut out = vec![f.zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let c = f.mul(ai, bj);
                let col = i * n + j;
                for (k, o) in out.iter_mut().enumerate() {
                    let s = self.mult.at(k, col);
                    if !f.is_zero(s) {
                        f.mul_add_assign(o, &c, s);
                    }
                }
            }
        }
        out
    }

    /// Product of two elements given by coordinates.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
        let f = self.field();
        let (a, b) = (crate::exactla::scalars_to_elems(f, a)?, crate::exactla::scalars_to_elems(f, b)?);
        if a.len() != self.dim() || b.len() != self.dim() {
            return Err(Error::Dimension("coordinate vector has wrong length".into()));
        }
        Ok(elems_to_scalars(f, &self.product(&a, &b)))
    }

    /// Matrix of `x ↦ a·x`.
    pub(crate) fn left_mult(&self, a: &[Elem]) -> Matrix {
        let col = Matrix::from_elem_columns(self.field(), self.dim(), &[a.to_vec()]);
        self.mult.mul(&col.kron(&Matrix::identity(self.field(), self.dim())))
    }

    /// Matrix of `x ↦ x·a`.
    pub(crate) fn right_mult(&self, a: &[Elem]) -> Matrix {
        let col = Matrix::from_elem_columns(self.field(), self.dim(), &[a.to_vec()]);
        self.mult.mul(&Matrix::identity(self.field(), self.dim()).kron(&col))
    }

    /// `A ⊗ B` with the componentwise product.
    pub fn tensor(&self, other: &AlgebraData) -> Result<AlgebraData> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        let mult = tensor_product_mult(&self.mult, self.dim(), &other.mult, other.dim());
        let unit = self.unit.kron(&other.unit);
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        AlgebraData::new(mult, unit, labels)
    }

    /// The opposite algebra: multiplication precomposed with the flip.
    pub fn opposite(&self) -> AlgebraData {
        let n = self.dim();
        AlgebraData {
            mult: self.mult.mul(&flip(self.field(), n, n)),
            unit: self.unit.clone(),
            labels: self.labels.clone(),
        }
    }

    /// `Ok(())` if `s` contains 1 and is closed under multiplication;
    /// otherwise the offending vector (the unit, or a product of basis vectors).
    pub(crate) fn check_unital_subalgebra(&self, s: &Subspace) -> Result<(), Vec<Elem>> {
        let one = self.unit_elems();
        if !s.contains_elems(&one) {
            return Err(one);
        }
        let basis = s.basis_elems();
        for a in &basis {
            for b in &basis {
                let ab = self.product(a, b);
                if !s.contains_elems(&ab) {
                    return Err(ab);
                }
            }
        }
        Ok(())
    }

    pub fn is_unital_subalgebra(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim() && s.field() == self.field() && self.check_unital_subalgebra(s).is_ok()
    }
}

/// Multiplication of `A ⊗ B` from those of `A` and `B`:
/// `(a⊗b)(a'⊗b') = aa' ⊗ bb'`.
pub(crate) fn tensor_product_mult(ma: &Matrix, na: usize, mb: &Matrix, nb: usize) -> Matrix {
    ma.kron(mb).flip_columns(na, nb, na, nb)
}

impl CoalgebraData {
    pub fn new(comult: Matrix, counit: Matrix) -> Result<Self> {
        let n = comult.cols();
        if comult.rows() != n * n {
            return Err(Error::Dimension(format!(
                "comultiplication must be {}×{n}, got {}×{}",
                n * n,
                comult.rows(),
                comult.cols()
            )));
        }
        if counit.rows() != 1 || counit.cols() != n {
            return Err(Error::Dimension(format!("counit must be a row of length {n}")));
        }
        if counit.field() != comult.field() {
            return Err(Error::FieldMismatch(comult.field(), counit.field()));
        }
        Ok(CoalgebraData { comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.comult.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.comult.field()
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }
}

impl HopfAlgebraData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData, antipode: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if coalgebra.dim() != n {
            return Err(Error::Dimension(format!(
                "algebra has dimension {n} but coalgebra has dimension {}",
                coalgebra.dim()
            )));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Dimension(format!("antipode must be {n}×{n}")));
        }
        for f in [coalgebra.field(), antipode.field()] {
            if f != algebra.field() {
                return Err(Error::FieldMismatch(algebra.field(), f));
            }
        }
        Ok(HopfAlgebraData { algebra, coalgebra, antipode })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn mult(&self) -> &Matrix {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &Matrix {
        self.algebra.unit()
    }

    pub fn comult(&self) -> &Matrix {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &Matrix {
        self.coalgebra.counit()
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub(crate) fn unit_elems(&self) -> Vec<Elem> {
        self.algebra.unit_elems()
    }

    /// `ker ε`, the largest coideal right ideal.
    pub fn augmentation_ideal(&self) -> Subspace {
        self.counit().kernel()
    }

    pub(crate) fn with_parts(
        &self,
        mult: Option<Matrix>,
        comult: Option<Matrix>,
        antipode: Option<Matrix>,
    ) -> HopfAlgebraData {
        let mut h = self.clone();
        if let Some(m) = mult {
            h.algebra.mult = m;
        }
        if let Some(c) = comult {
            h.coalgebra.comult = c;
        }
        if let Some(s) = antipode {
            h.antipode = s;
        }
        h
    }

    /// Replace a single structure constant; used to build perturbed
    /// counterexamples for the validator.
    pub fn perturbed(&self, part: StructurePart, row: usize, col: usize, delta: i64) -> Result<Self> {
        let f = self.field();
        let mut h = self.clone();
        let target = match part {
            StructurePart::Mult => &mut h.algebra.mult,
            StructurePart::Unit => &mut h.algebra.unit,
            StructurePart::Comult => &mut h.coalgebra.comult,
            StructurePart::Counit => &mut h.coalgebra.counit,
            StructurePart::Antipode => &mut h.antipode,
        };
        if row >= target.rows() || col >= target.cols() {
            return Err(Error::Dimension(format!("entry ({row}, {col}) out of range")));
        }
        let v = target.get(row, col).add(&Scalar::from_i64(f, delta))?;
        target.set(row, col, &v)?;
        Ok(h)
    }
}

/// Names the structure map touched by [`HopfAlgebraData::perturbed`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructurePart {
    Mult,
    Unit,
    Comult,
    Counit,
    Antipode,
}
