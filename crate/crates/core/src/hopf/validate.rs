use std::fmt;

use super::structure::{tensor_product_mult, HopfAlgebraData};
use crate::exactla::Matrix;

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Basis multi-index of an input on which the two sides differ.
    pub witness: Option<Vec<usize>>,
}

/// Named pass/fail results for every axiom of a structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Empty for Hopf algebras.
    pub kind: &'static str,
    pub checks: Vec<AxiomCheck>,
    labels: Vec<String>,
}

impl ValidationReport {
    pub(crate) fn new(kind: &'static str, labels: Vec<String>) -> Self {
        ValidationReport { kind, checks: Vec::new(), labels }
    }

    pub(crate) fn push(&mut self, name: &'static str, witness: Option<Option<Vec<usize>>>) {
        // outer None: passed; inner value: the witness, if one is meaningful
        let passed = witness.is_none();
        self.checks.push(AxiomCheck { name, passed, witness: witness.flatten() });
    }

    /// Compares two maps with the same source `⊗ dims` and records the first
    /// differing input column as a multi-index.
    pub(crate) fn compare(&mut self, name: &'static str, lhs: &Matrix, rhs: &Matrix, dims: &[usize]) {
        let w = lhs.first_differing_column(rhs).map(|c| Some(split_index(c, dims)));
        self.push(name, w);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn describe(&self, idx: &[usize]) -> String {
        idx.iter()
            .map(|&i| self.labels.get(i).cloned().unwrap_or_else(|| format!("e{i}")))
            .collect::<Vec<_>>()
            .join(" ⊗ ")
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "  pass  {}", c.name)?;
            } else {
                match &c.witness {
                    Some(w) if !w.is_empty() => {
                        writeln!(f, "  FAIL  {}  (witness {})", c.name, self.describe(w))?
                    }
                    _ => writeln!(f, "  FAIL  {}", c.name)?,
                }
            }
        }
        match self.kind {
            "" => write!(f, "{}/{} axioms pass", self.passed(), self.len()),
            kind => write!(f, "{}/{} {kind} axioms pass", self.passed(), self.len()),
        }
    }
}

/// Splits a flattened tensor index into its factors, last factor fastest.
pub(crate) fn split_index(mut c: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = c % d;
        c /= d;
    }
    out
}

/// Checks all ten Hopf algebra axioms.
///
/// Shapes are guaranteed by [`HopfAlgebraData::new`], so this never fails
/// structurally; it reports which identities hold.
pub fn validate_hopf(h: &HopfAlgebraData) -> ValidationReport {
    let n = h.dim();
    let f = h.field();
    let id = Matrix::identity(f, n);
    let one = Matrix::identity(f, 1);
    let (m, u, d, e, s) = (h.mult(), h.unit(), h.comult(), h.counit(), h.antipode());
    let mut r = ValidationReport::new("", h.labels().to_vec());

    r.compare("associativity", &m.mul(&m.kron(&id)), &m.mul(&id.kron(m)), &[n, n, n]);

    let left_unit = m.mul(&u.kron(&id));
    let right_unit = m.mul(&id.kron(u));
    let w = id
        .first_differing_column(&left_unit)
        .or_else(|| id.first_differing_column(&right_unit))
        .map(|c| Some(vec![c]));
    r.push("unit", w);

    r.compare("coassociativity", &d.kron(&id).mul(d), &id.kron(d).mul(d), &[n]);

    let left_counit = e.kron(&id).mul(d);
    let right_counit = id.kron(e).mul(d);
    let w = id
        .first_differing_column(&left_counit)
        .or_else(|| id.first_differing_column(&right_counit))
        .map(|c| Some(vec![c]));
    r.push("counit", w);

    let m_hh = tensor_product_mult(m, n, m, n);
    r.compare(
        "comultiplication is multiplicative",
        &d.mul(m),
        &m_hh.mul(&d.kron(d)),
        &[n, n],
    );
    r.compare("counit is multiplicative", &e.mul(m), &e.kron(e), &[n, n]);
    r.compare("comultiplication is unital", &d.mul(u), &u.kron(u), &[]);
    r.compare("counit is unital", &e.mul(u), &one, &[]);

    let ue = u.mul(e);
    let left = m.mul(&s.kron(&id)).mul(d);
    let right = m.mul(&id.kron(s)).mul(d);
    let w = ue
        .first_differing_column(&left)
        .or_else(|| ue.first_differing_column(&right))
        .map(|c| Some(vec![c]));
    r.push("antipode", w);

    r.push("antipode is invertible", if s.rank() == n { None } else { Some(None) });
    r
}
