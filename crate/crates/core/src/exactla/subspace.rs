use std::cmp::Ordering;
use std::fmt;

use super::field::{Elem, FieldSpec, Scalar};
use super::matrix::{scalars_to_elems, Matrix};
use crate::error::{Error, Result};

/// A subspace of `k^n` in canonical form.
///
/// The basis rows are the nonzero rows of the reduced row echelon form of any
/// spanning set, so two `Subspace`s are equal exactly when their basis
/// matrices agree entry by entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

/// Projection onto a quotient space together with a section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    /// `π : k^n → k^(n-d)`, with kernel exactly the subspace.
    pub proj: Matrix,
    /// `σ : k^(n-d) → k^n`, the coordinate inclusion of the non-pivot columns.
    pub section: Matrix,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the rows of `m`.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let r = m.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        Subspace { basis: r.matrix.select_rows(&keep), pivots: r.pivots }
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::Dimension(format!(
                    "vector of length {} in ambient dimension {ambient}",
                    v.len()
                )));
            }
            rows.push(scalars_to_elems(field, v)?);
        }
        Ok(Self::from_elem_vectors(field, ambient, rows))
    }

    /// Span of integer vectors, reduced into `field`.
    pub fn span_i64<R: AsRef<[i64]>>(field: FieldSpec, ambient: usize, vectors: &[R]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_i64(field, vectors);
        assert_eq!(m.cols(), ambient, "vector length must equal ambient dimension");
        Subspace::from_matrix_rows(&m)
    }

    pub(crate) fn from_elem_vectors(field: FieldSpec, ambient: usize, rows: Vec<Vec<Elem>>) -> Self {
        if rows.is_empty() {
            return Subspace::zero(field, ambient);
        }
        Subspace::from_matrix_rows(&Matrix::from_elem_rows(field, ambient, rows))
    }

    /// Wraps a matrix already known to be in RREF with full row rank.
    pub(crate) fn from_canonical(basis: Matrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.rows(), pivots.len());
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row_scalars(i)).collect()
    }

    pub(crate) fn basis_elems(&self) -> Vec<Vec<Elem>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_columns(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub(crate) fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !f.is_zero(b) {
                    *o = f.sub(o, &f.mul(&c, b));
                }
            }
        }
        out
    }

    pub(crate) fn contains_elems(&self, v: &[Elem]) -> bool {
        let f = self.field();
        self.reduce(v).iter().all(|e| f.is_zero(e))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient() {
            return Err(Error::Dimension(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient()
            )));
        }
        Ok(self.contains_elems(&scalars_to_elems(self.field(), v)?))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        if self.ambient() != other.ambient() {
            return Err(Error::Dimension(format!(
                "ambient dimensions {} and {} differ",
                self.ambient(),
                other.ambient()
            )));
        }
        Ok(())
    }

    /// `V + W`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::from_matrix_rows(&self.basis.vstack(&other.basis)))
    }

    /// `V ∩ W` by the Zassenhaus algorithm.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient();
        let f = self.field();
        let top = self.basis.hstack(&self.basis);
        let bottom = other.basis.hstack(&Matrix::zeros(f, other.dim(), n));
        let r = top.vstack(&bottom).rref();
        let right: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = r
            .pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| i)
            .collect();
        let m = r.matrix.select_rows(&rows).select_columns(&right);
        Ok(Subspace::from_matrix_rows(&m))
    }

    /// `V ⊆ W`.
    pub fn le(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.is_subset_of(other))
    }

    pub(crate) fn is_subset_of(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && (0..self.dim()).all(|i| other.contains_elems(self.basis.row(i)))
    }

    /// Projection and section for `k^n / V`.
    ///
    /// The quotient coordinates are the non-pivot coordinates of the
    /// canonical basis; the section is the coordinate inclusion.
    pub fn quotient_data(&self) -> QuotientData {
        let f = self.field();
        let n = self.ambient();
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let q = free.len();
        let mut proj = Matrix::zeros(f, q, n);
        let mut section = Matrix::zeros(f, n, q);
        for (t, &c) in free.iter().enumerate() {
            *proj.at_mut(t, c) = f.one();
            *section.at_mut(c, t) = f.one();
            for (r, &p) in self.pivots.iter().enumerate() {
                *proj.at_mut(t, p) = f.neg(self.basis.at(r, c));
            }
        }
        QuotientData { proj, section }
    }

    /// `M(V)` for a linear map `M : k^n → k^m`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient(), "map does not act on this space");
        if self.is_zero() {
            return Subspace::zero(self.field(), m.rows());
        }
        Subspace::from_matrix_rows(&m.mul(&self.basis_columns()).transpose())
    }

    /// `{v : M v ∈ self}` for a linear map `M : k^n → k^ambient`.
    pub fn preimage_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient(), "map does not land in this space");
        let q = self.quotient_data();
        q.proj.mul(m).kernel()
    }

    /// `V ⊗ W ⊆ k^n ⊗ k^m`.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(f, self.ambient() * other.ambient());
        }
        Subspace::from_matrix_rows(&self.basis.kron(&other.basis))
    }

    /// Ordering key: dimension first, then the RREF entries lexicographically.
    pub fn canonical_cmp(&self, other: &Subspace) -> Ordering {
        (self.ambient(), self.dim())
            .cmp(&(other.ambient(), other.dim()))
            .then_with(|| {
                let a = (0..self.dim()).flat_map(|i| self.basis.row(i).iter());
                let b = (0..other.dim()).flat_map(|i| other.basis.row(i).iter());
                a.cmp(b)
            })
    }

    /// Text form of the canonical basis, e.g. `[[1,0,2],[0,1,1]]`.
    pub fn canonical_string(&self) -> String {
        let f = self.field();
        let rows: Vec<String> = (0..self.dim())
            .map(|i| {
                let entries: Vec<String> = self.basis.row(i).iter().map(|e| f.fmt_elem(e)).collect();
                format!("[{}]", entries.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other).then_with(|| self.field().cmp(&other.field()))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{}", self.canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GF3: FieldSpec = FieldSpec::Prime(3);
    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn identity_cases() {
        let v = Subspace::span_i64(Q, 3, &[[1, 2, 0], [0, 1, 1]]);
        assert_eq!(v.sum(&Subspace::zero(Q, 3)).unwrap(), v);
        assert_eq!(v.intersect(&Subspace::full(Q, 3)).unwrap(), v);
    }

    #[test]
    fn coordinate_axes_meet_trivially() {
        let e1 = Subspace::span_i64(Q, 2, &[[1, 0]]);
        let e2 = Subspace::span_i64(Q, 2, &[[0, 1]]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert!(e1.sum(&e2).unwrap().is_full());
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let a = Subspace::span_i64(GF3, 3, &[[1, 1, 0], [0, 1, 2]]);
        let b = Subspace::span_i64(GF3, 3, &[[1, 2, 2], [2, 0, 2], [1, 1, 0]]);
        assert_eq!(a, b);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(Q, 2);
        let b = Subspace::zero(Q, 3);
        assert!(matches!(a.sum(&b), Err(Error::Dimension(_))));
        assert!(a.le(&b).is_err());
    }

    #[test]
    fn quotient_of_zero_and_full() {
        let q = Subspace::zero(GF3, 3).quotient_data();
        assert_eq!(q.proj, Matrix::identity(GF3, 3));
        assert_eq!(q.section, Matrix::identity(GF3, 3));
        let q = Subspace::full(GF3, 3).quotient_data();
        assert_eq!(q.proj.rows(), 0);
    }

    #[test]
    fn quotient_by_diagonal_line() {
        let v = Subspace::span_i64(GF3, 2, &[[1, 1]]);
        let q = v.quotient_data();
        assert_eq!(q.proj.mul(&q.section), Matrix::identity(GF3, 1));
        let one_one = Matrix::from_i64(GF3, &[[1], [1]]);
        assert!(q.proj.mul(&one_one).is_zero());
        assert_eq!(q.proj.kernel(), v);
    }

    #[test]
    fn preimage_and_image() {
        // projection onto the first coordinate of k^2
        let m = Matrix::from_i64(Q, &[[1, 0]]);
        let target = Subspace::zero(Q, 1);
        assert_eq!(target.preimage_under(&m), Subspace::span_i64(Q, 2, &[[0, 1]]));
        let line = Subspace::span_i64(Q, 2, &[[1, 1]]);
        assert!(line.image_under(&m).is_full());
    }
}
