use std::fmt;

use super::field::{Elem, FieldSpec, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a single field.
///
/// A matrix with `rows × cols` entries represents a linear map
/// `k^cols → k^rows` acting on column vectors. Tensor products of coordinate
/// spaces are flattened with `e_i ⊗ e_j ↦ i·dim₂ + j` everywhere in the crate,
/// which is exactly the index convention of [`Matrix::kron`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from integer rows, reducing into `field`.
    pub fn from_i64<R: AsRef<[i64]>>(field: FieldSpec, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&v| field.elem_i64(v)));
        }
        Matrix { rows: rows.len(), cols, field, data }
    }

    /// Builds a matrix from scalars; every entry must live in the same field.
    pub fn from_scalars(rows: usize, cols: usize, entries: &[Scalar]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries given for a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        let field = match entries.first() {
            Some(s) => s.field(),
            None => return Err(Error::Dimension("empty matrix needs an explicit field".into())),
        };
        let mut data = Vec::with_capacity(entries.len());
        for s in entries {
            if s.field() != field {
                return Err(Error::FieldMismatch(field, s.field()));
            }
            data.push(s.elem.clone());
        }
        Ok(Matrix { rows, cols, field, data })
    }

    pub fn from_scalar_rows(field: FieldSpec, rows: &[Vec<Scalar>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension("ragged rows".into()));
            }
            for s in r {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
                data.push(s.elem.clone());
            }
        }
        Ok(Matrix { rows: rows.len(), cols, field, data })
    }

    pub(crate) fn from_elem_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            debug_assert_eq!(r.len(), cols);
            data.extend(r);
        }
        Matrix { rows: n, cols, field, data }
    }

    /// Matrix whose columns are the given vectors.
    pub(crate) fn from_elem_columns(field: FieldSpec, rows: usize, cols: &[Vec<Elem>]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            debug_assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    /// Column vector `n × 1` with a single 1 at `index`.
    pub fn unit_column(field: FieldSpec, n: usize, index: usize) -> Self {
        let mut m = Matrix::zeros(field, n, 1);
        m.data[index] = field.one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        Scalar::from_elem(self.field, self.data[i * self.cols + j].clone())
    }

    pub fn set(&mut self, i: usize, j: usize, value: &Scalar) -> Result<()> {
        if value.field() != self.field {
            return Err(Error::FieldMismatch(self.field, value.field()));
        }
        self.data[i * self.cols + j] = value.elem.clone();
        Ok(())
    }

    #[inline]
    pub(crate) fn at(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub(crate) fn at_mut(&mut self, i: usize, j: usize) -> &mut Elem {
        &mut self.data[i * self.cols + j]
    }

    pub(crate) fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row_scalars(&self, i: usize) -> Vec<Scalar> {
        self.row(i).iter().map(|e| Scalar::from_elem(self.field, e.clone())).collect()
    }

    pub fn column_scalars(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|e| !self.field.is_zero(e)).count()
    }

    fn check_field(&self, other: &Matrix) {
        assert_eq!(self.field, other.field, "matrices over different fields");
    }

    /// Matrix product `self · other`. Panics on shape or field mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch: {}×{} · {}×{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    if !f.is_zero(b) {
                        f.mul_add_assign(o, a, b);
                    }
                }
            }
        }
        out
    }

    /// Applies the matrix to a coordinate vector.
    pub(crate) fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.mul_add_assign(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn apply_scalars(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} for a map with {} columns",
                v.len(),
                self.cols
            )));
        }
        let elems = scalars_to_elems(self.field, v)?;
        Ok(self
            .apply(&elems)
            .into_iter()
            .map(|e| Scalar::from_elem(self.field, e))
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Matrix, op: impl Fn(FieldSpec, &Elem, &Elem) -> Elem) -> Matrix {
        self.check_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| op(self.field, a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        assert_eq!(s.field(), self.field, "scalar from a different field");
        self.scale_elem(&s.elem)
    }

    pub(crate) fn scale_elem(&self, s: &Elem) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        out
    }

    /// Kronecker product: `(M⊗N)[i·r₂+k, j·c₂+l] = M[i,j]·N[k,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        let f = self.field;
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(f, self.rows * r2, self.cols * c2);
        let out_cols = out.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.at(k, l);
                        if !f.is_zero(b) {
                            out.data[(i * r2 + k) * out_cols + j * c2 + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Matrix { rows: self.rows, cols, field: self.field, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (t, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + t] = self.at(i, j).clone();
            }
        }
        out
    }

    /// `(id_p ⊗ τ ⊗ id_s) · self` for the flip `τ : k^q ⊗ k^r → k^r ⊗ k^q`,
    /// without forming the permutation matrix.
    pub fn flip_rows(&self, p: usize, q: usize, r: usize, s: usize) -> Matrix {
        assert_eq!(self.rows, p * q * r * s, "row count is not p·q·r·s");
        self.select_rows(&flip_index(p, q, r, s))
    }

    /// `self · (id_p ⊗ τ ⊗ id_s)` for the flip `τ : k^q ⊗ k^r → k^r ⊗ k^q`.
    pub fn flip_columns(&self, p: usize, q: usize, r: usize, s: usize) -> Matrix {
        assert_eq!(self.cols, p * q * r * s, "column count is not p·q·r·s");
        self.select_columns(&flip_index(p, r, q, s))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend(self.row(i).iter().cloned());
        }
        Matrix { rows: rows.len(), cols: self.cols, field: self.field, data }
    }

    /// Reduced row echelon form with pivots normalised to 1.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Rref { rank: pivots.len(), pivots, matrix: m }
    }

    /// Gauss–Jordan elimination in place; returns the pivot columns.
    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !f.is_zero(self.at(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.at(r, c)).expect("pivot is nonzero");
            if !f.is_one(&inv) {
                for j in c..cols {
                    let v = f.mul(self.at(r, j), &inv);
                    *self.at_mut(r, j) = v;
                }
            }
            let pivot_row: Vec<Elem> = self.row(r).to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.at(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..cols {
                    if f.is_zero(&pivot_row[j]) {
                        continue;
                    }
                    let v = f.sub(self.at(i, j), &f.mul(&factor, &pivot_row[j]));
                    *self.at_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// `{v : M v = 0}` as a canonical subspace of `k^cols`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix: r, pivots, .. } = self.rref();
        let f = self.field;
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.at(row, free));
            }
            basis.push(v);
        }
        Subspace::from_elem_vectors(f, self.cols, basis)
    }

    /// Column space, as a subspace of `k^rows`.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.transpose())
    }

    /// Two-sided inverse, `None` if singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let r = aug.rref();
        if r.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) || r.rank < n {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(r.matrix.select_columns(&cols))
    }

    /// Some solution of `M x = b`, or `None` when the system is inconsistent.
    pub(crate) fn solve(&self, b: &[Elem]) -> Option<Vec<Elem>> {
        assert_eq!(b.len(), self.rows);
        let f = self.field;
        let aug = self.hstack(&Matrix::from_elem_columns(f, self.rows, &[b.to_vec()]));
        let r = aug.rref();
        if r.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &p) in r.pivots.iter().enumerate() {
            x[p] = r.matrix.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Matrix power for square matrices.
    pub fn pow(&self, exp: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Index of the first column where `self` and `other` differ.
    pub fn first_differing_column(&self, other: &Matrix) -> Option<usize> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self.at(i, j) != other.at(i, j)))
    }
}

/// Source index of each target index under `id_p ⊗ τ_{q,r} ⊗ id_s`.
fn flip_index(p: usize, q: usize, r: usize, s: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(p * q * r * s);
    for x in 0..p {
        for c in 0..r {
            for b in 0..q {
                for y in 0..s {
                    out.push(((x * q + b) * r + c) * s + y);
                }
            }
        }
    }
    out
}

/// Permutation matrix of the flip `k^p ⊗ k^q → k^q ⊗ k^p`.
pub fn flip(field: FieldSpec, p: usize, q: usize) -> Matrix {
    let mut m = Matrix::zeros(field, p * q, p * q);
    for i in 0..p {
        for j in 0..q {
            *m.at_mut(j * p + i, i * q + j) = field.one();
        }
    }
    m
}

pub(crate) fn scalars_to_elems(field: FieldSpec, v: &[Scalar]) -> Result<Vec<Elem>> {
    v.iter()
        .map(|s| {
            if s.field() == field {
                Ok(s.elem.clone())
            } else {
                Err(Error::FieldMismatch(field, s.field()))
            }
        })
        .collect()
}

pub(crate) fn elems_to_scalars(field: FieldSpec, v: &[Elem]) -> Vec<Scalar> {
    v.iter().map(|e| Scalar::from_elem(field, e.clone())).collect()
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| self.field.fmt_elem(e)).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
