//! TOML file formats for Hopf algebras, algebras, comodule algebras and
//! subspaces.
//!
//! Structure constants are sparse. Indices are zero-based basis positions;
//! values are integers or strings such as `"2/3"`.
//!
//! | key        | entry          | meaning                       |
//! |------------|----------------|-------------------------------|
//! | `mult`     | `[i, j, k, v]` | `e_i · e_j` has `v` at `e_k`  |
//! | `comult`   | `[i, j, k, v]` | `Δ(e_i)` has `v` at `e_j⊗e_k` |
//! | `antipode` | `[i, j, v]`    | `S(e_i)` has `v` at `e_j`     |
//! | `coaction` | `[a, b, h, v]` | `δ(e_a)` has `v` at `e_b⊗h_h` |

use std::path::{Path, PathBuf};

use hopf_galois::comod::ComoduleAlgebraData;
use hopf_galois::exactla::{FieldSpec, Matrix, Scalar, Subspace};
use hopf_galois::hopf::{AlgebraData, CoalgebraData, HopfAlgebraData};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A scalar as written in a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Text(String),
}

impl Value {
    fn parse(&self, field: FieldSpec) -> hopf_galois::Result<Scalar> {
        match self {
            Value::Int(v) => Ok(Scalar::from_i64(field, *v)),
            Value::Text(t) => field.parse_scalar(t),
        }
    }

    fn of(s: &Scalar) -> Value {
        let text = s.to_string();
        text.parse().map(Value::Int).unwrap_or(Value::Text(text))
    }
}

type Entry4 = (usize, usize, usize, Value);
type Entry3 = (usize, usize, Value);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFile {
    pub field: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub unit: Vec<Value>,
    pub counit: Vec<Value>,
    pub mult: Vec<Entry4>,
    pub comult: Vec<Entry4>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub antipode: Vec<Entry3>,
    /// Full matrix of `S`, row `i` holding the `e_i`-coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_dense: Option<Vec<Vec<Value>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub unit: Vec<Value>,
    pub mult: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleFile {
    /// Path of the Hopf file, relative to this file.
    pub hopf: String,
    pub coaction: Vec<Entry4>,
    pub algebra: AlgebraFile,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFile {
    pub field: String,
    pub ambient: usize,
    pub vectors: Vec<Vec<Value>>,
}

/// Converts format errors into [`CliError::Format`] with a location.
struct Ctx<'a>(&'a Path);

impl Ctx<'_> {
    fn err(&self, what: impl std::fmt::Display) -> CliError {
        CliError::Format { path: self.0.to_path_buf(), msg: what.to_string() }
    }

    fn field(&self, s: &str) -> Result<FieldSpec, CliError> {
        s.parse().map_err(|e| self.err(format_args!("field: {e}")))
    }

    fn scalar(&self, key: &str, v: &Value, f: FieldSpec) -> Result<Scalar, CliError> {
        v.parse(f).map_err(|e| self.err(format_args!("{key}: {e}")))
    }

    fn vector(&self, key: &str, vs: &[Value], n: usize, f: FieldSpec) -> Result<Matrix, CliError> {
        if vs.len() != n {
            return Err(self.err(format_args!("{key}: expected {n} entries, found {}", vs.len())));
        }
        let mut m = Matrix::zeros(f, n, 1);
        for (i, v) in vs.iter().enumerate() {
            m.set(i, 0, &self.scalar(&format!("{key}[{i}]"), v, f)?)?;
        }
        Ok(m)
    }

    fn check(&self, key: &str, t: usize, idx: &[usize], bounds: &[usize]) -> Result<(), CliError> {
        for (&i, &b) in idx.iter().zip(bounds) {
            if i >= b {
                return Err(self.err(format_args!("{key}[{t}]: index {i} out of range 0..{b}")));
            }
        }
        Ok(())
    }

    fn accumulate(&self, m: &mut Matrix, i: usize, j: usize, v: &Scalar) -> Result<(), CliError> {
        let s = m.get(i, j).add(v)?;
        m.set(i, j, &s)?;
        Ok(())
    }

    fn mult(&self, entries: &[Entry4], n: usize, f: FieldSpec) -> Result<Matrix, CliError> {
        let mut m = Matrix::zeros(f, n, n * n);
        for (t, (i, j, k, v)) in entries.iter().enumerate() {
            self.check("mult", t, &[*i, *j, *k], &[n, n, n])?;
            let v = self.scalar(&format!("mult[{t}]"), v, f)?;
            self.accumulate(&mut m, *k, i * n + j, &v)?;
        }
        Ok(m)
    }

    fn algebra(&self, a: &AlgebraFile) -> Result<AlgebraData, CliError> {
        let f = self.field(&a.field)?;
        let n = a.dim;
        let unit = self.vector("unit", &a.unit, n, f)?;
        let mult = self.mult(&a.mult, n, f)?;
        Ok(AlgebraData::new(mult, unit, a.labels.clone())?)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn decode<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, CliError> {
    toml::from_str(text).map_err(|e| CliError::Format { path: path.to_path_buf(), msg: e.to_string() })
}

pub fn parse_hopf(path: &Path, text: &str) -> Result<HopfAlgebraData, CliError> {
    hopf_from_file(path, &decode(path, text)?)
}

pub fn hopf_from_file(path: &Path, h: &HopfFile) -> Result<HopfAlgebraData, CliError> {
    let cx = Ctx(path);
    let f = cx.field(&h.field)?;
    let n = h.dim;
    let algebra = cx.algebra(&AlgebraFile {
        field: h.field.clone(),
        dim: n,
        labels: h.labels.clone(),
        unit: h.unit.clone(),
        mult: h.mult.clone(),
    })?;
    let counit = cx.vector("counit", &h.counit, n, f)?.transpose();
    let mut comult = Matrix::zeros(f, n * n, n);
    for (t, (i, j, k, v)) in h.comult.iter().enumerate() {
        cx.check("comult", t, &[*i, *j, *k], &[n, n, n])?;
        let v = cx.scalar(&format!("comult[{t}]"), v, f)?;
        cx.accumulate(&mut comult, j * n + k, *i, &v)?;
    }
    let antipode = match (&h.antipode_dense, h.antipode.is_empty()) {
        (Some(_), false) => return Err(cx.err("give either antipode or antipode_dense, not both")),
        (Some(rows), true) => {
            if rows.len() != n {
                return Err(cx.err(format_args!("antipode_dense: expected {n} rows, found {}", rows.len())));
            }
            let mut s = Matrix::zeros(f, n, n);
            for (i, row) in rows.iter().enumerate() {
                let r = cx.vector(&format!("antipode_dense[{i}]"), row, n, f)?;
                for j in 0..n {
                    s.set(i, j, &r.get(j, 0))?;
                }
            }
            s
        }
        (None, _) => {
            let mut s = Matrix::zeros(f, n, n);
            for (t, (i, j, v)) in h.antipode.iter().enumerate() {
                cx.check("antipode", t, &[*i, *j], &[n, n])?;
                let v = cx.scalar(&format!("antipode[{t}]"), v, f)?;
                cx.accumulate(&mut s, *j, *i, &v)?;
            }
            s
        }
    };
    Ok(HopfAlgebraData::new(algebra, CoalgebraData::new(comult, counit)?, antipode)?)
}

fn values(m: &Matrix) -> Vec<Value> {
    (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).map(|(i, j)| Value::of(&m.get(i, j))).collect()
}

fn mult_entries(m: &Matrix, n: usize) -> Vec<Entry4> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = m.get(k, i * n + j);
                if !v.is_zero() {
                    out.push((i, j, k, Value::of(&v)));
                }
            }
        }
    }
    out
}

fn algebra_file(a: &AlgebraData) -> AlgebraFile {
    AlgebraFile {
        field: a.field().to_string(),
        dim: a.dim(),
        labels: a.labels().to_vec(),
        unit: values(a.unit()),
        mult: mult_entries(a.mult(), a.dim()),
    }
}

pub fn hopf_file(h: &HopfAlgebraData) -> HopfFile {
    let n = h.dim();
    let mut comult = Vec::new();
    let mut antipode = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = h.comult().get(j * n + k, i);
                if !v.is_zero() {
                    comult.push((i, j, k, Value::of(&v)));
                }
            }
            let v = h.antipode().get(j, i);
            if !v.is_zero() {
                antipode.push((i, j, Value::of(&v)));
            }
        }
    }
    let a = algebra_file(h.algebra());
    HopfFile {
        field: a.field,
        dim: n,
        labels: a.labels,
        unit: a.unit,
        counit: values(h.counit()),
        mult: a.mult,
        comult,
        antipode,
        antipode_dense: None,
    }
}

fn encode<T: Serialize>(v: &T) -> String {
    toml::to_string(v).expect("file structs serialise")
}

pub fn serialise_hopf(h: &HopfAlgebraData) -> String {
    encode(&hopf_file(h))
}

pub fn parse_algebra(path: &Path, text: &str) -> Result<AlgebraData, CliError> {
    Ctx(path).algebra(&decode(path, text)?)
}

pub fn serialise_algebra(a: &AlgebraData) -> String {
    encode(&algebra_file(a))
}

/// Reads the coaction of a comodule file, as given in the file.
fn coaction_matrix(cx: &Ctx, c: &ComoduleFile, m: usize, n: usize, f: FieldSpec) -> Result<Matrix, CliError> {
    let mut d = Matrix::zeros(f, m * n, m);
    for (t, (a, b, k, v)) in c.coaction.iter().enumerate() {
        cx.check("coaction", t, &[*a, *b, *k], &[m, m, n])?;
        let v = cx.scalar(&format!("coaction[{t}]"), v, f)?;
        cx.accumulate(&mut d, b * n + k, *a, &v)?;
    }
    Ok(d)
}

/// A comodule file together with the Hopf algebra it references.
pub struct LoadedComodule {
    pub hopf: HopfAlgebraData,
    pub algebra: AlgebraData,
    /// `(m·n) × m` matrix of the coaction entries.
    pub coaction: Matrix,
}

impl LoadedComodule {
    /// Reads the entries as a right coaction `A → A ⊗ H`.
    pub fn right(self) -> Result<ComoduleAlgebraData, CliError> {
        Ok(ComoduleAlgebraData::new(self.hopf, self.algebra, self.coaction)?)
    }

    /// Reads `v` at `(a, b, h)` as the coefficient of `h_h ⊗ e_b` in a left
    /// coaction `A → H ⊗ A`.
    pub fn left(self) -> Result<ComoduleAlgebraData, CliError> {
        let (m, n) = (self.algebra.dim(), self.hopf.dim());
        let left = self.coaction.flip_rows(1, m, n, 1);
        Ok(ComoduleAlgebraData::from_left_coaction(&self.hopf, self.algebra, left)?)
    }
}

pub fn parse_comodule(path: &Path, text: &str) -> Result<LoadedComodule, CliError> {
    let c: ComoduleFile = decode(path, text)?;
    let hopf_path = path.parent().unwrap_or(Path::new(".")).join(&c.hopf);
    let hopf = load_hopf(&hopf_path)?;
    let cx = Ctx(path);
    let algebra = cx.algebra(&c.algebra)?;
    if algebra.field() != hopf.field() {
        return Err(cx.err(format_args!("algebra is over {}, Hopf algebra over {}", algebra.field(), hopf.field())));
    }
    let coaction = coaction_matrix(&cx, &c, algebra.dim(), hopf.dim(), hopf.field())?;
    Ok(LoadedComodule { hopf, algebra, coaction })
}

/// Serialises a right comodule algebra, referencing `hopf_path` for `H`.
pub fn serialise_comodule(a: &ComoduleAlgebraData, hopf_path: &str) -> String {
    let (m, n) = (a.dim(), a.hopf().dim());
    let mut coaction = Vec::new();
    for x in 0..m {
        for b in 0..m {
            for k in 0..n {
                let v = a.coaction().get(b * n + k, x);
                if !v.is_zero() {
                    coaction.push((x, b, k, Value::of(&v)));
                }
            }
        }
    }
    encode(&ComoduleFile { hopf: hopf_path.into(), coaction, algebra: algebra_file(a.algebra()) })
}

pub fn parse_subspace(path: &Path, text: &str) -> Result<Subspace, CliError> {
    let s: SubspaceFile = decode(path, text)?;
    let cx = Ctx(path);
    let f = cx.field(&s.field)?;
    let vectors = s
        .vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let col = cx.vector(&format!("vectors[{i}]"), v, s.ambient, f)?;
            Ok((0..s.ambient).map(|j| col.get(j, 0)).collect())
        })
        .collect::<Result<Vec<Vec<Scalar>>, CliError>>()?;
    Ok(Subspace::span(f, s.ambient, &vectors)?)
}

pub fn serialise_subspace(s: &Subspace) -> String {
    encode(&SubspaceFile {
        field: s.field().to_string(),
        ambient: s.ambient(),
        vectors: s.basis_vectors().iter().map(|v| v.iter().map(Value::of).collect()).collect(),
    })
}

pub fn load_hopf(path: &Path) -> Result<HopfAlgebraData, CliError> {
    parse_hopf(path, &read(path)?)
}

pub fn load_algebra(path: &Path) -> Result<AlgebraData, CliError> {
    parse_algebra(path, &read(path)?)
}

pub fn load_subspace(path: &Path) -> Result<Subspace, CliError> {
    parse_subspace(path, &read(path)?)
}

/// The main input of a command.
pub enum Input {
    Hopf(HopfAlgebraData),
    Comodule(LoadedComodule),
}

/// Loads a Hopf file, or a comodule file when it has a `hopf` key.
pub fn load_input(path: &Path) -> Result<Input, CliError> {
    let text = read(path)?;
    let table: toml::Table = decode(path, &text)?;
    if table.contains_key("hopf") {
        Ok(Input::Comodule(parse_comodule(path, &text)?))
    } else {
        Ok(Input::Hopf(parse_hopf(path, &text)?))
    }
}

/// Resolves `name` next to `base`.
pub fn sibling(base: &Path, name: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(name)
}
