use super::structure::{tensor_product_mult, AlgebraData, CoalgebraData, HopfAlgebraData};
use super::validate::validate_hopf;
use crate::error::{Error, Result};
use crate::exactla::{flip, Elem, FieldSpec, Matrix, Scalar};

fn validated(h: HopfAlgebraData) -> Result<HopfAlgebraData> {
    let report = validate_hopf(&h);
    if report.all_pass() {
        Ok(h)
    } else {
        Err(Error::Axioms(report))
    }
}

/// Checks that `table` is the Cayley table of a group and returns the index
/// of the identity and the inverse of each element.
pub fn check_group_table(table: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {a} has {} entries, expected {n}", row.len())));
        }
        if let Some(b) = row.iter().position(|&c| c >= n) {
            return Err(Error::NotAGroup(format!("closure fails: {a}·{b} = {} is not an element", row[b])));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails: ({a}·{b})·{c} ≠ {a}·({b}·{c})"
                    )));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("identity: no two-sided identity element".into()))?;
    let mut inverses = Vec::with_capacity(n);
    for a in 0..n {
        let inv = (0..n)
            .find(|&b| table[a][b] == e && table[b][a] == e)
            .ok_or_else(|| Error::NotAGroup(format!("inverses: element {a} has no inverse")))?;
        inverses.push(inv);
    }
    Ok((e, inverses))
}

/// The group algebra `k[G]` of a finite group given by its Cayley table.
pub fn group_algebra(table: &[Vec<usize>], field: FieldSpec) -> Result<HopfAlgebraData> {
    let labels = (0..table.len()).map(|i| format!("g{i}")).collect();
    group_algebra_labeled(table, labels, field)
}

pub fn group_algebra_labeled(
    table: &[Vec<usize>],
    labels: Vec<String>,
    field: FieldSpec,
) -> Result<HopfAlgebraData> {
    let (e, inverses) = check_group_table(table)?;
    let n = table.len();
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    for a in 0..n {
        for b in 0..n {
            *mult.at_mut(table[a][b], a * n + b) = field.one();
        }
        *comult.at_mut(a * n + a, a) = field.one();
        *antipode.at_mut(inverses[a], a) = field.one();
    }
    let counit = Matrix::from_elem_rows(field, n, vec![vec![field.one(); n]]);
    let algebra = AlgebraData::new(mult, Matrix::unit_column(field, n, e), labels)?;
    validated(HopfAlgebraData::new(algebra, CoalgebraData::new(comult, counit)?, antipode)?)
}

/// Cayley table of the cyclic group `ℤ/n`.
pub fn cyclic_group(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Labels `1, g, g^2, …` for the cyclic group.
pub fn cyclic_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| power_label("g", i).unwrap_or_else(|| "1".into())).collect()
}

/// Cayley table of the symmetric group `S_k` with cycle-notation labels.
///
/// Elements are permutations of `0..k` in lexicographic order of their
/// one-line notation, so the identity is element 0. The product is
/// composition `(σ·τ)(i) = σ(τ(i))`.
pub fn symmetric_group(k: usize) -> (Vec<Vec<usize>>, Vec<String>) {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        perms.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
    let table = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index(&(0..k).map(|i| s[t[i]]).collect()))
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    (table, labels)
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

fn power_label(base: &str, e: usize) -> Option<String> {
    match e {
        0 => None,
        1 => Some(base.to_string()),
        _ => Some(format!("{base}^{e}")),
    }
}

/// Builds structure matrices from sparse integer triples.
struct Sparse {
    field: FieldSpec,
    n: usize,
}

impl Sparse {
    fn mult(&self, entries: &[(usize, usize, usize, i64)]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.n, self.n * self.n);
        for &(i, j, k, v) in entries {
            *m.at_mut(k, i * self.n + j) = self.field.elem_i64(v);
        }
        m
    }

    fn comult(&self, entries: &[(usize, usize, usize, i64)]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.n * self.n, self.n);
        for &(i, j, k, v) in entries {
            *m.at_mut(j * self.n + k, i) = self.field.elem_i64(v);
        }
        m
    }

    fn linear(&self, entries: &[(usize, usize, i64)]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.n, self.n);
        for &(i, j, v) in entries {
            *m.at_mut(j, i) = self.field.elem_i64(v);
        }
        m
    }
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`.
pub fn sweedler(field: FieldSpec) -> Result<HopfAlgebraData> {
    if field.characteristic() == 2 {
        return Err(Error::Field("the Sweedler algebra needs characteristic ≠ 2".into()));
    }
    let (one, g, x, gx) = (0, 1, 2, 3);
    let sp = Sparse { field, n: 4 };
    let mut products = Vec::new();
    for b in 0..4 {
        products.push((one, b, b, 1));
        products.push((b, one, b, 1));
    }
    products.extend([
        (g, g, one, 1),
        (g, x, gx, 1),
        (g, gx, x, 1),
        (x, g, gx, -1),
        (gx, g, x, -1),
    ]);
    let mult = sp.mult(&products);
    let comult = sp.comult(&[
        (one, one, one, 1),
        (g, g, g, 1),
        (x, x, one, 1),
        (x, g, x, 1),
        (gx, gx, g, 1),
        (gx, one, gx, 1),
    ]);
    let antipode = sp.linear(&[(one, one, 1), (g, g, 1), (x, gx, -1), (gx, x, 1)]);
    let counit = Matrix::from_i64(field, &[[1, 1, 0, 0]]);
    let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let algebra = AlgebraData::new(mult, Matrix::unit_column(field, 4, one), labels)?;
    validated(HopfAlgebraData::new(algebra, CoalgebraData::new(comult, counit)?, antipode)?)
}

/// The Taft algebra of dimension `n²` with basis `gⁱxʲ` at index `i·n + j`.
///
/// Relations `gⁿ = 1`, `xⁿ = 0`, `xg = q·gx`; `g` is grouplike and
/// `Δ(x) = x⊗1 + g⊗x`.
pub fn taft(n: usize, q: &Scalar, field: FieldSpec) -> Result<HopfAlgebraData> {
    if n < 2 {
        return Err(Error::Parameter(format!("Taft algebras need n ≥ 2, got {n}")));
    }
    if q.field() != field {
        return Err(Error::FieldMismatch(field, q.field()));
    }
    if field.characteristic() != 0 && (n as u64).is_multiple_of(field.characteristic()) {
        return Err(Error::Parameter(format!("characteristic of {field} divides {n}")));
    }
    if !q.pow(n as u64).is_one() {
        return Err(Error::Parameter(format!("q = {q} is not an {n}-th root of unity: q^{n} = {}", q.pow(n as u64))));
    }
    if let Some(k) = (1..n).find(|&k| q.pow(k as u64).is_one()) {
        return Err(Error::Parameter(format!("q = {q} is not primitive: q^{k} = 1")));
    }
    let f = field;
    let dim = n * n;
    let idx = |i: usize, j: usize| (i % n) * n + j;
    let qe = q.elem.clone();
    let qpow = |e: usize| {
        let mut acc = f.one();
        for _ in 0..e % n {
            acc = f.mul(&acc, &qe);
        }
        acc
    };

    // (gᵃxᵇ)(gᶜxᵈ) = q^{bc} g^{a+c} x^{b+d}
    let mut mult = Matrix::zeros(f, dim, dim * dim);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if b + d < n {
                        *mult.at_mut(idx(a + c, b + d), idx(a, b) * dim + idx(c, d)) = qpow(b * c);
                    }
                }
            }
        }
    }
    let labels: Vec<String> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let s = format!(
                "{}{}",
                power_label("g", i).unwrap_or_default(),
                power_label("x", j).unwrap_or_default()
            );
            if s.is_empty() {
                "1".into()
            } else {
                s
            }
        })
        .collect();
    let algebra = AlgebraData::new(mult.clone(), Matrix::unit_column(f, dim, 0), labels)?;

    // H⊗H as an algebra, to extend Δ multiplicatively
    let hh = AlgebraData::new(
        tensor_product_mult(&mult, dim, &mult, dim),
        Matrix::unit_column(f, dim * dim, 0),
        Vec::new(),
    )?;
    let basis = |i: usize| {
        let mut v = vec![f.zero(); dim];
        v[i] = f.one();
        v
    };
    let pure = |a: usize, b: usize| {
        let mut v = vec![f.zero(); dim * dim];
        v[a * dim + b] = f.one();
        v
    };
    let (g, x, one) = (idx(1, 0), idx(0, 1), idx(0, 0));
    let delta_g = pure(g, g);
    let delta_x: Vec<Elem> = pure(x, one).iter().zip(pure(g, x)).map(|(a, b)| f.add(a, &b)).collect();
    let s_g = basis(idx(n - 1, 0));
    let s_x: Vec<Elem> = basis(idx(n - 1, 1)).iter().map(|e| f.neg(e)).collect();

    let mut comult_cols = Vec::with_capacity(dim);
    let mut antipode_cols = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            let mut d = pure(one, one);
            for _ in 0..i {
                d = hh.product(&d, &delta_g);
            }
            for _ in 0..j {
                d = hh.product(&d, &delta_x);
            }
            comult_cols.push(d);
            // S is an anti-homomorphism: S(gⁱxʲ) = S(x)ʲ S(g)ⁱ
            let mut s = basis(one);
            for _ in 0..j {
                s = algebra.product(&s, &s_x);
            }
            for _ in 0..i {
                s = algebra.product(&s, &s_g);
            }
            antipode_cols.push(s);
        }
    }
    let comult = Matrix::from_elem_columns(f, dim * dim, &comult_cols);
    let antipode = Matrix::from_elem_columns(f, dim, &antipode_cols);
    let counit = Matrix::from_elem_rows(
        f,
        dim,
        vec![(0..dim).map(|k| if k % n == 0 { f.one() } else { f.zero() }).collect()],
    );
    validated(HopfAlgebraData::new(algebra, CoalgebraData::new(comult, counit)?, antipode)?)
}

/// The one-dimensional Hopf algebra `k`.
pub fn ground_hopf(field: FieldSpec) -> HopfAlgebraData {
    let id = Matrix::identity(field, 1);
    HopfAlgebraData::new(
        AlgebraData::ground(field),
        CoalgebraData::new(id.clone(), id.clone()).expect("1×1 shapes"),
        id,
    )
    .expect("1×1 shapes")
}

/// The dual Hopf algebra `H*` on the dual basis.
pub fn dual(h: &HopfAlgebraData) -> HopfAlgebraData {
    let labels = h.labels().iter().map(|l| format!("{l}*")).collect();
    let algebra = AlgebraData::new(h.comult().transpose(), h.counit().transpose(), labels)
        .expect("transposed shapes");
    let coalgebra = CoalgebraData::new(h.mult().transpose(), h.unit().transpose()).expect("transposed shapes");
    HopfAlgebraData::new(algebra, coalgebra, h.antipode().transpose()).expect("transposed shapes")
}

/// `H^op`: opposite multiplication, antipode `S⁻¹`.
pub fn opposite(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    let s_inv = h.antipode().inverse().ok_or(Error::SingularAntipode)?;
    let n = h.dim();
    let mult = h.mult().mul(&flip(h.field(), n, n));
    Ok(h.with_parts(Some(mult), None, Some(s_inv)))
}

/// `H^cop`: opposite comultiplication, antipode `S⁻¹`.
pub fn coopposite(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    let s_inv = h.antipode().inverse().ok_or(Error::SingularAntipode)?;
    let n = h.dim();
    let comult = flip(h.field(), n, n).mul(h.comult());
    Ok(h.with_parts(None, Some(comult), Some(s_inv)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const GF3: FieldSpec = FieldSpec::Prime(3);
    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn trivial_group_gives_ground_field() {
        let h = group_algebra(&[vec![0]], Q).unwrap();
        assert_eq!(h.dim(), 1);
        assert_eq!(h.mult(), ground_hopf(Q).mult());
        assert!(validate_hopf(&ground_hopf(GF3)).all_pass());
    }

    #[test]
    fn c2_antipode_is_identity() {
        let h = group_algebra(&cyclic_group(2), GF3).unwrap();
        assert_eq!(h.antipode(), &Matrix::identity(GF3, 2));
    }

    #[test]
    fn group_table_errors_name_the_axiom() {
        let not_assoc = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]];
        let err = group_algebra(&not_assoc, GF3).unwrap_err().to_string();
        assert!(err.contains("associativity"), "{err}");
        let no_identity = vec![vec![1, 0], vec![0, 0]];
        assert!(group_algebra(&no_identity, GF3).is_err());
        let no_inverse = vec![vec![0, 1], vec![1, 1]];
        let err = group_algebra(&no_inverse, GF3).unwrap_err().to_string();
        assert!(err.contains("inverses") || err.contains("associativity"), "{err}");
        let open = vec![vec![0, 2], vec![1, 0]];
        assert!(group_algebra(&open, GF3).unwrap_err().to_string().contains("closure"));
    }

    #[test]
    fn symmetric_group_has_six_elements_and_is_nonabelian() {
        let (t, labels) = symmetric_group(3);
        assert_eq!(t.len(), 6);
        assert_eq!(labels[0], "()");
        assert!((0..6).any(|a| (0..6).any(|b| t[a][b] != t[b][a])));
        check_group_table(&t).unwrap();
    }

    #[test]
    fn sweedler_antipode_has_order_four() {
        let h = sweedler(GF3).unwrap();
        let s = h.antipode();
        let id = Matrix::identity(GF3, 4);
        assert_ne!(s.pow(2), id);
        assert_eq!(s.pow(4), id);
        // S²(x) = −x
        assert_eq!(s.pow(2).column_scalars(2), Matrix::from_i64(GF3, &[[0], [0], [-1], [0]]).column_scalars(0));
        assert_eq!(&h.counit().mul(s), h.counit());
    }

    #[test]
    fn sweedler_refuses_characteristic_two() {
        assert!(matches!(sweedler(FieldSpec::Prime(2)), Err(Error::Field(_))));
    }

    /// Independent oracle: taft(2, −1) is the explicit Sweedler table after
    /// reordering the basis `1, x, g, gx` to `1, g, x, gx`.
    #[test]
    fn taft_two_is_sweedler() {
        let t = taft(2, &Scalar::from_i64(Q, -1), Q).unwrap();
        let s = sweedler(Q).unwrap();
        let perm = Matrix::from_i64(Q, &[[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]);
        assert_eq!(perm.mul(t.mult()).mul(&perm.kron(&perm)), *s.mult());
        assert_eq!(perm.kron(&perm).mul(t.comult()).mul(&perm), *s.comult());
        assert_eq!(perm.mul(t.antipode()).mul(&perm), *s.antipode());
        assert_eq!(t.counit().mul(&perm), *s.counit());
    }

    #[test]
    fn taft_parameters() {
        let gf7 = FieldSpec::Prime(7);
        let h = taft(3, &Scalar::from_i64(gf7, 2), gf7).unwrap();
        assert_eq!(h.dim(), 9);
        assert!(matches!(taft(3, &Scalar::from_i64(gf7, 3), gf7), Err(Error::Parameter(_))));
        assert!(matches!(taft(2, &Scalar::from_i64(gf7, 1), gf7), Err(Error::Parameter(_))));
        assert!(matches!(taft(1, &Scalar::from_i64(gf7, 1), gf7), Err(Error::Parameter(_))));
    }

    #[test]
    fn dual_is_an_involution_and_valid() {
        for h in [sweedler(GF3).unwrap(), group_algebra(&symmetric_group(3).0, FieldSpec::Prime(2)).unwrap()] {
            let d = dual(&h);
            assert!(validate_hopf(&d).all_pass());
            let dd = dual(&d);
            assert_eq!(dd.mult(), h.mult());
            assert_eq!(dd.comult(), h.comult());
            assert_eq!(dd.antipode(), h.antipode());
        }
    }

    #[test]
    fn dual_of_c2_is_functions_on_two_points() {
        let d = dual(&group_algebra(&cyclic_group(2), GF3).unwrap());
        for i in 0..2 {
            let e: Vec<_> = (0..2).map(|j| if i == j { GF3.one() } else { GF3.zero() }).collect();
            assert_eq!(d.algebra().product(&e, &e), e);
        }
    }

    #[test]
    fn opposite_and_coopposite_are_valid_involutions() {
        let h = sweedler(GF3).unwrap();
        for op in [opposite, coopposite] {
            let o = op(&h).unwrap();
            assert!(validate_hopf(&o).all_pass());
            assert_eq!(op(&o).unwrap(), h);
        }
        let c2 = group_algebra(&cyclic_group(2), GF3).unwrap();
        assert_eq!(opposite(&c2).unwrap().mult(), c2.mult());
    }
}
