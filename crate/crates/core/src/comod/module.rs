use super::comodule::ComoduleAlgebraData;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::galois::tensor_over;
use crate::hopf::{dual, AlgebraData, HopfAlgebraData, ValidationReport};

/// A left `H`-module algebra; `action` is `m × (n·m)` with column `h·m + a`
/// holding `e_h · e_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebraData {
    hopf: HopfAlgebraData,
    algebra: AlgebraData,
    action: Matrix,
}

impl ModuleAlgebraData {
    pub fn new(hopf: HopfAlgebraData, algebra: AlgebraData, action: Matrix) -> Result<Self> {
        let (m, n) = (algebra.dim(), hopf.dim());
        if action.rows() != m || action.cols() != n * m {
            return Err(Error::Dimension(format!(
                "action must be {m}×{}, got {}×{}",
                n * m,
                action.rows(),
                action.cols()
            )));
        }
        for f in [algebra.field(), action.field()] {
            if f != hopf.field() {
                return Err(Error::FieldMismatch(hopf.field(), f));
            }
        }
        Ok(ModuleAlgebraData { hopf, algebra, action })
    }

    pub fn hopf(&self) -> &HopfAlgebraData {
        &self.hopf
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    /// Matrix of `a ↦ e_h · a`.
    fn acting(&self, h: usize) -> Matrix {
        let m = self.algebra.dim();
        let cols: Vec<usize> = (h * m..(h + 1) * m).collect();
        self.action.select_columns(&cols)
    }

    /// Returns a copy with one action coefficient shifted by `delta`.
    pub fn perturbed(&self, row: usize, col: usize, delta: i64) -> Result<Self> {
        let mut out = self.clone();
        let v = out.action.get(row, col).add(&crate::exactla::Scalar::from_i64(self.hopf.field(), delta))?;
        out.action.set(row, col, &v)?;
        Ok(out)
    }
}

/// Checks the module axioms and the module-algebra law.
pub fn validate_module_algebra(a: &ModuleAlgebraData) -> ValidationReport {
    let h = a.hopf();
    let f = h.field();
    let (m, n) = (a.algebra().dim(), h.dim());
    let act = a.action();
    let id_a = Matrix::identity(f, m);
    let id_h = Matrix::identity(f, n);
    let m_a = a.algebra().mult();
    let mut r = ValidationReport::new("module algebra", a.algebra().labels().to_vec());

    r.compare(
        "action is associative",
        &act.mul(&id_h.kron(act)),
        &act.mul(&h.mult().kron(&id_a)),
        &[n, n, m],
    );
    r.compare("unit acts as identity", &act.mul(&h.unit().kron(&id_a)), &id_a, &[m]);
    // h(a₁a₂) = (h₁a₁)(h₂a₂), as maps H⊗A⊗A → A
    let rhs = m_a.mul(&act.kron(act).flip_columns(n, n, m, m)).mul(&h.comult().kron(&id_a).kron(&id_a));
    r.compare("module-algebra law", &act.mul(&id_h.kron(m_a)), &rhs, &[n, m, m]);
    r.compare(
        "action on the unit",
        &act.mul(&id_h.kron(a.algebra().unit())),
        &a.algebra().unit().mul(h.counit()),
        &[n],
    );
    r
}

/// The `H*`-module algebra with `f · a = (id ⊗ f)(δ(a))`.
pub fn to_module_algebra(a: &ComoduleAlgebraData) -> ModuleAlgebraData {
    let (m, n) = (a.dim(), a.hopf().dim());
    let f = a.hopf().field();
    let d = a.coaction();
    let mut action = Matrix::zeros(f, m, n * m);
    for c in 0..m {
        for j in 0..n {
            for src in 0..m {
                *action.at_mut(c, j * m + src) = d.at(c * n + j, src).clone();
            }
        }
    }
    ModuleAlgebraData::new(dual(a.hopf()), a.algebra().clone(), action).expect("shapes agree")
}

/// `A^H = {a : h·a = ε(h) a for all h}`, solved as one linear system.
pub fn invariants(a: &ModuleAlgebraData) -> Subspace {
    let h = a.hopf();
    let f = h.field();
    let m = a.algebra().dim();
    let id_a = Matrix::identity(f, m);
    let mut system = Matrix::zeros(f, 0, m);
    for b in 0..h.dim() {
        let eps = h.counit().get(0, b);
        system = system.vstack(&a.acting(b).sub(&id_a.scale(&eps)));
    }
    system.kernel()
}

/// The Chase–Sweedler canonical map `A ⊗_B A → Hom(H, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCanonical {
    /// `(n·m) × dim(A⊗_B A)`; row `h·m + c` is the `e_c` coefficient of the
    /// image evaluated at `e_h`.
    pub map: Matrix,
    pub bijective: bool,
}

/// `a₁ ⊗_B a₂ ↦ (h ↦ a₁ (h·a₂))`.
pub fn hom_canonical(a: &ModuleAlgebraData, b: &Subspace) -> Result<HomCanonical> {
    let alg = a.algebra();
    let f = alg.field();
    let (m, n) = (alg.dim(), a.hopf().dim());
    if b.ambient() != m {
        return Err(Error::Dimension(format!("B lives in dimension {}, A in {m}", b.ambient())));
    }
    if !alg.is_unital_subalgebra(b) {
        return Err(Error::Precondition("B is not a unital subalgebra of A".into()));
    }
    // column a₁·m + a₂ ↦ Σ_h e_h ⊗ a₁ (h·a₂)
    let mut lifted = Matrix::zeros(f, n * m, m * m);
    for hb in 0..n {
        let block = alg.mult().mul(&Matrix::identity(f, m).kron(&a.acting(hb)));
        for row in 0..m {
            for col in 0..m * m {
                *lifted.at_mut(hb * m + row, col) = block.at(row, col).clone();
            }
        }
    }
    let t = tensor_over(alg, b)?;
    if !lifted.mul(&t.relations.basis_columns()).is_zero() {
        return Err(Error::Precondition(
            "the relations of A⊗_B A are not in the kernel; B must act by invariants".into(),
        ));
    }
    let map = lifted.mul(&t.section);
    let bijective = map.is_square() && map.rank() == n * m;
    Ok(HomCanonical { map, bijective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comod::{coinvariants, regular, trivial};
    use crate::exactla::FieldSpec;
    use crate::hopf::{cyclic_group, group_algebra, sweedler};

    const GF3: FieldSpec = FieldSpec::Prime(3);

    #[test]
    fn dual_action_is_a_module_algebra() {
        for h in [group_algebra(&cyclic_group(2), GF3).unwrap(), sweedler(GF3).unwrap()] {
            let m = to_module_algebra(&regular(&h));
            let report = validate_module_algebra(&m);
            assert!(report.all_pass(), "{report}");
            assert_eq!(invariants(&m), coinvariants(&regular(&h)).unwrap());
        }
    }

    #[test]
    fn trivial_coaction_gives_trivial_action() {
        let h = sweedler(GF3).unwrap();
        let b = group_algebra(&cyclic_group(2), GF3).unwrap();
        let m = to_module_algebra(&trivial(&h, b.algebra()).unwrap());
        assert!(invariants(&m).is_full());
    }

    #[test]
    fn chase_sweedler_map_for_regular_c2() {
        let h = group_algebra(&cyclic_group(2), GF3).unwrap();
        let m = to_module_algebra(&regular(&h));
        let one = Subspace::span_i64(GF3, 2, &[[1, 0]]);
        assert!(hom_canonical(&m, &one).unwrap().bijective);
        let all = Subspace::full(GF3, 2);
        assert!(hom_canonical(&m, &all).is_err() || !hom_canonical(&m, &all).unwrap().bijective);
    }

    #[test]
    fn chase_sweedler_map_over_itself_needs_trivial_h() {
        let h = sweedler(GF3).unwrap();
        let b = group_algebra(&cyclic_group(2), GF3).unwrap();
        let m = to_module_algebra(&trivial(&h, b.algebra()).unwrap());
        let hc = hom_canonical(&m, &Subspace::full(GF3, 2)).unwrap();
        assert!(!hc.bijective);
    }

    #[test]
    fn corrupted_action_is_not_bijective() {
        let h = sweedler(GF3).unwrap();
        let m = to_module_algebra(&regular(&h));
        let one = Subspace::span_i64(GF3, 4, &[[1, 0, 0, 0]]);
        assert!(hom_canonical(&m, &one).unwrap().bijective);
        // 1*·1 = 1 is the only nonzero action on 1; removing it sends every a⊗1 to 0
        let bad = m.perturbed(0, 0, -1).unwrap();
        assert!(!validate_module_algebra(&bad).all_pass());
        assert!(!hom_canonical(&bad, &one).unwrap().bijective);
    }
}
