use super::structure::{AlgebraData, CoalgebraData};
use crate::error::{Error, Result};
use crate::exactla::{Elem, Matrix};

/// An element of the convolution algebra `Hom(C, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearHom {
    pub source: CoalgebraData,
    pub target: AlgebraData,
    /// `dim A × dim C`.
    pub map: Matrix,
}

impl LinearHom {
    pub fn new(source: CoalgebraData, target: AlgebraData, map: Matrix) -> Result<Self> {
        if map.rows() != target.dim() || map.cols() != source.dim() {
            return Err(Error::Dimension(format!(
                "map must be {}×{}, got {}×{}",
                target.dim(),
                source.dim(),
                map.rows(),
                map.cols()
            )));
        }
        if map.field() != source.field() || map.field() != target.field() {
            return Err(Error::FieldMismatch(source.field(), map.field()));
        }
        Ok(LinearHom { source, target, map })
    }

    /// The convolution unit `u_A ∘ ε_C`.
    pub fn unit(source: CoalgebraData, target: AlgebraData) -> Self {
        let map = target.unit().mul(source.counit());
        LinearHom { source, target, map }
    }

    fn check_same_spaces(&self, other: &LinearHom) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Dimension(
                "convolution needs the same source coalgebra and target algebra".into(),
            ));
        }
        Ok(())
    }
}

/// `f * g = m_A ∘ (f ⊗ g) ∘ Δ_C`.
pub fn convolve(f: &LinearHom, g: &LinearHom) -> Result<LinearHom> {
    f.check_same_spaces(g)?;
    let map = f.target.mult().mul(&f.map.kron(&g.map)).mul(f.source.comult());
    Ok(LinearHom { source: f.source.clone(), target: f.target.clone(), map })
}

/// Two-sided convolution inverse, found by solving `f * x = u∘ε` as a linear
/// system in the entries of `x` and then checking `x * f = u∘ε`.
pub fn convolution_inverse(f: &LinearHom) -> Result<LinearHom> {
    let field = f.map.field();
    let (m, n) = (f.target.dim(), f.source.dim());
    // (f*x)(e_c) = Σ_{a,b} Δ[a·n+b, c] · f(e_a) · x(e_b); unknown x[r, b] sits at r·n + b.
    let mult = f.target.mult();
    let comult = f.source.comult();
    let mut system = Matrix::zeros(field, m * n, m * n);
    for c in 0..n {
        for a in 0..n {
            for b in 0..n {
                let d = comult.at(a * n + b, c);
                if field.is_zero(d) {
                    continue;
                }
                for i in 0..m {
                    let fa = f.map.at(i, a);
                    if field.is_zero(fa) {
                        continue;
                    }
                    let coeff = field.mul(d, fa);
                    for r in 0..m {
                        for k in 0..m {
                            let s = mult.at(k, i * m + r);
                            if !field.is_zero(s) {
                                let e = system.at_mut(k * n + c, r * n + b);
                                field.mul_add_assign(e, &coeff, s);
                            }
                        }
                    }
                }
            }
        }
    }
    let target = LinearHom::unit(f.source.clone(), f.target.clone());
    let rhs: Vec<Elem> = (0..m).flat_map(|k| (0..n).map(move |c| (k, c))).map(|(k, c)| target.map.at(k, c).clone()).collect();
    let sol = system.solve(&rhs).ok_or(Error::NotConvolutionInvertible)?;
    let x = LinearHom {
        source: f.source.clone(),
        target: f.target.clone(),
        map: Matrix::from_elem_rows(field, n, sol.chunks(n).map(|r| r.to_vec()).collect()),
    };
    if convolve(&x, f)?.map != target.map {
        return Err(Error::NotConvolutionInvertible);
    }
    Ok(x)
}
