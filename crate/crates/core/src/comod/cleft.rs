use super::comodule::{validate_comodule_algebra, ComoduleAlgebraData};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::hopf::{convolution_inverse, AlgebraData, HopfAlgebraData, LinearHom};

/// A comodule algebra with a verified cleaving map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleftData {
    pub comodule: ComoduleAlgebraData,
    pub gamma: LinearHom,
    pub gamma_inverse: LinearHom,
}

/// Result of [`verify_cleft`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CleftVerdict {
    Cleft(Box<CleftData>),
    NotCleft(String),
}

impl CleftVerdict {
    pub fn is_cleft(&self) -> bool {
        matches!(self, CleftVerdict::Cleft(_))
    }
}

/// `A = B ⊗ H` with coaction `id_B ⊗ Δ` and cleaving map `h ↦ 1 ⊗ h`.
pub fn trivial_cleft(b: &AlgebraData, h: &HopfAlgebraData) -> Result<CleftData> {
    if b.field() != h.field() {
        return Err(Error::FieldMismatch(b.field(), h.field()));
    }
    let algebra = b.tensor(h.algebra())?;
    let coaction = Matrix::identity(h.field(), b.dim()).kron(h.comult());
    let a = ComoduleAlgebraData::new(h.clone(), algebra, coaction)?;
    let report = validate_comodule_algebra(&a);
    if !report.all_pass() {
        return Err(Error::Axioms(report));
    }
    let gamma = b.unit().kron(&Matrix::identity(h.field(), h.dim()));
    match verify_cleft(&a, &gamma)? {
        CleftVerdict::Cleft(c) => Ok(*c),
        CleftVerdict::NotCleft(why) => Err(Error::Invariant(format!("B⊗H is not cleft: {why}"))),
    }
}

/// Checks that `γ : H → A` is a convolution-invertible comodule map.
pub fn verify_cleft(a: &ComoduleAlgebraData, gamma: &Matrix) -> Result<CleftVerdict> {
    let h = a.hopf();
    let gamma = LinearHom::new(h.coalgebra().clone(), a.algebra().clone(), gamma.clone())?;
    let square_lhs = a.coaction().mul(&gamma.map);
    let square_rhs = gamma.map.kron(&Matrix::identity(h.field(), h.dim())).mul(h.comult());
    if let Some(c) = square_lhs.first_differing_column(&square_rhs) {
        return Ok(CleftVerdict::NotCleft(format!(
            "γ is not a comodule map: δ∘γ ≠ (γ⊗id)∘Δ on {}",
            h.labels()[c]
        )));
    }
    match convolution_inverse(&gamma) {
        Ok(inv) => Ok(CleftVerdict::Cleft(Box::new(CleftData {
            comodule: a.clone(),
            gamma,
            gamma_inverse: inv,
        }))),
        Err(Error::NotConvolutionInvertible) => {
            Ok(CleftVerdict::NotCleft("γ has no two-sided convolution inverse".into()))
        }
        Err(e) => Err(e),
    }
}
