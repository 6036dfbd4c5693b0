use thiserror::Error;

use crate::exactla::FieldSpec;
use crate::hopf::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("structure fails its axioms:\n{0}")]
    Axioms(ValidationReport),
    #[error("map is not convolution invertible")]
    NotConvolutionInvertible,
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error("invalid subspace: {0}")]
    Invalid(#[from] crate::quotlat::InvalidReason),
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("enumeration unsupported: {0}")]
    EnumerationUnsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("property falsified: {0}")]
    Falsified(String),
}
