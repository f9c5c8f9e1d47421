use thiserror::Error;

use crate::model::ModelId;
use crate::polygon::Violation;

pub type Result<T> = std::result::Result<T, GeomError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("model mismatch: {0} vs {1}")]
    ModelMismatch(ModelId, ModelId),
    #[error("point ({u}, {v}) lies outside the {model} domain")]
    OutOfDomain { model: ModelId, u: f64, v: f64 },
    #[error("anchor points coincide")]
    DegenerateAnchor,
    #[error("geodesics coincide")]
    CoincidentGeodesics,
    #[error("segments overlap along a common geodesic")]
    Overlap,
    #[error("parameter {0} outside [0, 1]")]
    ParameterRange(f64),
    #[error("vertex index {index} out of range for polygon with {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("degenerate angle: a direction has zero length")]
    DegenerateAngle,
    #[error("invalid polygon: {}", describe(.0))]
    InvalidPolygon(Vec<Violation>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

fn describe(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
