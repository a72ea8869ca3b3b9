use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inequality has a zero normal vector")]
    DegenerateIneq,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("cannot connect a point to itself")]
    CoincidentPoints,
    #[error("point coincides with the pivot")]
    PointIsPivot,
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("need at least {needed} distinct points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("inequality system is unsatisfiable")]
    Unsatisfiable,
    #[error("input is not normalized: {0}")]
    NotNormalized(String),
}
