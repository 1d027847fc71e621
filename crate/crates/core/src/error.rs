use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("direction vector is zero on the root lattice span")]
    ZeroVector,
    #[error("direction has {got} coordinates, root system lives in {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid root data: {0}")]
    InvalidRootData(String),
    #[error("pole of the focal kernel{}", block.map(|b| alloc::format!(" at block {b}")).unwrap_or_default())]
    Pole { block: Option<usize> },
    #[error("argument out of domain: {0}")]
    Domain(&'static str),
    #[error("no focal radius inside the window")]
    EmptyWindow,
    #[error("operation requires a {expected} ambient space")]
    WrongAmbient { expected: &'static str },
    #[error("lambda0 = {0} is not a principal curvature of the model")]
    UnknownEigenvalue(f64),
    #[error("block ({lambda}, {mu}) lies in the focal space of the radius")]
    FocalBlock { lambda: f64, mu: f64 },
    #[error("closed form undefined for |lambda| = sqrt(-mu) or mu >= 0")]
    CaseUndefined,
    #[error("degenerate focal lattice: {0}")]
    DegenerateLattice(&'static str),
    #[error("fixture parameters hit a pole or are out of range: {0}")]
    PoleParams(String),
    #[error("unknown fixture parameter `{0}`")]
    UnknownParam(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}
