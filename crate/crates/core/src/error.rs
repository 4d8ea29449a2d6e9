use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series has no inverse: constant term is zero")]
    NonInvertibleSeries,
    #[error("series precondition violated: {0}")]
    SeriesDomain(&'static str),
    #[error("unstable moduli space: genus {genus} with {points} marked points")]
    Unstable { genus: u32, points: usize },
    #[error("c1(B) = {0} is odd; the real transform needs an even first Chern class")]
    OddFirstChern(i64),
    #[error("missing {kind} entry at genus {genus}, degree {degree}")]
    MissingEntry { kind: &'static str, genus: u32, degree: u32 },
    #[error("table flavor/kind mismatch: expected {expected}, found {found}")]
    TableMismatch { expected: String, found: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("fixed edge with even degree {0} is not admissible")]
    EvenFixedEdge(u32),
    #[error("localization sum for genus {genus}, degree {degree} is not constant in the weights: {value}")]
    NonConstant { genus: u32, degree: u32, value: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
