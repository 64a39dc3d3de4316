use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("simplex {simplex:?} degenerates under the vertex map (vertices {a} and {b} are identified)")]
    DegenerateQuotient { simplex: Vec<u32>, a: u32, b: u32 },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("invalid fixture parameter: {0}")]
    InvalidParameter(String),

    #[error("fixture `{name}` failed its self-check: {reason}")]
    FixtureSelfCheck { name: String, reason: String },

    #[error("corrupt chain complex: boundary composition in degree {degree} is nonzero")]
    CorruptComplex { degree: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("not a RAAG presentation: complex is not flag (pairwise adjacent vertices {witness:?} span no simplex)")]
    NotFlag { witness: Vec<u32> },

    #[error("witness rejected: {0}")]
    WitnessRejected(String),

    #[error("simplex {0:?} is not in the complex")]
    NotInComplex(Vec<u32>),

    #[error("invalid quotient spec: {0}")]
    InvalidQuotient(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
