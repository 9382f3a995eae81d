use thiserror::Error;

/// Errors surfaced by the algebra kernel and everything built on it.
#[derive(Error, Debug, Clone)]
pub enum Error {
    #[error("ring mismatch: operands belong to different ring presentations")]
    RingMismatch,

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("invalid ring presentation: {0}")]
    BadRing(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("S-pair degree {degree} exceeds the configured ceiling {ceiling}")]
    DegreeCeiling { degree: u32, ceiling: u32 },

    #[error("malformed matrix: {0}")]
    BadMatrix(String),

    #[error("malformed complex: {0}")]
    BadComplex(String),

    #[error("malformed chain map: {0}")]
    BadChainMap(String),

    #[error("spectrum model error: {0}")]
    BadSpec(String),

    #[error("cannot verify primality of `{0}`: not generated by variables in a free presentation and not asserted")]
    PrimalityUnverified(String),

    #[error("window error: {0}")]
    Window(String),

    #[error("degreewise dimension is infinite: degree-0 variable `{0}` is unconstrained")]
    InfiniteDimension(String),

    #[error("enumeration bound exceeded: 2^{0} subsets")]
    EnumerationBound(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
