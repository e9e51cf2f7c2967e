use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u32),
    #[error("modulus {0} is too large (entries are stored as bytes)")]
    ModulusTooLarge(u32),
    #[error("polynomial is reducible or has the wrong degree")]
    ReduciblePolynomial,
    #[error("no default irreducible polynomial for GF({0}); supply one")]
    NoDefaultIrreducible(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("field element belongs to a different field")]
    SpecMismatch,
    #[error("index {index} out of range (limit {limit})")]
    BadIndex { index: usize, limit: usize },
    #[error("blocks do not all have the same size")]
    NonUniformBlockSize,
    #[error("search produced more than the cap of {0} results")]
    CapExceeded(usize),
    #[error("wrong parameters: {0}")]
    WrongParameters(String),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("no finite field of order {0}")]
    NoField(u64),
    #[error("enumeration of {size} codewords exceeds the cap of {cap}")]
    TooLarge { size: u128, cap: u64 },
    #[error("vector is not a codeword")]
    NotACodeword,
    #[error("bad Reed-Muller order r={r} for m={m}")]
    BadOrder { r: usize, m: usize },
    #[error("truth table is not a bent function")]
    NotBent,
    #[error("block {0} is not good")]
    NotGoodBlock(usize),
    #[error("instance is too large to search: {0}")]
    InfeasibleInstance(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonPrimeModulus(_) => "NonPrimeModulus",
            Error::ModulusTooLarge(_) => "ModulusTooLarge",
            Error::ReduciblePolynomial => "ReduciblePolynomial",
            Error::NoDefaultIrreducible(_) => "NoDefaultIrreducible",
            Error::ZeroInverse => "ZeroInverse",
            Error::SpecMismatch => "SpecMismatch",
            Error::BadIndex { .. } => "BadIndex",
            Error::NonUniformBlockSize => "NonUniformBlockSize",
            Error::CapExceeded(_) => "CapExceeded",
            Error::WrongParameters(_) => "WrongParameters",
            Error::BadDimension(_) => "BadDimension",
            Error::NoField(_) => "NoField",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotACodeword => "NotACodeword",
            Error::BadOrder { .. } => "BadOrder",
            Error::NotBent => "NotBent",
            Error::NotGoodBlock(_) => "NotGoodBlock",
            Error::InfeasibleInstance(_) => "InfeasibleInstance",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
