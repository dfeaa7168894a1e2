use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("prime required: {0} is not a supported prime (2..=13)")]
    UnsupportedPrime(u32),
    #[error("generator `{name}`: {reason}")]
    InvalidGenerator { name: String, reason: String },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("rule {index}: {reason}")]
    InvalidRule { index: usize, reason: String },
    #[error("non-terminating rule set: rule {index} does not decrease the rewrite order")]
    NonTerminating { index: usize },
    #[error("coproduct of `{generator}`: {reason}")]
    InvalidCoproduct { generator: String, reason: String },
    #[error("presentation mismatch: {0}")]
    PresentationMismatch(String),
    #[error("{what} exceeds the search bound {bound}")]
    BoundExceeded { what: String, bound: u64 },
    #[error("presentation is not in Borel form: {0}")]
    NotBorelForm(String),
    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),
    #[error("invalid J-tuple: {0}")]
    InvalidJTuple(String),
    #[error("J-tuple {0} does not define a bi-ideal")]
    NotBiIdeal(String),
    #[error("invalid J-set: {0}")]
    InvalidJSet(String),
    #[error("invalid comodule: {0}")]
    InvalidComodule(String),
    #[error("invalid comodule map: {0}")]
    InvalidMap(String),
    #[error("polynomial division is not exact: {0}")]
    NonDivisible(String),
    #[error("unsupported Weyl type {0}")]
    UnsupportedType(String),
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error("catalog entry `{key}` failed verification: {detail}")]
    CatalogVerification { key: String, detail: String },
}
