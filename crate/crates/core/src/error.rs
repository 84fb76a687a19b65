use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("invalid generator name `{0}`")]
    BadSymbol(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("bad exponent in `{0}`")]
    BadExponent(String),
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("line {line}: unknown symbol `{symbol}` in relator")]
    UnknownSymbolInRelator { line: usize, symbol: String },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("derivation step not applicable: {0}")]
    NotApplicable(String),
    #[error("malformed pinch: {0}")]
    MalformedPinch(String),
    #[error("words are not conjugate")]
    NotConjugate,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("no conjugator found within radius {0}")]
    NotFoundWithin(usize),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("certificate failed verification")]
    CertificateRejected,
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("manifest error: {0}")]
    Manifest(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
