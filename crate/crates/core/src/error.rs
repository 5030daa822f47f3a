use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inverse requested for a scalar with {terms} terms; only monomials are invertible")]
    NonMonomial { terms: usize },
    #[error("division by zero")]
    ZeroDivision,
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },
    #[error("operand is not a vector (grade-1 multivector)")]
    NotAVector,
    #[error("{what} = {value} is outside the supported range {range}")]
    Range {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("coordinate extractor unavailable: {0}")]
    ExtractorUnavailable(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("elements do not form a basis: {0}")]
    NotABasis(String),
    #[error("invalid input: {0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_range(
    what: &'static str,
    value: usize,
    lo: usize,
    hi: usize,
    range: &'static str,
) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::Range {
            what,
            value: value as i64,
            range,
        });
    }
    Ok(())
}
