use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("singular curve: 4A^3 + 27B^2 = 0")]
    SingularCurve,
    #[error("point is not on the curve")]
    OffCurve,
    #[error("operation needs a short integral model y^2 = x^3 + Ax + B with A, B integers")]
    NonIntegralModel,
    #[error("conductor required but not available for this curve")]
    MissingConductor,
    #[error("height iteration blew past its precision budget at doubling {doublings} ({bits} bits)")]
    HeightBudget { doublings: usize, bits: u64 },
    #[error("registry line {line}: {msg}")]
    Registry { line: usize, msg: String },
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
