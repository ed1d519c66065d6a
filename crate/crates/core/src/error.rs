use thiserror::Error;

/// Every failure the toolkit can report.
///
/// The variants split into user errors (bad input, syntax, domain
/// mismatches) and mathematical refusals (the input is well formed but
/// the requested object does not exist). [`Error::is_refusal`] tells them
/// apart; the command line maps them to exit codes 2 and 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("cross-section misses the generic orbits (graph-section ideal is the unit ideal)")]
    EmptySection,
    #[error(
        "not a cross-section: the quotient by the graph-section ideal is infinite dimensional"
    )]
    NotACrossSection,
    #[error("function is undefined on the whole group variety")]
    UndefinedOnGroup,
    #[error("replacement rewriting failed: {0}")]
    NotInvariantOrNotRational(String),
    #[error("jet order exceeded: needs order {needed}, context has {available}")]
    JetOrderExceeded { needed: usize, available: usize },
    #[error("degenerate action: the prolonged base coordinate has zero total derivative")]
    DegenerateAction,
    #[error("vertical curve: dx/dt vanishes identically")]
    VerticalCurve,
    #[error("unsupported degree {0}: binary-form signatures need m >= 3")]
    UnsupportedDegree(usize),
    #[error("exceptional curve: {0}")]
    ExceptionalCurve(String),
    #[error("signature map is not generically finite onto a curve")]
    NotACurve,
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("spec error at line {line}: {message}")]
    Spec { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    /// True for well-posed inputs whose requested object does not exist.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::EmptySection
                | Error::NotACrossSection
                | Error::UndefinedOnGroup
                | Error::NotInvariantOrNotRational(_)
                | Error::DegenerateAction
                | Error::VerticalCurve
                | Error::UnsupportedDegree(_)
                | Error::ExceptionalCurve(_)
                | Error::NotACurve
        )
    }

    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::DomainMismatch(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
