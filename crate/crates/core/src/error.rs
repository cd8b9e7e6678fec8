use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum Error {
    #[error("ring must have at least one variable")]
    EmptyRing,
    #[error("bad variable name: '{0}'")]
    BadVariableName(String),
    #[error("duplicate variable: '{0}'")]
    DuplicateVariable(String),
    #[error("unknown variable: '{0}'")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("variable '{0}' occurs but is not in the target subring")]
    VariableNotInSubring(String),
    #[error("expected the unit or a proper ideal, got the unit ideal")]
    UnitIdeal,
    #[error("expected a monomial ideal, found non-monomial generator '{0}'")]
    NonMonomialGenerator(String),
    #[error("n must be >= 1, got {0}")]
    BadExponent(i64),
    #[error("generator '{0}' is zero in the presented algebra")]
    DegenerateGenerator(String),
    #[error("ideal is not contained in the given prime: '{0}' is missing")]
    NotContaining(String),
    #[error("prime decomposition left the supported fragment: {0}")]
    Unresolved(String),
    #[error("expected a homogeneous ideal, generator '{0}' is not")]
    NotHomogeneous(String),
    #[error("closure generator search exceeded its degree bound: {0}")]
    ClosureBoundExceeded(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("{0}")]
    Input(String),
}
