use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(zeta_{n})")]
    DivisionByZero { n: u32 },

    #[error("conductor mismatch: Q(zeta_{a}) vs Q(zeta_{b})")]
    ConductorMismatch { a: u32, b: u32 },

    #[error("cannot embed Q(zeta_{n}) into Q(zeta_{m}): {n} does not divide {m}")]
    BadEmbedding { n: u32, m: u32 },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("element is not invertible")]
    NotInvertible,

    #[error("linear system is inconsistent or matrix singular")]
    Singular,

    #[error("splitting failed over this field; enlarge the conductor")]
    EnlargeConductor,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
