use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not squarefree (gcd with derivative has degree {0})")]
    NotSquarefree(usize),

    #[error("series must have zero constant term")]
    NonzeroConstantTerm,

    #[error("denominator Pochhammer symbol ({param})_{index} vanishes")]
    PochhammerPole { param: String, index: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    #[error("invalid rational literal `{0}` (expected `p/q` or an integer)")]
    BadRational(String),

    #[error("functional-equation violation: phat(1/2+it) has neither part vanishing for m={m}")]
    FunctionalEquationViolation { m: usize },

    #[error("gamma-expression parity mismatch: {0}")]
    ParityMismatch(String),

    #[error("root-interval refinement budget exhausted after {0} doublings")]
    RefinementBudget(usize),

    #[error("quadrature did not converge after {levels} levels (last delta {delta})")]
    NonConvergence { levels: usize, delta: String },
}
