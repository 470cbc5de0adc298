use num_bigint::BigInt;
use thiserror::Error;

use crate::exactalg::IntPoly;

/// Errors raised by the computational layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation at pole")]
    EvaluationAtPole,

    #[error("non-expandable at Y = 0")]
    NonExpandable,

    #[error("discriminant of a constant polynomial is undefined")]
    ConstantPolynomial,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {p} divides the leading coefficient")]
    LeadingCoefficientVanishes { p: u64 },

    #[error("polynomial must be monic: {0}")]
    NotMonic(IntPoly),

    #[error("polynomial is reducible over Q; nontrivial factor {factor}")]
    Reducible { factor: IntPoly },

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("prime {p} divides the conductor of Z[x]/({poly}); the local formula is inapplicable")]
    ConductorPrime { p: u64, poly: IntPoly },

    #[error("invalid decomposition type: {0}")]
    InvalidDecomposition(String),

    #[error("degree {0} < 3: use the quadratic family")]
    UseQuadraticFamily(usize),

    #[error("pole of Phi at subset {subset:#b}")]
    PhiPole { subset: usize },

    #[error("integrality violated at coefficient {index}: {value}")]
    IntegralityViolated { index: usize, value: String },

    #[error("singular matrix")]
    SingularMatrix,

    #[error("determinant is {0}, expected 1")]
    DeterminantNotOne(String),

    #[error("no unimodular symmetrizer found with coefficients up to {0}")]
    NoUnimodularSymmetrizer(i64),

    #[error("enumeration budget exceeded: {required} representatives required, budget {budget}")]
    BudgetExceeded { required: BigInt, budget: u64 },

    #[error("precision exhausted (known modulo pi^{known}); raise N")]
    PrecisionExhausted { known: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
