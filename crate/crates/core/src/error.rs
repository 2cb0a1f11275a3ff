use thiserror::Error;

/// Errors raised by the algebra, reduction and realization routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a square")]
    NotASquare,
    #[error("element is not invertible modulo the defining polynomial")]
    NotInvertible,
    #[error("modulus {0:#b} is not irreducible over GF(2)")]
    ReducibleModulus(u64),
    #[error("unsupported extension degree {0}")]
    UnsupportedDegree(u32),
    #[error("operation requires a finite base field")]
    UnsupportedField,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has degree zero or is zero")]
    ConstantPolynomial,
    #[error("separable core is inseparable; input factor is not irreducible")]
    NotIrreducibleHint,
    #[error("product of claimed factors does not equal the input polynomial")]
    ProductMismatch,
    #[error("claimed factors are not pairwise coprime")]
    NotCoprime,
    #[error("equal-degree splitting failed after {0} attempts")]
    SplitFailed(usize),

    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("diagonal pivot at index {0} is not a square")]
    NonSquarePivot(usize),
    #[error("form is alternating and nonzero; it is not a sum of squares of linear forms")]
    AlternatingForm,
    #[error("reduction failed: {0}")]
    ReductionFailed(String),
    #[error("matrix is singular")]
    Singular,

    #[error("polynomial is not in k[X^2] with even positive degree")]
    NotEvenPolynomial,
    #[error("local parameter is a square")]
    SquareParameter,
    #[error("multiplicity {0} is not allowed here")]
    BadMultiplicity(u32),
    #[error("inseparability depth {0} is not allowed here")]
    BadDepth(u32),
    #[error("polynomial is not the square of a polynomial")]
    NotSquareShape,
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("block moduli are not pairwise coprime")]
    NotCoprimeBlocks,
    #[error("index {index} is below the closed-form threshold {threshold}")]
    OutOfRange { index: usize, threshold: usize },
    #[error("core polynomial is inseparable")]
    InseparableCore,
    #[error("lifted polynomial has coefficients outside the base field")]
    DescentFailure,

    #[error("polynomial is a product of pairwise distinct inseparable irreducibles")]
    NotRealizable,
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("plan invariant violated: {0}")]
    PlanInvariantViolated(String),
    #[error("certificate failure: {0}")]
    CertificateFailure(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
