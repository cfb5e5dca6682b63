use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared generator `{name}` at line {line}, column {column}")]
    UndeclaredGenerator { name: String, line: usize, column: usize },
    #[error("generator index {index} out of range for {arity} generators")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("reducible minimal polynomial: encountered a zero divisor in the extension field")]
    ReducibleMinpoly,
    #[error("conjugation is not defined on an unmarked extension level")]
    ConjugationUnavailable,
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinpoly(String),
    #[error("fields do not match: {0}")]
    FieldMismatch(String),
    #[error("not a rational homology circle: first Betti number is {betti}, expected 1")]
    NotRationalHomologyCircle { betti: usize },
    #[error("invalid torsion element: {0}")]
    InvalidTorsionElement(String),
    #[error("invalid character: {0}")]
    InvalidSigma(String),
    #[error("the character is trivial")]
    TrivialCharacter,
    #[error("dimension of H^1 is {found}, expected {expected}")]
    UnexpectedH1Dimension { expected: usize, found: usize },
    #[error("minor order {order} exceeds matrix dimensions {rows}x{cols}")]
    OrderTooLarge { order: usize, rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("not a cocycle for the given character")]
    NotACocycle,
    #[error("the scale of the homomorphism must be nonzero")]
    ZeroScale,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
