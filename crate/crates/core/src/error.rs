use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("{0} is not a member of the carrier")]
    NonMember(String),
    #[error("{0} is not a zero of the structure")]
    NotAZero(String),
    #[error("exhaustive check requested on a rule-based (infinite) carrier")]
    ExhaustiveOnInfiniteCarrier,
    #[error("tuple space of {base}^{len} is too large to enumerate")]
    TupleSpaceTooLarge { base: usize, len: usize },
    #[error("no solution found within bound {bound}")]
    NotFound { bound: usize },
    #[error("multiple solutions: {0:?}")]
    NotUnique(Vec<String>),
    #[error("duplicate carrier element {0}")]
    DuplicateElement(String),
    #[error("arity {m} with {ell_id} intact element(s) is not quantized: (m-1)/2 is not an integer")]
    NotQuantized { m: usize, ell_id: usize },
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("unknown quiver `{0}`")]
    UnknownQuiver(String),
    #[error("unknown structure `{0}`")]
    UnknownStructure(String),
    #[error("witness search exhausted bound {0} without a definite answer")]
    BoundExhausted(usize),
    #[error("no querelement found for class {0}")]
    QuerNotFound(String),
    #[error("querelement formula fails the quer equation for class {0}")]
    QuerFormulaFailsVerification(String),
    #[error("no arity m <= {0} closes the residue class")]
    NoClosedArity(usize),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("target is not a group: {0}")]
    TargetNotAGroup(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
