use thiserror::Error;

use crate::magma::Kind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagmaError {
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("no two-sided identity")]
    MissingIdentity,
    #[error("no designated zero")]
    NoZero,
    #[error("subset is not closed under the product")]
    NotClosed,
    #[error("order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("magma is not a loop")]
    NotALoop,
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("declared kind {declared} does not hold: {reason}")]
    KindViolation { declared: Kind, reason: String },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("empty list of factors")]
    EmptyProduct,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("inadmissible L_n(m) spec n={n} m={m}: {condition}")]
    InadmissibleSpec { n: u64, m: u64, condition: String },
    #[error("groupoid family {family} constraint violated for t={t} u={u} n={n}: {condition}")]
    FamilyConstraint { family: String, t: u64, u: u64, n: u64, condition: String },
    #[error("invalid n={n}: {reason}")]
    InvalidN { n: u64, reason: String },
    #[error("{kind} with parameter {n} exceeds its cap {cap}")]
    CapExceeded { kind: String, n: u64, cap: u64 },
    #[error(transparent)]
    Magma(#[from] MagmaError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NeutroError {
    #[error("magma {0:?} is not built over residues")]
    NonModularCarrier(String),
    #[error("magma {0:?} was not built as an L_n(m) loop")]
    NotAnLnLoop(String),
    #[error("cannot parse neutrosophic scalar {0:?}")]
    BadScalar(String),
    #[error("residue set is not closed under the operation: {0} * {1} = {2}")]
    NotClosed(String, String, String),
    #[error("closed set mixes flagged and unflagged parts unevenly in a doubled loop")]
    Unbalanced,
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error(transparent)]
    Magma(#[from] MagmaError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("t={t} does not divide n={n}")]
    TNotDivisor { n: u64, t: u64 },
    #[error("bad factorization: {0}")]
    BadFactorization(String),
    #[error(transparent)]
    Magma(#[from] MagmaError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Neutro(#[from] NeutroError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiError {
    #[error("taxon {taxon} violated: {clause}")]
    TaxonViolation { taxon: String, clause: String },
    #[error("a multi-structure needs at least two components, got {0}")]
    TooFewComponents(usize),
    #[error("components {0} and {1} are identical")]
    DuplicateComponent(usize, usize),
    #[error("no loop component")]
    NoLoopComponent,
    #[error("component {0} has the wrong kind for this operation: {1}")]
    KindMismatch(usize, String),
    #[error("component {0} has no designated zero")]
    MissingZero(usize),
    #[error("component {0} has no identity")]
    MissingIdentity(usize),
    #[error("invalid membership spec: {0}")]
    MembershipSpec(String),
    #[error("component maps are misaligned: {0}")]
    KindMisalignment(String),
    #[error("sub-structure family exceeds {0} combinations")]
    CapExceeded(usize),
    #[error("unknown taxon {0:?}")]
    UnknownTaxon(String),
    #[error(transparent)]
    Magma(#[from] MagmaError),
    #[error(transparent)]
    Neutro(#[from] NeutroError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}
