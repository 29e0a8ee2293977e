use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cone dimension must be positive")]
    EmptyDim,
    #[error("invalid al-cone symbol `{0}` (expected R, R+, R- or 0)")]
    AlSymbol(String),
    #[error("cone has neither generators nor halfspaces")]
    NoRepresentation,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order is not antisymmetric: {0} and {1} are mutually below each other")]
    NotAntisymmetric(String, String),
    #[error("not a lattice: {0} and {1} have no {2}")]
    NotALattice(String, String, &'static str),
    #[error("{0} is not the global {1}")]
    BadBound(String, &'static str),
    #[error("complement axiom `{axiom}` fails at {witness}")]
    ComplementAxiom { axiom: &'static str, witness: String },
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("closure overflow after {0} iterations")]
    Overflow(usize),
    #[error("unknown catalogue lattice `{0}`")]
    UnknownCatalogue(String),
    #[error("construction failed validation: {0}")]
    Construction(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("law {0} is not applicable to this carrier")]
    NotApplicable(String),
    #[error("expected {expected} arguments for {law}, got {found}")]
    Arity { law: String, expected: usize, found: usize },
    #[error("closure exceeded {0} cones")]
    ClosureOverflow(usize),
    #[error("sampled law disagrees with the pairwise condition: {0}")]
    Disagreement(String),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("step {step}: {msg}")]
    Step { step: usize, msg: String },
    #[error("unassigned atom `{0}`")]
    Unassigned(String),
    #[error("unknown calculus `{0}`")]
    UnknownCalculus(String),
    #[error(transparent)]
    Cone(#[from] ConeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("orthogonality must be irreflexive: {0} is orthogonal to itself")]
    Reflexive(String),
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("set {0} is not closed")]
    NotClosed(String),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Crate-level error used by the command line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Law(#[from] LawError),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture mismatch: {0}")]
    FixtureMismatch(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::Json(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.into())
    }
}
