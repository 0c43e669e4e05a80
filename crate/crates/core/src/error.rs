use thiserror::Error;

/// Errors produced across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },

    #[error("index {index} out of range (limit {limit})")]
    BadIndex { index: usize, limit: usize },

    #[error("loop at vertex {0} is not allowed in a graph")]
    LoopNotAllowed(usize),

    #[error("unknown graph name `{0}`")]
    UnknownName(String),

    #[error("edges {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),

    #[error("triangle {0:?} is not contractible")]
    NotContractible([usize; 3]),

    #[error("edge {edge} is not an edge of triangle {triangle:?}")]
    EdgeNotInTriangle { edge: usize, triangle: [usize; 3] },

    #[error("vertex {0} carries a loop and cannot be expanded to a triangle")]
    LoopAtExpandedVertex(usize),

    #[error("invalid number of diamonds: {0}")]
    BadK(usize),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("edge subset does not belong to a graph with {expected} edges (has {found})")]
    SubsetMismatch { expected: usize, found: usize },

    #[error("edge map is not total: {0}")]
    PartialMap(String),

    #[error("not an H-coloring: star of vertex {vertex} maps to {image:?}, which is no vertex star")]
    NotAnHColoring { vertex: usize, image: Vec<usize> },

    #[error("edge maps cannot be chained: {0}")]
    ChainMismatch(String),

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("target graph has {0} vertices; the solver supports at most 128")]
    TargetTooLarge(usize),

    #[error("coloring is not proper at vertex {0}")]
    NotProper(usize),

    #[error("coloring is not normal: edge {0} is neither poor nor rich")]
    NotNormal(usize),

    #[error("cover check failed: {0}")]
    InvalidCover(String),

    #[error("no renaming of the even subgraphs separates the 3-cut")]
    NoValidRenaming,

    #[error("join cover has a bad local configuration: {0}")]
    BadJoinConfiguration(String),

    #[error("not a digon: {0}")]
    NotADigon(String),

    #[error("not a diamond string: {0}")]
    NotAString(String),

    #[error("graph is not 3-edge-colorable")]
    NotThreeColorable,

    #[error("no pair of perfect matchings meets exactly in edge {0}")]
    NoSuchPmPair(usize),

    #[error("edge {0} lies in the triangle of P12")]
    EdgeInTriangle(usize),

    #[error("graph already has a perfect matching")]
    HasPerfectMatching,

    #[error("existence answers disagree: {0}")]
    EquivalenceViolation(String),

    #[error("oracle failed: {0}")]
    OracleFailed(String),

    #[error("proof step assertion failed: {0}")]
    ProofAssertionFailed(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("unsupported certificate schema version {0}")]
    SchemaMismatch(u32),

    #[error("certificate verification failed: {0}")]
    VerificationFailed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
