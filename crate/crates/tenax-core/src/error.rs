use thiserror::Error;

/// Everything that can go wrong across the crate. Variants carry enough
/// context to produce a one-line diagnostic without extra lookups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be between 1 and 64, got {0}")]
    InvalidOrder(usize),

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop edge at vertex {0} is not allowed")]
    LoopEdge(usize),

    #[error("removal set must be a proper subset of the vertices")]
    RemovalIsWholeGraph,

    #[error("parameter requires a connected graph")]
    Disconnected,

    #[error("parameter is undefined for complete graphs")]
    CompleteGraph,

    #[error("the given set is not a vertex cut of the graph")]
    NotAVertexCut,

    #[error("exhaustive search supports graphs on at most {cap} vertices, got {order}; raise the cap explicitly to override")]
    ExhaustiveCapExceeded { order: usize, cap: usize },

    #[error("canonical form supports graphs on at most {cap} vertices, got {order}")]
    CanonicalCapExceeded { order: usize, cap: usize },

    #[error("graph6: empty or malformed length header")]
    Graph6Header,

    #[error("graph6: byte {byte:#04x} at position {position} is outside the printable range")]
    Graph6InvalidByte { position: usize, byte: u8 },

    #[error("graph6: input ends early, expected {expected} adjacency bytes but found {found}")]
    Graph6Truncated { expected: usize, found: usize },

    #[error("graph6: {0} trailing bytes after the adjacency section")]
    Graph6TrailingData(usize),

    #[error("graph6: padding bits after the adjacency section must be zero")]
    Graph6NonzeroPadding,

    #[error("graph6: order {0} exceeds the supported maximum of 64 vertices")]
    Graph6OrderTooLarge(usize),

    #[error("minimum-tenacity bracket needs n >= 2 and n-1 <= m <= n(n-1)/2 - 1, got n={n}, m={m}")]
    BracketOutOfDomain { n: usize, m: usize },

    #[error("{op} needs order at least {min}, got {n}")]
    OrderBelowMinimum {
        op: &'static str,
        n: usize,
        min: usize,
    },

    #[error("edge count for order {n} must lie in {min}..={max}, got {m}")]
    EdgeCountOutOfRange {
        n: usize,
        m: usize,
        min: usize,
        max: usize,
    },

    #[error("predicate requires a tree")]
    NotATree,

    #[error("predicate requires a connected unicyclic graph")]
    NotUnicyclic,

    #[error("minimum connectivity is 0 for n={n}, m={m}; no connected witness exists in this regime")]
    MinConnectivityZero { n: usize, m: usize },

    #[error("{family} enumeration supports n <= {cap}, got {n}")]
    EnumerationCapExceeded {
        family: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("labeled enumeration is only available for the connected family")]
    LabeledEnumerationUnsupported,

    #[error("connected enumeration requires an explicit edge count")]
    MissingEdgeCount,

    #[error("verification of {claim} accepts n_max in {min}..={max}, got {n_max}")]
    VerificationRange {
        claim: &'static str,
        n_max: usize,
        min: usize,
        max: usize,
    },

    #[error("sample count must be positive")]
    NoSamples,
}

impl Error {
    /// True for errors that mean "the request is well-formed but too large
    /// for the configured search caps", as opposed to invalid input.
    pub fn is_cap_exceeded(&self) -> bool {
        match self {
            Error::ExhaustiveCapExceeded { .. }
            | Error::CanonicalCapExceeded { .. }
            | Error::EnumerationCapExceeded { .. } => true,
            Error::VerificationRange { n_max, max, .. } => n_max > max,
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
