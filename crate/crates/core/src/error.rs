use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("hypergraph has no vertices")]
    NoVertices,

    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),

    #[error("vertex label {0:?} used twice")]
    DuplicateLabel(String),

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    #[error("vertex {vertex} out of range for hypergraph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("vertex {vertex} appears twice in edge {edge}")]
    RepeatedMember { edge: usize, vertex: usize },

    #[error("edge index {edge} out of range ({edge_count} edges)")]
    EdgeOutOfRange { edge: usize, edge_count: usize },

    #[error("edge {edge} is not contained in the selected vertex set")]
    EdgeNotContained { edge: usize },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("vertex set universe {found} does not match hypergraph order {expected}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("independence undefined: the hypergraph has an empty edge")]
    IndependenceUndefined,

    #[error("{solver}: {what} {actual} exceeds guard {limit}")]
    GuardExceeded {
        solver: &'static str,
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("label {0:?} repeated within one edge")]
    RepeatedLabel(String),
    #[error("unknown directive {0:?}")]
    UnknownDirective(String),
    #[error("invalid label {0:?}")]
    InvalidLabel(String),
    #[error("vertex declaration takes exactly one label")]
    BadVertexDeclaration,
    #[error("vertex {0:?} declared twice")]
    DuplicateDeclaration(String),
}
