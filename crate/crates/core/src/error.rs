use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),

    #[error("triple must contain three distinct vertices, got {0:?}")]
    TripleNotDistinct([VertexId; 3]),

    #[error("graph has {0} vertices; at least 3 are required")]
    TooFewVertices(usize),

    #[error("graph has {n} vertices; the packing search supports at most {max}")]
    GraphTooLarge { n: usize, max: usize },

    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(i64),

    #[error("cycle position {position} out of range for cycle of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("length of an empty walk is undefined")]
    EmptyWalk,

    #[error("number of trees must be at least 1, got {0}")]
    InvalidTreeCount(usize),

    #[error("extremal family parameter k must be at least 1, got {0}")]
    InvalidK(usize),

    #[error("H(2) has generalized 3-connectivity 1; two-tree certificates do not exist")]
    KEqualsTwo,

    #[error("role {0} out of range")]
    RoleOutOfRange(String),

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    #[error("case construction failed for S = {set:?} (case {case}): {reason}")]
    CaseConstruction {
        set: [VertexId; 3],
        case: String,
        reason: String,
    },

    #[error("invalid graph6 byte 0x{0:02x}")]
    Graph6Byte(u8),

    #[error("graph6 length mismatch: expected {expected} data bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },

    #[error("graph6 padding bits are not zero")]
    Graph6Padding,

    #[error("graph6 header: {0}")]
    Graph6Header(String),

    #[error("invalid graph document: {0}")]
    Document(String),

    #[error("invalid DOT input on line {line}: {reason}")]
    Dot { line: usize, reason: String },

    #[error("invalid vertex set {0:?}")]
    VertexSet(String),
}
