//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors surfaced by graph construction, solvers and generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge id that does not exist in the graph was referenced.
    UnknownEdgeId(usize),
    /// A vertex index is outside `[0, vertex_count)`.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// Self-loops are rejected at construction.
    SelfLoop { vertex: usize },
    /// Edge weights must be strictly positive.
    NonpositiveWeight,
    /// Duplicate edge id supplied to a raw constructor.
    DuplicateEdgeId(usize),
    /// Parameters outside the documented domain of an operation.
    InvalidArgument(String),
    /// The requested split cannot exist on this graph.
    Infeasible { needed_components: usize, vertex_count: usize },
    /// Exhaustive enumeration refused: graph too large even after reduction.
    SizeLimit { vertices: usize, limit: usize },
    /// The operation requires a connected input graph.
    Disconnected,
    /// Random generation did not produce a connected graph within budget.
    GenerationFailure { attempts: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownEdgeId(id) => write!(f, "unknown edge id {id}"),
            Error::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range for graph with {vertex_count} vertices")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::NonpositiveWeight => write!(f, "edge weights must be positive"),
            Error::DuplicateEdgeId(id) => write!(f, "duplicate edge id {id}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Infeasible { needed_components, vertex_count } => write!(
                f,
                "infeasible split: needs {needed_components} components but graph has only {vertex_count} vertices"
            ),
            Error::SizeLimit { vertices, limit } => write!(
                f,
                "graph too large for exhaustive enumeration: {vertices} vertices after reduction, limit {limit}"
            ),
            Error::Disconnected => write!(
                f,
                "input graph is disconnected; apply a star closure first if splits of a disconnected graph are intended"
            ),
            Error::GenerationFailure { attempts } => {
                write!(f, "failed to generate a connected graph in {attempts} attempts")
            }
        }
    }
}

impl core::error::Error for Error {}
