use thiserror::Error;

use crate::property::PropertyKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{routine}: graph order {order} exceeds the limit of {limit}")]
    SizeCap {
        routine: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not maximal outerplanar")]
    NotMop,

    #[error("vertex set is empty")]
    EmptySet,

    #[error("improper coloring: edge {0}-{1} is monochromatic")]
    Improper(usize, usize),

    #[error("coloring covers {got} vertices but the graph has {expected}")]
    ColoringLength { got: usize, expected: usize },

    #[error("color {0} is not used by any vertex")]
    UnusedColor(usize),

    #[error("property {0} does not distribute over disjoint union")]
    NotDistributive(PropertyKind),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
