use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid cycle length k = {0}")]
    BadK(u32),
    #[error("not a homomorphism: edge {{{0}, {1}}} does not map to an edge of the cycle")]
    NotAHomomorphism(usize, usize),
    #[error("output cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("edge type is undefined for k = 4 or graphs with isolated vertices")]
    TypeUndefined,
    #[error("homomorphisms are not adjacent")]
    NotAdjacent,
    #[error("lattice point violates the defining inequalities")]
    NotInD,
    #[error("lattice point is not in the component of the origin")]
    NotInE,
    #[error("operation requires a connected graph with at least two vertices")]
    NeedsConnectedGraph,
    #[error("complex contains triangles; simplex cells are outside the square-cell oracle")]
    SimplexCellsPresent,
}

pub type Result<T> = std::result::Result<T, Error>;
