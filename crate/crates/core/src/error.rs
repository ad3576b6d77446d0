use thiserror::Error;

use crate::cube::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is outside the supported range 1..={max}", max = crate::cube::MAX_DIM)]
    Dimension(u32),
    #[error("coordinate {coord} is out of range for Q_{dim}")]
    Coordinate { coord: u32, dim: u32 },
    #[error("vertex label {label:#b} does not fit in Q_{dim}")]
    Vertex { label: u32, dim: u32 },
    #[error("({0:?}, {1:?}) is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("invalid coordinate permutation: {0}")]
    Permutation(String),
    #[error("fixed coordinate {0} appears more than once")]
    CoordinateCollision(u32),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("malformed element: {0}")]
    Shape(String),
    #[error("not covered by a proven formula: {0}")]
    NotCovered(String),
    #[error("formula routes disagree: {0}")]
    Inconsistent(String),
    #[error("search budget exceeded: {0}")]
    Budget(String),
}
