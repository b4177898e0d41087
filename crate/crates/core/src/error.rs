use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no cells in input")]
    EmptyInput,
    #[error("cell set is not connected")]
    Disconnected,
    #[error("unexpected character {ch:?} at line {line}, column {column}")]
    BadCharacter { line: usize, column: usize, ch: char },
    #[error("enclosed region at ({x}, {y}) is not a unit square face")]
    NonSquareFace { x: i64, y: i64 },
    #[error("boundary walk repeats vertex ({x}, {y}); graph has a cut vertex")]
    NotSimple { x: i64, y: i64 },
    #[error("graph has {vertices} vertices, above the limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("profile width {width} exceeds the limit of {limit}")]
    TooWide { width: usize, limit: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("matchings are not perfect matchings of the same graph")]
    MismatchedGraphs,
    #[error("edge set is not a subset of the matching")]
    NotSubset,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("count overflows the chosen counter type")]
    Overflow,
    #[error("{what} {value} is out of range {min}..={max}")]
    OutOfRange { what: &'static str, value: usize, min: usize, max: usize },
    #[error("overlay references {what} {id}, which is not in the graph")]
    DanglingReference { what: &'static str, id: usize },
    #[error("malformed JSON input: {0}")]
    Json(String),
}
