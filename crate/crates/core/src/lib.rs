//! Exact matching theory on polyomino graphs.
//!
//! The crate builds polyomino graphs from unit cells and computes, exactly:
//! perfect matchings (maximum matching, enumeration, big-integer counts),
//! resonant and alternating face sets, the Clar number (exhaustive search and
//! an exact rational integer program), forcing numbers, elementary
//! decompositions, and a verification battery over all small polyominoes.
//!
//! Numeric code is generic: counts over any [`scalar::Tally`], the simplex over
//! any [`scalar::LpScalar`]. The aliases below fix the exact choices used by
//! the high-level operations.

pub mod error;
pub mod forcing;
pub mod grid;
pub mod harness;
pub mod limits;
pub mod lp;
pub mod matching;
pub mod mis;
pub mod render;
pub mod resonance;
pub mod scalar;
pub mod structure;
pub mod view;

/// Exact matching counts.
pub type Count = num_bigint::BigUint;
/// Exact rationals used by the Clar linear programs.
pub type Rational = num_rational::BigRational;
/// Linear program over exact rationals.
pub type ExactProgram = lp::LinearProgram<Rational>;
/// Simplex solution over exact rationals.
pub type RationalLpSolution = lp::LpSolution<Rational>;

pub use error::{Error, Result};
pub use grid::{CellCoord, Color, Connectivity, EdgeId, Point, PolyominoGraph, SquareId, VertexId};
pub use limits::Limits;
pub use matching::{AlternatingCycle, Matching};
pub use view::Subgraph;
