//! Error type shared across the crate.

use thiserror::Error;

use crate::append::RejectReason;
use crate::point::{LatticePoint, COORD_LIMIT};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a polygon needs at least 3 vertices, got {got}")]
    TooFewVertices { got: usize },
    #[error("coordinate out of range at {point}: |x| and |y| must be at most {COORD_LIMIT}")]
    CoordinateRange { point: LatticePoint },
    #[error("duplicate vertex {point}")]
    DuplicateVertex { point: LatticePoint },
    #[error("vertices {a}, {b}, {c} do not turn strictly left")]
    Convexity {
        a: LatticePoint,
        b: LatticePoint,
        c: LatticePoint,
    },
    #[error("vertex cycle winds around the interior more than once")]
    SelfIntersecting,
    #[error("edge {from} -> {to} passes through other lattice points")]
    EdgeNotVisible { from: LatticePoint, to: LatticePoint },
    #[error("segment endpoints coincide at {point}")]
    DegenerateSegment { point: LatticePoint },
    #[error("gcd of (0, 0) is undefined")]
    GcdUndefined,
    #[error("map determinant is {det}, expected +1 or -1")]
    NotUnimodular { det: i128 },
    #[error("arithmetic overflow in map computation")]
    Overflow,
    #[error("point {point} is off the common line")]
    NotCollinear { point: LatticePoint },
    #[error("points {from} and {to} are not consecutive lattice points on their line")]
    BadSpacing { from: LatticePoint, to: LatticePoint },
    #[error("edge index {index} out of range for a polygon with {n} vertices")]
    EdgeIndex { index: usize, n: usize },
    #[error("edge {edge} admits no canonical append ({reason:?})")]
    AppendRejected { edge: usize, reason: RejectReason },
    #[error("apex {apex} is not on the minimal exterior line of edge {edge}")]
    ApexOffLine { apex: LatticePoint, edge: usize },
    #[error("apex {apex} breaks strict convexity when inserted into edge {edge}")]
    ApexInfeasible { apex: LatticePoint, edge: usize },
    #[error("classification for k = {k} changed when the x window was widened past margin {x_margin}")]
    UnstableClassification { k: i64, x_margin: i64 },
    #[error("corpus generation stalled after producing {got} of {wanted} polygons")]
    CorpusExhausted { wanted: usize, got: usize },
    #[error("{message}")]
    Parameter { message: String },
    #[error("{message}")]
    Parse { message: String },
}
