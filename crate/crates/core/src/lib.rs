//! Exact-arithmetic toolkit for convex lattice polygons: a canonical polygon
//! type with full validation, boundary and interior accounting, unimodular
//! affine maps, primitive-triangle appends on edges, polygon families with a
//! prescribed interior, exhaustive classification of achievable vertex
//! counts, a seeded random corpus, and deterministic SVG/TikZ rendering.
//!
//! All computation is integer arithmetic on `i64` (with `i128` for map
//! compositions); nothing here rounds.

pub mod affine;
pub mod apex;
pub mod append;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod point;
pub mod polygon;
pub mod render;

pub use affine::{normalize_collinear, random_unimodular_map, AffineMap};
pub use apex::{apex_candidates, canonical_apex, canonical_candidate, extended_gcd, ApexCandidate};
pub use append::{
    append, can_append, max_canonical_appends, saturate, verify_append_once, AppendDecision,
    AppendOnceViolation, AppendReport, RejectReason,
};
pub use constructions::{base_collinear_triangle, collinear_ngon, noncollinear_ngon, pk};
pub use enumerate::{
    classify, classify_with_margin, corpus, enumerate_collinear, inequality_sweep,
    strip_violation_search, ClassificationReport, InequalityViolation, SearchBounds, StripRegion,
    StripSearchReport, DEFAULT_X_MARGIN, MAX_CORPUS_BOX, MAX_CORPUS_COUNT,
};
pub use error::{Error, Result};
pub use io::{points_from_str, polygon_from_str, polygon_to_json};
pub use point::{gcd, orientation, segment_lattice_count, LatticePoint, LatticeVector, COORD_LIMIT};
pub use polygon::{AnalysisReport, ConvexLatticePolygon};
pub use render::{render_svg, render_tikz, RenderOptions};
