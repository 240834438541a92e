//! Convex lattice polygons in canonical form, plus exact boundary and
//! interior accounting.
//!
//! A polygon is stored counter-clockwise starting from its lexicographically
//! smallest vertex. Every consecutive vertex triple turns strictly left and
//! every edge is primitive, so the boundary lattice points are exactly the
//! vertices and the boundary count equals the vertex count.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{gcd, orientation, LatticePoint, LatticeVector};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPolygon", into = "RawPolygon")]
pub struct ConvexLatticePolygon {
    vertices: Vec<LatticePoint>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawPolygon {
    vertices: Vec<LatticePoint>,
}

impl TryFrom<RawPolygon> for ConvexLatticePolygon {
    type Error = Error;

    fn try_from(raw: RawPolygon) -> Result<Self> {
        Self::from_points(raw.vertices)
    }
}

impl From<ConvexLatticePolygon> for RawPolygon {
    fn from(p: ConvexLatticePolygon) -> Self {
        RawPolygon {
            vertices: p.vertices,
        }
    }
}

impl fmt::Debug for ConvexLatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.vertices).finish()
    }
}

impl ConvexLatticePolygon {
    /// Validates and canonicalizes a vertex cycle given with any starting
    /// vertex and in either rotation direction.
    pub fn from_points(points: Vec<LatticePoint>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::TooFewVertices { got: points.len() });
        }
        for &p in &points {
            if !p.in_range() {
                return Err(Error::CoordinateRange { point: p });
            }
        }
        let mut seen = HashSet::with_capacity(points.len());
        for &p in &points {
            if !seen.insert(p) {
                return Err(Error::DuplicateVertex { point: p });
            }
        }
        let mut vs = points;
        if signed_area2(&vs) < 0 {
            vs.reverse();
        }
        let n = vs.len();
        for i in 0..n {
            let (a, b, c) = (vs[i], vs[(i + 1) % n], vs[(i + 2) % n]);
            if orientation(a, b, c) != 1 {
                return Err(Error::Convexity { a, b, c });
            }
        }
        // All turns are strict left turns, but a star traversal also has
        // that; the edge direction must sweep the circle exactly once, which
        // means exactly two half-plane changes around the cycle.
        let halves: Vec<u8> = (0..n)
            .map(|i| half_plane(vs[(i + 1) % n] - vs[i]))
            .collect();
        let changes = (0..n).filter(|&i| halves[i] != halves[(i + 1) % n]).count();
        if changes != 2 {
            return Err(Error::SelfIntersecting);
        }
        for i in 0..n {
            let (u, v) = (vs[i], vs[(i + 1) % n]);
            if !(v - u).is_primitive() {
                return Err(Error::EdgeNotVisible { from: u, to: v });
            }
        }
        let start = (0..n).min_by_key(|&i| vs[i]).expect("nonempty");
        vs.rotate_left(start);
        Ok(Self { vertices: vs })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1 (mod n)`.
    pub fn edge(&self, i: usize) -> Result<(LatticePoint, LatticePoint)> {
        let n = self.n();
        if i >= n {
            return Err(Error::EdgeIndex { index: i, n });
        }
        Ok((self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn vertex_position(&self, p: LatticePoint) -> Option<usize> {
        self.vertices.iter().position(|&v| v == p)
    }

    /// Twice the enclosed area, always positive.
    pub fn area2(&self) -> i64 {
        signed_area2(&self.vertices)
    }

    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let xs = self.vertices.iter().map(|p| p.x);
        let ys = self.vertices.iter().map(|p| p.y);
        (
            LatticePoint::new(xs.clone().min().expect("nonempty"), ys.clone().min().expect("nonempty")),
            LatticePoint::new(xs.max().expect("nonempty"), ys.max().expect("nonempty")),
        )
    }

    /// True when `p` lies strictly inside.
    pub fn contains_interior(&self, p: LatticePoint) -> bool {
        let n = self.n();
        (0..n).all(|i| orientation(self.vertices[i], self.vertices[(i + 1) % n], p) == 1)
    }

    /// Lattice points on the boundary, counted edge by edge.
    pub fn boundary_count(&self) -> u64 {
        let n = self.n();
        (0..n)
            .map(|i| {
                let d = self.vertices[(i + 1) % n] - self.vertices[i];
                gcd(d.dx, d.dy) as u64
            })
            .sum()
    }

    /// Interior lattice points, scanned row by row from the bottom, left to
    /// right within a row.
    pub fn interior_points(&self) -> Vec<LatticePoint> {
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        for y in lo.y + 1..hi.y {
            for x in lo.x + 1..hi.x {
                let p = LatticePoint::new(x, y);
                if self.contains_interior(p) {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn analyze(&self) -> AnalysisReport {
        let n = self.n();
        let b = self.boundary_count();
        let interior_pts = self.interior_points();
        let i = interior_pts.len() as u64;
        let area2 = self.area2();
        let interior_collinear = i <= 2
            || interior_pts[2..]
                .iter()
                .all(|&p| orientation(interior_pts[0], interior_pts[1], p) == 0);
        let pick_ok = area2 == b as i64 + 2 * i as i64 - 2;
        let coleman_ok = (b as i64) <= 2 * i as i64 - n as i64 + 10;
        AnalysisReport {
            n,
            b,
            i,
            area2,
            interior_pts,
            interior_collinear,
            pick_ok,
            coleman_ok,
        }
    }
}

fn signed_area2(vs: &[LatticePoint]) -> i64 {
    let n = vs.len();
    (0..n)
        .map(|i| {
            let (a, b) = (vs[i], vs[(i + 1) % n]);
            a.x * b.y - b.x * a.y
        })
        .sum()
}

/// 0 for edge directions with angle in [0, pi), 1 for [pi, 2 pi).
fn half_plane(d: LatticeVector) -> u8 {
    if d.dy > 0 || (d.dy == 0 && d.dx > 0) {
        0
    } else {
        1
    }
}

/// Exact boundary and interior accounting for one polygon.
///
/// `pick_ok` records whether twice the area equals B + 2I - 2, and
/// `coleman_ok` whether B <= 2I - n + 10.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub b: u64,
    pub i: u64,
    pub area2: i64,
    pub interior_pts: Vec<LatticePoint>,
    pub interior_collinear: bool,
    pub pick_ok: bool,
    pub coleman_ok: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::COORD_LIMIT;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn poly(pts: &[(i64, i64)]) -> ConvexLatticePolygon {
        ConvexLatticePolygon::from_points(pts.iter().map(|&(x, y)| p(x, y)).collect()).unwrap()
    }

    #[test]
    fn canonical_start_and_direction() {
        let expected = [p(-1, 0), p(0, 0), p(2, 1)];
        let a = poly(&[(0, 0), (2, 1), (-1, 0)]);
        assert_eq!(a.vertices(), expected);
        // same cycle, rotated start
        let b = poly(&[(2, 1), (-1, 0), (0, 0)]);
        // same cycle, clockwise
        let c = poly(&[(0, 0), (-1, 0), (2, 1)]);
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn rejects_small_and_degenerate_input() {
        let err = ConvexLatticePolygon::from_points(vec![p(0, 0), p(1, 0)]);
        assert_eq!(err, Err(Error::TooFewVertices { got: 2 }));

        let err = ConvexLatticePolygon::from_points(vec![p(0, 0), p(1, 0), p(0, 0), p(0, 1)]);
        assert_eq!(err, Err(Error::DuplicateVertex { point: p(0, 0) }));

        let big = COORD_LIMIT + 1;
        let err = ConvexLatticePolygon::from_points(vec![p(0, 0), p(big, 0), p(0, 1)]);
        assert_eq!(err, Err(Error::CoordinateRange { point: p(big, 0) }));
    }

    #[test]
    fn rejects_collinear_and_reflex_vertices() {
        let err = ConvexLatticePolygon::from_points(vec![p(0, 0), p(1, 0), p(2, 0), p(0, 1)]);
        assert_eq!(
            err,
            Err(Error::Convexity {
                a: p(0, 0),
                b: p(1, 0),
                c: p(2, 0)
            })
        );

        let err = ConvexLatticePolygon::from_points(vec![p(0, 0), p(2, 0), p(1, 1), p(2, 2)]);
        assert!(matches!(err, Err(Error::Convexity { .. })));
    }

    #[test]
    fn rejects_double_winding() {
        // five points in star visiting order: every triple turns left, yet
        // the cycle winds twice
        let err = ConvexLatticePolygon::from_points(vec![
            p(0, 0),
            p(5, 4),
            p(-1, 4),
            p(4, 0),
            p(2, 6),
        ]);
        assert_eq!(err, Err(Error::SelfIntersecting));
    }

    #[test]
    fn rejects_hidden_boundary_points() {
        let err = ConvexLatticePolygon::from_points(vec![p(0, 0), p(2, 0), p(0, 2)]);
        assert_eq!(
            err,
            Err(Error::EdgeNotVisible {
                from: p(0, 0),
                to: p(2, 0)
            })
        );
    }

    #[test]
    fn area2_examples() {
        assert_eq!(poly(&[(0, 0), (1, 0), (0, 1)]).area2(), 1);
        assert_eq!(poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]).area2(), 2);
        assert_eq!(poly(&[(0, 0), (6, -1), (5, 1)]).area2(), 11);
    }

    #[test]
    fn unit_square_analysis() {
        let r = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]).analyze();
        assert_eq!((r.n, r.b, r.i, r.area2), (4, 4, 0, 2));
        assert!(r.interior_pts.is_empty());
        assert!(r.interior_collinear);
        assert!(r.pick_ok);
        assert!(r.coleman_ok);
    }

    #[test]
    fn flat_triangle_analysis() {
        let r = poly(&[(0, 0), (6, -1), (5, 1)]).analyze();
        assert_eq!((r.n, r.b, r.i, r.area2), (3, 3, 5, 11));
        assert_eq!(
            r.interior_pts,
            [p(1, 0), p(2, 0), p(3, 0), p(4, 0), p(5, 0)]
        );
        assert!(r.interior_collinear);
        assert!(r.pick_ok);
    }

    #[test]
    fn quadrilateral_interior_scan_order() {
        let r = poly(&[(0, 0), (3, -1), (4, 1), (1, 2)]).analyze();
        assert_eq!((r.n, r.b, r.i, r.area2), (4, 4, 6, 14));
        assert_eq!(
            r.interior_pts,
            [p(1, 0), p(2, 0), p(3, 0), p(1, 1), p(2, 1), p(3, 1)]
        );
        assert!(!r.interior_collinear);
        assert!(r.pick_ok);
        assert!(r.coleman_ok);
    }

    #[test]
    fn boundary_count_equals_vertex_count() {
        for pts in [
            vec![(0, 0), (1, 0), (0, 1)],
            vec![(0, 0), (6, -1), (5, 1)],
            vec![(1, 0), (4, 2), (4, 3), (1, 4), (0, 1)],
        ] {
            let q = poly(&pts);
            assert_eq!(q.boundary_count(), q.n() as u64);
        }
    }

    #[test]
    fn interior_excludes_boundary() {
        let q = poly(&[(0, 0), (3, -1), (4, 1), (1, 2)]);
        for &v in q.vertices() {
            assert!(!q.contains_interior(v));
        }
        assert!(q.contains_interior(p(2, 0)));
        assert!(!q.contains_interior(p(4, 2)));
    }

    #[test]
    fn json_round_trip() {
        let q = poly(&[(1, 0), (4, 2), (4, 3), (1, 4), (0, 1)]);
        let text = serde_json::to_string(&q).unwrap();
        assert!(text.starts_with(r#"{"vertices":[["#));
        let back: ConvexLatticePolygon = serde_json::from_str(&text).unwrap();
        assert_eq!(q, back);
    }

    #[test]
    fn json_rejects_invalid_polygon() {
        let bad = r#"{"vertices": [[0, 0], [2, 0], [0, 2]]}"#;
        assert!(serde_json::from_str::<ConvexLatticePolygon>(bad).is_err());
    }
}
