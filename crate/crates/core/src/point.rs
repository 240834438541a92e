//! Integer lattice primitives: points, displacement vectors, and the
//! orientation predicate. Everything is exact; no floating point enters any
//! geometric decision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest coordinate magnitude accepted when building polygons. With inputs
/// bounded by this, every cross product, dot product, and shoelace sum stays
/// far from `i64` overflow.
pub const COORD_LIMIT: i64 = 1 << 20;

/// A point of the integer lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// True when both coordinates fit the construction bound.
    pub fn in_range(self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

impl From<LatticePoint> for (i64, i64) {
    fn from(p: LatticePoint) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A displacement between lattice points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    pub dx: i64,
    pub dy: i64,
}

impl LatticeVector {
    pub const fn new(dx: i64, dy: i64) -> Self {
        Self { dx, dy }
    }

    pub fn cross(self, other: Self) -> i64 {
        self.dx * other.dy - self.dy * other.dx
    }

    pub fn dot(self, other: Self) -> i64 {
        self.dx * other.dx + self.dy * other.dy
    }

    pub fn norm2(self) -> i64 {
        self.dot(self)
    }

    pub fn is_zero(self) -> bool {
        self.dx == 0 && self.dy == 0
    }

    /// True when the segment it spans contains no interior lattice point.
    pub fn is_primitive(self) -> bool {
        gcd(self.dx, self.dy) == 1
    }
}

impl Sub for LatticePoint {
    type Output = LatticeVector;

    fn sub(self, rhs: LatticePoint) -> LatticeVector {
        LatticeVector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<LatticeVector> for LatticePoint {
    type Output = LatticePoint;

    fn add(self, rhs: LatticeVector) -> LatticePoint {
        LatticePoint::new(self.x + rhs.dx, self.y + rhs.dy)
    }
}

impl Sub<LatticeVector> for LatticePoint {
    type Output = LatticePoint;

    fn sub(self, rhs: LatticeVector) -> LatticePoint {
        LatticePoint::new(self.x - rhs.dx, self.y - rhs.dy)
    }
}

impl Add for LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.dx + rhs.dx, self.dy + rhs.dy)
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;

    fn neg(self) -> LatticeVector {
        LatticeVector::new(-self.dx, -self.dy)
    }
}

impl Mul<i64> for LatticeVector {
    type Output = LatticeVector;

    fn mul(self, rhs: i64) -> LatticeVector {
        LatticeVector::new(self.dx * rhs, self.dy * rhs)
    }
}

/// Greatest common divisor, always nonnegative.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Sign of the turn a -> b -> c: +1 strict left, 0 collinear, -1 strict right.
pub fn orientation(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i32 {
    (b - a).cross(c - b).signum() as i32
}

/// Number of lattice points strictly between two distinct points.
pub fn segment_lattice_count(v: LatticePoint, w: LatticePoint) -> Result<u64> {
    if v == w {
        return Err(Error::DegenerateSegment { point: v });
    }
    let d = w - v;
    Ok((gcd(d.dx, d.dy) - 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(-4, 6), 2);
        assert_eq!(gcd(12, -18), 6);
        assert_eq!(gcd(1, 1), 1);
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(orientation(p(0, 0), p(1, 0), p(0, 1)), 1);
        assert_eq!(orientation(p(0, 0), p(1, 1), p(2, 2)), 0);
        assert_eq!(orientation(p(0, 0), p(0, 1), p(1, 1)), -1);
    }

    #[test]
    fn orientation_reverses_with_argument_order() {
        for a in [p(0, 0), p(2, -1)] {
            for b in [p(1, 3), p(-2, 2)] {
                for c in [p(4, 4), p(0, -5)] {
                    assert_eq!(orientation(a, b, c), -orientation(c, b, a));
                }
            }
        }
    }

    #[test]
    fn segment_counts() {
        assert_eq!(segment_lattice_count(p(0, 0), p(4, 6)).unwrap(), 1);
        assert_eq!(segment_lattice_count(p(0, 0), p(3, 0)).unwrap(), 2);
        assert_eq!(segment_lattice_count(p(2, 1), p(3, 3)).unwrap(), 0);
        assert_eq!(segment_lattice_count(p(-2, -2), p(2, 2)).unwrap(), 3);
        assert_eq!(
            segment_lattice_count(p(1, 1), p(1, 1)),
            Err(Error::DegenerateSegment { point: p(1, 1) })
        );
    }

    #[test]
    fn segment_count_matches_brute_scan() {
        // independent count: scan the bounding box for collinear points
        // strictly inside the segment
        let brute = |v: LatticePoint, w: LatticePoint| -> u64 {
            let (x0, x1) = (v.x.min(w.x), v.x.max(w.x));
            let (y0, y1) = (v.y.min(w.y), v.y.max(w.y));
            let mut count = 0;
            for x in x0..=x1 {
                for y in y0..=y1 {
                    let q = p(x, y);
                    if q == v || q == w {
                        continue;
                    }
                    if (w - v).cross(q - v) == 0 && (q - v).dot(w - q) > 0 {
                        count += 1;
                    }
                }
            }
            count
        };
        for (v, w) in [
            (p(0, 0), p(6, 9)),
            (p(-3, 5), p(9, -7)),
            (p(2, 2), p(2, -8)),
            (p(-5, 0), p(7, 0)),
            (p(1, 2), p(2, 4)),
            (p(-4, -6), p(8, 10)),
        ] {
            assert_eq!(segment_lattice_count(v, w).unwrap(), brute(v, w), "{v} {w}");
        }
    }

    #[test]
    fn range_bound() {
        assert!(p(COORD_LIMIT, -COORD_LIMIT).in_range());
        assert!(!p(COORD_LIMIT + 1, 0).in_range());
    }
}
