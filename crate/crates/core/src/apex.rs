//! The closest exterior lattice point of a primitive edge, found with Bezout
//! coefficients, and the feasible candidate list on that exterior line.
//!
//! For a primitive edge u -> v with direction d, the lattice points w with
//! cross(d, w - u) = -1 form the first lattice line strictly outside the
//! edge. Exactly one of them also satisfies 0 <= dot(d, w - u) < |d|^2; that
//! canonical choice projects onto the edge segment itself.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{LatticePoint, LatticeVector};
use crate::polygon::ConvexLatticePolygon;

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) > 0.
pub fn extended_gcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a == 0 && b == 0 {
        return Err(Error::GcdUndefined);
    }
    let (mut old_r, mut r) = (a.abs(), b.abs());
    let (mut old_x, mut x) = (1i64, 0i64);
    let (mut old_y, mut y) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_x, x) = (x, old_x - q * x);
        (old_y, y) = (y, old_y - q * y);
    }
    Ok((old_r, old_x * a.signum(), old_y * b.signum()))
}

/// The unique lattice point w with cross(v - u, w - u) = -1 whose orthogonal
/// projection falls on the edge: 0 <= dot(v - u, w - u) < |v - u|^2.
pub fn canonical_apex(u: LatticePoint, v: LatticePoint) -> Result<LatticePoint> {
    if u == v {
        return Err(Error::DegenerateSegment { point: u });
    }
    let d = v - u;
    if !d.is_primitive() {
        return Err(Error::EdgeNotVisible { from: u, to: v });
    }
    let (_, x, y) = extended_gcd(d.dx, d.dy)?;
    // cross(d, e0) = -(dx*x + dy*y) = -1; slide e0 along d into the window
    let e0 = LatticeVector::new(y, -x);
    let l = d.norm2();
    let t = -d.dot(e0).div_euclid(l);
    let e = e0 + d * t;
    debug_assert_eq!(d.cross(e), -1);
    debug_assert!((0..l).contains(&d.dot(e)));
    Ok(u + e)
}

/// One lattice point on the minimal exterior line of a polygon edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexCandidate {
    pub point: LatticePoint,
    pub edge: usize,
    /// Position on the exterior line: point = canonical + offset * d.
    pub offset: i64,
    pub canonical: bool,
    /// Whether inserting the point keeps the polygon strictly convex.
    pub feasible: bool,
}

/// Inclusive feasible offset window for insertions at edge `i`; empty when
/// lo > hi. Feasibility is strict convexity at both insertion neighbors; the
/// turn at the inserted point itself is strict for every point of the line.
fn feasible_offsets(p: &ConvexLatticePolygon, i: usize) -> Result<(LatticePoint, i64, i64)> {
    let n = p.n();
    if i >= n {
        return Err(Error::EdgeIndex { index: i, n });
    }
    let vs = p.vertices();
    let prev = vs[(i + n - 1) % n];
    let u = vs[i];
    let v = vs[(i + 1) % n];
    let next = vs[(i + 2) % n];
    let d = v - u;
    let wc = canonical_apex(u, v)?;
    // turn at u: cross(u - prev, w(t) - u) > 0 grows with t
    let a_dir = u - prev;
    let slope_lo = a_dir.cross(d);
    let base_lo = a_dir.cross(wc - u);
    let lo = (-base_lo).div_euclid(slope_lo) + 1;
    // turn at v: cross(v - w(t), next - v) > 0 falls with t
    let b_dir = next - v;
    let slope_hi = d.cross(b_dir);
    let base_hi = (v - wc).cross(b_dir);
    let hi = (base_hi - 1).div_euclid(slope_hi);
    Ok((wc, lo, hi))
}

/// The canonical apex of edge `i`, tagged with its feasibility.
pub fn canonical_candidate(p: &ConvexLatticePolygon, i: usize) -> Result<ApexCandidate> {
    let (wc, lo, hi) = feasible_offsets(p, i)?;
    Ok(ApexCandidate {
        point: wc,
        edge: i,
        offset: 0,
        canonical: true,
        feasible: lo <= 0 && 0 <= hi,
    })
}

/// Every feasible insertion point on the minimal exterior line of edge `i`,
/// sorted by offset. Empty when no insertion preserves strict convexity.
pub fn apex_candidates(p: &ConvexLatticePolygon, i: usize) -> Result<Vec<ApexCandidate>> {
    let (wc, lo, hi) = feasible_offsets(p, i)?;
    let (u, v) = p.edge(i)?;
    let d = v - u;
    Ok((lo..=hi)
        .map(|t| ApexCandidate {
            point: wc + d * t,
            edge: i,
            offset: t,
            canonical: t == 0,
            feasible: true,
        })
        .collect())
}
