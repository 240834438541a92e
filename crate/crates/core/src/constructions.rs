//! Polygon families with a prescribed set of interior lattice points: a
//! collinear family whose interior is exactly (1,0), ..., (k,0), and a
//! quadrilateral family with k interior points not all on one line. Larger
//! members grow from the seed shapes by canonical appends on fixed edges.

use crate::append::{append, can_append};
use crate::error::{Error, Result};
use crate::point::LatticePoint;
use crate::polygon::ConvexLatticePolygon;

fn ensure_k(k: i64) -> Result<()> {
    if k < 3 {
        return Err(Error::Parameter {
            message: format!("constructions need k >= 3, got {k}"),
        });
    }
    Ok(())
}

/// Triangle (0,0), (k+1,-1), (k,1), the smallest polygon whose interior is
/// exactly (1,0), ..., (k,0).
pub fn base_collinear_triangle(k: i64) -> Result<ConvexLatticePolygon> {
    ensure_k(k)?;
    ConvexLatticePolygon::from_points(vec![
        LatticePoint::new(0, 0),
        LatticePoint::new(k + 1, -1),
        LatticePoint::new(k, 1),
    ])
}

/// An n-gon, 3 <= n <= 6, with interior exactly (1,0), ..., (k,0), grown
/// from the base triangle by canonical appends. The edges are picked by
/// their start vertex, which appends leave in place.
pub fn collinear_ngon(k: i64, n: usize) -> Result<ConvexLatticePolygon> {
    ensure_k(k)?;
    if !(3..=6).contains(&n) {
        return Err(Error::Parameter {
            message: format!("the collinear family has 3 to 6 vertices, got n = {n}"),
        });
    }
    let mut poly = base_collinear_triangle(k)?;
    let starts = [
        LatticePoint::new(0, 0),
        LatticePoint::new(k + 1, -1),
        LatticePoint::new(k, 1),
    ];
    for &start in starts.iter().take(n - 3) {
        let i = poly
            .vertex_position(start)
            .expect("construction vertex present");
        poly = append(&poly, i, None)?.after;
    }
    Ok(poly)
}

/// Quadrilateral with exactly k interior points not all on one line.
pub fn pk(k: i64) -> Result<ConvexLatticePolygon> {
    ensure_k(k)?;
    let raw: [(i64, i64); 4] = if k % 2 == 0 {
        let m = k / 2;
        [(0, 0), (m, -1), (m + 1, 1), (1, 2)]
    } else {
        let m = (k + 1) / 2;
        [(0, 0), (m + 1, -1), (m, 1), (1, 2)]
    };
    ConvexLatticePolygon::from_points(
        raw.into_iter().map(|(x, y)| LatticePoint::new(x, y)).collect(),
    )
}

/// An n-gon, 4 <= n <= 6, with k interior points not all on one line: the
/// quadrilateral plus canonical appends, first on the bottom edge, then on
/// the edge from the top-right vertex toward (1,2). That top edge admits the
/// append for every k except 3, where the search moves on to the next
/// appendable edge.
pub fn noncollinear_ngon(k: i64, n: usize) -> Result<ConvexLatticePolygon> {
    ensure_k(k)?;
    if !(4..=6).contains(&n) {
        return Err(Error::Parameter {
            message: format!("the non-collinear family has 4 to 6 vertices, got n = {n}"),
        });
    }
    let mut poly = pk(k)?;
    if n >= 5 {
        let i = poly
            .vertex_position(LatticePoint::new(0, 0))
            .expect("construction vertex present");
        poly = append(&poly, i, None)?.after;
    }
    if n == 6 {
        let top_right = if k % 2 == 0 {
            LatticePoint::new(k / 2 + 1, 1)
        } else {
            LatticePoint::new((k + 1) / 2, 1)
        };
        let start = poly
            .vertex_position(top_right)
            .expect("construction vertex present");
        let len = poly.n();
        let mut choice = None;
        for offset in 0..len {
            let i = (start + offset) % len;
            if can_append(&poly, i)?.is_yes() {
                choice = Some(i);
                break;
            }
        }
        let i = choice.expect("some pentagon edge admits an append");
        poly = append(&poly, i, None)?.after;
    }
    Ok(poly)
}
