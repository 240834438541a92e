//! Integral affine maps, unimodular invariance, and the normal form that
//! sends consecutive collinear lattice points to (1,0), (2,0), ...

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::apex::extended_gcd;
use crate::error::{Error, Result};
use crate::point::LatticePoint;
use crate::polygon::ConvexLatticePolygon;

/// An affine map x -> L x + t with integer entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    pub linear: [[i64; 2]; 2],
    pub translation: [i64; 2],
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

impl AffineMap {
    pub const fn new(linear: [[i64; 2]; 2], translation: [i64; 2]) -> Self {
        Self {
            linear,
            translation,
        }
    }

    pub const fn identity() -> Self {
        Self::new([[1, 0], [0, 1]], [0, 0])
    }

    pub fn det(&self) -> i128 {
        let m = &self.linear;
        m[0][0] as i128 * m[1][1] as i128 - m[0][1] as i128 * m[1][0] as i128
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == 1
    }

    /// Applies the map to one point. The image must fit in i64.
    pub fn apply_point(&self, p: LatticePoint) -> Result<LatticePoint> {
        let m = &self.linear;
        let x = m[0][0] as i128 * p.x as i128
            + m[0][1] as i128 * p.y as i128
            + self.translation[0] as i128;
        let y = m[1][0] as i128 * p.x as i128
            + m[1][1] as i128 * p.y as i128
            + self.translation[1] as i128;
        Ok(LatticePoint::new(narrow(x)?, narrow(y)?))
    }

    /// Maps a polygon vertexwise. The map must be unimodular so lattice
    /// structure is preserved; orientation-reversing maps come back
    /// counter-clockwise through canonicalization.
    pub fn apply(&self, p: &ConvexLatticePolygon) -> Result<ConvexLatticePolygon> {
        if !self.is_unimodular() {
            return Err(Error::NotUnimodular { det: self.det() });
        }
        let images = p
            .vertices()
            .iter()
            .map(|&v| self.apply_point(v))
            .collect::<Result<Vec<_>>>()?;
        ConvexLatticePolygon::from_points(images)
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let det = self.det();
        if det.abs() != 1 {
            return Err(Error::NotUnimodular { det });
        }
        let s = det as i64;
        let [[a, b], [c, d]] = self.linear;
        let linear = [
            [narrow(d as i128 * s as i128)?, narrow(-(b as i128) * s as i128)?],
            [narrow(-(c as i128) * s as i128)?, narrow(a as i128 * s as i128)?],
        ];
        let tx = linear[0][0] as i128 * self.translation[0] as i128
            + linear[0][1] as i128 * self.translation[1] as i128;
        let ty = linear[1][0] as i128 * self.translation[0] as i128
            + linear[1][1] as i128 * self.translation[1] as i128;
        Ok(AffineMap::new(linear, [narrow(-tx)?, narrow(-ty)?]))
    }

    /// self after other: (self.compose(other))(x) = self(other(x)).
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        let a = &self.linear;
        let b = &other.linear;
        let mut linear = [[0i64; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                linear[r][c] = narrow(
                    a[r][0] as i128 * b[0][c] as i128 + a[r][1] as i128 * b[1][c] as i128,
                )?;
            }
        }
        let shifted = self.apply_point(LatticePoint::new(
            other.translation[0],
            other.translation[1],
        ))?;
        Ok(AffineMap::new(linear, [shifted.x, shifted.y]))
    }
}

/// Builds the unimodular map sending k consecutive collinear lattice points,
/// in their given order, to (1,0), ..., (k,0).
pub fn normalize_collinear(points: &[LatticePoint]) -> Result<AffineMap> {
    if points.len() < 2 {
        return Err(Error::Parameter {
            message: format!(
                "normalization needs at least 2 points, got {}",
                points.len()
            ),
        });
    }
    let d = points[1] - points[0];
    if !d.is_primitive() {
        return Err(Error::BadSpacing {
            from: points[0],
            to: points[1],
        });
    }
    for i in 1..points.len() {
        let step = points[i] - points[i - 1];
        if d.cross(step) != 0 {
            return Err(Error::NotCollinear { point: points[i] });
        }
        if step != d {
            return Err(Error::BadSpacing {
                from: points[i - 1],
                to: points[i],
            });
        }
    }
    // Solve a*q - b*p = 1 with minimal |b| (ties toward positive) so that
    // horizontal input yields the identity linear part.
    let (p, q) = (d.dx, d.dy);
    let (a, b) = if q == 0 {
        (0, -p)
    } else {
        let (_, _, y) = extended_gcd(q, p)?;
        let b0 = -y;
        let m = q.abs();
        let mut b = b0.rem_euclid(m);
        if 2 * b > m {
            b -= m;
        }
        ((1 + b * p) / q, b)
    };
    debug_assert_eq!(a * q - b * p, 1);
    let linear = [[-b, a], [-q, p]];
    let base = AffineMap::new(linear, [0, 0]).apply_point(points[0])?;
    Ok(AffineMap::new(linear, [1 - base.x, -base.y]))
}

/// Draws a random unimodular map as a short word in shears, a swap, and an
/// axis negation, with a bounded translation. Entry growth stays small
/// enough that mapped corpus polygons remain inside the coordinate range.
pub fn random_unimodular_map<R: Rng + ?Sized>(rng: &mut R) -> AffineMap {
    const SHEARS: [i64; 4] = [-2, -1, 1, 2];
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..rng.gen_range(1..=8) {
        let f = match rng.gen_range(0..4u8) {
            0 => {
                let s = SHEARS[rng.gen_range(0..4)];
                [[1, s], [0, 1]]
            }
            1 => {
                let s = SHEARS[rng.gen_range(0..4)];
                [[1, 0], [s, 1]]
            }
            2 => [[0, 1], [1, 0]],
            _ => [[-1, 0], [0, 1]],
        };
        m = [
            [
                f[0][0] * m[0][0] + f[0][1] * m[1][0],
                f[0][0] * m[0][1] + f[0][1] * m[1][1],
            ],
            [
                f[1][0] * m[0][0] + f[1][1] * m[1][0],
                f[1][0] * m[0][1] + f[1][1] * m[1][1],
            ],
        ];
    }
    AffineMap::new(m, [rng.gen_range(-10..=10), rng.gen_range(-10..=10)])
}
