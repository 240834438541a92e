//! Reading and writing polygons and point lists. Input is either a JSON
//! document or plain text with one "x y" pair per line; output is JSON.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::point::LatticePoint;
use crate::polygon::ConvexLatticePolygon;

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse {
        message: e.to_string(),
    }
}

/// Parses a polygon from a JSON object with a "vertices" array or from
/// plain text. The result is fully validated either way.
pub fn polygon_from_str(input: &str) -> Result<ConvexLatticePolygon> {
    if input.trim_start().starts_with('{') {
        serde_json::from_str(input).map_err(parse_err)
    } else {
        ConvexLatticePolygon::from_points(parse_plain(input)?)
    }
}

pub fn polygon_to_json(p: &ConvexLatticePolygon) -> String {
    serde_json::to_string_pretty(p).expect("polygon serialization cannot fail")
}

/// Parses a point list: a bare JSON array of pairs, a JSON object with a
/// "points" or "vertices" array, or plain text.
pub fn points_from_str(input: &str) -> Result<Vec<LatticePoint>> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str(input).map_err(parse_err);
    }
    if trimmed.starts_with('{') {
        #[derive(Deserialize)]
        struct Keyed {
            points: Option<Vec<LatticePoint>>,
            vertices: Option<Vec<LatticePoint>>,
        }
        let keyed: Keyed = serde_json::from_str(input).map_err(parse_err)?;
        return keyed.points.or(keyed.vertices).ok_or_else(|| Error::Parse {
            message: "expected a \"points\" or \"vertices\" array".to_string(),
        });
    }
    parse_plain(input)
}

fn parse_plain(input: &str) -> Result<Vec<LatticePoint>> {
    let mut pts = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(xs), Some(ys), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                message: format!("line {}: expected \"x y\"", idx + 1),
            });
        };
        let x = xs.parse().map_err(|_| Error::Parse {
            message: format!("line {}: bad integer {xs:?}", idx + 1),
        })?;
        let y = ys.parse().map_err(|_| Error::Parse {
            message: format!("line {}: bad integer {ys:?}", idx + 1),
        })?;
        pts.push(LatticePoint::new(x, y));
    }
    Ok(pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn polygon_json_round_trip() {
        let poly = ConvexLatticePolygon::from_points(vec![p(0, 0), p(6, -1), p(5, 1)]).unwrap();
        let text = polygon_to_json(&poly);
        let back = polygon_from_str(&text).unwrap();
        assert_eq!(poly, back);
    }

    #[test]
    fn polygon_from_plain_text() {
        let poly = polygon_from_str("0 0\n6 -1\n5 1\n").unwrap();
        assert_eq!(poly.vertices(), [p(0, 0), p(6, -1), p(5, 1)]);
        // blank lines and leading spaces are fine
        let poly2 = polygon_from_str("\n  0 0\n6 -1\n\n5 1").unwrap();
        assert_eq!(poly, poly2);
    }

    #[test]
    fn polygon_json_is_validated() {
        let bad = r#"{"vertices": [[0, 0], [2, 0], [0, 2]]}"#;
        let err = polygon_from_str(bad).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn plain_text_error_reports_line() {
        let err = polygon_from_str("0 0\n1 oops\n0 1").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                message: "line 2: bad integer \"oops\"".to_string()
            }
        );
        let err = polygon_from_str("0 0 7\n1 0\n0 1").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn point_lists_accept_three_shapes() {
        let want = vec![p(1, 1), p(2, 2), p(3, 3)];
        assert_eq!(points_from_str("[[1,1],[2,2],[3,3]]").unwrap(), want);
        assert_eq!(
            points_from_str(r#"{"points": [[1,1],[2,2],[3,3]]}"#).unwrap(),
            want
        );
        assert_eq!(
            points_from_str(r#"{"vertices": [[1,1],[2,2],[3,3]]}"#).unwrap(),
            want
        );
        assert_eq!(points_from_str("1 1\n2 2\n3 3\n").unwrap(), want);
        assert!(points_from_str(r#"{"other": 1}"#).is_err());
    }
}
