//! Appending primitive triangles to polygon edges: the single append
//! operation, a deterministic saturation sweep, the verifier for the rule
//! that freshly created edges admit no further append, and an exhaustive
//! search for the longest append sequence.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::apex::{apex_candidates, canonical_apex};
use crate::error::{Error, Result};
use crate::point::{orientation, LatticePoint};
use crate::polygon::ConvexLatticePolygon;

/// Why an edge admits no canonical append.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RejectReason {
    CollinearAtPreceding,
    ReflexAtPreceding,
    CollinearOrReflexAtFollowing,
}

/// Outcome of testing an edge for a canonical append.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AppendDecision {
    Yes { apex: LatticePoint },
    No { reason: RejectReason },
}

impl AppendDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, AppendDecision::Yes { .. })
    }
}

/// Tests whether inserting the canonical apex of edge `i` keeps the polygon
/// strictly convex.
pub fn can_append(p: &ConvexLatticePolygon, i: usize) -> Result<AppendDecision> {
    let n = p.n();
    if i >= n {
        return Err(Error::EdgeIndex { index: i, n });
    }
    let vs = p.vertices();
    let prev = vs[(i + n - 1) % n];
    let u = vs[i];
    let v = vs[(i + 1) % n];
    let next = vs[(i + 2) % n];
    let w = canonical_apex(u, v)?;
    let at_prev = orientation(prev, u, w);
    if at_prev == 0 {
        return Ok(AppendDecision::No {
            reason: RejectReason::CollinearAtPreceding,
        });
    }
    if at_prev < 0 {
        return Ok(AppendDecision::No {
            reason: RejectReason::ReflexAtPreceding,
        });
    }
    if orientation(w, v, next) <= 0 {
        return Ok(AppendDecision::No {
            reason: RejectReason::CollinearOrReflexAtFollowing,
        });
    }
    Ok(AppendDecision::Yes { apex: w })
}

/// One applied append.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendReport {
    pub edge: usize,
    pub apex: LatticePoint,
    pub canonical: bool,
    pub before: ConvexLatticePolygon,
    pub after: ConvexLatticePolygon,
}

/// Inserts an apex between the endpoints of edge `i`, growing the area by
/// one half unit and the boundary count by one while the interior stays
/// fixed. With `apex: None` the canonical apex is used and must be feasible;
/// an explicit apex must lie on the minimal exterior line of the edge and
/// preserve strict convexity.
pub fn append(
    p: &ConvexLatticePolygon,
    i: usize,
    apex: Option<LatticePoint>,
) -> Result<AppendReport> {
    let n = p.n();
    if i >= n {
        return Err(Error::EdgeIndex { index: i, n });
    }
    let vs = p.vertices();
    let prev = vs[(i + n - 1) % n];
    let u = vs[i];
    let v = vs[(i + 1) % n];
    let next = vs[(i + 2) % n];
    let wc = canonical_apex(u, v)?;
    let w = match apex {
        None => match can_append(p, i)? {
            AppendDecision::Yes { apex } => apex,
            AppendDecision::No { reason } => {
                return Err(Error::AppendRejected { edge: i, reason })
            }
        },
        Some(w) => {
            if (v - u).cross(w - u) != -1 {
                return Err(Error::ApexOffLine { apex: w, edge: i });
            }
            if orientation(prev, u, w) != 1 || orientation(w, v, next) != 1 {
                return Err(Error::ApexInfeasible { apex: w, edge: i });
            }
            w
        }
    };
    let mut grown = Vec::with_capacity(n + 1);
    grown.extend_from_slice(&vs[..=i]);
    grown.push(w);
    grown.extend_from_slice(&vs[i + 1..]);
    let after = ConvexLatticePolygon::from_points(grown)?;
    Ok(AppendReport {
        edge: i,
        apex: w,
        canonical: w == wc,
        before: p.clone(),
        after,
    })
}

/// Appends canonical apexes by sweeping the edges in index order until a
/// full sweep changes nothing. Edges created during a sweep are only
/// examined from the next sweep on. The total append count can depend on
/// this order; the sweep itself is deterministic.
pub fn saturate(
    p: &ConvexLatticePolygon,
) -> Result<(ConvexLatticePolygon, Vec<AppendReport>)> {
    let mut current = p.clone();
    let mut reports = Vec::new();
    loop {
        let snapshot: Vec<(LatticePoint, LatticePoint)> = {
            let vs = current.vertices();
            (0..vs.len())
                .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
                .collect()
        };
        let before_count = reports.len();
        for (u, v) in snapshot {
            // appends never remove vertices, so the edge is still the one
            // leaving u unless it was split, which only we could have done
            let i = current.vertex_position(u).expect("vertex survives appends");
            debug_assert_eq!(current.vertices()[(i + 1) % current.n()], v);
            if can_append(&current, i)?.is_yes() {
                let report = append(&current, i, None)?;
                current = report.after.clone();
                reports.push(report);
            }
        }
        if reports.len() == before_count {
            break;
        }
    }
    Ok((current, reports))
}

/// A failed expectation that a freshly created edge admits no append.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendOnceViolation {
    pub base: ConvexLatticePolygon,
    pub edge: usize,
    pub after: ConvexLatticePolygon,
    pub new_edge: usize,
    pub canonical_appendable: bool,
    pub feasible_candidates: usize,
}

/// Appends at every appendable edge in turn and checks both edges created by
/// each append: the canonical apex must be infeasible and the candidate list
/// empty. Returns all violations found, expected none.
pub fn verify_append_once(p: &ConvexLatticePolygon) -> Result<Vec<AppendOnceViolation>> {
    let mut violations = Vec::new();
    for i in 0..p.n() {
        if !can_append(p, i)?.is_yes() {
            continue;
        }
        let report = append(p, i, None)?;
        let after = &report.after;
        let split_at = after
            .vertex_position(p.vertices()[i])
            .expect("vertex survives appends");
        for new_edge in [split_at, (split_at + 1) % after.n()] {
            let canonical_appendable = can_append(after, new_edge)?.is_yes();
            let feasible_candidates = apex_candidates(after, new_edge)?.len();
            if canonical_appendable || feasible_candidates > 0 {
                violations.push(AppendOnceViolation {
                    base: p.clone(),
                    edge: i,
                    after: after.clone(),
                    new_edge,
                    canonical_appendable,
                    feasible_candidates,
                });
            }
        }
    }
    Ok(violations)
}

/// Length of the longest canonical-append sequence over all edge orders,
/// found by exhaustive search with memoization on the canonical vertex list.
/// Intended for small seeds; inputs with more than 8 vertices are rejected.
pub fn max_canonical_appends(p: &ConvexLatticePolygon) -> Result<usize> {
    if p.n() > 8 {
        return Err(Error::Parameter {
            message: format!(
                "exhaustive append search accepts at most 8 vertices, got {}",
                p.n()
            ),
        });
    }
    fn go(
        p: &ConvexLatticePolygon,
        memo: &mut HashMap<Vec<LatticePoint>, usize>,
    ) -> Result<usize> {
        if let Some(&hit) = memo.get(p.vertices()) {
            return Ok(hit);
        }
        let mut best = 0;
        for i in 0..p.n() {
            if can_append(p, i)?.is_yes() {
                let report = append(p, i, None)?;
                best = best.max(1 + go(&report.after, memo)?);
            }
        }
        memo.insert(p.vertices().to_vec(), best);
        Ok(best)
    }
    go(p, &mut HashMap::new())
}
