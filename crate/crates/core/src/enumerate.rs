//! Exhaustive enumeration of polygons with a prescribed collinear interior,
//! the classification of achievable vertex counts, a seeded random polygon
//! corpus, a search for vertices off the three-row strip, and boundary
//! inequality sweeps.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{gcd, orientation, LatticePoint, LatticeVector};
use crate::polygon::ConvexLatticePolygon;

fn ensure_k(k: i64) -> Result<()> {
    if k < 3 {
        return Err(Error::Parameter {
            message: format!("interior size must be at least 3, got k = {k}"),
        });
    }
    Ok(())
}

fn targets(k: i64) -> Vec<LatticePoint> {
    (1..=k).map(|x| LatticePoint::new(x, 0)).collect()
}

/// Every convex lattice polygon whose interior lattice points are exactly
/// (1,0), ..., (k,0), with vertex x coordinates searched in
/// [1 - k*x_margin, k + k*x_margin]. Results come back sorted by vertex list.
///
/// Once that interior is fixed, vertices can only sit on the rows y = -1, 0,
/// 1 (`strip_violation_search` re-checks this claim empirically), on y = 0
/// only at (0,0) or (k+1,0), and two vertices sharing a row must be
/// x-adjacent or the edge between them would not be primitive. That cuts the
/// search to choices of a bottom row, a top row, and the two optional side
/// vertices.
pub fn enumerate_collinear(k: i64, x_margin: i64) -> Result<Vec<ConvexLatticePolygon>> {
    ensure_k(k)?;
    if x_margin < 1 {
        return Err(Error::Parameter {
            message: format!("x_margin must be at least 1, got {x_margin}"),
        });
    }
    let x_lo = 1 - k * x_margin;
    let x_hi = k + k * x_margin;

    let mut tops: Vec<Vec<LatticePoint>> = vec![Vec::new()];
    for x in x_lo..=x_hi {
        tops.push(vec![LatticePoint::new(x, 1)]);
        if x < x_hi {
            tops.push(vec![LatticePoint::new(x, 1), LatticePoint::new(x + 1, 1)]);
        }
    }
    let bottoms: Vec<Vec<LatticePoint>> = tops
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| LatticePoint::new(p.x, -1))
                .collect()
        })
        .collect();
    let left = LatticePoint::new(0, 0);
    let right = LatticePoint::new(k + 1, 0);
    let wanted = targets(k);

    let mut found = BTreeSet::new();
    let mut cycle: Vec<LatticePoint> = Vec::with_capacity(6);
    for bottom in &bottoms {
        for top in &tops {
            for use_left in [false, true] {
                for use_right in [false, true] {
                    cycle.clear();
                    if use_left {
                        cycle.push(left);
                    }
                    cycle.extend_from_slice(bottom);
                    if use_right {
                        cycle.push(right);
                    }
                    cycle.extend(top.iter().rev().copied());
                    if cycle.len() < 3 || !quick_valid(&cycle, k) {
                        continue;
                    }
                    let Ok(poly) = ConvexLatticePolygon::from_points(cycle.clone()) else {
                        continue;
                    };
                    if poly.analyze().interior_pts == wanted {
                        found.insert(poly);
                    }
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Cheap exact filter run before full validation: strict left turns,
/// primitive edges, the right area for k interior points, and all k targets
/// strictly inside.
fn quick_valid(cycle: &[LatticePoint], k: i64) -> bool {
    let n = cycle.len();
    let mut area2 = 0i64;
    for i in 0..n {
        let a = cycle[i];
        let b = cycle[(i + 1) % n];
        let c = cycle[(i + 2) % n];
        if orientation(a, b, c) != 1 {
            return false;
        }
        let d = b - a;
        if gcd(d.dx, d.dy) != 1 {
            return false;
        }
        area2 += a.x * b.y - b.x * a.y;
    }
    // primitive edges make the boundary count n, so Pick fixes the area
    if area2 != 2 * k + n as i64 - 2 {
        return false;
    }
    (1..=k).all(|x| {
        let p = LatticePoint::new(x, 0);
        (0..n).all(|i| orientation(cycle[i], cycle[(i + 1) % n], p) == 1)
    })
}

/// Search window actually used by a classification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub x_min: i64,
    pub x_max: i64,
    pub x_margin: i64,
}

/// Which vertex counts are achievable for interior (1,0), ..., (k,0).
/// `counts` and `witnesses` are relative to the search window in `bounds`;
/// the achievable set is what stabilizes as the window widens.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub k: i64,
    pub achievable_n: BTreeSet<usize>,
    pub counts: BTreeMap<usize, usize>,
    pub witnesses: BTreeMap<usize, ConvexLatticePolygon>,
    pub bounds: SearchBounds,
}

pub const DEFAULT_X_MARGIN: i64 = 2;

/// Classifies achievable vertex counts for interior (1,0), ..., (k,0),
/// re-running with a widened x window to confirm the answer is stable.
pub fn classify(k: i64) -> Result<ClassificationReport> {
    classify_with_margin(k, DEFAULT_X_MARGIN)
}

pub fn classify_with_margin(k: i64, x_margin: i64) -> Result<ClassificationReport> {
    let base = enumerate_collinear(k, x_margin)?;
    let wide = enumerate_collinear(k, x_margin + 1)?;
    // Raw polygon counts grow with the window (arbitrarily skewed polygons
    // share one interior), so stability is about the achievable vertex
    // counts, not the polygon lists.
    let ns = |list: &[ConvexLatticePolygon]| -> BTreeSet<usize> {
        list.iter().map(|q| q.n()).collect()
    };
    if ns(&base) != ns(&wide) {
        return Err(Error::UnstableClassification { k, x_margin });
    }
    let mut counts = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for poly in &base {
        *counts.entry(poly.n()).or_insert(0usize) += 1;
        witnesses.entry(poly.n()).or_insert_with(|| poly.clone());
    }
    Ok(ClassificationReport {
        k,
        achievable_n: counts.keys().copied().collect(),
        counts,
        witnesses,
        bounds: SearchBounds {
            x_min: 1 - k * x_margin,
            x_max: k + k * x_margin,
            x_margin,
        },
    })
}

pub const MAX_CORPUS_BOX: i64 = 64;
pub const MAX_CORPUS_COUNT: usize = 100_000;

/// Deterministic random corpus: strictly convex hulls with primitive edges
/// of small random point sets drawn from [0, box_size) x [0, box_size),
/// deduplicated, in generation order. The same arguments always produce the
/// same corpus, independent of platform.
pub fn corpus(seed: u64, box_size: i64, count: usize) -> Result<Vec<ConvexLatticePolygon>> {
    if !(2..=MAX_CORPUS_BOX).contains(&box_size) {
        return Err(Error::Parameter {
            message: format!("corpus box_size must be in 2..=64, got {box_size}"),
        });
    }
    if count == 0 || count > MAX_CORPUS_COUNT {
        return Err(Error::Parameter {
            message: format!("corpus count must be in 1..=100000, got {count}"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<Vec<LatticePoint>> = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    let max_attempts = count.saturating_mul(1000).saturating_add(10_000);
    while out.len() < count {
        attempts += 1;
        if attempts > max_attempts {
            return Err(Error::CorpusExhausted {
                wanted: count,
                got: out.len(),
            });
        }
        let m = rng.gen_range(3..=10usize);
        let mut pts: Vec<LatticePoint> = (0..m)
            .map(|_| LatticePoint::new(rng.gen_range(0..box_size), rng.gen_range(0..box_size)))
            .collect();
        pts.sort();
        pts.dedup();
        if pts.len() < 3 {
            continue;
        }
        let hull = strict_hull(&pts);
        if hull.len() < 3 {
            continue;
        }
        let primitive = (0..hull.len()).all(|i| {
            let d = hull[(i + 1) % hull.len()] - hull[i];
            d.is_primitive()
        });
        if !primitive {
            continue;
        }
        let poly = ConvexLatticePolygon::from_points(hull)?;
        if seen.insert(poly.vertices().to_vec()) {
            out.push(poly);
        }
    }
    Ok(out)
}

/// Monotone-chain convex hull keeping only strict corners. Input must be
/// sorted and deduplicated; the result is counter-clockwise.
fn strict_hull(pts: &[LatticePoint]) -> Vec<LatticePoint> {
    let build = |iter: &mut dyn Iterator<Item = LatticePoint>| {
        let mut chain: Vec<LatticePoint> = Vec::new();
        for p in iter {
            while chain.len() >= 2
                && orientation(chain[chain.len() - 2], chain[chain.len() - 1], p) <= 0
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain
    };
    let mut lower = build(&mut pts.iter().copied());
    let mut upper = build(&mut pts.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Axis-aligned window for the off-strip vertex hunt.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripRegion {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl StripRegion {
    /// Window wide enough to contain every known family member for this k
    /// plus padding on all sides.
    pub fn default_for(k: i64) -> Self {
        StripRegion {
            x_min: -5,
            x_max: k + 7,
            y_min: -4,
            y_max: 4,
        }
    }
}

/// Outcome of hunting for a polygon with interior (1,0), ..., (k,0) and a
/// vertex off the rows y = -1, 0, 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripSearchReport {
    pub k: i64,
    pub region: StripRegion,
    pub points_scanned: usize,
    /// Off-strip points surviving the exact per-vertex filters; every vertex
    /// of a counterexample would have to be one of these.
    pub strip_candidates: Vec<LatticePoint>,
    pub counterexample: Option<ConvexLatticePolygon>,
}

/// Searches the window for a polygon whose interior is exactly
/// (1,0), ..., (k,0) but which has a vertex with |y| >= 2.
///
/// Any vertex v of such a polygon must pass two exact conditions: every
/// lattice point strictly between v and an interior point is interior too,
/// and the triangle spanned by v and the interior row has no interior
/// lattice points of its own (both follow from convexity, by Pick counting).
/// Points surviving those filters are reported; only if an off-strip point
/// survives does the exhaustive assembly over surviving candidates run.
pub fn strip_violation_search(k: i64, region: StripRegion) -> Result<StripSearchReport> {
    ensure_k(k)?;
    if !(region.x_min < 1 && region.x_max > k && region.y_min <= -2 && region.y_max >= 2) {
        return Err(Error::Parameter {
            message: format!(
                "strip region must cover x beyond [1, {k}] and reach |y| >= 2, got {region:?}"
            ),
        });
    }
    let mut strip_candidates = Vec::new();
    let mut low_candidates = Vec::new();
    let mut points_scanned = 0usize;
    for y in region.y_min..=region.y_max {
        for x in region.x_min..=region.x_max {
            points_scanned += 1;
            let v = LatticePoint::new(x, y);
            if vertex_compatible(k, v) {
                if y.abs() >= 2 {
                    strip_candidates.push(v);
                } else {
                    low_candidates.push(v);
                }
            }
        }
    }
    let counterexample = if strip_candidates.is_empty() {
        None
    } else {
        assemble_counterexample(k, &low_candidates, &strip_candidates)
    };
    Ok(StripSearchReport {
        k,
        region,
        points_scanned,
        strip_candidates,
        counterexample,
    })
}

/// Exact necessary conditions for v to be a vertex of a polygon whose
/// interior is precisely (1,0), ..., (k,0).
fn vertex_compatible(k: i64, v: LatticePoint) -> bool {
    let in_t = |p: LatticePoint| p.y == 0 && 1 <= p.x && p.x <= k;
    if in_t(v) {
        return false;
    }
    for x in 1..=k {
        let t = LatticePoint::new(x, 0);
        let d = t - v;
        let g = gcd(d.dx, d.dy);
        let step = LatticeVector::new(d.dx / g, d.dy / g);
        for j in 1..g {
            if !in_t(v + step * j) {
                return false;
            }
        }
    }
    if v.y != 0 {
        // Pick count of the triangle v, (1,0), (k,0): its open interior
        // avoids the target row entirely, so it must be lattice free
        let t1 = LatticePoint::new(1, 0);
        let tk = LatticePoint::new(k, 0);
        let area2 = (t1 - v).cross(tk - v).abs();
        let b = (k - 1)
            + gcd(t1.x - v.x, t1.y - v.y)
            + gcd(tk.x - v.x, tk.y - v.y);
        if area2 - b + 2 != 0 {
            return false;
        }
    }
    true
}

/// Exhaustive polygon assembly over surviving candidate vertices, requiring
/// at least one off-strip vertex. Only reached when the per-vertex filter
/// keeps an off-strip point, which no tested window has produced.
fn assemble_counterexample(
    k: i64,
    low: &[LatticePoint],
    strip: &[LatticePoint],
) -> Option<ConvexLatticePolygon> {
    let wanted = targets(k);
    let all: Vec<LatticePoint> = low.iter().chain(strip).copied().collect();
    let strip_set: HashSet<LatticePoint> = strip.iter().copied().collect();
    // boundary count is at least n, so Coleman's bound caps the vertex count
    let max_n = usize::try_from(k + 5).unwrap_or(usize::MAX).min(all.len());

    fn dfs(
        all: &[LatticePoint],
        idx: usize,
        chosen: &mut Vec<LatticePoint>,
        strip_set: &HashSet<LatticePoint>,
        wanted: &[LatticePoint],
        max_n: usize,
    ) -> Option<ConvexLatticePolygon> {
        if chosen.len() >= 3 && chosen.iter().any(|p| strip_set.contains(p)) {
            let mut sorted = chosen.clone();
            sorted.sort();
            let hull = strict_hull(&sorted);
            if hull.len() == chosen.len() {
                if let Ok(poly) = ConvexLatticePolygon::from_points(hull) {
                    if poly.analyze().interior_pts == wanted {
                        return Some(poly);
                    }
                }
            }
        }
        if idx == all.len() || chosen.len() == max_n {
            return None;
        }
        chosen.push(all[idx]);
        if let Some(found) = dfs(all, idx + 1, chosen, strip_set, wanted, max_n) {
            return Some(found);
        }
        chosen.pop();
        dfs(all, idx + 1, chosen, strip_set, wanted, max_n)
    }

    let mut chosen = Vec::new();
    dfs(&all, 0, &mut chosen, &strip_set, &wanted, max_n)
}

/// One polygon breaking a boundary-count inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityViolation {
    pub polygon: ConvexLatticePolygon,
    pub rule: String,
    pub n: usize,
    pub b: u64,
    pub i: u64,
}

/// Checks B <= 2I - n + 10 and I >= n - 5, plus the pentagon and heptagon
/// floors (B = 5 forces I >= 1, B = 7 forces I >= 4), over a set of
/// polygons. Returns every violation, expected none.
pub fn inequality_sweep<'a, It>(polygons: It) -> Vec<InequalityViolation>
where
    It: IntoIterator<Item = &'a ConvexLatticePolygon>,
{
    let mut out = Vec::new();
    for poly in polygons {
        let r = poly.analyze();
        let (n, b, i) = (r.n as i64, r.b as i64, r.i as i64);
        let checks: [(&str, bool); 4] = [
            ("b <= 2i - n + 10", b <= 2 * i - n + 10),
            ("i >= n - 5", i >= n - 5),
            ("b = 5 forces i >= 1", !(b == 5 && i < 1)),
            ("b = 7 forces i >= 4", !(b == 7 && i < 4)),
        ];
        for (rule, ok) in checks {
            if !ok {
                out.push(InequalityViolation {
                    polygon: poly.clone(),
                    rule: rule.to_string(),
                    n: r.n,
                    b: r.b,
                    i: r.i,
                });
            }
        }
    }
    out
}
