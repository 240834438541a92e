//! Randomized invariants over a deterministic polygon corpus, cross-checking
//! the fast implementations against brute-force scans.

use latpoly::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::LazyLock;

static CORPUS: LazyLock<Vec<ConvexLatticePolygon>> =
    LazyLock::new(|| corpus(11, 12, 400).expect("corpus generation"));

fn pick(index: prop::sample::Index) -> &'static ConvexLatticePolygon {
    &CORPUS[index.index(CORPUS.len())]
}

/// Interior lattice points by scanning the bounding box with the orientation
/// predicate on every edge.
fn brute_interior(p: &ConvexLatticePolygon) -> Vec<LatticePoint> {
    let (lo, hi) = p.bounding_box();
    let mut inside = Vec::new();
    for y in lo.y..=hi.y {
        for x in lo.x..=hi.x {
            let q = LatticePoint::new(x, y);
            let strict = (0..p.n()).all(|i| {
                let (u, v) = p.edge(i).unwrap();
                orientation(u, v, q) == 1
            });
            if strict {
                inside.push(q);
            }
        }
    }
    inside
}

fn brute_boundary(p: &ConvexLatticePolygon) -> u64 {
    let (lo, hi) = p.bounding_box();
    let mut count = 0;
    for y in lo.y..=hi.y {
        for x in lo.x..=hi.x {
            let q = LatticePoint::new(x, y);
            let on_edge = (0..p.n()).any(|i| {
                let (u, v) = p.edge(i).unwrap();
                orientation(u, v, q) == 0
                    && q.x >= u.x.min(v.x)
                    && q.x <= u.x.max(v.x)
                    && q.y >= u.y.min(v.y)
                    && q.y <= u.y.max(v.y)
            });
            if on_edge {
                count += 1;
            }
        }
    }
    count
}

proptest! {
    #[test]
    fn canonical_form_ignores_rotation_and_direction(
        index: prop::sample::Index,
        rot: prop::sample::Index,
        rev: bool,
    ) {
        let p = pick(index);
        let mut vs = p.vertices().to_vec();
        let shift = rot.index(vs.len());
        vs.rotate_left(shift);
        if rev {
            vs.reverse();
        }
        let q = ConvexLatticePolygon::from_points(vs).unwrap();
        prop_assert_eq!(p, &q);
    }

    #[test]
    fn pick_identity_holds(index: prop::sample::Index) {
        let r = pick(index).analyze();
        prop_assert_eq!(r.area2, r.b as i64 + 2 * r.i as i64 - 2);
        prop_assert!(r.pick_ok);
        prop_assert!(r.coleman_ok);
    }

    #[test]
    fn interior_matches_brute_force_scan(index: prop::sample::Index) {
        let p = pick(index);
        let mut brute = brute_interior(p);
        brute.sort_by_key(|q| (q.y, q.x));
        prop_assert_eq!(p.interior_points(), brute);
    }

    #[test]
    fn boundary_count_matches_brute_force_scan(index: prop::sample::Index) {
        let p = pick(index);
        prop_assert_eq!(p.boundary_count(), brute_boundary(p));
    }

    #[test]
    fn unimodular_maps_round_trip(index: prop::sample::Index, seed: u64) {
        let p = pick(index);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_unimodular_map(&mut rng);
        let q = f.apply(p).unwrap();
        let before = p.analyze();
        let after = q.analyze();
        prop_assert_eq!(before.n, after.n);
        prop_assert_eq!(before.b, after.b);
        prop_assert_eq!(before.i, after.i);
        prop_assert_eq!(before.area2, after.area2);
        prop_assert_eq!(before.interior_collinear, after.interior_collinear);
        let back = f.inverse().unwrap().apply(&q).unwrap();
        prop_assert_eq!(p, &back);
    }

    #[test]
    fn candidate_window_agrees_with_append(index: prop::sample::Index) {
        let p = pick(index);
        for i in 0..p.n() {
            let canonical = canonical_candidate(p, i).unwrap();
            let candidates = apex_candidates(p, i).unwrap();
            // the window and the orientation test are independent routes to
            // the same answer
            prop_assert_eq!(
                canonical.feasible,
                can_append(p, i).unwrap().is_yes()
            );
            prop_assert_eq!(
                canonical.feasible,
                candidates.iter().any(|c| c.offset == 0)
            );
            for c in &candidates {
                prop_assert!(c.feasible);
                let report = append(p, i, Some(c.point)).unwrap();
                prop_assert_eq!(report.after.n(), p.n() + 1);
            }
        }
    }

    #[test]
    fn append_grows_boundary_and_keeps_interior(index: prop::sample::Index) {
        let p = pick(index);
        let before = p.analyze();
        for i in 0..p.n() {
            if !can_append(p, i).unwrap().is_yes() {
                continue;
            }
            let after = append(p, i, None).unwrap().after.analyze();
            prop_assert_eq!(after.n, before.n + 1);
            prop_assert_eq!(after.b, before.b + 1);
            prop_assert_eq!(after.area2, before.area2 + 1);
            prop_assert_eq!(&after.interior_pts, &before.interior_pts);
        }
    }

    #[test]
    fn segment_count_matches_brute_scan(
        ax in -30i64..=30,
        ay in -30i64..=30,
        bx in -30i64..=30,
        by in -30i64..=30,
    ) {
        let a = LatticePoint::new(ax, ay);
        let b = LatticePoint::new(bx, by);
        prop_assume!(a != b);
        let mut brute = 0;
        for y in ay.min(by)..=ay.max(by) {
            for x in ax.min(bx)..=ax.max(bx) {
                let q = LatticePoint::new(x, y);
                if q != a && q != b && orientation(a, b, q) == 0 {
                    brute += 1;
                }
            }
        }
        prop_assert_eq!(segment_lattice_count(a, b).unwrap(), brute);
    }
}
