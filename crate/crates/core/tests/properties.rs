//! Property-based tests for the exact distance engine and the cube
//! orthogonality criterion.

use num::bigint::BigInt;
use num::rational::BigRational;
use orthoexp::distances::{distinct_distances, DistanceMode};
use orthoexp::domains::{zero_set, Domain};
use orthoexp::ortho::check_orthogonal;
use orthoexp::points::PointSet;
use proptest::collection::vec;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn dedup_points(raw: Vec<(i64, i64)>) -> Vec<Vec<BigRational>> {
    let mut out: Vec<Vec<BigRational>> = Vec::new();
    for (x, y) in raw {
        let p = vec![rat(x, 4), rat(y, 4)];
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn point_sets() -> impl Strategy<Value = Vec<Vec<BigRational>>> {
    vec((-60i64..=60, -60i64..=60), 2..25).prop_map(dedup_points)
}

fn count(pts: Vec<Vec<BigRational>>) -> usize {
    let set = PointSet::from_exact(2, pts, "prop").unwrap();
    distinct_distances(&set, DistanceMode::Exact)
        .unwrap()
        .distinct_count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distinct_count_bounded_by_pairs(pts in point_sets()) {
        prop_assume!(pts.len() >= 2);
        let n = pts.len();
        let c = count(pts);
        prop_assert!(c >= 1);
        prop_assert!(c <= n * (n - 1) / 2);
    }

    #[test]
    fn translation_invariance(pts in point_sets(), tx in -100i64..=100, ty in -100i64..=100) {
        prop_assume!(pts.len() >= 2);
        let base = count(pts.clone());
        let shifted: Vec<_> = pts
            .iter()
            .map(|p| vec![&p[0] + rat(tx, 3), &p[1] + rat(ty, 3)])
            .collect();
        prop_assert_eq!(count(shifted), base);
    }

    #[test]
    fn rotation_and_reflection_invariance(pts in point_sets()) {
        prop_assume!(pts.len() >= 2);
        let base = count(pts.clone());
        // quarter turn (x, y) -> (-y, x)
        let rotated: Vec<_> = pts.iter().map(|p| vec![-&p[1], p[0].clone()]).collect();
        prop_assert_eq!(count(rotated), base);
        // reflection across the x-axis
        let reflected: Vec<_> = pts.iter().map(|p| vec![p[0].clone(), -&p[1]]).collect();
        prop_assert_eq!(count(reflected), base);
    }

    #[test]
    fn scaling_invariance(pts in point_sets(), num in 1i64..=9, den in 1i64..=9) {
        prop_assume!(pts.len() >= 2);
        let base = count(pts.clone());
        let s = rat(num, den);
        let scaled: Vec<_> = pts
            .iter()
            .map(|p| vec![&p[0] * &s, &p[1] * &s])
            .collect();
        prop_assert_eq!(count(scaled), base);
    }

    #[test]
    fn monotone_under_removal(pts in point_sets()) {
        prop_assume!(pts.len() >= 3);
        let base = count(pts.clone());
        let mut fewer = pts;
        fewer.pop();
        prop_assert!(count(fewer) <= base);
    }

    #[test]
    fn cube_criterion_exactness(coords in vec(-30i64..=30, 2..=8)) {
        // pairs of 2-d lattice points from the pool are always orthogonal
        let mut pts: Vec<Vec<BigRational>> = Vec::new();
        for w in coords.chunks(2) {
            if w.len() < 2 {
                continue;
            }
            let p = vec![rat(w[0], 1), rat(w[1], 1)];
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        prop_assume!(pts.len() >= 2);
        let set = PointSet::from_exact(2, pts, "lattice").unwrap();
        let rep = check_orthogonal(Domain::cube(2).unwrap(), &set, 1e-9).unwrap();
        prop_assert!(rep.verdict);
    }

    #[test]
    fn cube_membership_is_exact(x in -20i64..=20, y in -20i64..=20, off in 1i64..=9) {
        let zs = zero_set(Domain::cube(2).unwrap(), 1.0).unwrap();
        // integer difference with a nonzero coordinate is always in the zero set
        if x != 0 || y != 0 {
            let diff = [x as f64, y as f64];
            prop_assert!(zs.contains(&diff, 1e-9)?);
        }
        // shifting one coordinate off the lattice breaks membership unless the
        // other coordinate is still a nonzero integer
        let diff = [x as f64 + off as f64 / 10.0, 0.0];
        prop_assert!(!zs.contains(&diff, 1e-9)?);
    }

    #[test]
    fn clustered_never_exceeds_exact(pts in point_sets()) {
        prop_assume!(pts.len() >= 2);
        let set = PointSet::from_exact(2, pts, "prop").unwrap();
        let exact = distinct_distances(&set, DistanceMode::Exact)
            .unwrap()
            .distinct_count();
        let clustered = distinct_distances(&set, DistanceMode::Clustered(1e-9))
            .unwrap()
            .distinct_count();
        prop_assert!(clustered <= exact);
        prop_assert!(clustered >= 1);
    }

    #[test]
    fn csv_round_trip(pts in point_sets()) {
        prop_assume!(pts.len() >= 2);
        let set = PointSet::from_exact(2, pts, "round-trip").unwrap();
        let csv = set.to_csv();
        let back = PointSet::parse_csv(&csv, "round-trip").unwrap();
        prop_assert_eq!(back.len(), set.len());
        let a = distinct_distances(&set, DistanceMode::Exact).unwrap().distinct_count();
        let b = distinct_distances(&back, DistanceMode::Exact).unwrap().distinct_count();
        prop_assert_eq!(a, b);
    }
}
