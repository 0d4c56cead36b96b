mod common;

use common::{hnf_by_lattice_scan, p, random_map, random_unimodular, rng};
use lp3_core::geometry::{affine_dimension, convex_hull, hnf, lattice_points, IntMatrix3, LatticePoint};
use lp3_core::seeds::seed_database;
use proptest::prelude::*;
use rand::Rng;

fn nonsingular(rng: &mut impl Rng) -> IntMatrix3 {
    loop {
        let m = IntMatrix3(std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-9..=9))));
        if m.det().unwrap() != 0 {
            return m;
        }
    }
}

#[test]
fn hnf_coset_invariance_on_random_matrices() {
    let mut r = rng(7);
    for _ in 0..1000 {
        let m = nonsingular(&mut r);
        let (h, u) = hnf(&m).unwrap();
        assert_eq!(u.mul(&m).unwrap(), h);
        assert_eq!(u.det().unwrap().abs(), 1);
        for i in 0..3 {
            assert!(h.0[i][i] >= 1);
            for j in 0..i {
                assert_eq!(h.0[i][j], 0);
                assert!((0..h.0[i][i]).contains(&h.0[j][i]));
            }
        }
        assert_eq!(h, hnf_by_lattice_scan(&m), "{m:?}");
        for _ in 0..10 {
            let v = random_unimodular(&mut r);
            assert_eq!(hnf(&v.mul(&m).unwrap()).unwrap().0, h);
        }
    }
}

#[test]
fn hnf_textbook_example() {
    let m = IntMatrix3::from_columns(p(2, 0, 0), p(1, 3, 0), p(5, 4, 7));
    let (h, u) = hnf(&m).unwrap();
    assert_eq!(u.mul(&m).unwrap(), h);
    assert_eq!(h, hnf_by_lattice_scan(&m));
}

#[test]
fn hull_statistics_invariant_under_maps() {
    let seeds = seed_database().unwrap();
    let mut r = rng(11);
    for class in seeds.size5.iter().chain(&seeds.size6) {
        let base = convex_hull(class);
        for _ in 0..100 {
            let t = random_map(&mut r);
            let moved = t.apply_all(class);
            let h = convex_hull(&moved);
            assert_eq!(h.vertices.len(), base.vertices.len());
            assert_eq!(h.facets.len(), base.facets.len());
            assert_eq!(h.normalized_volume, base.normalized_volume);
            assert_eq!(lattice_points(&h).len(), class.len());
        }
    }
}

fn small_points() -> impl Strategy<Value = Vec<LatticePoint>> {
    prop::collection::vec((-4i64..=4, -4i64..=4, -4i64..=4), 4..10).prop_map(|v| {
        let mut pts: Vec<LatticePoint> = v.into_iter().map(|(x, y, z)| p(x, y, z)).collect();
        pts.sort();
        pts.dedup();
        pts
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn volume_routes_agree(pts in small_points()) {
        prop_assume!(affine_dimension(&pts) == 3);
        let h = convex_hull(&pts);
        prop_assert_eq!(h.normalized_volume, h.normalized_volume_by_divergence());
        for q in &pts {
            prop_assert!(h.contains(*q));
        }
        for f in &h.facets {
            prop_assert_eq!(lp3_core::geometry::gcd(lp3_core::geometry::gcd(f.a, f.b), f.c).abs(), 1);
        }
    }

    #[test]
    fn lattice_points_contain_input(pts in small_points()) {
        prop_assume!(affine_dimension(&pts) == 3);
        let all = lattice_points(&convex_hull(&pts));
        for q in &pts {
            prop_assert!(all.binary_search(q).is_ok());
        }
        // closure is idempotent
        prop_assert_eq!(lattice_points(&convex_hull(&all)), all);
    }

    #[test]
    fn vertices_are_exactly_the_extreme_points(pts in small_points()) {
        prop_assume!(affine_dimension(&pts) == 3);
        let h = convex_hull(&pts);
        for (i, q) in pts.iter().enumerate() {
            let others: Vec<LatticePoint> = pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &r)| r).collect();
            let inside = !others.is_empty() && convex_hull(&others).contains(*q);
            prop_assert_eq!(h.vertices.contains(&i), !inside);
        }
    }
}
