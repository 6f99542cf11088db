//! Property tests over seeded zonogons and random rational linear maps.

use mahler::geometry::{LinearMap, SymPolygon};
use mahler::rational::int;
use mahler::reduction::{
    check_edge_deletion, descend, normalize_for_edge, remove_edge_pair, remove_vertex_pair,
};
use mahler::zonogen::{random_generators, random_zonogon, GenSpec};
use proptest::prelude::*;

fn polygon(max_half: usize) -> impl Strategy<Value = SymPolygon> {
    (2..=max_half, any::<u64>()).prop_map(|(n, seed)| {
        random_zonogon(&GenSpec::new(n, seed, GenSpec::DEFAULT_BOUND).unwrap())
    })
}

fn linear_map() -> impl Strategy<Value = LinearMap> {
    prop::array::uniform4(-6i64..=6).prop_filter_map("singular", |[a, b, c, d]| {
        LinearMap::from_ints(a, b, c, d).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polar_is_an_involution(p in polygon(12)) {
        prop_assert_eq!(p.polar_dual().polar_dual(), p);
    }

    #[test]
    fn mahler_volume_is_linear_invariant(p in polygon(10), t in linear_map()) {
        let image = p.apply_linear(&t).unwrap();
        prop_assert_eq!(image.mahler_volume(), p.mahler_volume());
    }

    #[test]
    fn polar_commutes_with_inverse_transpose(p in polygon(8), t in linear_map()) {
        let lhs = p.apply_linear(&t).unwrap().polar_dual();
        let rhs = p.polar_dual().apply_linear(&t.dual()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mahler_volume_at_least_eight(p in polygon(16)) {
        prop_assert!(p.mahler_volume() >= int(8));
    }

    #[test]
    fn deletions_reverse_inclusion_under_polarity(p in polygon(10), k in any::<usize>()) {
        prop_assume!(p.half() >= 3);
        let x = k % p.len();
        let smaller = remove_vertex_pair(&p, x).unwrap();
        prop_assert!(p.contains_polygon(&smaller));
        prop_assert!(smaller.polar_dual().contains_polygon(&p.polar_dual()));

        let larger = remove_edge_pair(&p, x).unwrap();
        prop_assert!(larger.contains_polygon(&p));
        prop_assert!(p.polar_dual().contains_polygon(&larger.polar_dual()));
        prop_assert_eq!(larger.len() + 2, p.len());
    }

    #[test]
    fn normalized_edge_is_lowest(p in polygon(10), k in any::<usize>()) {
        prop_assume!(p.half() >= 3);
        let s = k % p.len();
        let frame = normalize_for_edge(&p, s).unwrap();
        let h = frame.edge_height().clone();
        prop_assert!(h < int(0));
        let (a, b) = frame.polygon.edge(frame.edge);
        prop_assert!(a.y == h && b.y == h);
        for (i, v) in frame.polygon.vertices().iter().enumerate() {
            if i != frame.edge && i != (frame.edge + 1) % frame.polygon.len() {
                prop_assert!(v.y > h);
            }
        }
        prop_assert!(frame.apex().unwrap().y < h);
        let n = p.half() as i64;
        let heights: Vec<_> = (1..n)
            .map(|k| frame.polygon.vertex_at(frame.edge, k).y.clone())
            .collect();
        prop_assert!(heights.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(frame.dual_neighbors_level());
    }

    #[test]
    fn area_updates_are_exact(p in polygon(9), k in any::<usize>()) {
        prop_assume!(p.half() >= 3);
        let c = check_edge_deletion(&p, k % p.len()).unwrap();
        prop_assert!(c.identities.all(), "{:?}", c.identities);
        if c.qualifies() {
            prop_assert!(c.m_after < c.m_before);
        }
    }

    #[test]
    fn descent_ends_at_eight(p in polygon(8)) {
        let trace = descend(&p).unwrap();
        let m = trace.mahler_sequence();
        prop_assert!(m.windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(m.last().unwrap(), &int(8));
        prop_assert!(trace.recorded_values_match());
    }

    #[test]
    fn polygon_json_round_trip(p in polygon(16)) {
        prop_assert_eq!(SymPolygon::from_json(&p.to_json()).unwrap(), p.clone());
        let trace = descend(&p).unwrap();
        let text = trace.to_json();
        prop_assert_eq!(mahler::reduction::DescentTrace::from_json(&text).unwrap(), trace);
    }

    #[test]
    fn generation_is_deterministic(n in 2usize..20, seed in any::<u64>(), bound in 8u32..40) {
        let spec = GenSpec::new(n, seed, bound).unwrap();
        prop_assert_eq!(random_generators(&spec), random_generators(&spec));
        let p = random_zonogon(&spec);
        prop_assert_eq!(p.len(), 2 * n);
        prop_assert_eq!(p, random_zonogon(&spec));
    }
}
