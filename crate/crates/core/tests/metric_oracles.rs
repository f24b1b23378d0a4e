//! δ values checked against brute-force oracles and frozen reference values.
//!
//! Frozen doubled values were produced by an independent quadruple scan
//! (networkx shortest paths) before the library existed.

mod common;

use cayley_delta::cayley::{build_ball, CayleyBall};
use cayley_delta::engines::parse_engine_spec;
use cayley_delta::metric::{
    apsp, delta_all, delta_base, delta_slim, four_point_defect, geodesic_points, naive_delta_all,
    DistanceMatrix, HalfInt,
};
use common::*;

fn ball(spec: &str, r: u32) -> CayleyBall {
    build_ball(&parse_engine_spec(spec).unwrap(), r).unwrap()
}

fn matrix(b: &CayleyBall) -> DistanceMatrix {
    apsp(b).unwrap()
}

#[test]
fn cycle_deltas_match_frozen_values() {
    // n -> doubled δ_all of the n-cycle
    let frozen = [(3u64, 0i64), (4, 2), (8, 4), (9, 3), (16, 8), (27, 12)];
    for (n, want) in frozen {
        let b = ball(&format!("cyclic:{n}"), n as u32);
        assert_eq!(b.core().len(), n as usize);
        let d = matrix(&b);
        let oracle = brute_delta_x2(
            &floyd_warshall(n as usize, &cycle_edges(n as usize)),
            &(0..n as usize).collect::<Vec<_>>(),
        );
        assert_eq!(oracle, want, "oracle C{n}");
        assert_eq!(delta_all(&d).unwrap().0.doubled(), want, "C{n}");
    }
}

#[test]
fn cycle_monotonicity_holds_per_parity() {
    let v = |n: u64| {
        delta_all(&matrix(&ball(&format!("cyclic:{n}"), n as u32)))
            .unwrap()
            .0
    };
    assert!(v(3) <= v(9) && v(9) <= v(27));
    assert!(v(4) <= v(8) && v(8) <= v(16));
    // the mixed sequence 3, 4, 8, 9, 16, 27 is not monotone: C8 beats C9
    assert!(v(8) > v(9));
}

#[test]
fn lattice_core_values() {
    // t -> doubled δ_all on the L1 diamond of radius t inside the radius-2t ball
    for (t, want) in [(1u32, 0i64), (2, 4), (3, 4), (4, 8)] {
        let b = ball("dp(cyclic:0,cyclic:0)", 2 * t);
        let d = matrix(&b);
        assert_eq!(d.core().len() as u32, 2 * t * t + 2 * t + 1);
        let fw = floyd_warshall(b.vertex_count(), &ball_edges(&b));
        assert_eq!(brute_delta_x2(&fw, d.core()), want, "oracle t={t}");
        assert_eq!(delta_all(&d).unwrap().0.doubled(), want, "t={t}");
    }
}

#[test]
fn lattice_diagonal_quadruple() {
    use cayley_delta::engines::Element;
    for t in [2i64, 3, 4] {
        let b = ball("dp(cyclic:0,cyclic:0)", 2 * t as u32);
        let d = matrix(&b);
        let at = |x: i64, y: i64| {
            b.index_of(&Element::pair(Element::Int(x), Element::Int(y)))
                .unwrap()
        };
        let (w, x, y, z) = (at(0, 0), at(t, 0), at(0, t), at(t / 2, t - t / 2));
        let defect = four_point_defect(&d, w, x, y, z).unwrap();
        assert!(defect >= HalfInt::from_int(t / 2), "t={t}: {defect}");
    }
}

#[test]
fn finite_groups_match_frozen_values() {
    for (spec, want) in [
        ("heis:3", 3i64),
        ("dp(cyclic:3,cyclic:3)", 2),
        ("dp(cyclic:2,cyclic:2)", 2),
    ] {
        let b = ball(spec, 10);
        let d = matrix(&b);
        assert_eq!(d.core().len(), b.vertex_count(), "{spec} is complete");
        let fw = floyd_warshall(b.vertex_count(), &ball_edges(&b));
        assert_eq!(brute_delta_x2(&fw, d.core()), want, "oracle {spec}");
        assert_eq!(delta_all(&d).unwrap().0.doubled(), want, "{spec}");
    }
}

#[test]
fn base_and_all_agree_with_oracle_on_mixed_graphs() {
    for (spec, r) in [
        ("free:2", 3),
        ("fp(cyclic:3,cyclic:3)", 6),
        ("fp(cyclic:4,cyclic:2)", 6),
        ("fp(cyclic:3,free:1)", 4),
        ("dp(cyclic:5,cyclic:0)", 4),
    ] {
        let b = ball(spec, r);
        let d = matrix(&b);
        let fw = floyd_warshall(b.vertex_count(), &ball_edges(&b));
        for (i, row) in fw.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(d.get(i, j), v, "{spec} d({i},{j})");
            }
        }
        let (v, _) = delta_all(&d).unwrap();
        assert_eq!(v.doubled(), brute_delta_x2(&fw, d.core()), "{spec}");
        assert_eq!(naive_delta_all(&d, 80).unwrap().0, v, "{spec}");
        for &w in d.core() {
            assert_eq!(
                delta_base(&d, w).unwrap().0.doubled(),
                brute_delta_base_x2(&fw, d.core(), w),
                "{spec} w={w}"
            );
        }
    }
}

#[test]
fn slim_against_path_enumeration() {
    let c4 = cycle_edges(4);
    let core: Vec<usize> = (0..4).collect();
    assert_eq!(brute_slim(4, &c4, &core), 1);
    assert_eq!(brute_thin(4, &c4, &core), 1);
    let d = DistanceMatrix::from_adjacency(&adjacency(4, &c4)).unwrap();
    assert_eq!(delta_slim(&d, 200).unwrap().0, HalfInt::from_int(1));

    for (spec, r) in [
        ("free:2", 4),
        ("dp(cyclic:0,cyclic:0)", 4),
        ("cyclic:6", 3),
        ("heis:3", 6),
    ] {
        let b = ball(spec, r);
        let d = matrix(&b);
        let slim = delta_slim(&d, 200).unwrap().0;
        assert!(slim.is_integer());
        let want = brute_slim(b.vertex_count(), &ball_edges(&b), d.core());
        assert_eq!(slim, HalfInt::from_int(want as i64), "{spec}");
    }
}

#[test]
fn slim_lattice_core_two_is_positive() {
    let d = matrix(&ball("dp(cyclic:0,cyclic:0)", 4));
    assert!(delta_slim(&d, 200).unwrap().0 >= HalfInt::from_int(1));
}

#[test]
fn geodesic_points_in_square() {
    let d = DistanceMatrix::from_adjacency(&adjacency(4, &cycle_edges(4))).unwrap();
    assert_eq!(geodesic_points(&d, 0, 2).unwrap(), vec![0, 1, 2, 3]);
    assert_eq!(geodesic_points(&d, 0, 1).unwrap(), vec![0, 1]);
}
