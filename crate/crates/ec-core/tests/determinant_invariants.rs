//! Determinant-method identities checked on seeded random instances:
//! Pfaffians against determinants, the two-step condensation recurrence
//! against direct determinants, matching counts against brute tiling, and
//! path-matrix determinants against signed route enumeration.

use ec_core::bruteforce::{domino_tilings_brute, signed_routings_brute};
use ec_core::corpus::{random_matrix, random_skew_matrix, seeded_rng};
use ec_core::detcount::{
    aztec_count, dodgson_det, kasteleyn_match_count, lgv_routing_count, GridRegion, WeightedDag,
};
use ec_core::util::{q_from_z, qi, Q};
use rand::Rng;

#[test]
fn pfaffian_squared_is_the_determinant() {
    let mut rng = seeded_rng(501);
    for case in 0..100 {
        let dim = 2 * rng.random_range(1..=5);
        let m = random_skew_matrix(&mut rng, dim, 9);
        let pf = ec_core::detcount::pfaffian(&m).unwrap();
        assert_eq!(&pf * &pf, m.det(), "case {case}, dim {dim}");
    }
}

#[test]
fn condensation_matches_direct_determinants() {
    let mut rng = seeded_rng(502);
    for case in 0..200 {
        let dim = rng.random_range(2..=7);
        let m = random_matrix(&mut rng, dim, 9);
        assert_eq!(dodgson_det(&m), m.det(), "case {case}, dim {dim}");
    }
}

#[test]
fn matching_counts_agree_with_brute_tiling() {
    let mut rng = seeded_rng(503);
    for case in 0..40 {
        let rows = rng.random_range(2..=4);
        let cols = rng.random_range(2..=6);
        let cells: Vec<(i64, i64)> = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .filter(|_| rng.random_range(0..10) < 8)
            .collect();
        if cells.is_empty() || cells.len() > 24 {
            continue;
        }
        let region = GridRegion::new(cells.clone());
        assert_eq!(
            kasteleyn_match_count(&region),
            domino_tilings_brute(&cells),
            "case {case}: {cells:?}"
        );
    }
}

#[test]
fn path_matrix_determinant_is_the_signed_route_count() {
    let mut rng = seeded_rng(504);
    let mut checked = 0;
    while checked < 25 {
        let n = rng.random_range(4..=9);
        // Edges only go upward in vertex order, so the graph is acyclic.
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_range(0..10) < 4 {
                    edges.push((u, v));
                }
            }
        }
        let k = rng.random_range(2..=3.min(n / 2));
        let sources: Vec<usize> = (0..k).collect();
        let sinks: Vec<usize> = (n - k..n).collect();
        let weighted: Vec<(usize, usize, Q)> =
            edges.iter().map(|&(u, v)| (u, v, qi(1))).collect();
        let dag = WeightedDag::new(n, weighted, sources.clone(), sinks.clone()).unwrap();
        let det = lgv_routing_count(&dag);
        let signed = signed_routings_brute(n, &edges, &sources, &sinks);
        assert_eq!(det, q_from_z(signed), "vertices {n}, edges {edges:?}");
        checked += 1;
    }
}

#[test]
fn aztec_counts_survive_the_condensation_recurrence() {
    // m(n-1) m(n+1) = 2 m(n)^2 for the diamond matching numbers.
    for n in 1..=7usize {
        let prev = aztec_count(n - 1);
        let here = aztec_count(n);
        let next = aztec_count(n + 1);
        assert_eq!(prev * next, ec_core::util::zi(2) * &here * &here, "n = {n}");
    }
}
