//! Bridges between hyperplane arrangements, matroids, and graphs:
//! chromatic polynomials three ways, Zaslavsky region counts versus
//! acyclic orientations, coboundary histograms, and basis counts.

use ec_core::arrkit::{
    build_named_arrangement, char_poly, coboundary_histogram, graphical_arrangement, regions,
    CharBackend, NamedArrangement,
};
use ec_core::bruteforce::{
    acyclic_orientations_brute, proper_colorings_brute, spanning_trees_brute,
};
use ec_core::corpus::seeded_rng;
use ec_core::graphcount::{build_named_graph, spanning_tree_count, Graph, NamedGraph};
use ec_core::matroidkit::{
    basis_count, coboundary_poly, graph_chromatic_poly, tutte, Matroid, TutteBackend,
};
use ec_core::util::{q_from_z, qi, zi, Z};
use rand::Rng;

fn random_connected_graph(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Graph {
    loop {
        let mut g = Graph::numeric(false, n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_range(0..100) < 55 {
                    g.add_edge_idx(u, v, 1);
                }
            }
        }
        if g.is_connected() && g.edge_count() > 0 {
            return g;
        }
    }
}

#[test]
fn chromatic_polynomials_agree_three_ways() {
    let mut rng = seeded_rng(601);
    for _ in 0..12 {
        let n = rng.random_range(3..=5);
        let g = random_connected_graph(&mut rng, n);
        let arr = graphical_arrangement(&g).unwrap();
        let from_arrangement = char_poly(&arr, CharBackend::IntersectionPoset).unwrap();
        let from_matroid = graph_chromatic_poly(&g).unwrap();
        assert_eq!(from_arrangement, from_matroid, "{g:?}");
        for q in 2..=4i64 {
            let brute = proper_colorings_brute(&g, q as u64);
            assert_eq!(from_arrangement.eval(&qi(q)), q_from_z(brute), "{g:?} q={q}");
        }
    }
}

#[test]
fn region_counts_match_acyclic_orientations() {
    let mut rng = seeded_rng(602);
    for _ in 0..10 {
        let n = rng.random_range(3..=5);
        let g = random_connected_graph(&mut rng, n);
        let arr = graphical_arrangement(&g).unwrap();
        assert_eq!(regions(&arr).unwrap(), acyclic_orientations_brute(&g), "{g:?}");
    }
}

#[test]
fn coboundary_histograms_match_matroid_coboundary_polynomials() {
    let cases = [
        NamedArrangement::Braid(3),
        NamedArrangement::Coordinate(2),
        NamedArrangement::TypeB(2),
        NamedArrangement::TypeD(3),
    ];
    for named in &cases {
        let arr = build_named_arrangement(named).unwrap();
        let matroid = Matroid::from_arrangement(&arr).unwrap();
        let cob = coboundary_poly(&matroid);
        let free_pow = (arr.dim() - matroid.rank()) as u32;
        let max_y = cob.terms().keys().map(|&(_, y)| y).max().unwrap_or(0);
        for q in [3i64, 5i64] {
            let histogram = coboundary_histogram(&arr, q as u64);
            let hist_coeffs = histogram.int_coeffs().unwrap();
            assert!(hist_coeffs.len() <= max_y + 1, "{named:?} q={q}");
            // Points on exactly k hyperplanes, grouped over F_q^dim, land
            // q^(dim - rank) copies of the Y^k slice of the coboundary
            // polynomial evaluated at X = q.
            let shift = zi(q).pow(free_pow);
            for k in 0..=max_y {
                let mut expected = Z::from(0u32);
                for (&(xdeg, ydeg), coeff) in cob.terms() {
                    if ydeg == k {
                        expected += coeff * zi(q).pow(xdeg as u32);
                    }
                }
                expected *= &shift;
                let got = hist_coeffs.get(k).cloned().unwrap_or_else(|| zi(0));
                assert_eq!(got, expected, "{named:?} q={q} slice t^{k}");
            }
        }
    }
}

#[test]
fn wheel_tutte_diagonal_counts_spanning_trees() {
    for spokes in 3..=5usize {
        let g = build_named_graph(&NamedGraph::Wheel(spokes)).unwrap();
        let matroid = Matroid::from_graph(&g).unwrap();
        let t = tutte(&matroid, TutteBackend::DeletionContraction);
        let diagonal = t.eval(&qi(1), &qi(1));
        assert_eq!(diagonal, q_from_z(spanning_tree_count(&g).unwrap()), "W_{spokes}");
    }
}

#[test]
fn graphic_matroid_bases_are_spanning_trees() {
    let mut rng = seeded_rng(603);
    for _ in 0..10 {
        let n = rng.random_range(3..=5);
        let g = random_connected_graph(&mut rng, n);
        let matroid = Matroid::from_graph(&g).unwrap();
        assert_eq!(basis_count(&matroid), spanning_trees_brute(&g), "{g:?}");
    }
}
