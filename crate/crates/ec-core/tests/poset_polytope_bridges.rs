//! Bridges between poset counting and polytope counting on the small
//! poset corpus: order polynomials vs order polytopes, chain polytopes,
//! volumes vs linear extensions, and h* sanity.

use ec_core::corpus::bridge_poset_corpus;
use ec_core::ehrhartkit::{
    chain_polytope, ehrhart_polynomial, h_star_vector, order_polytope, reciprocity_holds,
};
use ec_core::posetkit::{linear_extensions, order_polynomial, zeta_polynomial};
use ec_core::util::{factorial, q_from_z, qi, zi};
use num_traits::Signed;

#[test]
fn order_polytope_counts_are_shifted_order_polynomials() {
    for (name, poset) in bridge_poset_corpus() {
        let polytope = order_polytope(&poset);
        let omega = order_polynomial(&poset).unwrap();
        for n in 0..=4u64 {
            let points = polytope.count_points(n).unwrap();
            let predicted = omega.eval(&qi(n as i64 + 1));
            assert_eq!(q_from_z(points), predicted, "{name} at dilation {n}");
        }
    }
}

#[test]
fn chain_and_order_polytopes_share_ehrhart_polynomials() {
    for (name, poset) in bridge_poset_corpus() {
        let order = ehrhart_polynomial(&order_polytope(&poset)).unwrap();
        let chain = ehrhart_polynomial(&chain_polytope(&poset)).unwrap();
        assert_eq!(order, chain, "{name}");
    }
}

#[test]
fn order_polytope_volume_counts_linear_extensions() {
    for (name, poset) in bridge_poset_corpus() {
        let poly = ehrhart_polynomial(&order_polytope(&poset)).unwrap();
        let extensions = linear_extensions(&poset).unwrap();
        let volume_times_factorial =
            poly.leading_coeff() * q_from_z(factorial(poset.len()));
        assert_eq!(volume_times_factorial, q_from_z(extensions), "{name}");
    }
}

#[test]
fn h_star_vectors_are_nonnegative_with_unit_head() {
    for (name, poset) in bridge_poset_corpus() {
        let h_star = h_star_vector(&order_polytope(&poset)).unwrap();
        assert_eq!(h_star[0], zi(1), "{name}");
        assert!(
            h_star.iter().all(|c| !c.is_negative()),
            "{name}: {h_star:?}"
        );
    }
}

#[test]
fn reciprocity_holds_on_corpus_order_polytopes() {
    for (name, poset) in bridge_poset_corpus() {
        assert!(reciprocity_holds(&order_polytope(&poset), 3).unwrap(), "{name}");
    }
}

#[test]
fn zeta_polynomial_counts_elements_and_intervals() {
    // Z(k) counts multichains of k-1 elements: singletons at k = 2,
    // ordered pairs (intervals) at k = 3.
    for (name, poset) in bridge_poset_corpus() {
        let zeta = zeta_polynomial(&poset);
        let mut intervals = 0i64;
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                if poset.leq(a, b) {
                    intervals += 1;
                }
            }
        }
        assert_eq!(zeta.eval(&qi(2)), q_from_z(zi(poset.len() as i64)), "{name}");
        assert_eq!(zeta.eval(&qi(3)), q_from_z(zi(intervals)), "{name}");
    }
}
