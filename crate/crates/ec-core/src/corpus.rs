//! Deterministic random corpora for cross-checks: seeded generators for
//! matrices, skew matrices, lattice polygons, and a fixed shelf of small
//! posets. Everything is reproducible from an explicit seed so failures
//! can be replayed exactly.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ehrhartkit::convex_hull_2d;
use crate::linalg::QMatrix;
use crate::posetkit::{build_named_poset, NamedPoset, Poset};
use crate::util::qi;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Square matrix with integer entries drawn from `[-bound, bound]`.
pub fn random_matrix(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> QMatrix {
    QMatrix::from_fn(dim, dim, |_, _| qi(rng.random_range(-bound..=bound)))
}

/// Skew-symmetric matrix with integer entries from `[-bound, bound]`.
pub fn random_skew_matrix(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> QMatrix {
    let mut upper = vec![vec![0i64; dim]; dim];
    for i in 0..dim {
        for j in i + 1..dim {
            upper[i][j] = rng.random_range(-bound..=bound);
        }
    }
    QMatrix::from_fn(dim, dim, |i, j| {
        if i < j {
            qi(upper[i][j])
        } else if i > j {
            qi(-upper[j][i])
        } else {
            qi(0)
        }
    })
}

/// Vertices of a random lattice polygon: the convex hull of a handful of
/// points in the 8 x 8 grid, re-rolled until it has positive area.
pub fn random_lattice_polygon(rng: &mut ChaCha8Rng) -> Vec<(i64, i64)> {
    loop {
        let count = rng.random_range(3..=10);
        let points: Vec<(i64, i64)> = (0..count)
            .map(|_| (rng.random_range(0..=8), rng.random_range(0..=8)))
            .collect();
        let hull = convex_hull_2d(&points);
        if hull.len() >= 3 {
            return hull;
        }
    }
}

/// Small posets (at most six elements) exercising the order-polytope and
/// order-polynomial bridges: chains, antichains, grids, a vee, an N, a
/// fence, a Boolean lattice, and a divisor lattice.
pub fn bridge_poset_corpus() -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = Vec::new();
    let named = [
        ("chain3", NamedPoset::Chain(3)),
        ("antichain3", NamedPoset::Antichain(3)),
        ("grid2x2", NamedPoset::TwoByN(2)),
        ("grid2x3", NamedPoset::TwoByN(3)),
        ("boolean2", NamedPoset::Boolean(2)),
        ("divisors12", NamedPoset::Divisor(12)),
    ];
    for (name, spec) in named {
        out.push((name.to_string(), build_named_poset(&spec).unwrap()));
    }
    let vee = Poset::from_covers(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap();
    out.push(("vee".to_string(), vee));
    let enn = Poset::from_covers(
        &["a", "b", "c", "d"],
        &[("a", "c"), ("b", "c"), ("b", "d")],
    )
    .unwrap();
    out.push(("enn".to_string(), enn));
    let fence = Poset::from_covers(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("c", "b"), ("c", "d"), ("e", "d")],
    )
    .unwrap();
    out.push(("fence".to_string(), fence));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn seeded_generators_are_deterministic() {
        let a = random_matrix(&mut seeded_rng(7), 4, 5);
        let b = random_matrix(&mut seeded_rng(7), 4, 5);
        assert_eq!(a.row(2), b.row(2));
        let p = random_lattice_polygon(&mut seeded_rng(3));
        let q = random_lattice_polygon(&mut seeded_rng(3));
        assert_eq!(p, q);
    }

    #[test]
    fn skew_matrices_are_skew() {
        let mut rng = seeded_rng(11);
        for dim in [2, 4, 6] {
            let m = random_skew_matrix(&mut rng, dim, 9);
            for i in 0..dim {
                assert!(m.row(i)[i].is_zero());
                for j in 0..dim {
                    assert_eq!(m.row(i)[j], -m.row(j)[i].clone());
                }
            }
        }
    }

    #[test]
    fn polygons_live_on_the_grid() {
        let mut rng = seeded_rng(2026);
        for _ in 0..20 {
            let hull = random_lattice_polygon(&mut rng);
            assert!(hull.len() >= 3);
            assert!(hull
                .iter()
                .all(|&(x, y)| (0..=8).contains(&x) && (0..=8).contains(&y)));
        }
    }

    #[test]
    fn poset_corpus_is_small_and_bridgeable() {
        let corpus = bridge_poset_corpus();
        assert_eq!(corpus.len(), 9);
        for (name, poset) in &corpus {
            assert!(poset.len() <= 6, "{name} too large");
            assert!(crate::posetkit::order_ideals(poset).is_ok());
        }
    }
}
