//! Exact lattice-point counting for rational polytopes given by integer
//! linear constraints, Ehrhart polynomials by interpolation with a
//! held-out verification point, reciprocity, h*-vectors, and the
//! standard polytope families.
//!
//! Counting scans an LP-derived bounding box with per-coordinate
//! constraint pruning. That is exact and fast for the desk-scale sizes
//! this crate targets, and a scan budget turns anything larger into an
//! error instead of a stall.

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{lp_maximize, lp_minimize, LpOutcome, QMatrix};
use crate::poly::Poly;
use crate::posetkit::Poset;
use crate::util::{binomial, neg_one_pow, q_from_z, q_to_z, qi, Q, Z};

pub const SCAN_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EhrhartError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polytope is empty")]
    Infeasible,
    #[error("feasible set is unbounded")]
    Unbounded,
    #[error("lattice scan needs {need} points, budget is {budget}")]
    ScanTooLarge { budget: u64, need: u128 },
    #[error("h* transform produced a non-integer entry")]
    NonIntegralHStar,
    #[error("counts disagree with the interpolated polynomial")]
    VerificationFailed,
    #[error("points do not span a polygon")]
    DegeneratePolygon,
    #[error("bad polytope description: {0}")]
    BadSpec(String),
}

/// Polytope `{x : A x <= b, C x = e}` with integer data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient: usize,
    ineqs: Vec<(Vec<Z>, Z)>,
    eqs: Vec<(Vec<Z>, Z)>,
}

/// LP-derived facts: the affine hull's dimension, which inequalities are
/// implicit equalities, and a bounding box for the dilation-one body.
struct Structure {
    dim: usize,
    promoted: Vec<bool>,
    bounds: Vec<(Q, Q)>,
}

impl LatticePolytope {
    pub fn new(
        ambient: usize,
        ineqs: Vec<(Vec<Z>, Z)>,
        eqs: Vec<(Vec<Z>, Z)>,
    ) -> Result<Self, EhrhartError> {
        for (row, _) in ineqs.iter().chain(&eqs) {
            if row.len() != ambient {
                return Err(EhrhartError::DimensionMismatch {
                    expected: ambient,
                    got: row.len(),
                });
            }
        }
        Ok(LatticePolytope {
            ambient,
            ineqs,
            eqs,
        })
    }

    pub fn from_ints(
        ambient: usize,
        ineqs: &[(&[i64], i64)],
        eqs: &[(&[i64], i64)],
    ) -> Result<Self, EhrhartError> {
        let convert = |rows: &[(&[i64], i64)]| -> Vec<(Vec<Z>, Z)> {
            rows.iter()
                .map(|(a, b)| (a.iter().map(|&c| Z::from(c)).collect(), Z::from(*b)))
                .collect()
        };
        LatticePolytope::new(ambient, convert(ineqs), convert(eqs))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn inequalities(&self) -> &[(Vec<Z>, Z)] {
        &self.ineqs
    }

    pub fn equalities(&self) -> &[(Vec<Z>, Z)] {
        &self.eqs
    }

    fn lp_rows(&self) -> (Vec<Vec<Q>>, Vec<Q>, Vec<Vec<Q>>, Vec<Q>) {
        let to_q = |rows: &[(Vec<Z>, Z)]| -> (Vec<Vec<Q>>, Vec<Q>) {
            let a = rows
                .iter()
                .map(|(r, _)| r.iter().map(|c| q_from_z(c.clone())).collect())
                .collect();
            let b = rows.iter().map(|(_, v)| q_from_z(v.clone())).collect();
            (a, b)
        };
        let (a, b) = to_q(&self.ineqs);
        let (c, e) = to_q(&self.eqs);
        (a, b, c, e)
    }

    fn analyze(&self) -> Result<Structure, EhrhartError> {
        let (a, b, c, e) = self.lp_rows();
        let zero_obj = vec![Q::zero(); self.ambient];
        if lp_maximize(&zero_obj, &a, &b, &c, &e) == LpOutcome::Infeasible {
            return Err(EhrhartError::Infeasible);
        }
        // An inequality whose minimum already sits at its bound holds
        // with equality on the whole body.
        let mut promoted = vec![false; self.ineqs.len()];
        for (i, row) in a.iter().enumerate() {
            if let LpOutcome::Optimal { value, .. } = lp_minimize(row, &a, &b, &c, &e) {
                if value == b[i] {
                    promoted[i] = true;
                }
            }
        }
        let mut hull_rows: Vec<Vec<Q>> = c.clone();
        for (i, row) in a.iter().enumerate() {
            if promoted[i] {
                hull_rows.push(row.clone());
            }
        }
        let hull_rank = if hull_rows.is_empty() {
            0
        } else {
            QMatrix::from_rows(hull_rows).rank()
        };
        let mut bounds = Vec::with_capacity(self.ambient);
        for j in 0..self.ambient {
            let mut objective = zero_obj.clone();
            objective[j] = Q::one();
            let hi = match lp_maximize(&objective, &a, &b, &c, &e) {
                LpOutcome::Optimal { value, .. } => value,
                _ => return Err(EhrhartError::Unbounded),
            };
            let lo = match lp_minimize(&objective, &a, &b, &c, &e) {
                LpOutcome::Optimal { value, .. } => value,
                _ => return Err(EhrhartError::Unbounded),
            };
            bounds.push((lo, hi));
        }
        Ok(Structure {
            dim: self.ambient - hull_rank,
            promoted,
            bounds,
        })
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> Result<usize, EhrhartError> {
        Ok(self.analyze()?.dim)
    }

    /// Lattice points in the n-th dilation.
    pub fn count_points(&self, n: u64) -> Result<Z, EhrhartError> {
        self.count_points_budgeted(n, SCAN_BUDGET)
    }

    /// Lattice points in the relative interior of the n-th dilation.
    pub fn count_interior(&self, n: u64) -> Result<Z, EhrhartError> {
        self.count_interior_budgeted(n, SCAN_BUDGET)
    }

    /// `count_points` with a caller-chosen cap on scanned box cells.
    pub fn count_points_budgeted(&self, n: u64, budget: u64) -> Result<Z, EhrhartError> {
        let info = self.analyze()?;
        self.scan(n, false, &info, budget)
    }

    /// `count_interior` with a caller-chosen cap on scanned box cells.
    pub fn count_interior_budgeted(&self, n: u64, budget: u64) -> Result<Z, EhrhartError> {
        let info = self.analyze()?;
        self.scan(n, true, &info, budget)
    }

    fn scan(
        &self,
        n: u64,
        interior: bool,
        info: &Structure,
        budget: u64,
    ) -> Result<Z, EhrhartError> {
        let d = self.ambient;
        let dilation = Z::from(n);
        let mut ranges: Vec<(i64, i64)> = Vec::with_capacity(d);
        let mut need: u128 = 1;
        for (lo, hi) in &info.bounds {
            let lo_n = lo * q_from_z(dilation.clone());
            let hi_n = hi * q_from_z(dilation.clone());
            let floor = hi_n.numer().div_floor(hi_n.denom());
            let ceil = -(-lo_n.numer()).div_floor(lo_n.denom());
            let lo_i: i64 = (&ceil)
                .try_into()
                .map_err(|_| EhrhartError::BadSpec("bounding box exceeds i64".into()))?;
            let hi_i: i64 = (&floor)
                .try_into()
                .map_err(|_| EhrhartError::BadSpec("bounding box exceeds i64".into()))?;
            let width = if hi_i < lo_i { 0 } else { (hi_i - lo_i + 1) as u128 };
            need = need.saturating_mul(width);
            ranges.push((lo_i, hi_i));
        }
        if need > budget as u128 {
            return Err(EhrhartError::ScanTooLarge { budget, need })
        }
        if need == 0 {
            return Ok(Z::zero());
        }
        // Rows as (coeffs, rhs, is_equality); interior tightens the
        // non-promoted inequalities by one.
        let mut rows: Vec<(Vec<i64>, i128, bool)> = Vec::new();
        let as_i64 = |c: &Z| -> Result<i64, EhrhartError> {
            c.try_into()
                .map_err(|_| EhrhartError::BadSpec("coefficients exceed i64".into()))
        };
        for (i, (a, b)) in self.ineqs.iter().enumerate() {
            let coeffs: Vec<i64> = a.iter().map(&as_i64).collect::<Result<_, _>>()?;
            let mut rhs = as_i64(b)? as i128 * n as i128;
            if interior && !info.promoted[i] {
                rhs -= 1;
            }
            rows.push((coeffs, rhs, false));
        }
        for (c, e) in &self.eqs {
            let coeffs: Vec<i64> = c.iter().map(&as_i64).collect::<Result<_, _>>()?;
            rows.push((coeffs, as_i64(e)? as i128 * n as i128, true));
        }
        // Suffix extremes of each row over the box, for pruning.
        let mut min_rest = vec![vec![0i128; d + 1]; rows.len()];
        let mut max_rest = vec![vec![0i128; d + 1]; rows.len()];
        for (r, (coeffs, _, _)) in rows.iter().enumerate() {
            for j in (0..d).rev() {
                let a = coeffs[j] as i128;
                let (lo, hi) = ranges[j];
                let (low, high) = ((a * lo as i128).min(a * hi as i128), (a * lo as i128).max(a * hi as i128));
                min_rest[r][j] = min_rest[r][j + 1] + low;
                max_rest[r][j] = max_rest[r][j + 1] + high;
            }
        }
        let mut partial = vec![0i128; rows.len()];
        let mut count: u64 = 0;
        scan_level(
            0,
            d,
            &ranges,
            &rows,
            &min_rest,
            &max_rest,
            &mut partial,
            &mut count,
        );
        Ok(Z::from(count))
    }
}

#[allow(clippy::too_many_arguments)]
fn scan_level(
    level: usize,
    d: usize,
    ranges: &[(i64, i64)],
    rows: &[(Vec<i64>, i128, bool)],
    min_rest: &[Vec<i128>],
    max_rest: &[Vec<i128>],
    partial: &mut Vec<i128>,
    count: &mut u64,
) {
    if level == d {
        let ok = rows
            .iter()
            .zip(partial.iter())
            .all(|((_, rhs, eq), p)| if *eq { p == rhs } else { p <= rhs });
        if ok {
            *count += 1;
        }
        return;
    }
    let (lo, hi) = ranges[level];
    for x in lo..=hi {
        for (r, (coeffs, _, _)) in rows.iter().enumerate() {
            partial[r] += coeffs[level] as i128 * x as i128;
        }
        let feasible = rows.iter().enumerate().all(|(r, (_, rhs, eq))| {
            let lo_rest = partial[r] + min_rest[r][level + 1];
            let hi_rest = partial[r] + max_rest[r][level + 1];
            if *eq {
                lo_rest <= *rhs && *rhs <= hi_rest
            } else {
                lo_rest <= *rhs
            }
        });
        if feasible {
            scan_level(level + 1, d, ranges, rows, min_rest, max_rest, partial, count);
        }
        for (r, (coeffs, _, _)) in rows.iter().enumerate() {
            partial[r] -= coeffs[level] as i128 * x as i128;
        }
    }
}

/// Ehrhart polynomial via counts at dilations `0..=dim`, with the count
/// at `dim + 1` held out as a verification point.
pub fn ehrhart_polynomial(p: &LatticePolytope) -> Result<Poly, EhrhartError> {
    let info = p.analyze()?;
    let dim = info.dim;
    let mut values = Vec::with_capacity(dim + 2);
    for n in 0..=dim as u64 + 1 {
        values.push(p.scan(n, false, &info, SCAN_BUDGET)?);
    }
    let points: Vec<(Q, Q)> = values[..=dim]
        .iter()
        .enumerate()
        .map(|(n, v)| (qi(n as i64), q_from_z(v.clone())))
        .collect();
    let poly = Poly::interpolate(&points);
    if poly.eval(&qi(dim as i64 + 1)) != q_from_z(values[dim + 1].clone()) {
        return Err(EhrhartError::VerificationFailed);
    }
    Ok(poly)
}

/// h*-vector: the numerator coefficients of the Ehrhart series over
/// `(1 - t)^(dim + 1)`, length `dim + 1`.
pub fn h_star_vector(p: &LatticePolytope) -> Result<Vec<Z>, EhrhartError> {
    let info = p.analyze()?;
    let dim = info.dim;
    let mut counts = Vec::with_capacity(dim + 1);
    for n in 0..=dim as u64 {
        counts.push(p.scan(n, false, &info, SCAN_BUDGET)?);
    }
    let mut out = Vec::with_capacity(dim + 1);
    for j in 0..=dim {
        let mut total = Q::zero();
        for (i, value) in counts.iter().enumerate().take(j + 1) {
            let sign = neg_one_pow(j - i);
            total += q_from_z(sign * binomial(dim + 1, j - i) * value);
        }
        out.push(q_to_z(&total).ok_or(EhrhartError::NonIntegralHStar)?);
    }
    Ok(out)
}

/// Checks Ehrhart reciprocity `L_int(n) = (-1)^dim L(-n)` by scanning
/// interiors up to the given dilation.
pub fn reciprocity_holds(p: &LatticePolytope, max_dilation: u64) -> Result<bool, EhrhartError> {
    let info = p.analyze()?;
    let poly = ehrhart_polynomial(p)?;
    let sign = Q::from(neg_one_pow(info.dim));
    for n in 1..=max_dilation {
        let interior = p.scan(n, true, &info, SCAN_BUDGET)?;
        let predicted = poly.eval(&qi(-(n as i64))) * &sign;
        if q_from_z(interior) != predicted {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------
// Families.

/// Standard d-simplex: the convex hull of the coordinate unit vectors in
/// d+1 coordinates.
pub fn standard_simplex(d: usize) -> LatticePolytope {
    let ambient = d + 1;
    let ineqs = (0..ambient)
        .map(|i| {
            let mut row = vec![Z::zero(); ambient];
            row[i] = -Z::one();
            (row, Z::zero())
        })
        .collect();
    let eqs = vec![(vec![Z::one(); ambient], Z::one())];
    LatticePolytope::new(ambient, ineqs, eqs).unwrap()
}

pub fn unit_cube(d: usize) -> LatticePolytope {
    let mut ineqs = Vec::with_capacity(2 * d);
    for i in 0..d {
        let mut up = vec![Z::zero(); d];
        up[i] = Z::one();
        ineqs.push((up.clone(), Z::one()));
        let mut down = vec![Z::zero(); d];
        down[i] = -Z::one();
        ineqs.push((down, Z::zero()));
    }
    LatticePolytope::new(d, ineqs, vec![]).unwrap()
}

/// Cross-polytope: |x_1| + .. + |x_d| <= 1.
pub fn cross_polytope(d: usize) -> LatticePolytope {
    let ineqs = (0..1u64 << d)
        .map(|signs| {
            let row: Vec<Z> = (0..d)
                .map(|i| if signs >> i & 1 == 1 { -Z::one() } else { Z::one() })
                .collect();
            (row, Z::one())
        })
        .collect();
    LatticePolytope::new(d, ineqs, vec![]).unwrap()
}

/// Hypersimplex: points of the unit cube with coordinate sum k.
pub fn hypersimplex(d: usize, k: usize) -> Result<LatticePolytope, EhrhartError> {
    if k > d {
        return Err(EhrhartError::BadSpec(format!(
            "coordinate sum {k} exceeds dimension {d}"
        )));
    }
    let cube = unit_cube(d);
    LatticePolytope::new(
        d,
        cube.ineqs,
        vec![(vec![Z::one(); d], Z::from(k))],
    )
}

/// Order polytope: points of the unit cube whose coordinates respect the
/// poset order along covers.
pub fn order_polytope(p: &Poset) -> LatticePolytope {
    let d = p.len();
    let mut ineqs = unit_cube(d).ineqs;
    for (lower, upper) in p.covers() {
        let mut row = vec![Z::zero(); d];
        row[lower] = Z::one();
        row[upper] = -Z::one();
        ineqs.push((row, Z::zero()));
    }
    LatticePolytope::new(d, ineqs, vec![]).unwrap()
}

/// Chain polytope: nonnegative points whose sums along maximal chains
/// stay below one.
pub fn chain_polytope(p: &Poset) -> LatticePolytope {
    let d = p.len();
    let mut ineqs: Vec<(Vec<Z>, Z)> = (0..d)
        .map(|i| {
            let mut row = vec![Z::zero(); d];
            row[i] = -Z::one();
            (row, Z::zero())
        })
        .collect();
    let covers = p.covers();
    let mut uppers: Vec<Vec<usize>> = vec![Vec::new(); d];
    for &(lo, hi) in &covers {
        uppers[lo].push(hi);
    }
    // Depth-first extension of chains from the minimal elements.
    let mut stack: Vec<Vec<usize>> = p.minimal_elements().into_iter().map(|m| vec![m]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().unwrap();
        if uppers[last].is_empty() {
            let mut row = vec![Z::zero(); d];
            for &e in &chain {
                row[e] = Z::one();
            }
            ineqs.push((row, Z::one()));
            continue;
        }
        for &next in &uppers[last] {
            let mut extended = chain.clone();
            extended.push(next);
            stack.push(extended);
        }
    }
    LatticePolytope::new(d, ineqs, vec![]).unwrap()
}

// ---------------------------------------------------------------------
// Polygons.

/// Convex hull in counterclockwise order (Andrew's monotone chain).
/// Collinear inputs collapse to two or fewer vertices.
pub fn convex_hull_2d(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| -> i128 {
        (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
    };
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Lattice polygon as a polytope: convex hull of the points, one
/// inequality per hull edge with the outward normal.
pub fn polygon_from_points(points: &[(i64, i64)]) -> Result<LatticePolytope, EhrhartError> {
    let hull = convex_hull_2d(points);
    if hull.len() < 3 {
        return Err(EhrhartError::DegeneratePolygon);
    }
    let mut ineqs = Vec::with_capacity(hull.len());
    for (i, &(px, py)) in hull.iter().enumerate() {
        let (qx, qy) = hull[(i + 1) % hull.len()];
        let (dx, dy) = (qx - px, qy - py);
        // Outward normal of a counterclockwise edge.
        let row = vec![Z::from(dy), Z::from(-dx)];
        let rhs = Z::from(dy) * Z::from(px) - Z::from(dx) * Z::from(py);
        ineqs.push((row, rhs));
    }
    LatticePolytope::new(2, ineqs, vec![])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posetkit::{build_named_poset, order_polynomial, NamedPoset};
    use crate::util::{q_to_string, zi};
    use num_traits::Signed;

    fn poly_of_ints(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn simplex_counts_are_binomials() {
        for d in 1..=4 {
            let simplex = standard_simplex(d);
            assert_eq!(simplex.dim().unwrap(), d);
            // (n+1)(n+2)..(n+d) / d!
            let mut expected = Poly::one();
            for i in 1..=d {
                expected = expected.mul(&poly_of_ints(&[i as i64, 1]));
            }
            expected = expected.scale(&(Q::one() / q_from_z(crate::util::factorial(d))));
            assert_eq!(ehrhart_polynomial(&simplex).unwrap(), expected, "d = {d}");
        }
    }

    #[test]
    fn cube_counts_and_h_star() {
        for d in 1..=3 {
            let cube = unit_cube(d);
            let mut expected = Poly::one();
            for _ in 0..d {
                expected = expected.mul(&poly_of_ints(&[1, 1]));
            }
            assert_eq!(ehrhart_polynomial(&cube).unwrap(), expected);
        }
        assert_eq!(h_star_vector(&unit_cube(1)).unwrap(), vec![zi(1), zi(0)]);
        assert_eq!(
            h_star_vector(&unit_cube(2)).unwrap(),
            vec![zi(1), zi(1), zi(0)]
        );
        assert_eq!(
            h_star_vector(&unit_cube(3)).unwrap(),
            vec![zi(1), zi(4), zi(1), zi(0)]
        );
    }

    #[test]
    fn cross_polytope_counts() {
        let cross2 = cross_polytope(2);
        assert_eq!(
            ehrhart_polynomial(&cross2).unwrap(),
            poly_of_ints(&[1, 2, 2])
        );
        for d in 1..=3 {
            let cross = cross_polytope(d);
            // h* of the cross-polytope is (1 + t)^d.
            let expected: Vec<Z> = (0..=d).map(|k| binomial(d, k)).collect();
            assert_eq!(h_star_vector(&cross).unwrap(), expected, "d = {d}");
            assert!(reciprocity_holds(&cross, 4).unwrap());
        }
    }

    #[test]
    fn hypersimplex_basics() {
        let h = hypersimplex(4, 2).unwrap();
        assert_eq!(h.dim().unwrap(), 3);
        assert_eq!(h.count_points(1).unwrap(), zi(6));
        assert!(reciprocity_holds(&h, 4).unwrap());
        let h_star = h_star_vector(&h).unwrap();
        assert_eq!(h_star[0], zi(1));
        assert!(h_star.iter().all(|c| !c.is_negative()));
        assert!(hypersimplex(2, 3).is_err());
    }

    #[test]
    fn implicit_equalities_collapse_dimension() {
        let segment = LatticePolytope::from_ints(
            2,
            &[(&[1, 1], 2), (&[-1, -1], -2), (&[1, 0], 2), (&[-1, 0], 0)],
            &[],
        )
        .unwrap();
        assert_eq!(segment.dim().unwrap(), 1);
        assert_eq!(ehrhart_polynomial(&segment).unwrap(), poly_of_ints(&[1, 2]));
        // Interior of the segment loses both endpoints.
        assert_eq!(segment.count_interior(1).unwrap(), zi(1));
        assert_eq!(segment.count_interior(3).unwrap(), zi(5));
        assert!(reciprocity_holds(&segment, 4).unwrap());
    }

    #[test]
    fn degenerate_inputs_error() {
        let empty = LatticePolytope::from_ints(1, &[(&[1], -1), (&[-1], 0)], &[]).unwrap();
        assert_eq!(empty.count_points(1).unwrap_err(), EhrhartError::Infeasible);
        let halfline = LatticePolytope::from_ints(1, &[(&[-1], 0)], &[]).unwrap();
        assert_eq!(
            halfline.count_points(1).unwrap_err(),
            EhrhartError::Unbounded
        );
        let mismatched = LatticePolytope::from_ints(2, &[(&[1], 0)], &[]);
        assert_eq!(
            mismatched.unwrap_err(),
            EhrhartError::DimensionMismatch { expected: 2, got: 1 }
        );
        let big = unit_cube(3);
        assert!(matches!(
            big.count_points(300).unwrap_err(),
            EhrhartError::ScanTooLarge { .. }
        ));
    }

    #[test]
    fn reciprocity_on_core_families() {
        assert!(reciprocity_holds(&standard_simplex(3), 4).unwrap());
        assert!(reciprocity_holds(&unit_cube(3), 4).unwrap());
        // Interior of the cube at dilation n is (n-1)^d.
        assert_eq!(unit_cube(3).count_interior(3).unwrap(), zi(8));
        assert_eq!(unit_cube(3).count_interior(1).unwrap(), zi(0));
    }

    #[test]
    fn order_polytope_matches_order_polynomial() {
        for name in [
            NamedPoset::Chain(2),
            NamedPoset::Chain(3),
            NamedPoset::Antichain(2),
            NamedPoset::Antichain(3),
            NamedPoset::TwoByN(2),
        ] {
            let poset = build_named_poset(&name).unwrap();
            let polytope = order_polytope(&poset);
            let omega = order_polynomial(&poset).unwrap();
            for n in 0..=4u64 {
                let lhs = polytope.count_points(n).unwrap();
                let rhs = omega.eval(&qi(n as i64 + 1));
                assert_eq!(q_from_z(lhs), rhs, "{name:?} at n = {n}");
            }
        }
    }

    #[test]
    fn chain_polytope_shares_the_ehrhart_polynomial() {
        for name in [
            NamedPoset::Chain(3),
            NamedPoset::Antichain(2),
            NamedPoset::TwoByN(2),
        ] {
            let poset = build_named_poset(&name).unwrap();
            let order = ehrhart_polynomial(&order_polytope(&poset)).unwrap();
            let chain = ehrhart_polynomial(&chain_polytope(&poset)).unwrap();
            assert_eq!(order, chain, "{name:?}");
        }
        // Antichain chains are singletons, so the chain polytope is the cube.
        let antichain = build_named_poset(&NamedPoset::Antichain(2)).unwrap();
        assert_eq!(
            ehrhart_polynomial(&chain_polytope(&antichain)).unwrap(),
            poly_of_ints(&[1, 2, 1])
        );
    }

    #[test]
    fn order_polytope_volume_counts_linear_extensions() {
        // Leading coefficient times d! is the number of linear extensions.
        let poset = build_named_poset(&NamedPoset::TwoByN(2)).unwrap();
        let poly = ehrhart_polynomial(&order_polytope(&poset)).unwrap();
        let lead = poly.leading_coeff();
        let extensions = crate::posetkit::linear_extensions(&poset).unwrap();
        assert_eq!(
            lead * q_from_z(crate::util::factorial(poset.len())),
            q_from_z(extensions),
            "volume {}",
            q_to_string(&poly.leading_coeff())
        );
    }

    #[test]
    fn hull_and_pick() {
        let hull = convex_hull_2d(&[(0, 0), (4, 0), (0, 3), (1, 1), (4, 0)]);
        assert_eq!(hull, vec![(0, 0), (4, 0), (0, 3)]);
        let triangle = polygon_from_points(&[(0, 0), (4, 0), (0, 3), (1, 1)]).unwrap();
        // Area 6, boundary 8: Pick gives interior 3, total 11.
        assert_eq!(
            ehrhart_polynomial(&triangle).unwrap(),
            poly_of_ints(&[1, 4, 6])
        );
        assert_eq!(triangle.count_points(1).unwrap(), zi(11));
        assert_eq!(triangle.count_interior(1).unwrap(), zi(3));
        assert!(reciprocity_holds(&triangle, 3).unwrap());
        assert_eq!(
            polygon_from_points(&[(0, 0), (1, 1), (2, 2)]).unwrap_err(),
            EhrhartError::DegeneratePolygon
        );
    }
}
