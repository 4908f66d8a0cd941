//! Exact dense linear algebra over the rationals: fraction-free determinants,
//! reduced row echelon form, linear solving, and a small exact-arithmetic
//! simplex used for polytope bounds.

use crate::util::{q_from_z, Q, Z};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut m = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn delete_row_col(&self, row: usize, col: usize) -> QMatrix {
        let mut out = QMatrix::zeros(self.rows - 1, self.cols - 1);
        let mut ii = 0;
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            let mut jj = 0;
            for j in 0..self.cols {
                if j == col {
                    continue;
                }
                out[(ii, jj)] = self[(i, j)].clone();
                jj += 1;
            }
            ii += 1;
        }
        out
    }

    /// Exact determinant. Denominators are cleared per row, then the integer
    /// core runs fraction-free Bareiss elimination.
    pub fn det(&self) -> Q {
        assert!(self.is_square(), "determinant of a nonsquare matrix");
        let n = self.rows;
        if n == 0 {
            return Q::one();
        }
        let mut scale = Z::one();
        let mut m: Vec<Vec<Z>> = Vec::with_capacity(n);
        for i in 0..n {
            let lcm = self.row(i).iter().fold(Z::one(), |acc, q| acc.lcm(q.denom()));
            m.push(self.row(i).iter().map(|q| q.numer() * (&lcm / q.denom())).collect());
            scale *= lcm;
        }
        Q::new(det_bareiss(m), scale)
    }

    /// Reduced row echelon form; returns the reduced matrix and pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].clone();
            for j in c..m.cols {
                let v = &m[(r, j)] / &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &f * &m[(r, j)];
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A particular solution of `self * x = rhs`, or None when inconsistent.
    pub fn solve(&self, rhs: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(self.rows, rhs.len());
        let mut aug = QMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Some(x)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

/// Fraction-free Bareiss determinant of an integer matrix.
pub fn det_bareiss(mut m: Vec<Vec<Z>>) -> Z {
    let n = m.len();
    if n == 0 {
        return Z::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = Z::one();
    let mut prev = Z::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Z::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = Z::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Rank of a small integer matrix using checked i128 fraction-free
/// elimination; None when an intermediate value would overflow.
pub fn rank_i128(rows: &[Vec<i128>]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return Some(0);
    }
    let ncols = m[0].len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(pr) = (row..nrows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(row, pr);
        for i in row + 1..nrows {
            for j in col + 1..ncols {
                let a = m[i][j].checked_mul(m[row][col])?;
                let b = m[i][col].checked_mul(m[row][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        rank += 1;
        row += 1;
    }
    Some(rank)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Q, point: Vec<Q> },
}

/// Exact two-phase simplex with Bland's rule.
///
/// Maximizes `objective . x` over free variables x subject to
/// `a x <= b` and `c_eq x = e`. Termination is guaranteed by Bland's
/// anti-cycling pivot choice; all arithmetic is exact.
pub fn lp_maximize(objective: &[Q], a: &[Vec<Q>], b: &[Q], c_eq: &[Vec<Q>], e: &[Q]) -> LpOutcome {
    let d = objective.len();
    assert!(a.iter().all(|r| r.len() == d) && c_eq.iter().all(|r| r.len() == d));
    assert_eq!(a.len(), b.len());
    assert_eq!(c_eq.len(), e.len());

    // Columns: u_0..u_{d-1}, w_0..w_{d-1} (x = u - w), slacks, artificials.
    let m = a.len() + c_eq.len();
    let n_slack = a.len();
    let base_cols = 2 * d + n_slack;

    let mut rows: Vec<Vec<Q>> = Vec::with_capacity(m);
    let mut rhs: Vec<Q> = Vec::with_capacity(m);
    for (i, arow) in a.iter().enumerate() {
        let mut row = vec![Q::zero(); base_cols];
        for j in 0..d {
            row[j] = arow[j].clone();
            row[d + j] = -arow[j].clone();
        }
        row[2 * d + i] = Q::one();
        rows.push(row);
        rhs.push(b[i].clone());
    }
    for (i, crow) in c_eq.iter().enumerate() {
        let mut row = vec![Q::zero(); base_cols];
        for j in 0..d {
            row[j] = crow[j].clone();
            row[d + j] = -crow[j].clone();
        }
        rows.push(row);
        rhs.push(e[i].clone());
    }

    // Normalize to nonnegative right-hand sides, then give every row an
    // artificial basic variable. Slacks flipped by the negation cannot serve
    // as a starting basis, so uniform artificials keep the setup simple.
    for i in 0..m {
        if rhs[i].is_negative() {
            for v in rows[i].iter_mut() {
                *v = -v.clone();
            }
            rhs[i] = -rhs[i].clone();
        }
    }
    let total_cols = base_cols + m;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for (i, row) in rows.into_iter().enumerate() {
        let mut full = row;
        full.resize(total_cols, Q::zero());
        full[base_cols + i] = Q::one();
        t.push(full);
    }
    let mut basis: Vec<usize> = (0..m).map(|i| base_cols + i).collect();

    // Phase 1: maximize -(sum of artificials).
    let mut obj = vec![Q::zero(); total_cols];
    for j in base_cols..total_cols {
        obj[j] = -Q::one();
    }
    let mut val = Q::zero();
    price_out(&mut obj, &mut val, &t, &rhs, &basis);
    if simplex_loop(&mut t, &mut rhs, &mut basis, &mut obj, &mut val, total_cols) {
        unreachable!("phase 1 objective is bounded above by zero");
    }
    if val.is_negative() {
        return LpOutcome::Infeasible;
    }

    // Drive out or drop any artificial still basic at level zero.
    let mut drop_rows = Vec::new();
    for i in 0..m {
        if basis[i] >= base_cols {
            if let Some(col) = (0..base_cols).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut rhs, &mut basis, &mut obj, &mut val, i, col);
            } else {
                drop_rows.push(i);
            }
        }
    }
    for &i in drop_rows.iter().rev() {
        t.remove(i);
        rhs.remove(i);
        basis.remove(i);
    }

    // Phase 2 on the real objective, artificial columns frozen out.
    let mut obj = vec![Q::zero(); total_cols];
    for j in 0..d {
        obj[j] = objective[j].clone();
        obj[d + j] = -objective[j].clone();
    }
    let mut val = Q::zero();
    price_out(&mut obj, &mut val, &t, &rhs, &basis);
    if simplex_loop(&mut t, &mut rhs, &mut basis, &mut obj, &mut val, base_cols) {
        return LpOutcome::Unbounded;
    }

    let mut point = vec![Q::zero(); d];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < d {
            point[bv] += &rhs[i];
        } else if bv < 2 * d {
            point[bv - d] -= &rhs[i];
        }
    }
    LpOutcome::Optimal { value: val, point }
}

/// Convenience wrapper minimizing the objective instead.
pub fn lp_minimize(objective: &[Q], a: &[Vec<Q>], b: &[Q], c_eq: &[Vec<Q>], e: &[Q]) -> LpOutcome {
    let neg: Vec<Q> = objective.iter().map(|c| -c.clone()).collect();
    match lp_maximize(&neg, a, b, c_eq, e) {
        LpOutcome::Optimal { value, point } => LpOutcome::Optimal { value: -value, point },
        other => other,
    }
}

/// Eliminate basic columns from the objective row.
fn price_out(obj: &mut [Q], val: &mut Q, t: &[Vec<Q>], rhs: &[Q], basis: &[usize]) {
    for (i, &bv) in basis.iter().enumerate() {
        if !obj[bv].is_zero() {
            let f = obj[bv].clone();
            for j in 0..obj.len() {
                let v = &obj[j] - &f * &t[i][j];
                obj[j] = v;
            }
            *val += &f * &rhs[i];
        }
    }
}

/// Run simplex until optimal (false) or unbounded (true). Only columns below
/// `col_limit` may enter, which freezes artificials out of phase 2.
fn simplex_loop(
    t: &mut Vec<Vec<Q>>,
    rhs: &mut Vec<Q>,
    basis: &mut [usize],
    obj: &mut [Q],
    val: &mut Q,
    col_limit: usize,
) -> bool {
    loop {
        let Some(enter) = (0..col_limit).find(|&j| obj[j].is_positive()) else {
            return false;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Q> = None;
        for i in 0..t.len() {
            if t[i][enter].is_positive() {
                let ratio = &rhs[i] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(row) = leave else {
            return true;
        };
        pivot(t, rhs, basis, obj, val, row, enter);
    }
}

fn pivot(
    t: &mut [Vec<Q>],
    rhs: &mut [Q],
    basis: &mut [usize],
    obj: &mut [Q],
    val: &mut Q,
    row: usize,
    col: usize,
) {
    let inv = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v = &*v / &inv;
    }
    rhs[row] = &rhs[row] / &inv;
    for i in 0..t.len() {
        if i != row && !t[i][col].is_zero() {
            let f = t[i][col].clone();
            for j in 0..t[i].len() {
                let v = &t[i][j] - &f * &t[row][j];
                t[i][j] = v;
            }
            rhs[i] = &rhs[i] - &f * &rhs[row];
        }
    }
    if !obj[col].is_zero() {
        let f = obj[col].clone();
        for j in 0..obj.len() {
            let v = &obj[j] - &f * &t[row][j];
            obj[j] = v;
        }
        *val += &f * &rhs[row];
    }
    basis[row] = col;
}

/// Determinant of a matrix with polynomial entries, by exact evaluation at
/// the integer nodes 0..=D and Lagrange interpolation, where D is the sum of
/// row-wise maximum degrees.
pub fn det_poly(m: &[Vec<crate::poly::Poly>]) -> crate::poly::Poly {
    use crate::poly::Poly;
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let degree_bound: usize = m
        .iter()
        .map(|row| row.iter().filter_map(|p| p.degree()).max().unwrap_or(0))
        .sum();
    let mut points = Vec::with_capacity(degree_bound + 1);
    for k in 0..=degree_bound {
        let x = q_from_z(Z::from(k));
        let eval = QMatrix::from_fn(n, n, |i, j| m[i][j].eval(&x));
        points.push((x, eval.det()));
    }
    Poly::interpolate(&points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::util::{qi, qr};

    #[test]
    fn det_small() {
        let m = QMatrix::from_rows(vec![vec![qi(1), qi(2)], vec![qi(3), qi(4)]]);
        assert_eq!(m.det(), qi(-2));
        assert_eq!(QMatrix::identity(5).det(), qi(1));
    }

    #[test]
    fn det_rational_entries() {
        let m = QMatrix::from_rows(vec![vec![qr(1, 2), qr(1, 3)], vec![qr(1, 4), qr(1, 5)]]);
        // 1/10 - 1/12 = 1/60
        assert_eq!(m.det(), qr(1, 60));
    }

    #[test]
    fn det_needs_pivot() {
        let m = QMatrix::from_rows(vec![
            vec![qi(0), qi(1), qi(0)],
            vec![qi(1), qi(0), qi(0)],
            vec![qi(0), qi(0), qi(1)],
        ]);
        assert_eq!(m.det(), qi(-1));
    }

    #[test]
    fn vandermonde_nodes_0123() {
        let m = QMatrix::from_fn(4, 4, |i, j| qi((i as i64).pow(j as u32)));
        // prod_{i<j} (x_j - x_i) = 1*2*3 * 1*2 * 1 = 12
        assert_eq!(m.det(), qi(12));
    }

    #[test]
    fn rank_and_solve() {
        let m = QMatrix::from_rows(vec![
            vec![qi(1), qi(2), qi(3)],
            vec![qi(2), qi(4), qi(6)],
            vec![qi(1), qi(0), qi(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let sol = m.solve(&[qi(6), qi(12), qi(2)]).unwrap();
        for (row, want) in [(0usize, qi(6)), (1, qi(12)), (2, qi(2))] {
            let got: Q = (0..3).map(|j| &m[(row, j)] * &sol[j]).sum();
            assert_eq!(got, want);
        }
        assert!(m.solve(&[qi(6), qi(11), qi(2)]).is_none());
    }

    #[test]
    fn rank_i128_matches() {
        let rows = vec![vec![1i128, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_i128(&rows), Some(2));
        assert_eq!(rank_i128(&[]), Some(0));
    }

    #[test]
    fn lp_box() {
        // max x + y st x <= 3, y <= 4, -x <= 0, -y <= 0
        let a = vec![
            vec![qi(1), qi(0)],
            vec![qi(0), qi(1)],
            vec![qi(-1), qi(0)],
            vec![qi(0), qi(-1)],
        ];
        let b = vec![qi(3), qi(4), qi(0), qi(0)];
        match lp_maximize(&[qi(1), qi(1)], &a, &b, &[], &[]) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, qi(7));
                assert_eq!(point, vec![qi(3), qi(4)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lp_crosspolytope_bounds() {
        // |x| + |y| <= 1 encoded as four inequalities; max x = 1.
        let mut a = Vec::new();
        for sx in [1i64, -1] {
            for sy in [1i64, -1] {
                a.push(vec![qi(sx), qi(sy)]);
            }
        }
        let b = vec![qi(1); 4];
        match lp_maximize(&[qi(1), qi(0)], &a, &b, &[], &[]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, qi(1)),
            other => panic!("unexpected {other:?}"),
        }
        match lp_minimize(&[qi(1), qi(0)], &a, &b, &[], &[]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, qi(-1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lp_with_equality() {
        // max x subject to x + y = 1, x, y >= 0 (as -x <= 0, -y <= 0).
        let a = vec![vec![qi(-1), qi(0)], vec![qi(0), qi(-1)]];
        let b = vec![qi(0), qi(0)];
        let c = vec![vec![qi(1), qi(1)]];
        let e = vec![qi(1)];
        match lp_maximize(&[qi(1), qi(0)], &a, &b, &c, &e) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, qi(1));
                assert_eq!(point[0], qi(1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lp_infeasible_and_unbounded() {
        // x <= 0 and x = 1 is infeasible.
        let out = lp_maximize(
            &[qi(1)],
            &[vec![qi(1)]],
            &[qi(0)],
            &[vec![qi(1)]],
            &[qi(1)],
        );
        assert_eq!(out, LpOutcome::Infeasible);
        // max x with only x >= 0 is unbounded.
        let out = lp_maximize(&[qi(1)], &[vec![qi(-1)]], &[qi(0)], &[], &[]);
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn poly_det_interpolation() {
        // det [[1, x], [x, 1]] = 1 - x^2
        let x = Poly::x();
        let one = Poly::one();
        let m = vec![vec![one.clone(), x.clone()], vec![x.clone(), one.clone()]];
        assert_eq!(det_poly(&m), Poly::from_ints(&[1, 0, -1]));
    }
}
