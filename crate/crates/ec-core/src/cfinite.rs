//! Sequences satisfying linear recurrences with constant coefficients.
//!
//! The canonical recurrence form is
//! `a_n + c_1 a_{n-1} + ... + c_d a_{n-d} = 0` for `n >= d`, with `c_d != 0`.
//! Order zero (no coefficients, no initial terms) denotes the identically
//! zero sequence.

use crate::poly::{Poly, RationalFn};
use crate::util::{Q, Z};
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CFiniteError {
    #[error("window too short: need at least {need} terms, got {got}")]
    WindowTooShort { need: usize, got: usize },
    #[error("numerator degree must be smaller than denominator degree")]
    ImproperRational,
    #[error("denominator vanishes at 0, series expansion does not exist")]
    DenominatorVanishesAtZero,
    #[error("trailing recurrence coefficient is zero")]
    ZeroTrailingCoefficient,
    #[error("initial terms must match the recurrence order {order}, got {got}")]
    InitLengthMismatch { order: usize, got: usize },
    #[error("no linear recurrence of order at most {max_order} fits the window")]
    NoRecurrenceFound { max_order: usize },
    #[error("characteristic polynomial has no root in the growth-determining interval")]
    NoDominantRealRoot,
}

/// A linear recurrence with constant coefficients plus initial terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<Q>,
    init: Vec<Q>,
}

impl Recurrence {
    /// `coeffs` holds `c_1..c_d`; `init` holds `a_0..a_{d-1}`.
    pub fn new(coeffs: Vec<Q>, init: Vec<Q>) -> Result<Self, CFiniteError> {
        if init.len() != coeffs.len() {
            return Err(CFiniteError::InitLengthMismatch {
                order: coeffs.len(),
                got: init.len(),
            });
        }
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(CFiniteError::ZeroTrailingCoefficient);
        }
        Ok(Recurrence { coeffs, init })
    }

    pub fn from_ints(coeffs: &[i64], init: &[i64]) -> Result<Self, CFiniteError> {
        Recurrence::new(
            coeffs.iter().map(|&c| Q::from_integer(Z::from(c))).collect(),
            init.iter().map(|&c| Q::from_integer(Z::from(c))).collect(),
        )
    }

    /// The identically zero sequence.
    pub fn zero_sequence() -> Self {
        Recurrence { coeffs: vec![], init: vec![] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn init(&self) -> &[Q] {
        &self.init
    }

    /// a_n by forward iteration; linear in n, exact.
    pub fn nth_term(&self, n: usize) -> Q {
        let d = self.order();
        if d == 0 {
            return Q::zero();
        }
        if n < d {
            return self.init[n].clone();
        }
        let mut window = self.init.clone();
        for _ in d..=n {
            let mut next = Q::zero();
            for (i, c) in self.coeffs.iter().enumerate() {
                next -= c * &window[d - 1 - i];
            }
            window.rotate_left(1);
            window[d - 1] = next;
        }
        window[d - 1].clone()
    }

    /// The first `count` terms.
    pub fn terms(&self, count: usize) -> Vec<Q> {
        let d = self.order();
        let mut out: Vec<Q> = Vec::with_capacity(count);
        for n in 0..count.min(d) {
            out.push(self.init[n].clone());
        }
        for n in d..count {
            let mut next = Q::zero();
            for (i, c) in self.coeffs.iter().enumerate() {
                next -= c * &out[n - 1 - i];
            }
            out.push(next);
        }
        out
    }

    /// Does the recurrence hold at every index of the window that has d
    /// predecessors in it, and do the initial terms match?
    pub fn matches_window(&self, window: &[Q]) -> bool {
        let d = self.order();
        for (n, expect) in window.iter().enumerate() {
            if n < d {
                if self.init.get(n) != Some(expect) {
                    return false;
                }
                continue;
            }
            let mut acc = expect.clone();
            for (i, c) in self.coeffs.iter().enumerate() {
                acc += c * &window[n - 1 - i];
            }
            if !acc.is_zero() {
                return false;
            }
        }
        true
    }
}

/// Generating function of the sequence: denominator `1 + c_1 x + ... + c_d x^d`,
/// numerator of degree < d determined by the initial terms.
pub fn rec_to_gf(rec: &Recurrence) -> RationalFn {
    let d = rec.order();
    let mut den = vec![Q::one()];
    den.extend(rec.coeffs.iter().cloned());
    let mut num = Vec::with_capacity(d.max(1));
    for k in 0..d {
        let mut acc = rec.init[k].clone();
        for i in 1..=k {
            acc += &rec.coeffs[i - 1] * &rec.init[k - i];
        }
        num.push(acc);
    }
    RationalFn::new(Poly::new(num), Poly::new(den))
}

/// Recover the recurrence from a proper rational generating function.
pub fn gf_to_rec(gf: &RationalFn) -> Result<Recurrence, CFiniteError> {
    let q0 = gf.den.coeff(0);
    if q0.is_zero() {
        return Err(CFiniteError::DenominatorVanishesAtZero);
    }
    let dq = gf.den.degree().expect("denominator is nonzero");
    match gf.num.degree() {
        None => {}
        Some(dp) if dp < dq => {}
        Some(_) => return Err(CFiniteError::ImproperRational),
    }
    let coeffs: Vec<Q> = (1..=dq).map(|i| gf.den.coeff(i) / &q0).collect();
    let mut init: Vec<Q> = Vec::with_capacity(dq);
    for k in 0..dq {
        let mut acc = gf.num.coeff(k) / &q0;
        for i in 1..=k {
            acc -= &coeffs[i - 1] * &init[k - i];
        }
        init.push(acc);
    }
    Recurrence::new(coeffs, init)
}

/// If the window agrees with a polynomial in n (detected by a vanishing row
/// of finite differences), return it in the monomial basis.
pub fn detect_polynomial(window: &[Q]) -> Result<Option<Poly>, CFiniteError> {
    if window.len() < 2 {
        return Err(CFiniteError::WindowTooShort { need: 2, got: window.len() });
    }
    let mut rows: Vec<Vec<Q>> = vec![window.to_vec()];
    loop {
        let last = rows.last().expect("rows start nonempty");
        if last.iter().all(Zero::is_zero) {
            break;
        }
        if last.len() == 1 {
            // Differences never vanished within the window.
            return Ok(None);
        }
        let next: Vec<Q> = last.windows(2).map(|w| &w[1] - &w[0]).collect();
        rows.push(next);
    }
    // Newton forward form: f(n) = sum_j (delta^j f)(0) * C(n, j).
    let mut poly = Poly::zero();
    let mut falling = Poly::one();
    for (j, row) in rows.iter().enumerate() {
        if j > 0 {
            // multiply by (n - (j-1)) / j
            let shift = Poly::new(vec![Q::from_integer(-Z::from(j - 1)), Q::one()]);
            falling = falling.mul(&shift).scale(&Q::new(Z::one(), Z::from(j)));
        }
        if !row[0].is_zero() {
            poly = poly.add(&falling.scale(&row[0]));
        }
    }
    Ok(Some(poly))
}

/// Find the lowest-order recurrence consistent with the window, holding out
/// the last two terms for validation. The window must contain at least
/// `2 * max_order + 2` terms.
pub fn guess_recurrence(window: &[Q], max_order: usize) -> Result<Recurrence, CFiniteError> {
    let len = window.len();
    let need = 2 * max_order + 2;
    if len < need {
        return Err(CFiniteError::WindowTooShort { need, got: len });
    }
    if window.iter().all(Zero::is_zero) {
        return Ok(Recurrence::zero_sequence());
    }
    for d in 1..=max_order {
        // Solve a_n + sum_i c_i a_{n-i} = 0 on the training range.
        let train_end = len - 2;
        let rows: Vec<Vec<Q>> = (d..train_end)
            .map(|n| (1..=d).map(|i| window[n - i].clone()).collect())
            .collect();
        let rhs: Vec<Q> = (d..train_end).map(|n| -&window[n]).collect();
        if rows.is_empty() {
            continue;
        }
        let mat = crate::linalg::QMatrix::from_rows(rows);
        let Some(sol) = mat.solve(&rhs) else { continue };
        let mut coeffs = sol;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let dd = coeffs.len();
        if dd == 0 {
            continue;
        }
        let cand = Recurrence::new(coeffs, window[..dd].to_vec())
            .expect("trailing coefficient nonzero by construction");
        if cand.matches_window(window) {
            return Ok(cand);
        }
    }
    Err(CFiniteError::NoRecurrenceFound { max_order })
}

/// Asymptotic growth rate `lim a_{n+1}/a_n` as a float, from the smallest
/// positive real root of the generating-function denominator. Intended for
/// eventually positive sequences whose radius of convergence is set by a
/// positive real singularity.
pub fn dominant_growth(rec: &Recurrence) -> Result<f64, CFiniteError> {
    let d = rec.order();
    if d == 0 {
        return Err(CFiniteError::NoDominantRealRoot);
    }
    let mut den: Vec<f64> = Vec::with_capacity(d + 1);
    den.push(1.0);
    for c in rec.coeffs() {
        den.push(c.to_f64().ok_or(CFiniteError::NoDominantRealRoot)?);
    }
    let q = |x: f64| -> f64 {
        let mut acc = 0.0;
        for c in den.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    // The product of the root magnitudes is 1/|c_d|, so the smallest root
    // has magnitude at most (1/|c_d|)^(1/d).
    let cd = den[d].abs();
    let bound = (1.0 / cd).powf(1.0 / d as f64) * 1.000_001;
    let steps = 4096;
    let mut lo = 0.0f64;
    let mut hi = None;
    for k in 1..=steps {
        let x = bound * k as f64 / steps as f64;
        if q(x) <= 0.0 {
            hi = Some(x);
            break;
        }
        lo = x;
    }
    let mut hi = hi.ok_or(CFiniteError::NoDominantRealRoot)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if q(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(1.0 / (0.5 * (lo + hi)))
}

/// Evaluate a polynomial at integer points 0..count as a window.
pub fn poly_window(p: &Poly, count: usize) -> Vec<Q> {
    (0..count).map(|n| p.eval_int(&Z::from(n))).collect()
}
