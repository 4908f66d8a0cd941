//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] carries its truncation order explicitly: coefficients of
//! `x^{N+1}` and beyond are unknown, not zero. Binary operations truncate to
//! the smaller operand order. Nothing here rounds, ever.

use crate::util::{binomial_q, factorial, q_from_z, q_to_string, Q, Z};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PowserError {
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,
    #[error("composition diverges: inner series has nonzero constant term")]
    CompositionDiverges,
    #[error("bad constant term: {0}")]
    BadConstantTerm(&'static str),
    #[error("series is not compositionally invertible: requires a_0 = 0 and a_1 != 0")]
    NotCompositionallyInvertible,
    #[error("pow_r requires a rational exponent argument")]
    MissingExponent,
    #[error("partition spec allows no part sizes")]
    EmptyPartitionSpec,
    #[error("cannot divide by x^{0}: lower coefficients are nonzero")]
    NotDivisibleByX(usize),
}

/// Truncated power series; `coeffs[n]` is the coefficient of `x^n` and the
/// truncation order is `coeffs.len() - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<Q>,
}

impl Series {
    /// Build from coefficients; the truncation order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Q>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| Q::from_integer(Z::from(c))).collect())
    }

    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Q::zero(); order + 1] }
    }

    /// The constant-one series truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Q::one();
        s
    }

    /// The series `x` truncated at `order` (which must be >= 1).
    pub fn x(order: usize) -> Self {
        assert!(order >= 1);
        let mut s = Series::zero(order);
        s.coeffs[1] = Q::one();
        s
    }

    /// Geometric series `1/(1 - c x)` truncated at `order`.
    pub fn geometric(c: &Q, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut acc = Q::one();
        for _ in 0..=order {
            coeffs.push(acc.clone());
            acc *= c;
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Q {
        self.coeffs.get(n).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, or None when the series is
    /// zero through its truncation order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficient-wise agreement up to the smaller truncation order, the
    /// equality notion for truncated series.
    pub fn agrees_with(&self, other: &Series) -> bool {
        let n = self.order().min(other.order());
        (0..=n).all(|i| self.coeffs[i] == other.coeffs[i])
    }

    /// Retruncate to a (smaller or equal) order.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series::new(self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &Q) -> Series {
        Series::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by x^k: shifts coefficients up, keeping the order.
    pub fn mul_x_pow(&self, k: usize) -> Series {
        let n = self.order();
        let mut coeffs = vec![Q::zero(); n + 1];
        for i in k..=n {
            coeffs[i] = self.coeffs[i - k].clone();
        }
        Series::new(coeffs)
    }

    /// Divide by x^k; errors unless the first k coefficients vanish.
    /// The order drops by k.
    pub fn div_x_pow(&self, k: usize) -> Result<Series, PowserError> {
        if k == 0 {
            return Ok(self.clone());
        }
        if self.order() < k || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(PowserError::NotDivisibleByX(k));
        }
        Ok(Series::new(self.coeffs[k..].to_vec()))
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{}", q_to_string(c))?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{}*", q_to_string(c))?;
                    }
                    write!(f, "x")?;
                    if n > 1 {
                        write!(f, "^{n}")?;
                    }
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    coeffs: Vec<String>,
    order: usize,
}

impl Serialize for Series {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            coeffs: self.coeffs.iter().map(q_to_string).collect(),
            order: self.order(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = SeriesJson::deserialize(de)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom("series length must equal order + 1"));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| {
                crate::util::q_from_string(s)
                    .ok_or_else(|| D::Error::custom(format!("bad rational: {s}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Series::new(coeffs))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalyticKind {
    Exp,
    Log,
    Sqrt,
    PowR,
    Sin,
    Cos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CalculusKind {
    Derivative,
    Integrate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvertDir {
    /// Divide coefficient n by n! (counting sequence to EGF coefficients).
    OgfToEgf,
    /// Multiply coefficient n by n! (EGF coefficients to counting sequence).
    EgfToOgf,
}

/// Convolution truncated at `order`.
fn mul_trunc(a: &Series, b: &Series, order: usize) -> Series {
    let mut out = vec![Q::zero(); order + 1];
    for i in 0..=order.min(a.order()) {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..=(order - i).min(b.order()) {
            if !b.coeffs[j].is_zero() {
                out[i + j] += &a.coeffs[i] * &b.coeffs[j];
            }
        }
    }
    Series::new(out)
}

/// Sum, difference, or Cauchy product, truncated to the smaller order.
pub fn ps_arith(kind: ArithKind, a: &Series, b: &Series) -> Series {
    let n = a.order().min(b.order());
    match kind {
        ArithKind::Add => {
            Series::new((0..=n).map(|i| &a.coeffs[i] + &b.coeffs[i]).collect())
        }
        ArithKind::Sub => {
            Series::new((0..=n).map(|i| &a.coeffs[i] - &b.coeffs[i]).collect())
        }
        ArithKind::Mul => mul_trunc(a, b, n),
    }
}

/// Multiplicative inverse: requires a nonzero constant term.
pub fn ps_inverse(a: &Series) -> Result<Series, PowserError> {
    if a.coeffs[0].is_zero() {
        return Err(PowserError::NotInvertible);
    }
    let n = a.order();
    let inv0 = Q::one() / &a.coeffs[0];
    let mut out = vec![Q::zero(); n + 1];
    out[0] = inv0.clone();
    for m in 1..=n {
        let mut acc = Q::zero();
        for k in 1..=m.min(a.order()) {
            acc += &a.coeffs[k] * &out[m - k];
        }
        out[m] = -acc * &inv0;
    }
    Ok(Series::new(out))
}

/// Substitute `b` into `a`; requires b_0 = 0 so the sum stabilizes.
pub fn ps_compose(a: &Series, b: &Series) -> Result<Series, PowserError> {
    if !b.coeffs[0].is_zero() {
        return Err(PowserError::CompositionDiverges);
    }
    let n = a.order().min(b.order());
    let mut acc = Series::zero(n);
    for k in (0..=n).rev() {
        acc = mul_trunc(&acc, b, n);
        acc.coeffs[0] += &a.coeffs[k];
    }
    Ok(acc)
}

/// exp, log, sqrt, rational power, sin, cos, by composing the defining
/// coefficient series with `a` (shifted by 1 where the base point is 1).
pub fn ps_analytic(kind: AnalyticKind, a: &Series, r: Option<&Q>) -> Result<Series, PowserError> {
    let n = a.order();
    let base_zero = |what: &'static str| {
        if a.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(PowserError::BadConstantTerm(what))
        }
    };
    let base_one = |what: &'static str| {
        if a.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(PowserError::BadConstantTerm(what))
        }
    };
    match kind {
        AnalyticKind::Exp => {
            base_zero("exp requires a_0 = 0")?;
            let e = Series::new((0..=n).map(|k| Q::new(Z::one(), factorial(k))).collect());
            ps_compose(&e, a)
        }
        AnalyticKind::Log => {
            base_one("log requires a_0 = 1")?;
            let l = Series::new(
                (0..=n)
                    .map(|k| {
                        if k == 0 {
                            Q::zero()
                        } else {
                            let sign = if k % 2 == 1 { Z::one() } else { -Z::one() };
                            Q::new(sign, Z::from(k))
                        }
                    })
                    .collect(),
            );
            ps_compose(&l, &shift_to_zero(a))
        }
        AnalyticKind::Sqrt => {
            base_one("sqrt requires a_0 = 1")?;
            binomial_compose(a, &Q::new(Z::one(), Z::from(2)))
        }
        AnalyticKind::PowR => {
            base_one("pow_r requires a_0 = 1")?;
            let r = r.ok_or(PowserError::MissingExponent)?;
            binomial_compose(a, r)
        }
        AnalyticKind::Sin => {
            base_zero("sin requires a_0 = 0")?;
            let s = Series::new(
                (0..=n)
                    .map(|k| {
                        if k % 2 == 0 {
                            Q::zero()
                        } else {
                            let sign = if k % 4 == 1 { Z::one() } else { -Z::one() };
                            Q::new(sign, factorial(k))
                        }
                    })
                    .collect(),
            );
            ps_compose(&s, a)
        }
        AnalyticKind::Cos => {
            base_zero("cos requires a_0 = 0")?;
            let c = Series::new(
                (0..=n)
                    .map(|k| {
                        if k % 2 == 1 {
                            Q::zero()
                        } else {
                            let sign = if k % 4 == 0 { Z::one() } else { -Z::one() };
                            Q::new(sign, factorial(k))
                        }
                    })
                    .collect(),
            );
            ps_compose(&c, a)
        }
    }
}

/// a - 1, for series with constant term 1.
fn shift_to_zero(a: &Series) -> Series {
    let mut s = a.clone();
    s.coeffs[0] = Q::zero();
    s
}

/// (1 + u)^r composed with u = a - 1, via the generalized binomial series.
fn binomial_compose(a: &Series, r: &Q) -> Result<Series, PowserError> {
    let n = a.order();
    let b = Series::new((0..=n).map(|k| binomial_q(r, k)).collect());
    ps_compose(&b, &shift_to_zero(a))
}

/// Termwise derivative (order drops by one) or integral with zero constant
/// term (order rises by one).
pub fn ps_calculus(kind: CalculusKind, a: &Series) -> Series {
    match kind {
        CalculusKind::Derivative => {
            if a.order() == 0 {
                return Series::zero(0);
            }
            Series::new(
                (1..=a.order())
                    .map(|k| &a.coeffs[k] * Q::from_integer(Z::from(k)))
                    .collect(),
            )
        }
        CalculusKind::Integrate => {
            let mut out = vec![Q::zero(); a.order() + 2];
            for k in 0..=a.order() {
                out[k + 1] = &a.coeffs[k] / Q::from_integer(Z::from(k + 1));
            }
            Series::new(out)
        }
    }
}

/// Coefficient-wise product, truncated to the smaller order.
pub fn ps_hadamard(a: &Series, b: &Series) -> Series {
    let n = a.order().min(b.order());
    Series::new((0..=n).map(|i| &a.coeffs[i] * &b.coeffs[i]).collect())
}

/// Compositional inverse via the coefficient extraction
/// `n [x^n] B = [x^{n-1}] (x/A)^n`, valid for a_0 = 0, a_1 != 0.
pub fn lagrange_inverse(a: &Series) -> Result<Series, PowserError> {
    let n = a.order();
    if n < 1 || !a.coeffs[0].is_zero() || a.coeffs[1].is_zero() {
        return Err(PowserError::NotCompositionallyInvertible);
    }
    // x/A = 1/(a_1 + a_2 x + ...), an invertible series of order n-1.
    let shifted = Series::new(a.coeffs[1..].to_vec());
    let x_over_a = ps_inverse(&shifted)?;
    let mut out = vec![Q::zero(); n + 1];
    let mut power = x_over_a.clone();
    for m in 1..=n {
        out[m] = power.coeff(m - 1) / Q::from_integer(Z::from(m));
        if m < n {
            power = mul_trunc(&power, &x_over_a, n - 1);
        }
    }
    Ok(Series::new(out))
}

/// Which integers may appear as parts of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartSizes {
    /// Every positive integer (truncated at the series order).
    All,
    /// An explicit set of allowed sizes.
    Set(Vec<usize>),
}

/// Partition generating function request. The optional per-part weight
/// stands in for a second formal variable tracking the number of parts,
/// specialized to a rational value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    pub sizes: PartSizes,
    pub distinct: bool,
    pub max_parts: Option<usize>,
    pub part_weight: Q,
}

impl PartitionSpec {
    pub fn all_parts() -> Self {
        PartitionSpec {
            sizes: PartSizes::All,
            distinct: false,
            max_parts: None,
            part_weight: Q::one(),
        }
    }

    pub fn with_sizes(sizes: Vec<usize>) -> Self {
        PartitionSpec { sizes: PartSizes::Set(sizes), ..PartitionSpec::all_parts() }
    }

    /// Keep the part sizes in 1..=limit satisfying the predicate.
    pub fn filtered(limit: usize, pred: impl Fn(usize) -> bool) -> Self {
        PartitionSpec::with_sizes((1..=limit).filter(|&k| pred(k)).collect())
    }

    pub fn distinct(mut self) -> Self {
        self.distinct = true;
        self
    }

    pub fn max_parts(mut self, m: usize) -> Self {
        self.max_parts = Some(m);
        self
    }

    pub fn weight(mut self, w: Q) -> Self {
        self.part_weight = w;
        self
    }
}

/// Generating function for partitions with parts from the spec: coefficient
/// of x^n sums weight^(number of parts) over the counted partitions of n.
pub fn partition_gf(spec: &PartitionSpec, order: usize) -> Result<Series, PowserError> {
    let mut sizes: Vec<usize> = match &spec.sizes {
        PartSizes::All => (1..=order.max(1)).collect(),
        PartSizes::Set(s) => {
            if s.is_empty() || s.contains(&0) {
                return Err(PowserError::EmptyPartitionSpec);
            }
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        }
    };
    sizes.retain(|&k| k <= order);
    let w = &spec.part_weight;

    match spec.max_parts {
        None => {
            let mut acc = Series::one(order);
            for &k in &sizes {
                let factor = if spec.distinct {
                    // 1 + w x^k
                    let mut f = Series::one(order);
                    f.coeffs[k] = w.clone();
                    f
                } else {
                    // 1/(1 - w x^k) = sum_j w^j x^{jk}
                    let mut f = Series::zero(order);
                    let mut acc_w = Q::one();
                    let mut e = 0;
                    while e <= order {
                        f.coeffs[e] = acc_w.clone();
                        acc_w *= w;
                        e += k;
                    }
                    f
                };
                acc = mul_trunc(&acc, &factor, order);
            }
            Ok(acc)
        }
        Some(m) => {
            // dp[c][n]: weighted count of partitions of n into exactly c parts.
            let mut dp = vec![vec![Q::zero(); order + 1]; m + 1];
            dp[0][0] = Q::one();
            for &k in &sizes {
                if spec.distinct {
                    for c in (1..=m).rev() {
                        for n in (k..=order).rev() {
                            if !dp[c - 1][n - k].is_zero() {
                                let add = &dp[c - 1][n - k] * w;
                                dp[c][n] += add;
                            }
                        }
                    }
                } else {
                    for c in 1..=m {
                        for n in k..=order {
                            if !dp[c - 1][n - k].is_zero() {
                                let add = &dp[c - 1][n - k] * w;
                                dp[c][n] += add;
                            }
                        }
                    }
                }
            }
            let mut out = vec![Q::zero(); order + 1];
            for c in 0..=m {
                for n in 0..=order {
                    out[n] += &dp[c][n];
                }
            }
            Ok(Series::new(out))
        }
    }
}

/// Multiply or divide coefficient n by n! exactly.
pub fn egf_ogf_convert(dir: ConvertDir, a: &Series) -> Series {
    Series::new(
        a.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| match dir {
                ConvertDir::EgfToOgf => c * q_from_z(factorial(n)),
                ConvertDir::OgfToEgf => c / q_from_z(factorial(n)),
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::{qi, qr};

    #[test]
    fn difference_of_squares() {
        let a = Series::from_ints(&[1, 1, 0, 0]);
        let b = Series::from_ints(&[1, -1, 0, 0]);
        assert_eq!(ps_arith(ArithKind::Mul, &a, &b), Series::from_ints(&[1, 0, -1, 0]));
    }

    #[test]
    fn fibonacci_gf_inverse() {
        let den = Series::from_ints(&[1, -1, -1, 0, 0, 0]);
        let fib = ps_inverse(&den).unwrap();
        assert_eq!(fib, Series::from_ints(&[1, 1, 2, 3, 5, 8]));
        assert_eq!(
            ps_arith(ArithKind::Mul, &den, &fib),
            Series::one(5)
        );
    }

    #[test]
    fn inverse_rejects_zero_constant() {
        assert_eq!(ps_inverse(&Series::from_ints(&[0, 1])), Err(PowserError::NotInvertible));
    }

    #[test]
    fn compose_geometric_with_x_plus_x2() {
        // 1/(1-(x+x^2)) = Fibonacci
        let geo = Series::geometric(&qi(1), 6);
        let inner = Series::from_ints(&[0, 1, 1, 0, 0, 0, 0]);
        let fib = ps_compose(&geo, &inner).unwrap();
        assert_eq!(fib, Series::from_ints(&[1, 1, 2, 3, 5, 8, 13]));
    }

    #[test]
    fn compose_identity() {
        let a = Series::from_ints(&[3, 1, 4, 1, 5]);
        assert_eq!(ps_compose(&a, &Series::x(4)).unwrap(), a);
    }

    #[test]
    fn compose_rejects_bad_inner() {
        let a = Series::one(3);
        assert_eq!(
            ps_compose(&a, &Series::one(3)),
            Err(PowserError::CompositionDiverges)
        );
    }

    #[test]
    fn exp_log_inverse_pair() {
        let f = Series::new(vec![qi(1), qi(2), qr(1, 3), qi(-1), qr(5, 7)]);
        let log = ps_analytic(AnalyticKind::Log, &f, None).unwrap();
        let back = ps_analytic(AnalyticKind::Exp, &log, None).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn involutions_egf() {
        // exp(x + x^2/2) has n! * coefficient = 1,1,2,4,10,26
        let inner = Series::new(vec![qi(0), qi(1), qr(1, 2), qi(0), qi(0), qi(0)]);
        let e = ps_analytic(AnalyticKind::Exp, &inner, None).unwrap();
        let counts = egf_ogf_convert(ConvertDir::EgfToOgf, &e);
        assert_eq!(counts, Series::from_ints(&[1, 1, 2, 4, 10, 26]));
    }

    #[test]
    fn sqrt_squares_back() {
        let f = Series::new(vec![qi(1), qi(-4), qi(0), qi(2), qr(1, 5)]);
        let s = ps_analytic(AnalyticKind::Sqrt, &f, None).unwrap();
        assert_eq!(ps_arith(ArithKind::Mul, &s, &s), f);
    }

    #[test]
    fn catalan_from_sqrt() {
        let order = 7;
        let mut inner = Series::zero(order);
        inner.coeffs[0] = qi(1);
        inner.coeffs[1] = qi(-4);
        let root = ps_analytic(AnalyticKind::Sqrt, &inner, None).unwrap();
        let num = ps_arith(ArithKind::Sub, &Series::one(order), &root);
        let catalan = num.div_x_pow(1).unwrap().scale(&qr(1, 2));
        assert_eq!(catalan, Series::from_ints(&[1, 1, 2, 5, 14, 42, 132]));
    }

    #[test]
    fn pow_r_cube_root() {
        let f = Series::from_ints(&[1, 3, 3, 1, 0]);
        let r = ps_analytic(AnalyticKind::PowR, &f, Some(&qr(1, 3))).unwrap();
        assert_eq!(r, Series::from_ints(&[1, 1, 0, 0, 0]));
    }

    #[test]
    fn sin_cos_pythagoras() {
        let x = Series::x(8);
        let s = ps_analytic(AnalyticKind::Sin, &x, None).unwrap();
        let c = ps_analytic(AnalyticKind::Cos, &x, None).unwrap();
        let sum = ps_arith(
            ArithKind::Add,
            &ps_arith(ArithKind::Mul, &s, &s),
            &ps_arith(ArithKind::Mul, &c, &c),
        );
        assert_eq!(sum, Series::one(8));
    }

    #[test]
    fn calculus_roundtrip() {
        let geo = Series::geometric(&qi(1), 6);
        let d = ps_calculus(CalculusKind::Derivative, &geo);
        assert_eq!(d, Series::from_ints(&[1, 2, 3, 4, 5, 6]));
        let i = ps_calculus(CalculusKind::Integrate, &d);
        // integral restores the original up to the constant term
        assert!(ps_arith(ArithKind::Sub, &geo, &i).valuation().map_or(true, |v| v == 0));
    }

    #[test]
    fn hadamard_identities() {
        let central: Series = Series::from_ints(&[1, 2, 6, 20]);
        let squared = ps_hadamard(&central, &central);
        assert_eq!(squared, Series::from_ints(&[1, 4, 36, 400]));
        let g2 = Series::geometric(&qi(2), 5);
        let g3 = Series::geometric(&qi(3), 5);
        assert_eq!(ps_hadamard(&g2, &g3), Series::geometric(&qi(6), 5));
    }

    #[test]
    fn lagrange_inverse_catalan() {
        // inverse of x - x^2 has coefficients Catalan(m-1) at x^m
        let a = Series::from_ints(&[0, 1, -1, 0, 0, 0, 0]);
        let inv = lagrange_inverse(&a).unwrap();
        assert_eq!(inv, Series::from_ints(&[0, 1, 1, 2, 5, 14, 42]));
        // And it composes back to x from both sides.
        let lhs = ps_compose(&a, &inv).unwrap();
        let rhs = ps_compose(&inv, &a).unwrap();
        assert_eq!(lhs, Series::x(6));
        assert_eq!(rhs, Series::x(6));
    }

    #[test]
    fn lagrange_inverse_rooted_trees() {
        // inverse of x e^{-x}: n-th EGF coefficient n^{n-1}/n!
        let order = 6;
        let x = Series::x(order);
        let neg = x.scale(&qi(-1));
        let e = ps_analytic(AnalyticKind::Exp, &neg, None).unwrap();
        let a = ps_arith(ArithKind::Mul, &x, &e);
        let r = lagrange_inverse(&a).unwrap();
        let counts = egf_ogf_convert(ConvertDir::EgfToOgf, &r);
        // r_n = n^{n-1}: 1, 2, 9, 64, 625
        assert_eq!(counts, Series::from_ints(&[0, 1, 2, 9, 64, 625, 7776]));
    }

    #[test]
    fn lagrange_rejects_bad_input() {
        assert!(lagrange_inverse(&Series::from_ints(&[1, 1])).is_err());
        assert!(lagrange_inverse(&Series::from_ints(&[0, 0, 1])).is_err());
    }

    #[test]
    fn partitions_all() {
        let gf = partition_gf(&PartitionSpec::all_parts(), 9).unwrap();
        assert_eq!(gf, Series::from_ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30]));
    }

    #[test]
    fn odd_equals_distinct() {
        let odd = partition_gf(&PartitionSpec::filtered(12, |k| k % 2 == 1), 12).unwrap();
        let distinct = partition_gf(&PartitionSpec::all_parts().distinct(), 12).unwrap();
        assert_eq!(odd, distinct);
    }

    #[test]
    fn pentagonal_numbers() {
        let spec = PartitionSpec::all_parts().distinct().weight(qi(-1));
        let gf = partition_gf(&spec, 12).unwrap();
        assert_eq!(
            gf,
            Series::from_ints(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1])
        );
    }

    #[test]
    fn parts_up_to_two() {
        let gf = partition_gf(&PartitionSpec::with_sizes(vec![1, 2]), 8).unwrap();
        let expect: Vec<i64> = (0..=8).map(|n| n / 2 + 1).collect();
        assert_eq!(gf, Series::from_ints(&expect));
    }

    #[test]
    fn bounded_part_count() {
        // partitions into at most 2 parts of any size: 1,1,2,2,3,3
        let spec = PartitionSpec::all_parts().max_parts(2);
        let gf = partition_gf(&spec, 5).unwrap();
        assert_eq!(gf, Series::from_ints(&[1, 1, 2, 2, 3, 3]));
    }

    #[test]
    fn convert_roundtrip() {
        let a = Series::from_ints(&[1, 1, 2, 6, 24]);
        let egf = egf_ogf_convert(ConvertDir::OgfToEgf, &a);
        assert_eq!(egf_ogf_convert(ConvertDir::EgfToOgf, &egf), a);
    }

    #[test]
    fn permutations_egf() {
        // EGF 1/(1-x) corresponds to n! as a counting sequence.
        let egf = Series::geometric(&qi(1), 4);
        let ogf = egf_ogf_convert(ConvertDir::EgfToOgf, &egf);
        assert_eq!(ogf, Series::from_ints(&[1, 1, 2, 6, 24]));
    }

    #[test]
    fn series_json_roundtrip() {
        let s = Series::new(vec![qi(1), qr(-1, 2), qi(3)]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"coeffs":["1","-1/2","3"],"order":2}"#);
        let back: Series = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
