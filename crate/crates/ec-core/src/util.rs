//! Shared arithmetic helpers: exact integer/rational constructors, binomials,
//! factorials, small prime generation, and string codecs for big values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact arbitrary-precision integer.
pub type Z = BigInt;
/// Exact rational, always in lowest terms with positive denominator.
pub type Q = BigRational;

/// Integer constant as `Z`.
pub fn zi(n: i64) -> Z {
    Z::from(n)
}

/// Integer constant as `Q`.
pub fn qi(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

/// Rational constant `n/d` as `Q`. Panics if `d == 0`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(Z::from(n), Z::from(d))
}

/// Lift an integer into `Q`.
pub fn q_from_z(n: Z) -> Q {
    Q::from_integer(n)
}

/// Extract an integer from a `Q` known to be integral.
/// Returns `None` when the value has a nontrivial denominator.
pub fn q_to_z(x: &Q) -> Option<Z> {
    if x.denom().is_one() {
        Some(x.numer().clone())
    } else {
        None
    }
}

/// n! as an exact integer.
pub fn factorial(n: usize) -> Z {
    let mut acc = Z::one();
    for k in 2..=n {
        acc *= Z::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k) for nonnegative n.
pub fn binomial(n: usize, k: usize) -> Z {
    if k > n {
        return Z::zero();
    }
    let k = k.min(n - k);
    let mut acc = Z::one();
    for i in 0..k {
        acc = acc * Z::from(n - i) / Z::from(i + 1);
    }
    acc
}

/// Generalized binomial C(n, k) = n(n-1)...(n-k+1)/k! for any integer n.
/// Always integral because k! divides any product of k consecutive integers.
pub fn binomial_z(n: &Z, k: usize) -> Z {
    let mut num = Z::one();
    for i in 0..k {
        num *= n - Z::from(i);
    }
    num / factorial(k)
}

/// Generalized binomial C(r, k) with rational r.
pub fn binomial_q(r: &Q, k: usize) -> Q {
    let mut acc = Q::one();
    for i in 0..k {
        acc *= (r - qi(i as i64)) / qi((i + 1) as i64);
    }
    acc
}

/// Deterministic primality test by trial division; intended for desk-scale
/// moduli, not cryptographic sizes.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The `count` smallest primes strictly greater than `floor`.
pub fn primes_above(floor: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut p = floor + 1;
    while out.len() < count {
        if is_prime(p) {
            out.push(p);
        }
        p += 1;
    }
    out
}

/// Render a rational as `num` or `num/den`.
pub fn q_to_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `num` or `num/den` into a rational.
pub fn q_from_string(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Z = n.trim().parse().ok()?;
            let d: Z = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => {
            let n: Z = s.parse().ok()?;
            Some(Q::from_integer(n))
        }
    }
}

/// Serde codec for `Vec<Q>` as a list of `num/den` strings.
pub mod serde_q_vec {
    use super::{q_from_string, q_to_string, Q};
    use serde::de::Error as DeError;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Q], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(v.iter().map(q_to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Q>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(de)?;
        raw.iter()
            .map(|s| q_from_string(s).ok_or_else(|| DeError::custom(format!("bad rational: {s}"))))
            .collect()
    }
}

/// Serde codec for `Vec<Z>` as a list of decimal strings.
pub mod serde_z_vec {
    use super::Z;
    use serde::de::Error as DeError;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Z], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(v.iter().map(|z| z.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Z>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(de)?;
        raw.iter()
            .map(|s| s.parse::<Z>().map_err(|_| DeError::custom(format!("bad integer: {s}"))))
            .collect()
    }
}

/// Sign of (-1)^k as an integer.
pub fn neg_one_pow(k: usize) -> Z {
    if k % 2 == 0 {
        Z::one()
    } else {
        -Z::one()
    }
}

/// |x| as f64, for bound computations only (never for exact results).
pub fn q_abs_f64(x: &Q) -> f64 {
    let n = x.numer().abs().to_string().parse::<f64>().unwrap_or(f64::MAX);
    let d = x.denom().to_string().parse::<f64>().unwrap_or(1.0);
    n / d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 2), zi(6));
        assert_eq!(binomial(10, 0), zi(1));
        assert_eq!(binomial(3, 5), zi(0));
    }

    #[test]
    fn binomial_negative_top() {
        // C(-4, 3) = (-4)(-5)(-6)/6 = -20
        assert_eq!(binomial_z(&zi(-4), 3), zi(-20));
        // C(-1, k) = (-1)^k
        assert_eq!(binomial_z(&zi(-1), 5), zi(-1));
        assert_eq!(binomial_z(&zi(-1), 6), zi(1));
    }

    #[test]
    fn binomial_rational() {
        // C(1/2, 2) = (1/2)(-1/2)/2 = -1/8
        assert_eq!(binomial_q(&qr(1, 2), 2), qr(-1, 8));
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), zi(1));
        assert_eq!(factorial(5), zi(120));
    }

    #[test]
    fn primes() {
        assert_eq!(primes_above(10, 4), vec![11, 13, 17, 19]);
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(q_to_string(&qr(-3, 6)), "-1/2");
        assert_eq!(q_from_string("7").unwrap(), qi(7));
        assert_eq!(q_from_string("-2/4").unwrap(), qr(-1, 2));
        assert!(q_from_string("1/0").is_none());
    }
}
