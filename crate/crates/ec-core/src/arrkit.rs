//! Rational hyperplane arrangements: characteristic polynomials by three
//! independent methods, region counts, point-count histograms over finite
//! fields, and the cd-index of the region structure of central
//! arrangements.
//!
//! Hyperplanes `a . x = b` are stored in a canonical integer form so that
//! equality of hyperplanes is literal equality, and arrangements reject
//! duplicates at construction. Everything downstream can then treat the
//! hyperplane list as a set.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graphcount::Graph;
use crate::linalg::QMatrix;
use crate::poly::Poly;
use crate::posetkit::{ab_index, Poset, WordPoly};
use crate::util::{neg_one_pow, primes_above, q_from_z, qi, Q, Z};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrError {
    #[error("hyperplane normal is zero")]
    ZeroNormal,
    #[error("duplicate hyperplane")]
    DuplicateHyperplane,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("arrangement is not central")]
    NotCentral,
    #[error("finite-field evaluations disagree with the interpolation")]
    PrimeInstability,
    #[error("too many hyperplanes: limit {limit}, got {got}")]
    TooManyHyperplanes { limit: usize, got: usize },
    #[error("bad arrangement description: {0}")]
    BadSpec(String),
}

/// Affine hyperplane `normal . x = offset` in canonical integer form: the
/// coefficients are coprime and the first nonzero normal entry is
/// positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    normal: Vec<Z>,
    offset: Z,
}

impl Hyperplane {
    pub fn new(normal: &[Q], offset: &Q) -> Result<Self, ArrError> {
        if normal.iter().all(|c| c.is_zero()) {
            return Err(ArrError::ZeroNormal);
        }
        let mut lcm = Z::one();
        for c in normal.iter().chain([offset]) {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<Z> = normal
            .iter()
            .map(|c| (c.clone() * q_from_z(lcm.clone())).to_integer())
            .collect();
        let mut off = (offset.clone() * q_from_z(lcm)).to_integer();
        let mut gcd = off.clone();
        for c in &ints {
            gcd = gcd.gcd(c);
        }
        for c in ints.iter_mut() {
            *c /= &gcd;
        }
        off /= &gcd;
        if ints.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
            for c in ints.iter_mut() {
                *c = -c.clone();
            }
            off = -off;
        }
        Ok(Hyperplane {
            normal: ints,
            offset: off,
        })
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Result<Self, ArrError> {
        let n: Vec<Q> = normal.iter().map(|&c| qi(c)).collect();
        Hyperplane::new(&n, &qi(offset))
    }

    pub fn normal(&self) -> &[Z] {
        &self.normal
    }

    pub fn offset(&self) -> &Z {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Row `(normal, offset)` as rationals, for linear algebra.
    fn augmented_row(&self) -> Vec<Q> {
        self.normal
            .iter()
            .map(|c| q_from_z(c.clone()))
            .chain([q_from_z(self.offset.clone())])
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self, ArrError> {
        let mut seen = BTreeSet::new();
        for h in &hyperplanes {
            if h.dim() != dim {
                return Err(ArrError::DimensionMismatch {
                    expected: dim,
                    got: h.dim(),
                });
            }
            if !seen.insert(h.clone()) {
                return Err(ArrError::DuplicateHyperplane);
            }
        }
        Ok(Arrangement { dim, hyperplanes })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Rank of the normal matrix (codimension of the essentialization).
    pub fn rank(&self) -> usize {
        if self.hyperplanes.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<Q>> = self
            .hyperplanes
            .iter()
            .map(|h| h.normal.iter().map(|c| q_from_z(c.clone())).collect())
            .collect();
        QMatrix::from_rows(rows).rank()
    }

    /// True when all hyperplanes share a point.
    pub fn is_central(&self) -> bool {
        let all: Vec<usize> = (0..self.len()).collect();
        system_rank(self, &all).is_some()
    }

    /// Homogenized copy one dimension up: `a . x = b` becomes the linear
    /// plane `a . x - b t = 0`, plus the new plane `t = 0`. Its
    /// characteristic polynomial is `(q - 1)` times the original's.
    pub fn cone(&self) -> Arrangement {
        let mut planes = Vec::with_capacity(self.len() + 1);
        for h in &self.hyperplanes {
            let normal: Vec<Q> = h
                .normal
                .iter()
                .map(|c| q_from_z(c.clone()))
                .chain([q_from_z(-h.offset.clone())])
                .collect();
            planes.push(Hyperplane::new(&normal, &Q::zero()).expect("normal stays nonzero"));
        }
        let mut last = vec![Q::zero(); self.dim + 1];
        last[self.dim] = Q::one();
        planes.push(Hyperplane::new(&last, &Q::zero()).unwrap());
        Arrangement::new(self.dim + 1, planes).expect("homogenization preserves distinctness")
    }
}

/// Consistency and rank of the linear system for a set of hyperplanes:
/// `Some(rank of the normal rows)` when they share a point, else None.
fn system_rank(arr: &Arrangement, set: &[usize]) -> Option<usize> {
    if set.is_empty() {
        return Some(0);
    }
    let rows: Vec<Vec<Q>> = set
        .iter()
        .map(|&i| arr.hyperplanes[i].augmented_row())
        .collect();
    let (_, pivots) = QMatrix::from_rows(rows).rref();
    if pivots.contains(&arr.dim) {
        return None;
    }
    Some(pivots.len())
}

/// One flat of the intersection poset: the hyperplanes containing it and
/// its codimension.
#[derive(Debug, Clone)]
struct Flat {
    closure: BTreeSet<usize>,
    codim: usize,
}

/// All nonempty intersection flats, discovered breadth-first from the
/// ambient space. The closure of a flat is the set of hyperplanes
/// containing it, which is a canonical key.
fn intersection_flats(arr: &Arrangement) -> Vec<Flat> {
    let n = arr.len();
    let mut seen: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    let ambient = Flat {
        closure: BTreeSet::new(),
        codim: 0,
    };
    let mut flats = vec![ambient];
    seen.insert(BTreeSet::new(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        let current = flats[idx].clone();
        for h in 0..n {
            if current.closure.contains(&h) {
                continue;
            }
            let mut test: Vec<usize> = current.closure.iter().copied().collect();
            test.push(h);
            let Some(rank) = system_rank(arr, &test) else {
                continue;
            };
            let closure: BTreeSet<usize> = (0..n)
                .filter(|&h2| {
                    let mut probe = test.clone();
                    probe.push(h2);
                    system_rank(arr, &probe) == Some(rank)
                })
                .collect();
            if !seen.contains_key(&closure) {
                seen.insert(closure.clone(), flats.len());
                flats.push(Flat {
                    closure,
                    codim: rank,
                });
                queue.push_back(flats.len() - 1);
            }
        }
    }
    flats
}

/// Intersection poset as a [`Poset`]: the ambient space at the bottom,
/// flats ordered by reverse inclusion of subspaces (inclusion of
/// closures). Labels are the closure sets.
pub fn intersection_poset(arr: &Arrangement) -> Poset {
    let mut flats = intersection_flats(arr);
    flats.sort_by(|a, b| (a.codim, &a.closure).cmp(&(b.codim, &b.closure)));
    let labels: Vec<String> = flats
        .iter()
        .map(|f| {
            let ids: Vec<String> = f.closure.iter().map(|i| i.to_string()).collect();
            format!("{{{}}}", ids.join(","))
        })
        .collect();
    let leq: Vec<Vec<bool>> = flats
        .iter()
        .map(|a| flats.iter().map(|b| a.closure.is_subset(&b.closure)).collect())
        .collect();
    Poset::from_leq_matrix(labels, leq).expect("closure sets are distinct")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharBackend {
    /// Count points off the arrangement over several prime fields and
    /// interpolate, with a spare prime as a consistency witness.
    FiniteField,
    /// Moebius sum over the intersection poset.
    IntersectionPoset,
    /// Signed sum over central subsets of hyperplanes.
    Whitney,
}

const WHITNEY_LIMIT: usize = 20;

/// Characteristic polynomial of the arrangement, as a polynomial in q.
pub fn char_poly(arr: &Arrangement, backend: CharBackend) -> Result<Poly, ArrError> {
    match backend {
        CharBackend::FiniteField => char_poly_finite_field(arr, 0),
        CharBackend::IntersectionPoset => Ok(char_poly_poset(arr)),
        CharBackend::Whitney => char_poly_whitney(arr),
    }
}

/// Finite-field backend with every sampled prime strictly greater than
/// `prime_floor`. Larger primes cost more scan time but sidestep any
/// suspicion of small-prime coincidences.
pub fn char_poly_ff_above(arr: &Arrangement, prime_floor: u64) -> Result<Poly, ArrError> {
    char_poly_finite_field(arr, prime_floor)
}

fn char_poly_poset(arr: &Arrangement) -> Poly {
    let mut flats = intersection_flats(arr);
    flats.sort_by(|a, b| (a.codim, &a.closure).cmp(&(b.codim, &b.closure)));
    let poset = {
        let labels: Vec<String> = (0..flats.len()).map(|i| format!("F{i}")).collect();
        let leq: Vec<Vec<bool>> = flats
            .iter()
            .map(|a| flats.iter().map(|b| a.closure.is_subset(&b.closure)).collect())
            .collect();
        Poset::from_leq_matrix(labels, leq).unwrap()
    };
    let mu = poset.mobius_row(0);
    let mut poly = Poly::zero();
    for (i, flat) in flats.iter().enumerate() {
        let term = Poly::monomial(Q::from(mu[i].clone()), arr.dim - flat.codim);
        poly = poly.add(&term);
    }
    poly
}

/// Hyperplane coefficients reduced into `[0, p)`.
fn planes_mod(arr: &Arrangement, p: i64) -> Vec<(Vec<i64>, i64)> {
    let modulus = Z::from(p);
    let reduce = |c: &Z| -> i64 { c.mod_floor(&modulus).try_into().unwrap() };
    arr.hyperplanes
        .iter()
        .map(|h| (h.normal.iter().map(reduce).collect(), reduce(&h.offset)))
        .collect()
}

/// Point count in `F_p^d` avoiding every hyperplane.
fn points_off(arr: &Arrangement, p: u64) -> Z {
    let d = arr.dim;
    let pm = p as i64;
    let planes = planes_mod(arr, pm);
    let mut count = Z::zero();
    let mut point = vec![0i64; d];
    'outer: loop {
        let free = planes
            .iter()
            .all(|(n, b)| n.iter().zip(&point).map(|(a, x)| a * x).sum::<i64>() % pm != *b);
        if free {
            count += 1;
        }
        for slot in point.iter_mut() {
            *slot += 1;
            if *slot < pm {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    count
}

fn char_poly_finite_field(arr: &Arrangement, prime_floor: u64) -> Result<Poly, ArrError> {
    let d = arr.dim;
    // Primes above every coefficient magnitude keep residues faithful.
    let bound = arr
        .hyperplanes
        .iter()
        .map(|h| {
            let mut s = h.offset.abs();
            for c in &h.normal {
                s += c.abs();
            }
            s
        })
        .max()
        .unwrap_or_else(Z::zero);
    let floor: u64 = (&bound)
        .try_into()
        .map_err(|_| ArrError::BadSpec("coefficients too large for prime search".into()))?;
    let primes = primes_above(floor.max(prime_floor), d + 2);
    let values: Vec<(Q, Q)> = primes
        .iter()
        .map(|&p| (qi(p as i64), q_from_z(points_off(arr, p))))
        .collect();
    let poly = Poly::interpolate(&values[..d + 1]);
    let (check_q, check_v) = &values[d + 1];
    if poly.eval(check_q) != *check_v
        || !poly.is_integral()
        || poly.degree() != Some(d)
        || !poly.leading_coeff().is_one()
    {
        return Err(ArrError::PrimeInstability);
    }
    Ok(poly)
}

/// Integer Gaussian elimination on an augmented matrix; returns the rank
/// of the coefficient part and whether the system is consistent. None on
/// overflow.
fn gauss_i128(mut rows: Vec<Vec<i128>>, cols: usize) -> Option<(usize, bool)> {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let head = rows[rank][col];
        for r in rank + 1..rows.len() {
            if rows[r][col] == 0 {
                continue;
            }
            let factor = rows[r][col];
            for c in col..=cols {
                let a = rows[r][c].checked_mul(head)?;
                let b = rows[rank][c].checked_mul(factor)?;
                rows[r][c] = a.checked_sub(b)?;
            }
            let g = rows[r][col..].iter().fold(0i128, |g, &x| gcd_i128(g, x));
            if g > 1 {
                for c in col..=cols {
                    rows[r][c] /= g;
                }
            }
        }
        rank += 1;
    }
    let consistent = rows[rank..].iter().all(|r| r[cols] == 0);
    Some((rank, consistent))
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn char_poly_whitney(arr: &Arrangement) -> Result<Poly, ArrError> {
    let n = arr.len();
    if n > WHITNEY_LIMIT {
        return Err(ArrError::TooManyHyperplanes {
            limit: WHITNEY_LIMIT,
            got: n,
        });
    }
    let d = arr.dim;
    let rows_i128: Vec<Vec<i128>> = arr
        .hyperplanes
        .iter()
        .map(|h| {
            h.normal
                .iter()
                .map(|c| c.try_into().unwrap_or(i128::MAX))
                .chain([h.offset.clone().try_into().unwrap_or(i128::MAX)])
                .collect()
        })
        .collect();
    let mut coeffs = vec![Q::zero(); d + 1];
    for mask in 0u64..1 << n {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let picked: Vec<Vec<i128>> = subset.iter().map(|&i| rows_i128[i].clone()).collect();
        let (rank, consistent) = match gauss_i128(picked, d) {
            Some(result) => result,
            // Exact fallback for coefficient growth past i128.
            None => match system_rank(arr, &subset) {
                Some(r) => (r, true),
                None => (0, false),
            },
        };
        if !consistent {
            continue;
        }
        coeffs[d - rank] += Q::from(neg_one_pow(subset.len()));
    }
    Ok(Poly::new(coeffs))
}

/// Number of regions (connected components of the complement).
pub fn regions(arr: &Arrangement) -> Result<Z, ArrError> {
    let chi = char_poly(arr, CharBackend::IntersectionPoset)?;
    let value = chi.eval(&qi(-1)) * Q::from(neg_one_pow(arr.dim));
    Ok(value.to_integer())
}

/// Number of relatively bounded regions.
pub fn bounded_regions(arr: &Arrangement) -> Result<Z, ArrError> {
    let chi = char_poly(arr, CharBackend::IntersectionPoset)?;
    let value = chi.eval(&qi(1)) * Q::from(neg_one_pow(arr.rank()));
    Ok(value.to_integer())
}

/// Histogram polynomial of the scan of `F_q^d`: the coefficient of `t^k`
/// counts points lying on exactly k hyperplanes.
pub fn coboundary_histogram(arr: &Arrangement, q: u64) -> Poly {
    let d = arr.dim;
    let pm = q as i64;
    let planes = planes_mod(arr, pm);
    let mut histogram = vec![Z::zero(); arr.len() + 1];
    let mut point = vec![0i64; d];
    'outer: loop {
        let on = planes
            .iter()
            .filter(|(n, b)| n.iter().zip(&point).map(|(a, x)| a * x).sum::<i64>() % pm == *b)
            .count();
        histogram[on] += 1;
        for slot in point.iter_mut() {
            *slot += 1;
            if *slot < pm {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    Poly::new(histogram.into_iter().map(Q::from).collect())
}

/// cd-index of the region structure of a central arrangement: the
/// ab-index of the intersection lattice, left-padded with `a`, pushed
/// through the rewriting that sends each leading `ab` pair to `2d` and
/// every other letter to `c`.
pub fn arrangement_cd_index(arr: &Arrangement) -> Result<WordPoly, ArrError> {
    if !arr.is_central() {
        return Err(ArrError::NotCentral);
    }
    let poset = intersection_poset(arr);
    let phi = ab_index(&poset)
        .map_err(|_| ArrError::BadSpec("intersection poset is not graded".into()))?;
    let mut terms: Vec<(String, Z)> = Vec::new();
    for (word, coeff) in phi.terms() {
        let padded = format!("a{word}");
        let chars: Vec<char> = padded.chars().collect();
        let mut out = String::new();
        let mut factor = Z::one();
        let mut i = 0;
        while i < chars.len() {
            if chars[i] == 'a' && i + 1 < chars.len() && chars[i + 1] == 'b' {
                out.push('d');
                factor *= 2;
                i += 2;
            } else {
                out.push('c');
                i += 1;
            }
        }
        terms.push((out, coeff.clone() * factor));
    }
    Ok(WordPoly::new(terms))
}

// ---------------------------------------------------------------------
// Named families.

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedArrangement {
    /// x_i = 0.
    Coordinate(usize),
    /// x_i = x_j for i < j.
    Braid(usize),
    /// x_i - x_j = 0 and 1 for i < j.
    Shi(usize),
    /// Braid planes plus x_1 - x_j = 1, .., j-1 for each j.
    Ish(usize),
    /// x_i - x_j = -1, 0, 1 for i < j.
    Catalan(usize),
    /// x_i - x_j = 1 for i < j.
    Linial(usize),
    /// x_i + x_j = 0 for i < j.
    Threshold(usize),
    /// x_i = 0, x_i = x_j, x_i = -x_j.
    TypeB(usize),
    /// x_i = x_j and x_i = -x_j for i < j.
    TypeD(usize),
    /// Braid planes plus the total-sum plane x_1 + .. + x_n = 0.
    AugmentedBraid(usize),
    /// planes hyperplanes in dim variables on the moment curve: the i-th
    /// is sum of i^(j-1) x_j = i^dim, so every dim of them meet in one
    /// point and no dim + 1 share one.
    Generic { planes: usize, dim: usize },
}

fn difference_plane(n: usize, i: usize, j: usize, offset: i64) -> Hyperplane {
    let mut normal = vec![0i64; n];
    normal[i] = 1;
    normal[j] = -1;
    Hyperplane::from_ints(&normal, offset).unwrap()
}

pub fn build_named_arrangement(name: &NamedArrangement) -> Result<Arrangement, ArrError> {
    match name {
        NamedArrangement::Coordinate(n) => {
            let planes = (0..*n)
                .map(|i| {
                    let mut normal = vec![0i64; *n];
                    normal[i] = 1;
                    Hyperplane::from_ints(&normal, 0).unwrap()
                })
                .collect();
            Arrangement::new(*n, planes)
        }
        NamedArrangement::Braid(n) => {
            let mut planes = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    planes.push(difference_plane(*n, i, j, 0));
                }
            }
            Arrangement::new(*n, planes)
        }
        NamedArrangement::Shi(n) => {
            let mut planes = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    planes.push(difference_plane(*n, i, j, 0));
                    planes.push(difference_plane(*n, i, j, 1));
                }
            }
            Arrangement::new(*n, planes)
        }
        NamedArrangement::Ish(n) => {
            let mut planes = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    planes.push(difference_plane(*n, i, j, 0));
                }
            }
            for j in 1..*n {
                for a in 1..=j {
                    planes.push(difference_plane(*n, 0, j, a as i64));
                }
            }
            Arrangement::new(*n, planes)
        }
        NamedArrangement::Catalan(n) => {
            let mut planes = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    for offset in [-1, 0, 1] {
                        planes.push(difference_plane(*n, i, j, offset));
                    }
                }
            }
            Arrangement::new(*n, planes)
        }
        NamedArrangement::Linial(n) => {
            let mut planes = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    planes.push(difference_plane(*n, i, j, 1));
                }
            }
            Arrangement::new(*n, planes)
        }
        NamedArrangement::Threshold(n) => {
            let mut planes = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    let mut normal = vec![0i64; *n];
                    normal[i] = 1;
                    normal[j] = 1;
                    planes.push(Hyperplane::from_ints(&normal, 0).unwrap());
                }
            }
            Arrangement::new(*n, planes)
        }
        NamedArrangement::TypeB(n) => {
            let mut planes = Vec::new();
            for i in 0..*n {
                let mut normal = vec![0i64; *n];
                normal[i] = 1;
                planes.push(Hyperplane::from_ints(&normal, 0).unwrap());
            }
            for i in 0..*n {
                for j in i + 1..*n {
                    planes.push(difference_plane(*n, i, j, 0));
                    let mut normal = vec![0i64; *n];
                    normal[i] = 1;
                    normal[j] = 1;
                    planes.push(Hyperplane::from_ints(&normal, 0).unwrap());
                }
            }
            Arrangement::new(*n, planes)
        }
        NamedArrangement::TypeD(n) => {
            let mut planes = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    planes.push(difference_plane(*n, i, j, 0));
                    let mut normal = vec![0i64; *n];
                    normal[i] = 1;
                    normal[j] = 1;
                    planes.push(Hyperplane::from_ints(&normal, 0).unwrap());
                }
            }
            Arrangement::new(*n, planes)
        }
        NamedArrangement::AugmentedBraid(n) => {
            let mut planes = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    planes.push(difference_plane(*n, i, j, 0));
                }
            }
            planes.push(Hyperplane::from_ints(&vec![1i64; *n], 0).unwrap());
            Arrangement::new(*n, planes)
        }
        NamedArrangement::Generic { planes: m, dim: r } => {
            if *r == 0 {
                return Err(ArrError::BadSpec("generic family needs dim >= 1".into()));
            }
            let planes = (1..=*m as i64)
                .map(|i| {
                    let normal: Vec<i64> = (0..*r as u32).map(|j| i.pow(j)).collect();
                    Hyperplane::from_ints(&normal, i.pow(*r as u32)).unwrap()
                })
                .collect();
            Arrangement::new(*r, planes)
        }
    }
}

/// Arrangement of the difference planes of a simple undirected graph;
/// loops contribute nothing and parallel edges collapse.
pub fn graphical_arrangement(g: &Graph) -> Result<Arrangement, ArrError> {
    if g.is_directed() {
        return Err(ArrError::BadSpec("graphical arrangement needs an undirected graph".into()));
    }
    let n = g.vertex_count();
    let mut pairs = BTreeSet::new();
    for &(u, v, _) in g.edges() {
        if u != v {
            pairs.insert((u.min(v), u.max(v)));
        }
    }
    let planes = pairs
        .into_iter()
        .map(|(u, v)| difference_plane(n, u, v, 0))
        .collect();
    Arrangement::new(n, planes)
}
