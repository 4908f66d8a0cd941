//! Matroids on small ground sets with an exact rank table, Tutte
//! polynomials by three independent methods plus a finite-field route,
//! and the classical counting evaluations.
//!
//! A matroid is stored as its full rank table indexed by subset bitmask.
//! That caps the ground set at [`MATROID_LIMIT`] elements but makes every
//! construction (duals, minors, direct sums) a table transform and every
//! subset-indexed computation a direct lookup.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arrkit::{coboundary_histogram, Arrangement};
use crate::graphcount::Graph;
use crate::linalg::QMatrix;
use crate::poly::Poly;
use crate::util::{binomial, is_prime, neg_one_pow, primes_above, q_from_z, qi, Q, Z};

pub const MATROID_LIMIT: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("too many elements: limit {limit}, got {got}")]
    TooManyElements { limit: usize, got: usize },
    #[error("a matroid needs at least one basis")]
    NoBases,
    #[error("bases have unequal sizes")]
    UnequalBasisSizes,
    #[error("basis exchange fails between {0:?} and {1:?}")]
    ExchangeAxiomFails(Vec<usize>, Vec<usize>),
    #[error("element {0} is out of range")]
    BadElement(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("finite-field evaluations disagree with the interpolation")]
    PrimeInstability,
    #[error("arrangement must be linear (all offsets zero)")]
    NotThroughOrigin,
    #[error("bad matroid description: {0}")]
    BadSpec(String),
}

/// Matroid on elements `0..n` with a precomputed rank for every subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    labels: Vec<String>,
    rank_table: Vec<u8>,
}

fn check_size(n: usize) -> Result<(), MatroidError> {
    if n > MATROID_LIMIT {
        return Err(MatroidError::TooManyElements {
            limit: MATROID_LIMIT,
            got: n,
        });
    }
    Ok(())
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

impl Matroid {
    /// Build from an explicit rank oracle over bitmasks.
    fn from_rank_fn(n: usize, mut rank: impl FnMut(u64) -> usize) -> Result<Self, MatroidError> {
        check_size(n)?;
        let table: Vec<u8> = (0..1u64 << n).map(|mask| rank(mask) as u8).collect();
        Ok(Matroid {
            labels: default_labels(n),
            rank_table: table,
        })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relabel<S: AsRef<str>>(mut self, labels: &[S]) -> Result<Self, MatroidError> {
        if labels.len() != self.size() {
            return Err(MatroidError::DimensionMismatch {
                expected: self.size(),
                got: labels.len(),
            });
        }
        self.labels = labels.iter().map(|s| s.as_ref().to_string()).collect();
        Ok(self)
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.size()) - 1
    }

    pub fn rank_mask(&self, mask: u64) -> usize {
        self.rank_table[(mask & self.full_mask()) as usize] as usize
    }

    pub fn rank(&self) -> usize {
        self.rank_mask(self.full_mask())
    }

    pub fn mask_of(&self, set: &[usize]) -> Result<u64, MatroidError> {
        let mut mask = 0u64;
        for &e in set {
            if e >= self.size() {
                return Err(MatroidError::BadElement(e));
            }
            mask |= 1 << e;
        }
        Ok(mask)
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        self.rank_mask(mask) == mask.count_ones() as usize
    }

    pub fn is_basis(&self, mask: u64) -> bool {
        mask.count_ones() as usize == self.rank() && self.is_independent(mask)
    }

    /// All bases as bitmasks, ascending.
    pub fn bases(&self) -> Vec<u64> {
        (0..=self.full_mask()).filter(|&m| self.is_basis(m)).collect()
    }

    pub fn independent_set_count(&self) -> Z {
        let n = (0..=self.full_mask()).filter(|&m| self.is_independent(m)).count();
        Z::from(n)
    }

    /// Minimal dependent sets, ascending by mask.
    pub fn circuits(&self) -> Vec<u64> {
        (1..=self.full_mask())
            .filter(|&mask| {
                if self.is_independent(mask) {
                    return false;
                }
                (0..self.size())
                    .filter(|&e| mask >> e & 1 == 1)
                    .all(|e| self.is_independent(mask & !(1 << e)))
            })
            .collect()
    }

    /// Smallest superset with the same rank.
    pub fn closure(&self, mask: u64) -> u64 {
        let r = self.rank_mask(mask);
        let mut out = mask & self.full_mask();
        for e in 0..self.size() {
            if self.rank_mask(mask | 1 << e) == r {
                out |= 1 << e;
            }
        }
        out
    }

    /// Closed sets, ascending by mask.
    pub fn flats(&self) -> Vec<u64> {
        (0..=self.full_mask())
            .filter(|&mask| self.closure(mask) == mask)
            .collect()
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.size()).filter(|&e| self.rank_mask(1 << e) == 0).collect()
    }

    pub fn coloops(&self) -> Vec<usize> {
        let r = self.rank();
        (0..self.size())
            .filter(|&e| self.rank_mask(self.full_mask() & !(1 << e)) == r - 1)
            .collect()
    }

    /// Partition of the ground set into connected components: two
    /// elements are linked when some circuit contains both. Coloops and
    /// loops are singleton components.
    pub fn components(&self) -> Vec<u64> {
        let n = self.size();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for circuit in self.circuits() {
            let members: Vec<usize> = (0..n).filter(|&e| circuit >> e & 1 == 1).collect();
            for pair in members.windows(2) {
                let a = find(&mut parent, pair[0]);
                let b = find(&mut parent, pair[1]);
                parent[a] = b;
            }
        }
        let mut groups: HashMap<usize, u64> = HashMap::new();
        for e in 0..n {
            let root = find(&mut parent, e);
            *groups.entry(root).or_insert(0) |= 1 << e;
        }
        let mut out: Vec<u64> = groups.into_values().collect();
        out.sort_by_key(|m| m.trailing_zeros());
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn dual(&self) -> Matroid {
        let full = self.full_mask();
        let r = self.rank();
        let table: Vec<u8> = (0..=full)
            .map(|mask| {
                let co = self.rank_mask(full & !mask);
                (mask.count_ones() as usize + co - r) as u8
            })
            .collect();
        Matroid {
            labels: self.labels.clone(),
            rank_table: table,
        }
    }

    pub fn delete(&self, e: usize) -> Result<Matroid, MatroidError> {
        if e >= self.size() {
            return Err(MatroidError::BadElement(e));
        }
        let table = self.minor_table(e, |this, expanded| this.rank_mask(expanded));
        let mut labels = self.labels.clone();
        labels.remove(e);
        Ok(Matroid {
            labels,
            rank_table: table,
        })
    }

    pub fn contract(&self, e: usize) -> Result<Matroid, MatroidError> {
        if e >= self.size() {
            return Err(MatroidError::BadElement(e));
        }
        let base = self.rank_mask(1 << e);
        let table = self.minor_table(e, |this, expanded| {
            this.rank_mask(expanded | 1 << e) - base
        });
        let mut labels = self.labels.clone();
        labels.remove(e);
        Ok(Matroid {
            labels,
            rank_table: table,
        })
    }

    /// Rank table on the ground set with `e` removed; `rank` receives the
    /// subset re-expanded into original element positions.
    fn minor_table(&self, e: usize, rank: impl Fn(&Matroid, u64) -> usize) -> Vec<u8> {
        let n = self.size() - 1;
        (0..1u64 << n)
            .map(|mask| {
                let low = mask & ((1 << e) - 1);
                let high = (mask >> e) << (e + 1);
                rank(self, low | high) as u8
            })
            .collect()
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        let n = self.size() + other.size();
        check_size(n)?;
        let split = self.size();
        let table: Vec<u8> = (0..1u64 << n)
            .map(|mask| {
                let left = mask & self.full_mask();
                let right = mask >> split;
                (self.rank_mask(left) + other.rank_mask(right)) as u8
            })
            .collect();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Ok(Matroid {
            labels,
            rank_table: table,
        })
    }

    // -----------------------------------------------------------------
    // Constructors.

    pub fn uniform(k: usize, n: usize) -> Result<Matroid, MatroidError> {
        if k > n {
            return Err(MatroidError::BadSpec(format!(
                "uniform rank {k} exceeds ground set size {n}"
            )));
        }
        Matroid::from_rank_fn(n, |mask| (mask.count_ones() as usize).min(k))
    }

    /// From an explicit list of bases; validates the exchange axiom.
    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Matroid, MatroidError> {
        check_size(n)?;
        if bases.is_empty() {
            return Err(MatroidError::NoBases);
        }
        let size = bases[0].len();
        let mut masks = HashSet::new();
        for basis in bases {
            if basis.len() != size {
                return Err(MatroidError::UnequalBasisSizes);
            }
            let mut mask = 0u64;
            for &e in basis {
                if e >= n {
                    return Err(MatroidError::BadElement(e));
                }
                mask |= 1 << e;
            }
            if mask.count_ones() as usize != size {
                return Err(MatroidError::BadSpec("repeated element in a basis".into()));
            }
            masks.insert(mask);
        }
        for &b1 in &masks {
            for &b2 in &masks {
                let only_b1 = b1 & !b2;
                for x in 0..n {
                    if only_b1 >> x & 1 == 0 {
                        continue;
                    }
                    let found = (0..n).any(|y| {
                        b2 >> y & 1 == 1
                            && b1 >> y & 1 == 0
                            && masks.contains(&(b1 & !(1 << x) | 1 << y))
                    });
                    if !found {
                        let to_set = |m: u64| (0..n).filter(|&e| m >> e & 1 == 1).collect();
                        return Err(MatroidError::ExchangeAxiomFails(to_set(b1), to_set(b2)));
                    }
                }
            }
        }
        // Rank of S is the largest overlap with a basis.
        Matroid::from_rank_fn(n, |mask| {
            masks
                .iter()
                .map(|&b| (b & mask).count_ones() as usize)
                .max()
                .unwrap()
        })
    }

    /// Column matroid of rational vectors.
    pub fn from_columns_q(columns: &[Vec<Q>]) -> Result<Matroid, MatroidError> {
        let n = columns.len();
        check_size(n)?;
        let dim = columns.first().map_or(0, Vec::len);
        for c in columns {
            if c.len() != dim {
                return Err(MatroidError::DimensionMismatch {
                    expected: dim,
                    got: c.len(),
                });
            }
        }
        Matroid::from_rank_fn(n, |mask| {
            let rows: Vec<Vec<Q>> = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| columns[i].clone())
                .collect();
            if rows.is_empty() {
                0
            } else {
                QMatrix::from_rows(rows).rank()
            }
        })
    }

    /// Column matroid of vectors over the prime field F_p.
    pub fn from_columns_fp(p: u64, columns: &[Vec<u64>]) -> Result<Matroid, MatroidError> {
        if !is_prime(p) {
            return Err(MatroidError::NotPrime(p));
        }
        let n = columns.len();
        check_size(n)?;
        let dim = columns.first().map_or(0, Vec::len);
        for c in columns {
            if c.len() != dim {
                return Err(MatroidError::DimensionMismatch {
                    expected: dim,
                    got: c.len(),
                });
            }
        }
        Matroid::from_rank_fn(n, |mask| {
            let rows: Vec<Vec<u64>> = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| columns[i].iter().map(|&x| x % p).collect())
                .collect();
            rank_mod_p(rows, dim, p)
        })
    }

    /// Cycle matroid of a graph: elements are edges in `edges()` order,
    /// expanded by multiplicity; loops become matroid loops.
    pub fn from_graph(g: &Graph) -> Result<Matroid, MatroidError> {
        let mut ends: Vec<(usize, usize)> = Vec::new();
        for &(u, v, mult) in g.edges() {
            for _ in 0..mult {
                ends.push((u, v));
            }
        }
        let n = ends.len();
        check_size(n)?;
        let vertices = g.vertex_count();
        Matroid::from_rank_fn(n, |mask| {
            let mut parent: Vec<usize> = (0..vertices).collect();
            fn find(parent: &mut Vec<usize>, x: usize) -> usize {
                if parent[x] != x {
                    let root = find(parent, parent[x]);
                    parent[x] = root;
                }
                parent[x]
            }
            let mut rank = 0;
            for (i, &(u, v)) in ends.iter().enumerate() {
                if mask >> i & 1 == 0 {
                    continue;
                }
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    rank += 1;
                }
            }
            rank
        })
    }

    /// Column matroid of an arrangement's normal vectors.
    pub fn from_arrangement(arr: &Arrangement) -> Result<Matroid, MatroidError> {
        let columns: Vec<Vec<Q>> = arr
            .hyperplanes()
            .iter()
            .map(|h| h.normal().iter().map(|c| q_from_z(c.clone())).collect())
            .collect();
        Matroid::from_columns_q(&columns)
    }
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col], p);
        for c in col..cols {
            rows[rank][c] = rows[rank][c] * inv % p;
        }
        for r in rank + 1..rows.len() {
            let factor = rows[r][col] % p;
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                rows[r][c] = (rows[r][c] + (p - factor) * rows[rank][c]) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------
// Bivariate integer polynomials.

/// Bivariate polynomial with integer coefficients, used for Tutte and
/// coboundary polynomials. Keys are `(x_degree, y_degree)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TuttePoly {
    terms: std::collections::BTreeMap<(usize, usize), Z>,
}

impl TuttePoly {
    pub fn zero() -> Self {
        TuttePoly::default()
    }

    pub fn one() -> Self {
        TuttePoly::monomial(0, 0, Z::one())
    }

    pub fn monomial(i: usize, j: usize, coeff: Z) -> Self {
        let mut terms = std::collections::BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((i, j), coeff);
        }
        TuttePoly { terms }
    }

    pub fn from_ints(entries: &[(usize, usize, i64)]) -> Self {
        let mut out = TuttePoly::zero();
        for &(i, j, c) in entries {
            out.add_term(i, j, Z::from(c));
        }
        out
    }

    fn add_term(&mut self, i: usize, j: usize, coeff: Z) {
        let entry = self.terms.entry((i, j)).or_insert_with(Z::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> &std::collections::BTreeMap<(usize, usize), Z> {
        &self.terms
    }

    pub fn coeff(&self, i: usize, j: usize) -> Z {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Z::zero)
    }

    pub fn add(&self, other: &TuttePoly) -> TuttePoly {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &TuttePoly) -> TuttePoly {
        let mut out = TuttePoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, x: &Q, y: &Q) -> Q {
        let mut total = Q::zero();
        for (&(i, j), c) in &self.terms {
            let mut term = Q::from(c.clone());
            for _ in 0..i {
                term *= x;
            }
            for _ in 0..j {
                term *= y;
            }
            total += term;
        }
        total
    }

    /// Swap the two variables.
    pub fn swap_vars(&self) -> TuttePoly {
        let mut out = TuttePoly::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(j, i, c.clone());
        }
        out
    }

    /// Substitute y = 0 and then x = `inner`, as a univariate polynomial.
    pub fn eval_y0(&self, inner: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                out = out.add(&inner.pow(i).scale(&Q::from(c.clone())));
            }
        }
        out
    }
}

impl fmt::Display for TuttePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<(usize, usize)> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.cmp(a));
        let mut first = true;
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
                match i {
                    0 => {}
                    1 => write!(f, "x")?,
                    _ => write!(f, "x^{i}")?,
                }
                match j {
                    0 => {}
                    1 => write!(f, "y")?,
                    _ => write!(f, "y^{j}")?,
                }
                Ok(())
            };
            if i == 0 && j == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                vars(f)?;
            } else {
                write!(f, "{mag}")?;
                vars(f)?;
            }
        }
        Ok(())
    }
}

/// `(v - 1)^k` expanded in the variable picked by `on_x`.
fn shift_power(k: usize, on_x: bool) -> TuttePoly {
    let mut out = TuttePoly::zero();
    for t in 0..=k {
        let coeff = binomial(k, t) * neg_one_pow(k - t);
        if on_x {
            out.add_term(t, 0, coeff);
        } else {
            out.add_term(0, t, coeff);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TutteBackend {
    /// Corank-nullity sum over all subsets.
    SubsetSum,
    /// Recursive deletion and contraction with memoization.
    DeletionContraction,
    /// Internal and external activities over the bases.
    Activities,
}

pub fn tutte(m: &Matroid, backend: TutteBackend) -> TuttePoly {
    match backend {
        TutteBackend::SubsetSum => tutte_subset_sum(m),
        TutteBackend::DeletionContraction => {
            let mut memo = HashMap::new();
            tutte_del_con(m, m.full_mask(), 0, &mut memo)
        }
        TutteBackend::Activities => tutte_activities(m),
    }
}

fn tutte_subset_sum(m: &Matroid) -> TuttePoly {
    let r = m.rank();
    // counts[corank][nullity]
    let mut counts: HashMap<(usize, usize), Z> = HashMap::new();
    for mask in 0..=m.full_mask() {
        let ra = m.rank_mask(mask);
        let key = (r - ra, mask.count_ones() as usize - ra);
        *counts.entry(key).or_insert_with(Z::zero) += 1;
    }
    let mut total = TuttePoly::zero();
    for ((c, n), count) in counts {
        let term = shift_power(c, true).mul(&shift_power(n, false));
        for (&(i, j), coeff) in term.terms() {
            total.add_term(i, j, coeff * &count);
        }
    }
    total
}

fn tutte_del_con(
    m: &Matroid,
    remaining: u64,
    contracted: u64,
    memo: &mut HashMap<(u64, u64), TuttePoly>,
) -> TuttePoly {
    if let Some(hit) = memo.get(&(remaining, contracted)) {
        return hit.clone();
    }
    let base = m.rank_mask(contracted);
    let minor_rank = m.rank_mask(remaining | contracted) - base;
    // Peel every current loop and coloop in one pass.
    let mut loops = 0usize;
    let mut coloops_mask = 0u64;
    let mut rest = remaining;
    for e in 0..m.size() {
        if remaining >> e & 1 == 0 {
            continue;
        }
        if m.rank_mask(contracted | 1 << e) == base {
            loops += 1;
            rest &= !(1 << e);
        } else if m.rank_mask((remaining & !(1 << e)) | contracted) - base == minor_rank - 1 {
            coloops_mask |= 1 << e;
            rest &= !(1 << e);
        }
    }
    let peel = TuttePoly::monomial(coloops_mask.count_ones() as usize, loops, Z::one());
    let result = if rest == 0 {
        peel
    } else {
        let e = rest.trailing_zeros() as usize;
        let without = rest & !(1 << e);
        let deleted = tutte_del_con(m, without, contracted | coloops_mask, memo);
        let contracted_poly = tutte_del_con(m, without, contracted | coloops_mask | 1 << e, memo);
        peel.mul(&deleted.add(&contracted_poly))
    };
    memo.insert((remaining, contracted), result.clone());
    result
}

fn tutte_activities(m: &Matroid) -> TuttePoly {
    let bases: HashSet<u64> = m.bases().into_iter().collect();
    let n = m.size();
    let mut total = TuttePoly::zero();
    for &basis in &bases {
        let mut internal = 0usize;
        let mut external = 0usize;
        for e in 0..n {
            if basis >> e & 1 == 1 {
                // Internally active: no smaller outside element replaces e.
                let active = (0..e).all(|f| {
                    basis >> f & 1 == 1 || !bases.contains(&(basis & !(1 << e) | 1 << f))
                });
                if active {
                    internal += 1;
                }
            } else {
                // Externally active: no smaller basis element is replaced by e.
                let active = (0..e).all(|f| {
                    basis >> f & 1 == 0 || !bases.contains(&(basis & !(1 << f) | 1 << e))
                });
                if active {
                    external += 1;
                }
            }
        }
        total.add_term(internal, external, Z::one());
    }
    total
}

/// Coboundary polynomial: the sum over subsets of
/// `X^(r - rank(A)) (Y - 1)^|A|`, computed exactly from the rank table.
pub fn coboundary_poly(m: &Matroid) -> TuttePoly {
    let r = m.rank();
    let mut counts: HashMap<(usize, usize), Z> = HashMap::new();
    for mask in 0..=m.full_mask() {
        let key = (r - m.rank_mask(mask), mask.count_ones() as usize);
        *counts.entry(key).or_insert_with(Z::zero) += 1;
    }
    let mut total = TuttePoly::zero();
    for ((i, size), count) in counts {
        let term = shift_power(size, false);
        for (&(_, j), coeff) in term.terms() {
            total.add_term(i, j, coeff * &count);
        }
    }
    total
}

/// Tutte polynomial of the normal-vector matroid of a linear arrangement,
/// computed from point-count histograms over several prime fields. The
/// histogram over F_q, divided by `q^(dim - rank)`, is the coboundary
/// polynomial evaluated at X = q; interpolating across `rank + 1` primes
/// recovers it, one spare prime cross-checks, and a change of basis turns
/// it into the Tutte polynomial.
pub fn tutte_via_finite_fields(arr: &Arrangement) -> Result<TuttePoly, MatroidError> {
    tutte_ff_above(arr, 0)
}

/// Finite-field Tutte with every sampled prime strictly greater than
/// `prime_floor`, for callers that want larger fields than the default
/// coefficient bound demands.
pub fn tutte_ff_above(arr: &Arrangement, prime_floor: u64) -> Result<TuttePoly, MatroidError> {
    if arr.hyperplanes().iter().any(|h| !h.offset().is_zero()) {
        return Err(MatroidError::NotThroughOrigin);
    }
    let n = arr.len();
    let d = arr.dim();
    let r = arr.rank();
    let bound = arr
        .hyperplanes()
        .iter()
        .map(|h| h.normal().iter().map(|c| c.abs()).sum::<Z>())
        .max()
        .unwrap_or_else(Z::zero);
    let floor: u64 = (&bound)
        .try_into()
        .map_err(|_| MatroidError::BadSpec("coefficients too large for prime search".into()))?;
    let primes = primes_above(floor.max(prime_floor), r + 2);
    // Histogram coefficients, scaled down by q^(d - r).
    let mut scaled: Vec<Vec<Q>> = Vec::new();
    for &p in &primes {
        let histogram = coboundary_histogram(arr, p);
        let mut denominator = Q::one();
        for _ in 0..d - r {
            denominator *= qi(p as i64);
        }
        scaled.push((0..=n).map(|j| histogram.coeff(j) / &denominator).collect());
    }
    // Interpolate each Y-coefficient as a polynomial in X of degree <= r.
    let mut c_tilde: Vec<Vec<Z>> = Vec::new(); // c_tilde[j][i]: X^i Y^j
    for j in 0..=n {
        let points: Vec<(Q, Q)> = primes[..r + 1]
            .iter()
            .enumerate()
            .map(|(idx, &p)| (qi(p as i64), scaled[idx][j].clone()))
            .collect();
        let poly = Poly::interpolate(&points);
        let check = qi(primes[r + 1] as i64);
        if poly.eval(&check) != scaled[r + 1][j] || !poly.is_integral() {
            return Err(MatroidError::PrimeInstability);
        }
        if poly.degree().unwrap_or(0) > r {
            return Err(MatroidError::PrimeInstability);
        }
        c_tilde.push((0..=r).map(|i| poly.coeff(i).to_integer()).collect());
    }
    // Rebase Y^j onto (Y-1)^k, then (X, Y-1) onto (x-1, y-1).
    let mut total = TuttePoly::zero();
    for i in 0..=r {
        for k in 0..=n {
            let mut beta = Z::zero();
            for (j, row) in c_tilde.iter().enumerate().skip(k) {
                beta += binomial(j, k) * &row[i];
            }
            if beta.is_zero() {
                continue;
            }
            if beta.is_negative() || i + k < r {
                return Err(MatroidError::PrimeInstability);
            }
            let term = shift_power(i, true).mul(&shift_power(i + k - r, false));
            for (&(a, b), coeff) in term.terms() {
                total.add_term(a, b, coeff * &beta);
            }
        }
    }
    Ok(total)
}

// ---------------------------------------------------------------------
// Evaluations.

pub fn basis_count(m: &Matroid) -> Z {
    tutte(m, TutteBackend::SubsetSum).eval(&qi(1), &qi(1)).to_integer()
}

pub fn spanning_set_count(m: &Matroid) -> Z {
    tutte(m, TutteBackend::SubsetSum).eval(&qi(1), &qi(2)).to_integer()
}

pub fn beta_invariant(m: &Matroid) -> Z {
    tutte(m, TutteBackend::SubsetSum).coeff(1, 0)
}

/// Characteristic polynomial of the matroid in q.
pub fn matroid_char_poly(m: &Matroid) -> Poly {
    let t = tutte(m, TutteBackend::SubsetSum);
    let one_minus_q = Poly::from_ints(&[1, -1]);
    t.eval_y0(&one_minus_q).scale(&Q::from(neg_one_pow(m.rank())))
}

/// All-terminal reliability: the probability that the elements that stay,
/// each kept independently with probability p, span the matroid.
pub fn reliability_poly(m: &Matroid) -> Poly {
    let n = m.size();
    let r = m.rank();
    let mut spanning_by_size = vec![Z::zero(); n + 1];
    for mask in 0..=m.full_mask() {
        if m.rank_mask(mask) == r {
            spanning_by_size[mask.count_ones() as usize] += 1;
        }
    }
    let p = Poly::x();
    let one_minus_p = Poly::from_ints(&[1, -1]);
    let mut out = Poly::zero();
    for (k, count) in spanning_by_size.iter().enumerate() {
        if count.is_zero() {
            continue;
        }
        let term = p.pow(k).mul(&one_minus_p.pow(n - k)).scale(&Q::from(count.clone()));
        out = out.add(&term);
    }
    out
}

/// Number of connected components of a graph, isolated vertices included.
fn graph_components(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for &(u, v, _) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
        }
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

/// Chromatic polynomial of a graph via its cycle matroid.
pub fn graph_chromatic_poly(g: &Graph) -> Result<Poly, MatroidError> {
    let m = Matroid::from_graph(g)?;
    let chi = matroid_char_poly(&m);
    Ok(chi.mul(&Poly::monomial(Q::one(), graph_components(g))))
}

/// Flow polynomial of a graph in t.
pub fn graph_flow_poly(g: &Graph) -> Result<Poly, MatroidError> {
    let m = Matroid::from_graph(g)?;
    let t = tutte(&m, TutteBackend::SubsetSum);
    let nullity = m.size() - m.rank();
    // T(0, 1 - t) with the sign (-1)^nullity.
    let one_minus_t = Poly::from_ints(&[1, -1]);
    let mut out = Poly::zero();
    for (&(i, j), c) in t.terms() {
        if i == 0 {
            out = out.add(&one_minus_t.pow(j).scale(&Q::from(c.clone())));
        }
    }
    Ok(out.scale(&Q::from(neg_one_pow(nullity))))
}

pub fn acyclic_orientation_count(g: &Graph) -> Result<Z, MatroidError> {
    let m = Matroid::from_graph(g)?;
    Ok(tutte(&m, TutteBackend::SubsetSum).eval(&qi(2), &qi(0)).to_integer())
}

pub fn totally_cyclic_orientation_count(g: &Graph) -> Result<Z, MatroidError> {
    let m = Matroid::from_graph(g)?;
    Ok(tutte(&m, TutteBackend::SubsetSum).eval(&qi(0), &qi(2)).to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrkit::{build_named_arrangement, NamedArrangement};
    use crate::bruteforce::{
        acyclic_orientations_brute, nowhere_zero_flows_brute, proper_colorings_brute,
    };
    use crate::graphcount::{build_named_graph, spanning_tree_count, NamedGraph};
    use crate::util::{qr, zi};

    fn named_graph(g: NamedGraph) -> Graph {
        build_named_graph(&g).unwrap()
    }

    fn u24() -> Matroid {
        Matroid::uniform(2, 4).unwrap()
    }

    fn k4_matroid() -> Matroid {
        Matroid::from_graph(&named_graph(NamedGraph::Complete(4))).unwrap()
    }

    fn fano() -> Matroid {
        let columns: Vec<Vec<u64>> = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![1, 1, 1],
        ];
        Matroid::from_columns_fp(2, &columns).unwrap()
    }

    const ALL_BACKENDS: [TutteBackend; 3] = [
        TutteBackend::SubsetSum,
        TutteBackend::DeletionContraction,
        TutteBackend::Activities,
    ];

    #[test]
    fn uniform_basics() {
        let m = u24();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.bases().len(), 6);
        assert_eq!(m.independent_set_count(), zi(11));
        assert_eq!(m.circuits().len(), 4);
        assert!(Matroid::uniform(5, 4).is_err());
        assert_eq!(
            Matroid::uniform(1, 17).unwrap_err(),
            MatroidError::TooManyElements { limit: 16, got: 17 }
        );
    }

    #[test]
    fn golden_tutte_values() {
        assert_eq!(
            tutte(&u24(), TutteBackend::SubsetSum),
            TuttePoly::from_ints(&[(2, 0, 1), (1, 0, 2), (0, 1, 2), (0, 2, 1)])
        );
        let k3 = Matroid::from_graph(&named_graph(NamedGraph::Complete(3))).unwrap();
        assert_eq!(
            tutte(&k3, TutteBackend::SubsetSum),
            TuttePoly::from_ints(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)])
        );
        // One loop plus one coloop multiplies out to xy.
        let loop_coloop = Matroid::uniform(0, 1)
            .unwrap()
            .direct_sum(&Matroid::uniform(1, 1).unwrap())
            .unwrap();
        assert_eq!(
            tutte(&loop_coloop, TutteBackend::DeletionContraction),
            TuttePoly::from_ints(&[(1, 1, 1)])
        );
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(
            tutte(&u12, TutteBackend::SubsetSum),
            TuttePoly::from_ints(&[(1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(beta_invariant(&u12), zi(1));
    }

    #[test]
    fn tutte_display_reads_naturally() {
        let t = tutte(&u24(), TutteBackend::SubsetSum);
        assert_eq!(t.to_string(), "x^2 + 2x + y^2 + 2y");
        assert_eq!(TuttePoly::zero().to_string(), "0");
        assert_eq!(TuttePoly::from_ints(&[(1, 1, 1), (0, 0, -3)]).to_string(), "xy - 3");
    }

    #[test]
    fn backends_agree() {
        let cases = vec![
            u24(),
            k4_matroid(),
            fano(),
            fano().dual(),
            Matroid::from_graph(&named_graph(NamedGraph::Wheel(4))).unwrap(),
            Matroid::uniform(0, 3).unwrap(),
            u24().direct_sum(&Matroid::uniform(1, 2).unwrap()).unwrap(),
        ];
        for m in &cases {
            let reference = tutte(m, TutteBackend::SubsetSum);
            for backend in ALL_BACKENDS {
                assert_eq!(tutte(m, backend), reference);
            }
        }
    }

    #[test]
    fn fano_and_wheel_counts() {
        let f = fano();
        assert_eq!(f.rank(), 3);
        assert_eq!(basis_count(&f), zi(28));
        // Circuits: 7 lines of size 3 and their 7 complements of size 4.
        let circuits = f.circuits();
        assert_eq!(circuits.len(), 14);
        assert_eq!(circuits.iter().filter(|c| c.count_ones() == 3).count(), 7);
        assert_eq!(
            matroid_char_poly(&f),
            Poly::from_ints(&[-8, 14, -7, 1])
        );
        let w4 = named_graph(NamedGraph::Wheel(4));
        let m = Matroid::from_graph(&w4).unwrap();
        assert_eq!(basis_count(&m), zi(45));
        assert_eq!(Q::from(spanning_tree_count(&w4).unwrap()), qi(45));
        assert_eq!(basis_count(&k4_matroid()), zi(16));
    }

    #[test]
    fn duality_laws() {
        let m = u24();
        assert_eq!(m.dual(), m); // U_{2,4} is self-dual.
        for m in [k4_matroid(), fano()] {
            assert_eq!(m.dual().dual(), m);
            let t = tutte(&m, TutteBackend::SubsetSum);
            let t_dual = tutte(&m.dual(), TutteBackend::SubsetSum);
            assert_eq!(t_dual, t.swap_vars());
            // Contracting then dualizing equals dualizing then deleting.
            assert_eq!(m.contract(0).unwrap().dual(), m.dual().delete(0).unwrap());
        }
        let loop_coloop = Matroid::uniform(0, 1)
            .unwrap()
            .direct_sum(&Matroid::uniform(1, 1).unwrap())
            .unwrap();
        assert_eq!(loop_coloop.loops(), vec![0]);
        assert_eq!(loop_coloop.coloops(), vec![1]);
        assert_eq!(loop_coloop.dual().loops(), vec![1]);
        assert_eq!(loop_coloop.dual().coloops(), vec![0]);
    }

    #[test]
    fn direct_sum_multiplies_tutte() {
        let a = u24();
        let b = k4_matroid();
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(sum.size(), 10);
        let product = tutte(&a, TutteBackend::SubsetSum).mul(&tutte(&b, TutteBackend::SubsetSum));
        assert_eq!(tutte(&sum, TutteBackend::SubsetSum), product);
        assert_eq!(sum.components().len(), 2);
        assert!(!sum.is_connected());
        assert!(b.is_connected());
    }

    #[test]
    fn bases_constructor_validates_exchange() {
        let golden = Matroid::from_bases(4, &[vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
            .unwrap()
            .relabel(&["t", "u", "v", "w"])
            .unwrap();
        assert_eq!(golden.circuits(), vec![0b0111]);
        assert_eq!(golden.rank(), 3);
        let bad = Matroid::from_bases(4, &[vec![0, 1], vec![2, 3]]);
        assert!(matches!(bad, Err(MatroidError::ExchangeAxiomFails(_, _))));
        assert_eq!(
            Matroid::from_bases(2, &[]).unwrap_err(),
            MatroidError::NoBases
        );
        assert_eq!(
            Matroid::from_bases(2, &[vec![0], vec![0, 1]]).unwrap_err(),
            MatroidError::UnequalBasisSizes
        );
        assert_eq!(
            Matroid::from_bases(2, &[vec![5]]).unwrap_err(),
            MatroidError::BadElement(5)
        );
    }

    #[test]
    fn column_and_graph_backends_match() {
        // Braid normals on three coordinates are the K_3 cycle matroid.
        let braid = build_named_arrangement(&NamedArrangement::Braid(3)).unwrap();
        let from_cols = Matroid::from_arrangement(&braid).unwrap();
        let from_graph = Matroid::from_graph(&named_graph(NamedGraph::Complete(3))).unwrap();
        assert_eq!(from_cols.rank_table, from_graph.rank_table);
        // The same vectors mod 5 give the same matroid.
        let cols_fp: Vec<Vec<u64>> = vec![vec![1, 4, 0], vec![1, 0, 4], vec![0, 1, 4]];
        let fp = Matroid::from_columns_fp(5, &cols_fp).unwrap();
        assert_eq!(fp.rank_table, from_graph.rank_table);
        assert_eq!(
            Matroid::from_columns_fp(4, &cols_fp).unwrap_err(),
            MatroidError::NotPrime(4)
        );
        let vectors = Matroid::from_arrangement(
            &build_named_arrangement(&NamedArrangement::AugmentedBraid(3)).unwrap(),
        )
        .unwrap();
        assert_eq!(vectors.circuits(), vec![0b0111]);
        assert_eq!(vectors.bases(), vec![0b1011, 0b1101, 0b1110]);
    }

    #[test]
    fn flats_and_closure() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.flats(), vec![0b000, 0b001, 0b010, 0b100, 0b111]);
        assert_eq!(u23.closure(0b011), 0b111);
        let k3 = Matroid::from_graph(&named_graph(NamedGraph::Complete(3))).unwrap();
        assert_eq!(k3.circuits(), vec![0b111]);
    }

    #[test]
    fn graph_matroid_handles_loops_and_multiedges() {
        let mut g = Graph::numeric(false, 2);
        g.add_edge_idx(0, 0, 1); // loop
        g.add_edge_idx(0, 1, 2); // double edge
        let m = Matroid::from_graph(&g).unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(m.loops(), vec![0]);
        assert_eq!(m.rank(), 1);
        // y times (x + y): the loop peels off, the doubled edge is U_{1,2}.
        assert_eq!(
            tutte(&m, TutteBackend::DeletionContraction),
            TuttePoly::from_ints(&[(1, 1, 1), (0, 2, 1)])
        );
    }

    #[test]
    fn graphic_evaluations_match_brute_force() {
        let c4 = named_graph(NamedGraph::Cycle(4));
        let chromatic = graph_chromatic_poly(&c4).unwrap();
        for q in 1..=4 {
            assert_eq!(
                chromatic.eval(&qi(q)),
                Q::from(proper_colorings_brute(&c4, q as u64))
            );
        }
        assert_eq!(
            acyclic_orientation_count(&c4).unwrap(),
            acyclic_orientations_brute(&c4)
        );
        assert_eq!(totally_cyclic_orientation_count(&c4).unwrap(), zi(2));
        let flow = graph_flow_poly(&c4).unwrap();
        for t in 2..=4 {
            assert_eq!(
                flow.eval(&qi(t)),
                Q::from(nowhere_zero_flows_brute(&c4, t as u64))
            );
        }
        let k4 = named_graph(NamedGraph::Complete(4));
        assert_eq!(
            acyclic_orientation_count(&k4).unwrap(),
            acyclic_orientations_brute(&k4)
        );
        // T(2,2) always totals the subsets.
        let m = Matroid::from_graph(&k4).unwrap();
        assert_eq!(
            tutte(&m, TutteBackend::SubsetSum).eval(&qi(2), &qi(2)),
            qi(64)
        );
        assert_eq!(spanning_set_count(&u24()), zi(11));
    }

    #[test]
    fn reliability() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(reliability_poly(&u12), Poly::from_ints(&[0, 2, -1]));
        // Consistency with the Tutte specialization at a sample point.
        let k3 = Matroid::from_graph(&named_graph(NamedGraph::Complete(3))).unwrap();
        let p = qr(1, 3);
        let poly_value = reliability_poly(&k3).eval(&p);
        let q = Q::one() - &p;
        let t = tutte(&k3, TutteBackend::SubsetSum);
        let mut expected = t.eval(&Q::one(), &(Q::one() / &q));
        for _ in 0..k3.rank() {
            expected *= &p;
        }
        expected *= &q; // nullity 1
        assert_eq!(poly_value, expected);
    }

    #[test]
    fn coboundary_golden() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(
            coboundary_poly(&u12),
            TuttePoly::from_ints(&[(1, 0, 1), (0, 2, 1), (0, 0, -1)])
        );
    }

    #[test]
    fn finite_field_tutte_matches_subset_sum() {
        for name in [
            NamedArrangement::Braid(3),
            NamedArrangement::Coordinate(2),
            NamedArrangement::TypeB(2),
            NamedArrangement::AugmentedBraid(3),
        ] {
            let arr = build_named_arrangement(&name).unwrap();
            let via_ff = tutte_via_finite_fields(&arr).unwrap();
            let m = Matroid::from_arrangement(&arr).unwrap();
            assert_eq!(via_ff, tutte(&m, TutteBackend::SubsetSum), "{name:?}");
        }
        // Type B_2 normals are four distinct directions in the plane.
        let b2 = build_named_arrangement(&NamedArrangement::TypeB(2)).unwrap();
        assert_eq!(
            tutte_via_finite_fields(&b2).unwrap(),
            tutte(&u24(), TutteBackend::SubsetSum)
        );
        let shi2 = build_named_arrangement(&NamedArrangement::Shi(2)).unwrap();
        assert_eq!(
            tutte_via_finite_fields(&shi2).unwrap_err(),
            MatroidError::NotThroughOrigin
        );
    }

    #[test]
    fn char_poly_connects_to_regions() {
        // For the graphic matroid of K_3, q times the matroid polynomial
        // is the chromatic polynomial.
        let k3 = Matroid::from_graph(&named_graph(NamedGraph::Complete(3))).unwrap();
        let chi = matroid_char_poly(&k3);
        assert_eq!(chi, Poly::from_ints(&[2, -3, 1]));
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(matroid_char_poly(&u12), Poly::from_ints(&[-1, 1]));
    }
}
