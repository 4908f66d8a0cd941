//! Finite posets and the counting machinery that lives on them: Moebius
//! functions and inversion, the incidence algebra, zeta and order
//! polynomials, linear extensions, distributive-lattice structure, and
//! flag vectors with their ab- and cd-indices.
//!
//! A [`Poset`] stores the full order relation densely, so every operation
//! can assume `leq` answers in constant time. Construction validates
//! acyclicity (building from covers) or antisymmetry (building from an
//! arbitrary relation), which lets the counting routines skip defensive
//! checks.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::util::{factorial, neg_one_pow, qi, Q, Z};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover relation contains a cycle")]
    CycleDetected,
    #[error("relation is not antisymmetric")]
    NotAntisymmetric,
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("poset has no unique bottom and top")]
    NotBounded,
    #[error("poset is not graded")]
    NotGraded,
    #[error("poset is not Eulerian")]
    NotEulerian,
    #[error("incidence function vanishes on the diagonal")]
    NotInvertible,
    #[error("no meet or join for some pair")]
    NotLattice,
    #[error("computation over limit: allowed {limit}, needed {need}")]
    TooLarge { limit: usize, need: usize },
    #[error("bad poset description: {0}")]
    BadSpec(String),
}

/// Finite partially ordered set with labeled elements.
#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<Vec<bool>>,
}

fn build_index(labels: &[String]) -> Result<HashMap<String, usize>, PosetError> {
    let mut index = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(PosetError::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

fn transitive_closure(leq: &mut [Vec<bool>]) {
    let n = leq.len();
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
    }
}

impl Poset {
    /// Build from a cover (or any generating) relation; the transitive
    /// reflexive closure is taken and cycles are rejected.
    pub fn from_covers<S: AsRef<str>>(
        labels: &[S],
        covers: &[(S, S)],
    ) -> Result<Self, PosetError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let index = build_index(&labels)?;
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (lo, hi) in covers {
            let i = *index
                .get(lo.as_ref())
                .ok_or_else(|| PosetError::UnknownElement(lo.as_ref().to_string()))?;
            let j = *index
                .get(hi.as_ref())
                .ok_or_else(|| PosetError::UnknownElement(hi.as_ref().to_string()))?;
            leq[i][j] = true;
        }
        transitive_closure(&mut leq);
        for i in 0..n {
            for j in 0..i {
                if leq[i][j] && leq[j][i] {
                    return Err(PosetError::CycleDetected);
                }
            }
        }
        Ok(Poset { labels, index, leq })
    }

    /// Build from order pairs `lo <= hi`; the closure is taken and
    /// antisymmetry violations are rejected.
    pub fn from_relation<S: AsRef<str>>(
        labels: &[S],
        pairs: &[(S, S)],
    ) -> Result<Self, PosetError> {
        match Poset::from_covers(labels, pairs) {
            Err(PosetError::CycleDetected) => Err(PosetError::NotAntisymmetric),
            other => other,
        }
    }

    /// Internal: adopt an already reflexive-transitive matrix.
    pub(crate) fn from_leq_matrix(
        labels: Vec<String>,
        leq: Vec<Vec<bool>>,
    ) -> Result<Self, PosetError> {
        let index = build_index(&labels)?;
        debug_assert!(leq.iter().enumerate().all(|(i, row)| row[i]));
        Ok(Poset { labels, index, leq })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Result<usize, PosetError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| PosetError::UnknownElement(label.to_string()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Cover pairs `(lower, upper)`, computed from the dense relation.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            'next: for b in 0..n {
                if !self.lt(a, b) {
                    continue;
                }
                for z in 0..n {
                    if self.lt(a, z) && self.lt(z, b) {
                        continue 'next;
                    }
                }
                out.push((a, b));
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| (0..self.len()).all(|y| !self.lt(y, x)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| (0..self.len()).all(|y| !self.lt(x, y)))
            .collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        let m = self.minimal_elements();
        (m.len() == 1).then(|| m[0])
    }

    pub fn top(&self) -> Option<usize> {
        let m = self.maximal_elements();
        (m.len() == 1).then(|| m[0])
    }

    /// Indices sorted into a linear extension (downset size is monotone).
    pub fn topo_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        let downsets: Vec<usize> = (0..self.len())
            .map(|x| (0..self.len()).filter(|&y| self.leq(y, x)).count())
            .collect();
        order.sort_by_key(|&x| downsets[x]);
        order
    }

    /// Order-reversed copy.
    pub fn dual(&self) -> Poset {
        let n = self.len();
        let leq = (0..n)
            .map(|i| (0..n).map(|j| self.leq[j][i]).collect())
            .collect();
        Poset {
            labels: self.labels.clone(),
            index: self.index.clone(),
            leq,
        }
    }

    /// Induced subposet on the given elements, in the given order.
    pub fn subposet(&self, keep: &[usize]) -> Poset {
        let labels: Vec<String> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let leq = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.leq[i][j]).collect())
            .collect();
        let index = build_index(&labels).expect("labels stay distinct in a subposet");
        Poset { labels, index, leq }
    }

    /// Rank function of a graded bounded poset: longest-path rank from the
    /// bottom, checked to increase by exactly one across every cover.
    pub fn rank_function(&self) -> Result<Vec<usize>, PosetError> {
        let bottom = self.bottom().ok_or(PosetError::NotBounded)?;
        let _top = self.top().ok_or(PosetError::NotBounded)?;
        let order = self.topo_order();
        let mut rank = vec![0usize; self.len()];
        let covers = self.covers();
        let mut up = vec![Vec::new(); self.len()];
        for &(a, b) in &covers {
            up[a].push(b);
        }
        for &x in &order {
            for &y in &up[x] {
                rank[y] = rank[y].max(rank[x] + 1);
            }
        }
        if rank[bottom] != 0 {
            return Err(PosetError::NotGraded);
        }
        for &(a, b) in &covers {
            if rank[b] != rank[a] + 1 {
                return Err(PosetError::NotGraded);
            }
        }
        Ok(rank)
    }

    /// Moebius values `mu(a, y)` for every y, by the defining recursion.
    pub fn mobius_row(&self, a: usize) -> Vec<Z> {
        let mut mu = vec![Z::zero(); self.len()];
        for &y in &self.topo_order() {
            if y == a {
                mu[y] = Z::one();
            } else if self.lt(a, y) {
                let mut acc = Z::zero();
                for z in 0..self.len() {
                    if self.leq(a, z) && self.lt(z, y) {
                        acc += &mu[z];
                    }
                }
                mu[y] = -acc;
            }
        }
        mu
    }

    /// Moebius values `mu(x, b)` for every x.
    pub fn mobius_col(&self, b: usize) -> Vec<Z> {
        let mut mu = vec![Z::zero(); self.len()];
        let mut order = self.topo_order();
        order.reverse();
        for &x in &order {
            if x == b {
                mu[x] = Z::one();
            } else if self.lt(x, b) {
                let mut acc = Z::zero();
                for z in 0..self.len() {
                    if self.lt(x, z) && self.leq(z, b) {
                        acc += &mu[z];
                    }
                }
                mu[x] = -acc;
            }
        }
        mu
    }

    pub fn mobius(&self, a: usize, b: usize) -> Z {
        self.mobius_row(a)[b].clone()
    }

    /// `mu(bottom, top)` of a bounded poset.
    pub fn mobius_bounds(&self) -> Result<Z, PosetError> {
        let b = self.bottom().ok_or(PosetError::NotBounded)?;
        let t = self.top().ok_or(PosetError::NotBounded)?;
        Ok(self.mobius(b, t))
    }

    /// True when the poset is bounded, graded, and every interval's
    /// Moebius value is `(-1)^(rank difference)`.
    pub fn is_eulerian(&self) -> bool {
        let Ok(rank) = self.rank_function() else {
            return false;
        };
        for a in 0..self.len() {
            let row = self.mobius_row(a);
            for b in 0..self.len() {
                if self.leq(a, b) && row[b] != neg_one_pow(rank[b] - rank[a]) {
                    return false;
                }
            }
        }
        true
    }

    /// Elements grouped by rank, for graded bounded posets.
    pub fn elements_by_rank(&self) -> Result<Vec<Vec<usize>>, PosetError> {
        let rank = self.rank_function()?;
        let r = *rank.iter().max().unwrap();
        let mut by = vec![Vec::new(); r + 1];
        for (x, &rho) in rank.iter().enumerate() {
            by[rho].push(x);
        }
        Ok(by)
    }
}

/// Element of the incidence algebra: a rational value on every ordered
/// pair `x <= y`, zero elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceFunction {
    vals: Vec<Vec<Q>>,
}

impl IncidenceFunction {
    pub fn delta(p: &Poset) -> Self {
        let n = p.len();
        let mut vals = vec![vec![Q::zero(); n]; n];
        for (i, row) in vals.iter_mut().enumerate() {
            row[i] = Q::one();
        }
        IncidenceFunction { vals }
    }

    pub fn zeta(p: &Poset) -> Self {
        let n = p.len();
        let vals = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if p.leq(i, j) { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        IncidenceFunction { vals }
    }

    pub fn mobius(p: &Poset) -> Self {
        let n = p.len();
        let mut vals = vec![vec![Q::zero(); n]; n];
        for a in 0..n {
            for (b, v) in p.mobius_row(a).into_iter().enumerate() {
                vals[a][b] = Q::from(v);
            }
        }
        IncidenceFunction { vals }
    }

    /// Arbitrary values on order pairs; off-order pairs are forced to zero.
    pub fn from_fn(p: &Poset, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let n = p.len();
        let vals = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if p.leq(i, j) { f(i, j) } else { Q::zero() })
                    .collect()
            })
            .collect();
        IncidenceFunction { vals }
    }

    pub fn eval(&self, a: usize, b: usize) -> &Q {
        &self.vals[a][b]
    }

    /// Convolution `(f * g)(x, y) = sum over x <= z <= y of f(x,z) g(z,y)`.
    pub fn convolve(&self, other: &IncidenceFunction, p: &Poset) -> IncidenceFunction {
        let n = p.len();
        let mut vals = vec![vec![Q::zero(); n]; n];
        for x in 0..n {
            for y in 0..n {
                if !p.leq(x, y) {
                    continue;
                }
                let mut acc = Q::zero();
                for z in 0..n {
                    if p.leq(x, z) && p.leq(z, y) {
                        acc += self.vals[x][z].clone() * other.vals[z][y].clone();
                    }
                }
                vals[x][y] = acc;
            }
        }
        IncidenceFunction { vals }
    }

    /// Two-sided convolution inverse; exists exactly when the diagonal is
    /// nowhere zero.
    pub fn inverse(&self, p: &Poset) -> Result<IncidenceFunction, PosetError> {
        let n = p.len();
        for i in 0..n {
            if self.vals[i][i].is_zero() {
                return Err(PosetError::NotInvertible);
            }
        }
        let mut inv = vec![vec![Q::zero(); n]; n];
        // Interval recursion in increasing interval size: g(x,x) = 1/f(x,x),
        // g(x,y) = -1/f(y,y) * sum over x <= z < y of g(x,z) f(z,y).
        let order = p.topo_order();
        for &x in &order {
            inv[x][x] = Q::one() / self.vals[x][x].clone();
            for &y in &order {
                if !p.lt(x, y) {
                    continue;
                }
                let mut acc = Q::zero();
                for z in 0..n {
                    if p.leq(x, z) && p.lt(z, y) {
                        acc += inv[x][z].clone() * self.vals[z][y].clone();
                    }
                }
                inv[x][y] = -acc / self.vals[y][y].clone();
            }
        }
        Ok(IncidenceFunction { vals: inv })
    }
}

/// Moebius inversion. Upward: given `g`, returns `f` with
/// `f(x) = sum over y >= x of mu(x,y) g(y)`, inverting
/// `g(x) = sum over y >= x of f(y)`. Downward mirrors both sums.
pub fn mobius_inversion(p: &Poset, g: &[Q], upward: bool) -> Vec<Q> {
    assert_eq!(g.len(), p.len());
    let n = p.len();
    let mut f = vec![Q::zero(); n];
    for x in 0..n {
        let mu = if upward {
            p.mobius_row(x)
        } else {
            p.mobius_col(x)
        };
        let mut acc = Q::zero();
        for (y, gy) in g.iter().enumerate() {
            let related = if upward { p.leq(x, y) } else { p.leq(y, x) };
            if related {
                acc += Q::from(mu[y].clone()) * gy.clone();
            }
        }
        f[x] = acc;
    }
    f
}

/// Number of strict chains with exactly `i` elements, for i = 1, 2, ...
/// (index 0 of the result is the count of 1-element chains, i.e. `|P|`).
pub fn chain_counts(p: &Poset) -> Vec<Z> {
    let n = p.len();
    let order = p.topo_order();
    // ending[v][l] = chains of l+1 elements topped by v.
    let mut ending: Vec<Vec<Z>> = vec![vec![Z::one()]; n];
    for &v in &order {
        let mut best = 1;
        let mut row = vec![Z::one()];
        for &u in &order {
            if !p.lt(u, v) {
                continue;
            }
            for l in 0..ending[u].len() {
                if l + 1 >= row.len() {
                    row.push(Z::zero());
                }
                let add = ending[u][l].clone();
                row[l + 1] += add;
            }
            best = best.max(ending[u].len() + 1);
        }
        row.resize(best, Z::zero());
        ending[v] = row;
    }
    let max_len = ending.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut counts = vec![Z::zero(); max_len];
    for row in &ending {
        for (l, c) in row.iter().enumerate() {
            counts[l] += c;
        }
    }
    counts
}

/// Zeta polynomial: `Z(k)` counts multichains of k-1 elements, expanded
/// from strict chain counts in the binomial basis `C(k-2, i)`. For a
/// bounded poset, `Z(-1) = mu(bottom, top)`.
pub fn zeta_polynomial(p: &Poset) -> Poly {
    let counts = chain_counts(p);
    let mut z = Poly::zero();
    for (i, b) in counts.iter().enumerate() {
        // C(k-2, i) as a polynomial in k.
        let mut basis = Poly::one();
        for t in 0..i {
            basis = basis.mul(&Poly::new(vec![qi(-2 - t as i64), qi(1)]));
        }
        basis = basis.scale(&(Q::one() / Q::from(factorial(i))));
        z = z.add(&basis.scale(&Q::from(b.clone())));
    }
    z
}

const EXTENSION_LIMIT: usize = 24;

/// Number of linear extensions, by dynamic programming over down-closed
/// subsets. Capped at 24 elements by default; `linear_extensions_capped`
/// raises the cap to at most 64.
pub fn linear_extensions(p: &Poset) -> Result<Z, PosetError> {
    linear_extensions_capped(p, EXTENSION_LIMIT)
}

pub fn linear_extensions_capped(p: &Poset, cap: usize) -> Result<Z, PosetError> {
    assert!(cap <= 64, "ideal bitmasks use one u64");
    let n = p.len();
    if n > cap {
        return Err(PosetError::TooLarge { limit: cap, need: n });
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let below: Vec<u64> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| p.lt(y, x))
                .fold(0u64, |m, y| m | 1 << y)
        })
        .collect();
    let mut memo: HashMap<u64, Z> = HashMap::new();
    fn count(mask: u64, full: u64, below: &[u64], memo: &mut HashMap<u64, Z>) -> Z {
        if mask == full {
            return Z::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = Z::zero();
        for (x, &req) in below.iter().enumerate() {
            if mask >> x & 1 == 0 && req & mask == req {
                acc += count(mask | 1 << x, full, below, memo);
            }
        }
        memo.insert(mask, acc.clone());
        acc
    }
    Ok(count(0, full, &below, &mut memo))
}

const IDEAL_LIMIT: usize = 4096;

/// All order ideals as bitmasks, in increasing mask order.
pub fn order_ideals(p: &Poset) -> Result<Vec<u64>, PosetError> {
    let n = p.len();
    if n > 64 {
        return Err(PosetError::TooLarge { limit: 64, need: n });
    }
    let below: Vec<u64> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| p.lt(y, x))
                .fold(0u64, |m, y| m | 1 << y)
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(0u64);
    queue.push_back(0u64);
    while let Some(ideal) = queue.pop_front() {
        for x in 0..n {
            if ideal >> x & 1 == 0 && below[x] & ideal == below[x] {
                let next = ideal | 1 << x;
                if seen.insert(next) {
                    if seen.len() > IDEAL_LIMIT {
                        return Err(PosetError::TooLarge {
                            limit: IDEAL_LIMIT,
                            need: seen.len(),
                        });
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Lattice of order ideals `J(P)`, ordered by inclusion. Elements are
/// labeled by their member sets.
pub fn ideal_lattice(p: &Poset) -> Result<Poset, PosetError> {
    let ideals = order_ideals(p)?;
    let labels: Vec<String> = ideals
        .iter()
        .map(|&m| {
            let members: Vec<&str> = (0..p.len())
                .filter(|&x| m >> x & 1 == 1)
                .map(|x| p.label(x))
                .collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let leq = ideals
        .iter()
        .map(|&a| ideals.iter().map(|&b| a & b == a).collect())
        .collect();
    Poset::from_leq_matrix(labels, leq)
}

/// Order polynomial: `Omega(k)` counts order-preserving maps into a
/// k-element chain; computed as the zeta polynomial of `J(P)`.
pub fn order_polynomial(p: &Poset) -> Result<Poly, PosetError> {
    Ok(zeta_polynomial(&ideal_lattice(p)?))
}

/// Elements with exactly one lower cover.
pub fn join_irreducibles(p: &Poset) -> Vec<usize> {
    let covers = p.covers();
    (0..p.len())
        .filter(|&x| covers.iter().filter(|&&(_, b)| b == x).count() == 1)
        .collect()
}

/// Meet and join tables plus a distributivity flag.
#[derive(Debug, Clone)]
pub struct LatticeInfo {
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub distributive: bool,
}

/// Check the poset is a lattice and compute its structure. Fails with
/// `NotLattice` when some pair lacks a unique meet or join.
pub fn lattice_ops(p: &Poset) -> Result<LatticeInfo, PosetError> {
    let n = p.len();
    let mut meet = vec![vec![0usize; n]; n];
    let mut join = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in 0..n {
            let lower: Vec<usize> = (0..n)
                .filter(|&z| p.leq(z, x) && p.leq(z, y))
                .collect();
            let m = lower
                .iter()
                .copied()
                .find(|&m| lower.iter().all(|&z| p.leq(z, m)))
                .ok_or(PosetError::NotLattice)?;
            meet[x][y] = m;
            let upper: Vec<usize> = (0..n)
                .filter(|&z| p.leq(x, z) && p.leq(y, z))
                .collect();
            let j = upper
                .iter()
                .copied()
                .find(|&j| upper.iter().all(|&z| p.leq(j, z)))
                .ok_or(PosetError::NotLattice)?;
            join[x][y] = j;
        }
    }
    let mut distributive = true;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]] {
                    distributive = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(LatticeInfo {
        meet,
        join,
        distributive,
    })
}

/// Flag f-vector of a graded bounded poset: for each set S of proper
/// ranks, the number of chains whose rank set is exactly S.
pub fn flag_f_vector(p: &Poset) -> Result<BTreeMap<Vec<usize>, Z>, PosetError> {
    let by_rank = p.elements_by_rank()?;
    let r = by_rank.len() - 1;
    let proper = r.saturating_sub(1);
    let mut out = BTreeMap::new();
    for mask in 0u64..1 << proper {
        let s: Vec<usize> = (0..proper).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let mut level: Vec<(usize, Z)> = vec![(p.bottom().unwrap(), Z::one())];
        for &rank in &s {
            let mut next = Vec::new();
            for &v in &by_rank[rank] {
                let mut acc = Z::zero();
                for (u, c) in &level {
                    if p.lt(*u, v) {
                        acc += c;
                    }
                }
                if !acc.is_zero() {
                    next.push((v, acc));
                }
            }
            level = next;
        }
        let total = level.into_iter().map(|(_, c)| c).fold(Z::zero(), |a, b| a + b);
        out.insert(s, total);
    }
    Ok(out)
}

/// Flag h-vector by inclusion-exclusion over rank subsets.
pub fn flag_h_vector(p: &Poset) -> Result<BTreeMap<Vec<usize>, Z>, PosetError> {
    let f = flag_f_vector(p)?;
    let mut h = BTreeMap::new();
    for s in f.keys() {
        let mut acc = Z::zero();
        for t in f.keys() {
            if t.iter().all(|x| s.contains(x)) {
                acc += neg_one_pow(s.len() - t.len()) * f[t].clone();
            }
        }
        h.insert(s.clone(), acc);
    }
    Ok(h)
}

/// Homogeneous polynomial in noncommuting letters, keyed by words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordPoly {
    terms: BTreeMap<String, Z>,
}

impl WordPoly {
    pub fn new(terms: impl IntoIterator<Item = (String, Z)>) -> Self {
        let mut map = BTreeMap::new();
        for (w, c) in terms {
            if !c.is_zero() {
                *map.entry(w).or_insert_with(Z::zero) += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        WordPoly { terms: map }
    }

    pub fn from_ints(terms: &[(&str, i64)]) -> Self {
        WordPoly::new(terms.iter().map(|&(w, c)| (w.to_string(), Z::from(c))))
    }

    pub fn terms(&self) -> &BTreeMap<String, Z> {
        &self.terms
    }

    pub fn coeff(&self, word: &str) -> Z {
        self.terms.get(word).cloned().unwrap_or_else(Z::zero)
    }
}

impl fmt::Display for WordPoly {
    /// Runs of a repeated letter print with exponents: `ccd` is `c^2d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (word, coeff) in &self.terms {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || word.is_empty();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            let chars: Vec<char> = word.chars().collect();
            let mut i = 0;
            while i < chars.len() {
                let mut j = i;
                while j < chars.len() && chars[j] == chars[i] {
                    j += 1;
                }
                if j - i == 1 {
                    write!(f, "{}", chars[i])?;
                } else {
                    write!(f, "{}^{}", chars[i], j - i)?;
                }
                i = j;
            }
        }
        Ok(())
    }
}

/// ab-index: the flag h-vector written as a word polynomial, with `b` at
/// the ranks in S and `a` elsewhere.
pub fn ab_index(p: &Poset) -> Result<WordPoly, PosetError> {
    let h = flag_h_vector(p)?;
    let by_rank = p.elements_by_rank()?;
    let proper = (by_rank.len() - 1).saturating_sub(1);
    let terms = h.into_iter().map(|(s, c)| {
        let word: String = (1..=proper)
            .map(|i| if s.contains(&i) { 'b' } else { 'a' })
            .collect();
        (word, c)
    });
    Ok(WordPoly::new(terms))
}

fn expand_cd_word(word: &str) -> WordPoly {
    // c = a + b, d = ab + ba.
    let mut terms: Vec<(String, Z)> = vec![(String::new(), Z::one())];
    for ch in word.chars() {
        let pieces: &[&str] = match ch {
            'c' => &["a", "b"],
            'd' => &["ab", "ba"],
            other => panic!("not a cd letter: {other}"),
        };
        let mut next = Vec::new();
        for (w, c) in &terms {
            for piece in pieces {
                next.push((format!("{w}{piece}"), c.clone()));
            }
        }
        terms = next;
    }
    WordPoly::new(terms)
}

/// Rewrite an ab-polynomial in the letters c = a + b, d = ab + ba.
///
/// Greedy on the lexicographically least surviving ab-word: its cd
/// preimage is forced letter by letter (a leading `ab` must come from `d`,
/// any other `a` from `c`, and a bare `b` is impossible), and subtracting
/// that cd-word's expansion only leaves lexicographically later words, so
/// the loop terminates. Returns None when the input is not in the span.
pub fn cd_from_ab(ab: &WordPoly) -> Option<WordPoly> {
    let mut rest = ab.terms.clone();
    let mut out: Vec<(String, Z)> = Vec::new();
    while let Some((word, coeff)) = rest.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
        let chars: Vec<char> = word.chars().collect();
        let mut cd = String::new();
        let mut i = 0;
        while i < chars.len() {
            if chars[i] == 'a' && i + 1 < chars.len() && chars[i + 1] == 'b' {
                cd.push('d');
                i += 2;
            } else if chars[i] == 'a' {
                cd.push('c');
                i += 1;
            } else {
                return None;
            }
        }
        for (w, c) in expand_cd_word(&cd).terms {
            *rest.entry(w).or_insert_with(Z::zero) -= coeff.clone() * c;
        }
        // Prune so the lex-min lookup sees only genuine survivors.
        rest.retain(|_, c| !c.is_zero());
        out.push((cd, coeff));
    }
    Some(WordPoly::new(out))
}

/// cd-index of an Eulerian poset.
pub fn cd_index(p: &Poset) -> Result<WordPoly, PosetError> {
    if !p.is_eulerian() {
        return Err(PosetError::NotEulerian);
    }
    let ab = ab_index(p)?;
    Ok(cd_from_ab(&ab).expect("Eulerian ab-index always has a cd-expression"))
}

// ---------------------------------------------------------------------
// Named families.

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedPoset {
    /// Total order on n elements.
    Chain(usize),
    /// n pairwise incomparable elements.
    Antichain(usize),
    /// Subsets of an n-set by inclusion.
    Boolean(usize),
    /// Divisors of m by divisibility.
    Divisor(u64),
    /// Set partitions of an n-set by refinement.
    Partition(usize),
    /// Noncrossing set partitions of an n-set by refinement.
    NonCrossing(usize),
    /// Product of a 2-chain and an n-chain.
    TwoByN(usize),
    /// Strong Bruhat order on the six permutations of three letters.
    BruhatS3,
    /// Face lattice of a convex m-gon.
    PolygonFaces(usize),
    /// Face lattice of the hexagonal prism.
    HexagonalPrismFaces,
}

/// Set partitions of {0, .., n-1} as block-id vectors in restricted
/// growth form.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    fn rec(i: usize, max_used: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for b in 0..=max_used + 1 {
            current[i] = b;
            rec(i + 1, max_used.max(b), current, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    current[0] = 0;
    rec(1, 0, &mut current, &mut out);
    out
}

fn partition_label(part: &[usize]) -> String {
    let blocks = part.iter().max().map_or(0, |m| m + 1);
    let mut groups = vec![String::new(); blocks];
    for (x, &b) in part.iter().enumerate() {
        groups[b].push_str(&(x + 1).to_string());
    }
    groups.join("|")
}

fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    let n = fine.len();
    (0..n).all(|x| (0..n).all(|y| fine[x] != fine[y] || coarse[x] == coarse[y]))
}

fn is_noncrossing(part: &[usize]) -> bool {
    let n = part.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if part[a] == part[c] && part[b] == part[d] && part[a] != part[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn partition_poset(n: usize, noncrossing_only: bool) -> Result<Poset, PosetError> {
    const LIMIT: usize = 8;
    if n == 0 || n > LIMIT {
        return Err(PosetError::TooLarge { limit: LIMIT, need: n });
    }
    let parts: Vec<Vec<usize>> = set_partitions(n)
        .into_iter()
        .filter(|p| !noncrossing_only || is_noncrossing(p))
        .collect();
    let labels: Vec<String> = parts.iter().map(|p| partition_label(p)).collect();
    // Refinement is transitive, so the matrix needs no closure pass.
    let leq = parts
        .iter()
        .map(|a| parts.iter().map(|b| refines(a, b)).collect())
        .collect();
    Poset::from_leq_matrix(labels, leq)
}

/// Face lattice of a 3-polytope given combinatorially: empty face,
/// vertices, edges, facets (as vertex sets), and the whole polytope,
/// ordered by vertex-set inclusion.
pub fn face_lattice_3d(
    vertex_count: usize,
    edges: &[(usize, usize)],
    facets: &[Vec<usize>],
) -> Result<Poset, PosetError> {
    let mut sets: Vec<(String, BTreeSet<usize>)> = Vec::new();
    sets.push(("empty".to_string(), BTreeSet::new()));
    for v in 0..vertex_count {
        sets.push((format!("v{v}"), BTreeSet::from([v])));
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        if a >= vertex_count || b >= vertex_count || a == b {
            return Err(PosetError::BadSpec(format!("bad edge ({a}, {b})")));
        }
        sets.push((format!("e{i}"), BTreeSet::from([a, b])));
    }
    for (i, facet) in facets.iter().enumerate() {
        let set: BTreeSet<usize> = facet.iter().copied().collect();
        if set.iter().any(|&v| v >= vertex_count) || set.len() < 3 {
            return Err(PosetError::BadSpec(format!("bad facet {i}")));
        }
        sets.push((format!("f{i}"), set));
    }
    sets.push(("all".to_string(), (0..vertex_count).collect()));
    let n = sets.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            // The whole polytope contains every face even when some vertex
            // set coincides with it, so compare by position for the top.
            leq[i][j] = (i == j)
                || (j == n - 1)
                || (i == 0)
                || (i != n - 1 && j != 0 && sets[i].1.is_subset(&sets[j].1) && sets[i].1 != sets[j].1);
        }
    }
    let labels = sets.into_iter().map(|(l, _)| l).collect();
    Poset::from_leq_matrix(labels, leq)
}

pub fn build_named_poset(name: &NamedPoset) -> Result<Poset, PosetError> {
    match name {
        NamedPoset::Chain(n) => {
            let labels: Vec<String> = (0..*n).map(|i| i.to_string()).collect();
            let covers: Vec<(String, String)> = (1..*n)
                .map(|i| ((i - 1).to_string(), i.to_string()))
                .collect();
            Poset::from_covers(&labels, &covers)
        }
        NamedPoset::Antichain(n) => {
            let labels: Vec<String> = (0..*n).map(|i| i.to_string()).collect();
            Poset::from_covers(&labels, &[])
        }
        NamedPoset::Boolean(n) => {
            const LIMIT: usize = 12;
            if *n > LIMIT {
                return Err(PosetError::TooLarge { limit: LIMIT, need: *n });
            }
            let count = 1u64 << n;
            let labels: Vec<String> = (0..count)
                .map(|m| {
                    let members: Vec<String> =
                        (0..*n).filter(|i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                    format!("{{{}}}", members.join(","))
                })
                .collect();
            let leq = (0..count)
                .map(|a| (0..count).map(|b| a & b == a).collect())
                .collect();
            Poset::from_leq_matrix(labels, leq)
        }
        NamedPoset::Divisor(m) => {
            if *m == 0 {
                return Err(PosetError::BadSpec("divisor poset needs m >= 1".into()));
            }
            let divisors: Vec<u64> = (1..=*m).filter(|d| m % d == 0).collect();
            let labels: Vec<String> = divisors.iter().map(|d| d.to_string()).collect();
            let leq = divisors
                .iter()
                .map(|a| divisors.iter().map(|b| b % a == 0).collect())
                .collect();
            Poset::from_leq_matrix(labels, leq)
        }
        NamedPoset::Partition(n) => partition_poset(*n, false),
        NamedPoset::NonCrossing(n) => partition_poset(*n, true),
        NamedPoset::TwoByN(n) => {
            if *n == 0 {
                return Err(PosetError::BadSpec("grid needs n >= 1".into()));
            }
            let labels: Vec<String> = (0..2)
                .flat_map(|i| (0..*n).map(move |j| format!("({i},{j})")))
                .collect();
            let pos = |i: usize, j: usize| i * n + j;
            let mut leq = vec![vec![false; 2 * n]; 2 * n];
            for i in 0..2 {
                for j in 0..*n {
                    for i2 in 0..2 {
                        for j2 in 0..*n {
                            leq[pos(i, j)][pos(i2, j2)] = i <= i2 && j <= j2;
                        }
                    }
                }
            }
            Poset::from_leq_matrix(labels, leq)
        }
        NamedPoset::BruhatS3 => {
            let labels = ["e", "s1", "s2", "s1s2", "s2s1", "w0"];
            let covers = [
                ("e", "s1"),
                ("e", "s2"),
                ("s1", "s1s2"),
                ("s1", "s2s1"),
                ("s2", "s1s2"),
                ("s2", "s2s1"),
                ("s1s2", "w0"),
                ("s2s1", "w0"),
            ];
            Poset::from_covers(&labels, &covers)
        }
        NamedPoset::PolygonFaces(m) => {
            if *m < 3 {
                return Err(PosetError::BadSpec("polygon needs at least 3 vertices".into()));
            }
            let mut labels = vec!["empty".to_string()];
            labels.extend((0..*m).map(|v| format!("v{v}")));
            labels.extend((0..*m).map(|e| format!("e{e}")));
            labels.push("all".to_string());
            let n = labels.len();
            let mut leq = vec![vec![false; n]; n];
            for (i, row) in leq.iter_mut().enumerate() {
                row[i] = true;
                row[n - 1] = true;
            }
            for j in 0..n {
                leq[0][j] = true;
            }
            for e in 0..*m {
                // Edge e joins vertices e and e+1 mod m.
                leq[1 + e][1 + m + e] = true;
                leq[1 + (e + 1) % m][1 + m + e] = true;
            }
            Poset::from_leq_matrix(labels, leq)
        }
        NamedPoset::HexagonalPrismFaces => {
            let mut edges = Vec::new();
            for i in 0..6 {
                edges.push((i, (i + 1) % 6));
                edges.push((6 + i, 6 + (i + 1) % 6));
                edges.push((i, 6 + i));
            }
            let mut facets = vec![(0..6).collect::<Vec<_>>(), (6..12).collect()];
            for i in 0..6 {
                facets.push(vec![i, (i + 1) % 6, 6 + i, 6 + (i + 1) % 6]);
            }
            face_lattice_3d(12, &edges, &facets)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruteforce::linear_extensions_brute;
    use crate::util::zi;

    fn named(n: NamedPoset) -> Poset {
        build_named_poset(&n).unwrap()
    }

    #[test]
    fn construction_validation() {
        let cyclic = Poset::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(cyclic.unwrap_err(), PosetError::CycleDetected);
        let asym = Poset::from_relation(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(asym.unwrap_err(), PosetError::NotAntisymmetric);
        let unknown = Poset::from_covers(&["a"], &[("a", "z")]);
        assert_eq!(unknown.unwrap_err(), PosetError::UnknownElement("z".into()));
        let dup = Poset::from_covers(&["a", "a"], &[]);
        assert_eq!(dup.unwrap_err(), PosetError::DuplicateLabel("a".into()));
    }

    #[test]
    fn closure_and_covers() {
        let p = Poset::from_covers(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap();
        assert!(p.leq(p.index("x").unwrap(), p.index("z").unwrap()));
        assert_eq!(p.covers().len(), 2);
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(2));
        let d = p.dual();
        assert_eq!(d.bottom(), Some(2));
    }

    #[test]
    fn boolean_lattice_shape() {
        let b3 = named(NamedPoset::Boolean(3));
        assert_eq!(b3.len(), 8);
        let rank = b3.rank_function().unwrap();
        assert_eq!(rank.iter().filter(|&&r| r == 1).count(), 3);
        assert_eq!(b3.mobius_bounds().unwrap(), zi(-1));
        assert!(b3.is_eulerian());
        let info = lattice_ops(&b3).unwrap();
        assert!(info.distributive);
    }

    #[test]
    fn divisor_lattice_mobius() {
        let d12 = named(NamedPoset::Divisor(12));
        assert_eq!(d12.len(), 6);
        assert_eq!(d12.mobius_bounds().unwrap(), zi(0));
        let one = d12.index("1").unwrap();
        let six = d12.index("6").unwrap();
        assert_eq!(d12.mobius(one, six), zi(1));
        let d18 = named(NamedPoset::Divisor(18));
        assert_eq!(d18.mobius_bounds().unwrap(), zi(0));
    }

    #[test]
    fn classical_number_theoretic_inversion() {
        // g(m) = m counts multiples of each divisor in {1..12} stacked as
        // g(d) = 12/d; inverting recovers Euler phi at the bottom.
        let d12 = named(NamedPoset::Divisor(12));
        let g: Vec<Q> = d12
            .labels()
            .iter()
            .map(|l| qi(12 / l.parse::<i64>().unwrap()))
            .collect();
        let f = mobius_inversion(&d12, &g, true);
        let one = d12.index("1").unwrap();
        assert_eq!(f[one], qi(4));
        // Downward inversion of the constant-one cumulative sums gives the
        // indicator of the bottom element.
        let ones: Vec<Q> = vec![qi(1); d12.len()];
        let down = mobius_inversion(&d12, &ones, false);
        assert_eq!(down[one], qi(1));
        let twelve = d12.index("12").unwrap();
        assert_eq!(down[twelve], qi(0));
    }

    #[test]
    fn partition_lattice_mobius() {
        let bell = [1usize, 2, 5, 15, 52, 203];
        for n in 1..=6usize {
            let p = named(NamedPoset::Partition(n));
            assert_eq!(p.len(), bell[n - 1], "size of rank {n}");
            let expected = neg_one_pow(n - 1) * factorial(n - 1);
            assert_eq!(p.mobius_bounds().unwrap(), expected, "mu at {n}");
        }
        assert_eq!(
            named(NamedPoset::Partition(3)).mobius_bounds().unwrap(),
            zi(2)
        );
    }

    #[test]
    fn noncrossing_lattice_mobius_and_zeta() {
        let catalan = [1i64, 2, 5, 14, 42, 132];
        for n in 1..=6usize {
            let p = named(NamedPoset::NonCrossing(n));
            assert_eq!(p.len(), catalan[n - 1] as usize, "size at {n}");
            // mu(0,1) = (-1)^(n-1) Catalan(n-1), twice: directly and via
            // the zeta polynomial at -1.
            let expected = if n == 1 {
                zi(1)
            } else {
                neg_one_pow(n - 1) * zi(catalan[n - 2])
            };
            assert_eq!(p.mobius_bounds().unwrap(), expected, "mu at {n}");
            let z = zeta_polynomial(&p);
            assert_eq!(z.eval(&qi(-1)), Q::from(expected), "zeta(-1) at {n}");
        }
        // Multichain counts match the closed product formula.
        for n in 2..=4usize {
            let z = zeta_polynomial(&named(NamedPoset::NonCrossing(n)));
            for k in 2..=5i64 {
                let expected = Q::from(crate::util::binomial((k as usize) * n, n - 1))
                    / qi(n as i64);
                assert_eq!(z.eval(&qi(k)), expected, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn zeta_polynomial_small_cases() {
        let b2 = named(NamedPoset::Boolean(2));
        let z = zeta_polynomial(&b2);
        assert_eq!(z, Poly::from_ints(&[0, 0, 1]));
        let anti = named(NamedPoset::Antichain(2));
        assert_eq!(zeta_polynomial(&anti), Poly::from_ints(&[2]));
        let chain3 = named(NamedPoset::Chain(3));
        assert_eq!(zeta_polynomial(&chain3).eval(&qi(-1)), qi(0));
    }

    #[test]
    fn incidence_algebra_roundtrip() {
        let p = named(NamedPoset::Divisor(12));
        let zeta = IncidenceFunction::zeta(&p);
        let mu = IncidenceFunction::mobius(&p);
        let delta = IncidenceFunction::delta(&p);
        assert_eq!(zeta.convolve(&mu, &p), delta);
        assert_eq!(mu.convolve(&zeta, &p), delta);
        assert_eq!(zeta.inverse(&p).unwrap(), mu);
        // zeta squared counts the elements of each interval.
        let z2 = zeta.convolve(&zeta, &p);
        let one = p.index("1").unwrap();
        let twelve = p.index("12").unwrap();
        assert_eq!(*z2.eval(one, twelve), qi(6));
        let zero_diag = IncidenceFunction::from_fn(&p, |_, _| Q::zero());
        assert_eq!(zero_diag.inverse(&p).unwrap_err(), PosetError::NotInvertible);
    }

    #[test]
    fn linear_extension_counts() {
        let catalan = [1i64, 2, 5, 14, 42, 132];
        for n in 1..=6usize {
            let grid = named(NamedPoset::TwoByN(n));
            assert_eq!(
                linear_extensions(&grid).unwrap(),
                zi(catalan[n - 1]),
                "2 x {n}"
            );
        }
        for n in 1..=4usize {
            let grid = named(NamedPoset::TwoByN(n));
            let brute = linear_extensions_brute(grid.len(), |a, b| grid.lt(a, b));
            assert_eq!(linear_extensions(&grid).unwrap(), Z::from(brute), "brute 2 x {n}");
        }
        assert_eq!(linear_extensions(&named(NamedPoset::Chain(5))).unwrap(), zi(1));
        assert_eq!(
            linear_extensions(&named(NamedPoset::Antichain(4))).unwrap(),
            zi(24)
        );
        assert!(matches!(
            linear_extensions(&named(NamedPoset::Antichain(25))),
            Err(PosetError::TooLarge { .. })
        ));
    }

    #[test]
    fn ideal_lattice_structure() {
        let j = ideal_lattice(&named(NamedPoset::Antichain(3))).unwrap();
        assert_eq!(j.len(), 8);
        assert_eq!(j.mobius_bounds().unwrap(), zi(-1));
        let chain = ideal_lattice(&named(NamedPoset::Chain(3))).unwrap();
        assert_eq!(chain.len(), 4);
        assert_eq!(chain.covers().len(), 3);
    }

    #[test]
    fn join_irreducibles_recover_the_poset() {
        // Birkhoff: the join-irreducibles of J(P) are the principal
        // ideals, ordered exactly as P.
        for p in [
            named(NamedPoset::TwoByN(3)),
            named(NamedPoset::Chain(4)),
            named(NamedPoset::Antichain(3)),
        ] {
            let ideals = order_ideals(&p).unwrap();
            let j = ideal_lattice(&p).unwrap();
            let irr = join_irreducibles(&j);
            assert_eq!(irr.len(), p.len());
            // Each join-irreducible ideal is principal; its generator is
            // the unique maximal member.
            let gens: Vec<usize> = irr
                .iter()
                .map(|&i| {
                    let mask = ideals[i];
                    (0..p.len())
                        .filter(|&x| mask >> x & 1 == 1)
                        .find(|&x| {
                            (0..p.len()).all(|y| mask >> y & 1 == 0 || !p.lt(x, y))
                        })
                        .unwrap()
                })
                .collect();
            for (ai, &a) in irr.iter().enumerate() {
                for (bi, &b) in irr.iter().enumerate() {
                    assert_eq!(j.leq(a, b), p.leq(gens[ai], gens[bi]));
                }
            }
        }
    }

    #[test]
    fn order_polynomial_values() {
        let single = named(NamedPoset::Chain(1));
        assert_eq!(order_polynomial(&single).unwrap(), Poly::from_ints(&[0, 1]));
        let chain2 = named(NamedPoset::Chain(2));
        let omega = order_polynomial(&chain2).unwrap();
        assert_eq!(omega.eval(&qi(3)), qi(6));
        let anti2 = named(NamedPoset::Antichain(2));
        assert_eq!(order_polynomial(&anti2).unwrap(), Poly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn lattice_checks() {
        let pi3 = named(NamedPoset::Partition(3));
        let info = lattice_ops(&pi3).unwrap();
        assert!(!info.distributive);
        let bruhat = named(NamedPoset::BruhatS3);
        assert_eq!(lattice_ops(&bruhat).unwrap_err(), PosetError::NotLattice);
        assert!(bruhat.is_eulerian());
        let nc4 = named(NamedPoset::NonCrossing(4));
        assert!(lattice_ops(&nc4).is_ok());
    }

    #[test]
    fn bruhat_shape() {
        let b = named(NamedPoset::BruhatS3);
        assert_eq!(b.covers().len(), 8);
        let rank = b.rank_function().unwrap();
        let mut sorted = rank.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 1, 2, 2, 3]);
        // Every atom sits below every coatom, so the flag h-vector is all
        // ones and the cd-index collapses to a single word.
        assert_eq!(cd_index(&b).unwrap(), WordPoly::from_ints(&[("cc", 1)]));
    }

    #[test]
    fn boolean_flag_vectors() {
        let b3 = named(NamedPoset::Boolean(3));
        let f = flag_f_vector(&b3).unwrap();
        assert_eq!(f[&vec![]], zi(1));
        assert_eq!(f[&vec![1]], zi(3));
        assert_eq!(f[&vec![2]], zi(3));
        assert_eq!(f[&vec![1, 2]], zi(6));
        let h = flag_h_vector(&b3).unwrap();
        assert_eq!(h[&vec![]], zi(1));
        assert_eq!(h[&vec![1]], zi(2));
        assert_eq!(h[&vec![2]], zi(2));
        assert_eq!(h[&vec![1, 2]], zi(1));
        assert_eq!(
            cd_index(&b3).unwrap(),
            WordPoly::from_ints(&[("cc", 1), ("d", 1)])
        );
    }

    #[test]
    fn polygon_cd_index() {
        let square = named(NamedPoset::PolygonFaces(4));
        assert!(square.is_eulerian());
        let cd = cd_index(&square).unwrap();
        assert_eq!(cd, WordPoly::from_ints(&[("cc", 1), ("d", 2)]));
        assert_eq!(cd.to_string(), "c^2 + 2d");
    }

    #[test]
    fn prism_flag_data() {
        let prism = named(NamedPoset::HexagonalPrismFaces);
        assert_eq!(prism.len(), 40);
        let f = flag_f_vector(&prism).unwrap();
        assert_eq!(f[&vec![1]], zi(12));
        assert_eq!(f[&vec![2]], zi(18));
        assert_eq!(f[&vec![3]], zi(8));
        assert_eq!(f[&vec![1, 2]], zi(36));
        assert_eq!(f[&vec![1, 3]], zi(36));
        assert_eq!(f[&vec![2, 3]], zi(36));
        assert_eq!(f[&vec![1, 2, 3]], zi(72));
        let h = flag_h_vector(&prism).unwrap();
        assert_eq!(h[&vec![]], zi(1));
        assert_eq!(h[&vec![1]], zi(11));
        assert_eq!(h[&vec![2]], zi(17));
        assert_eq!(h[&vec![3]], zi(7));
        assert_eq!(h[&vec![1, 2]], zi(7));
        assert_eq!(h[&vec![1, 3]], zi(17));
        assert_eq!(h[&vec![2, 3]], zi(11));
        assert_eq!(h[&vec![1, 2, 3]], zi(1));
        let cd = cd_index(&prism).unwrap();
        assert_eq!(
            cd,
            WordPoly::from_ints(&[("ccc", 1), ("cd", 6), ("dc", 10)])
        );
        assert_eq!(cd.to_string(), "c^3 + 6cd + 10dc");
    }

    #[test]
    fn non_eulerian_rejected() {
        let chain = named(NamedPoset::Chain(4));
        assert_eq!(cd_index(&chain).unwrap_err(), PosetError::NotEulerian);
        let anti = named(NamedPoset::Antichain(2));
        assert_eq!(flag_f_vector(&anti).unwrap_err(), PosetError::NotBounded);
    }

    #[test]
    fn word_poly_display() {
        let w = WordPoly::from_ints(&[("", 1)]);
        assert_eq!(w.to_string(), "1");
        let v = WordPoly::from_ints(&[("ccd", 2), ("dc", -1)]);
        assert_eq!(v.to_string(), "2c^2d - dc");
        assert_eq!(WordPoly::from_ints(&[]).to_string(), "0");
    }
}
