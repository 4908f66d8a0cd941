//! Independent brute-force counters used to validate the linear-algebra
//! backends. Everything here enumerates explicitly, so sizes must stay
//! small; the fast paths elsewhere are tested against these.

use crate::graphcount::Graph;
use crate::util::Z;
use itertools::Itertools;
use num_traits::{One, Zero};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// False when x and y were already joined.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        true
    }
}

/// Expand multiplicity-weighted edges into individual copies.
fn edge_instances(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &(u, v, m) in g.edges() {
        for _ in 0..m {
            out.push((u, v));
        }
    }
    out
}

/// Count spanning trees by enumerating all (n-1)-edge subsets.
pub fn spanning_trees_brute(g: &Graph) -> Z {
    let n = g.vertex_count();
    if n == 0 {
        return Z::zero();
    }
    let edges = edge_instances(g);
    let mut count = Z::zero();
    if n == 1 {
        return Z::from(1);
    }
    for subset in (0..edges.len()).combinations(n - 1) {
        let mut uf = UnionFind::new(n);
        if subset.iter().all(|&i| {
            let (u, v) = edges[i];
            u != v && uf.union(u, v)
        }) {
            count += 1;
        }
    }
    count
}

/// Count oriented spanning trees with every non-root vertex on a directed
/// path toward the root, by assigning each non-root vertex one out-edge.
pub fn in_trees_brute(g: &Graph, root: &str) -> Z {
    let n = g.vertex_count();
    let r = g.vertex(root).expect("root must exist");
    let edges = edge_instances(g);
    let mut choices: Vec<Vec<usize>> = vec![vec![]; n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u != v {
            choices[u].push(i);
        }
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| v != r).collect();
    let mut count = Z::zero();
    let mut pick = vec![usize::MAX; n];
    fn rec(
        vertices: &[usize],
        level: usize,
        choices: &[Vec<usize>],
        edges: &[(usize, usize)],
        pick: &mut Vec<usize>,
        r: usize,
        count: &mut Z,
    ) {
        if level == vertices.len() {
            // follow the chosen out-edges; every vertex must reach the root
            for &start in vertices {
                let mut cur = start;
                let mut steps = 0;
                while cur != r {
                    cur = edges[pick[cur]].1;
                    steps += 1;
                    if steps > vertices.len() {
                        return;
                    }
                }
            }
            *count += 1;
            return;
        }
        let v = vertices[level];
        for &e in &choices[v] {
            pick[v] = e;
            rec(vertices, level + 1, choices, edges, pick, r, count);
        }
    }
    rec(&vertices, 0, &choices, &edges, &mut pick, r, &mut count);
    count
}

/// Count Eulerian cycles up to rotation by backtracking over edge
/// sequences that begin with a fixed first edge.
pub fn eulerian_cycles_brute(g: &Graph) -> Z {
    let edges = edge_instances(g);
    if edges.is_empty() {
        return Z::zero();
    }
    let mut by_tail: Vec<Vec<usize>> = vec![vec![]; g.vertex_count()];
    for (i, &(u, _)) in edges.iter().enumerate() {
        by_tail[u].push(i);
    }
    let mut used = vec![false; edges.len()];
    used[0] = true;
    fn rec(
        at: usize,
        used_count: usize,
        edges: &[(usize, usize)],
        by_tail: &[Vec<usize>],
        used: &mut Vec<bool>,
        home: usize,
    ) -> u64 {
        if used_count == edges.len() {
            return u64::from(at == home);
        }
        let mut total = 0;
        for &e in &by_tail[at] {
            if !used[e] {
                used[e] = true;
                total += rec(edges[e].1, used_count + 1, edges, by_tail, used, home);
                used[e] = false;
            }
        }
        total
    }
    Z::from(rec(edges[0].1, 1, &edges, &by_tail, &mut used, edges[0].0))
}

/// Monomer-dimer coverings of an h x w rectangle: every cell carries a
/// monomer or half of a domino.
pub fn monomer_dimer_rect_brute(h: usize, w: usize) -> Z {
    let cells: Vec<(i64, i64)> = (0..h as i64)
        .flat_map(|r| (0..w as i64).map(move |c| (r, c)))
        .collect();
    fn rec(cells: &[(i64, i64)], covered: &mut Vec<bool>) -> u64 {
        let Some(first) = covered.iter().position(|&c| !c) else {
            return 1;
        };
        covered[first] = true;
        let (r, c) = cells[first];
        // monomer
        let mut total = rec(cells, covered);
        // domino to the right or downward
        for next in [(r, c + 1), (r + 1, c)] {
            if let Some(j) = cells.iter().position(|&p| p == next) {
                if !covered[j] {
                    covered[j] = true;
                    total += rec(cells, covered);
                    covered[j] = false;
                }
            }
        }
        covered[first] = false;
        total
    }
    Z::from(rec(&cells, &mut vec![false; cells.len()]))
}

/// Perfect domino tilings of an arbitrary cell set.
pub fn domino_tilings_brute(cells: &[(i64, i64)]) -> Z {
    let mut cells = cells.to_vec();
    cells.sort_unstable();
    cells.dedup();
    fn rec(cells: &[(i64, i64)], covered: &mut Vec<bool>) -> u64 {
        let Some(first) = covered.iter().position(|&c| !c) else {
            return 1;
        };
        covered[first] = true;
        let (r, c) = cells[first];
        let mut total = 0;
        for next in [(r, c + 1), (r + 1, c)] {
            if let Ok(j) = cells.binary_search(&next) {
                if !covered[j] {
                    covered[j] = true;
                    total += rec(cells, covered);
                    covered[j] = false;
                }
            }
        }
        covered[first] = false;
        total
    }
    Z::from(rec(&cells, &mut vec![false; cells.len()]))
}

/// Words over the alphabet with no forbidden factor, counted by direct
/// enumeration.
pub fn words_avoiding_brute(alphabet: &[char], forbidden: &[&str], n: usize) -> u64 {
    fn rec(word: &mut String, left: usize, alphabet: &[char], forbidden: &[&str]) -> u64 {
        if forbidden.iter().any(|f| word.ends_with(f)) {
            return 0;
        }
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for &c in alphabet {
            word.push(c);
            total += rec(word, left - 1, alphabet, forbidden);
            word.pop();
        }
        total
    }
    rec(&mut String::new(), n, alphabet, forbidden)
}

/// Linear extensions of a partial order on 0..n given by its strict
/// comparability predicate.
pub fn linear_extensions_brute(n: usize, less: impl Fn(usize, usize) -> bool) -> u64 {
    let mut count = 0;
    for perm in (0..n).permutations(n) {
        let mut pos = vec![0; n];
        for (p, &x) in perm.iter().enumerate() {
            pos[x] = p;
        }
        let ok = (0..n).all(|i| (0..n).all(|j| !less(i, j) || pos[i] < pos[j]));
        if ok {
            count += 1;
        }
    }
    if n == 0 {
        1
    } else {
        count
    }
}

/// Up-down permutations: ascents and descents strictly alternate, starting
/// with an ascent.
pub fn alternating_permutations_brute(n: usize) -> u64 {
    if n <= 1 {
        return 1;
    }
    let mut count = 0;
    for perm in (0..n).permutations(n) {
        let ok = (0..n - 1).all(|i| {
            if i % 2 == 0 {
                perm[i] < perm[i + 1]
            } else {
                perm[i] > perm[i + 1]
            }
        });
        if ok {
            count += 1;
        }
    }
    count
}

pub fn derangements_brute(n: usize) -> u64 {
    (0..n)
        .permutations(n)
        .filter(|p| p.iter().enumerate().all(|(i, &x)| x != i))
        .count() as u64
}

pub fn involutions_brute(n: usize) -> u64 {
    (0..n)
        .permutations(n)
        .filter(|p| p.iter().enumerate().all(|(i, &x)| p[x] == i))
        .count() as u64
}

/// Permutations of 0..n with exactly k descents.
pub fn eulerian_number_brute(n: usize, k: usize) -> u64 {
    if n == 0 {
        return u64::from(k == 0);
    }
    (0..n)
        .permutations(n)
        .filter(|p| p.windows(2).filter(|w| w[0] > w[1]).count() == k)
        .count() as u64
}

/// Partitions of n with parts drawn from `allowed`, optionally distinct,
/// optionally bounded in count.
pub fn partitions_brute(
    n: usize,
    allowed: impl Fn(usize) -> bool + Copy,
    distinct: bool,
    max_parts: Option<usize>,
) -> u64 {
    fn rec(
        left: usize,
        max_part: usize,
        parts_used: usize,
        allowed: impl Fn(usize) -> bool + Copy,
        distinct: bool,
        max_parts: Option<usize>,
    ) -> u64 {
        if left == 0 {
            return 1;
        }
        if max_parts.is_some_and(|m| parts_used >= m) {
            return 0;
        }
        let mut total = 0;
        for p in (1..=max_part.min(left)).rev() {
            if !allowed(p) {
                continue;
            }
            let next_max = if distinct { p.saturating_sub(1) } else { p };
            total += rec(left - p, next_max, parts_used + 1, allowed, distinct, max_parts);
        }
        total
    }
    rec(n, n, 0, allowed, distinct, max_parts)
}

/// Proper colorings of an undirected graph with q colors.
pub fn proper_colorings_brute(g: &Graph, q: u64) -> Z {
    let n = g.vertex_count();
    let edges = edge_instances(g);
    let mut colors = vec![0u64; n];
    fn rec(v: usize, n: usize, q: u64, colors: &mut Vec<u64>, edges: &[(usize, usize)]) -> u64 {
        if v == n {
            return 1;
        }
        let mut total = 0;
        'next: for c in 0..q {
            colors[v] = c;
            for &(a, b) in edges {
                if a.max(b) == v && colors[a] == colors[b] {
                    continue 'next;
                }
            }
            total += rec(v + 1, n, q, colors, edges);
        }
        total
    }
    Z::from(rec(0, n, q, &mut colors, &edges))
}

/// Orientations of the edges admitting no directed cycle.
pub fn acyclic_orientations_brute(g: &Graph) -> Z {
    let n = g.vertex_count();
    let edges = edge_instances(g);
    if edges.iter().any(|&(u, v)| u == v) {
        return Z::zero();
    }
    let m = edges.len();
    let mut count = Z::zero();
    'orient: for mask in 0u64..1 << m {
        let mut adj: Vec<Vec<usize>> = vec![vec![]; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                adj[u].push(v);
            } else {
                adj[v].push(u);
            }
        }
        // 0 = unseen, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        fn has_cycle(v: usize, adj: &[Vec<usize>], state: &mut Vec<u8>) -> bool {
            state[v] = 1;
            for &w in &adj[v] {
                if state[w] == 1 || (state[w] == 0 && has_cycle(w, adj, state)) {
                    return true;
                }
            }
            state[v] = 2;
            false
        }
        for v in 0..n {
            if state[v] == 0 && has_cycle(v, &adj, &mut state) {
                continue 'orient;
            }
        }
        count += 1;
    }
    count
}

/// Nowhere-zero flows with values in Z_t, with edges oriented as listed.
pub fn nowhere_zero_flows_brute(g: &Graph, t: u64) -> Z {
    let edges = edge_instances(g);
    let n = g.vertex_count();
    let m = edges.len();
    if t == 0 {
        return Z::zero();
    }
    let mut values = vec![0u64; m];
    fn rec(
        e: usize,
        m: usize,
        t: u64,
        values: &mut Vec<u64>,
        edges: &[(usize, usize)],
        n: usize,
    ) -> u64 {
        if e == m {
            let mut net = vec![0i64; n];
            for (i, &(u, v)) in edges.iter().enumerate() {
                net[u] += values[i] as i64;
                net[v] -= values[i] as i64;
            }
            return u64::from(net.iter().all(|&x| x.rem_euclid(t as i64) == 0));
        }
        let mut total = 0;
        for val in 1..t {
            values[e] = val;
            total += rec(e + 1, m, t, values, edges, n);
        }
        total
    }
    Z::from(rec(0, m, t, &mut values, &edges, n))
}

/// Edge subsets containing no cycle.
pub fn forests_brute(g: &Graph) -> Z {
    let n = g.vertex_count();
    let edges = edge_instances(g);
    let m = edges.len();
    assert!(m <= 24, "forest enumeration limited to small graphs");
    let mut count = Z::zero();
    'subset: for mask in 0u64..1 << m {
        let mut uf = UnionFind::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 && (u == v || !uf.union(u, v)) {
                continue 'subset;
            }
        }
        count += 1;
    }
    count
}

/// Edge subsets that keep every pair of vertices connected.
pub fn connected_spanning_brute(g: &Graph) -> Z {
    let n = g.vertex_count();
    let edges = edge_instances(g);
    let m = edges.len();
    assert!(m <= 24, "spanning enumeration limited to small graphs");
    let mut count = Z::zero();
    for mask in 0u64..1 << m {
        let mut uf = UnionFind::new(n);
        let mut comps = n;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 && u != v && uf.union(u, v) {
                comps -= 1;
            }
        }
        if comps == 1 {
            count += 1;
        }
    }
    count
}

/// Vertex-disjoint path systems connecting `sources[i]` to `sinks[i]` for
/// every i simultaneously. Paths follow directed edges; disjointness covers
/// endpoints, so repeated sources give zero.
pub fn disjoint_routings_brute(
    n: usize,
    edges: &[(usize, usize)],
    sources: &[usize],
    sinks: &[usize],
) -> Z {
    assert_eq!(sources.len(), sinks.len());
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
    }

    fn extend(
        adj: &[Vec<usize>],
        sources: &[usize],
        sinks: &[usize],
        idx: usize,
        at: usize,
        used: &mut Vec<bool>,
        count: &mut Z,
    ) {
        if at == sinks[idx] {
            if idx + 1 == sources.len() {
                *count += 1;
            } else {
                let s = sources[idx + 1];
                if !used[s] {
                    used[s] = true;
                    extend(adj, sources, sinks, idx + 1, s, used, count);
                    used[s] = false;
                }
            }
            return;
        }
        for &next in &adj[at] {
            if !used[next] {
                used[next] = true;
                extend(adj, sources, sinks, idx, next, used, count);
                used[next] = false;
            }
        }
    }

    let mut count = Z::zero();
    if sources.is_empty() {
        return Z::one();
    }
    let mut used = vec![false; n];
    let s = sources[0];
    used[s] = true;
    extend(&adj, sources, sinks, 0, s, &mut used, &mut count);
    count
}

/// Signed count of disjoint path systems: sum over sink permutations of
/// sign(s) times the systems routing `sources[i]` to `sinks[s(i)]`. Equals
/// the path-matrix determinant on any acyclic digraph.
pub fn signed_routings_brute(
    n: usize,
    edges: &[(usize, usize)],
    sources: &[usize],
    sinks: &[usize],
) -> Z {
    assert_eq!(sources.len(), sinks.len());
    let k = sinks.len();
    let mut total = Z::zero();
    for perm in (0..k).permutations(k) {
        let mut sign = 1i64;
        let mut seen = vec![false; k];
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = perm[at];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        let permuted: Vec<usize> = perm.iter().map(|&j| sinks[j]).collect();
        total += disjoint_routings_brute(n, edges, sources, &permuted) * sign;
    }
    total
}
