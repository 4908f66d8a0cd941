//! Exact linear-algebra counting on graphs: walk counting through powers of
//! the adjacency matrix, rational walk generating functions, spanning-tree
//! and arborescence counts via Laplacian cofactors, Eulerian-cycle counts,
//! and transfer graphs for forbidden-factor word problems.

use crate::linalg::{det_bareiss, det_poly, QMatrix};
use crate::poly::{Poly, RationalFn};
use crate::util::{factorial, q_from_z, Q, Z};
use num_traits::{One, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphCountError {
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    #[error("operation requires a {0} graph")]
    KindMismatch(&'static str),
    #[error("loops are not allowed here")]
    LoopPresent,
    #[error("vertex {vertex} has in-degree {indeg} but out-degree {outdeg}")]
    NotEulerian { vertex: String, indeg: u64, outdeg: u64 },
    #[error("bad graph parameters: {0}")]
    BadSpec(String),
}

/// A finite graph with labeled vertices, optional direction, and
/// multiplicity-weighted edges. Loops are permitted; operations that cannot
/// tolerate them say so.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize, u64)>,
}

impl Graph {
    pub fn new<S: AsRef<str>>(directed: bool, labels: &[S]) -> Result<Self, GraphCountError> {
        let mut index = HashMap::new();
        let mut owned = Vec::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            let l = l.as_ref().to_string();
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphCountError::BadSpec(format!("duplicate vertex label {l}")));
            }
            owned.push(l);
        }
        Ok(Graph { directed, labels: owned, index, edges: vec![] })
    }

    /// Vertices labeled "0".."n-1".
    pub fn numeric(directed: bool, n: usize) -> Self {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Graph::new(directed, &labels).expect("numeric labels are distinct")
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Result<usize, GraphCountError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| GraphCountError::UnknownVertex(label.to_string()))
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<(), GraphCountError> {
        self.add_edge_mult(u, v, 1)
    }

    pub fn add_edge_mult(&mut self, u: &str, v: &str, mult: u64) -> Result<(), GraphCountError> {
        let u = self.vertex(u)?;
        let v = self.vertex(v)?;
        self.add_edge_idx(u, v, mult);
        Ok(())
    }

    pub fn add_edge_idx(&mut self, u: usize, v: usize, mult: u64) {
        assert!(u < self.vertex_count() && v < self.vertex_count());
        if mult > 0 {
            self.edges.push((u, v, mult));
        }
    }

    /// Edges as (tail index, head index, multiplicity).
    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v, _)| u == v)
    }

    /// Total edge multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges.iter().map(|&(_, _, m)| m).sum()
    }

    /// a[u][v] = number of edges from u to v (symmetrized when undirected).
    pub fn adjacency(&self) -> Vec<Vec<Z>> {
        let n = self.vertex_count();
        let mut a = vec![vec![Z::zero(); n]; n];
        for &(u, v, m) in &self.edges {
            a[u][v] += Z::from(m);
            if !self.directed && u != v {
                a[v][u] += Z::from(m);
            }
        }
        a
    }

    pub fn out_degree(&self, v: usize) -> u64 {
        let mut d = 0;
        for &(a, b, m) in &self.edges {
            if a == v {
                d += m;
            }
            if !self.directed && b == v && a != b {
                d += m;
            }
        }
        d
    }

    pub fn in_degree(&self, v: usize) -> u64 {
        let mut d = 0;
        for &(a, b, m) in &self.edges {
            if b == v {
                d += m;
            }
            if !self.directed && a == v && a != b {
                d += m;
            }
        }
        d
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b, _) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    DirectedLaplacian,
    Incidence,
}

/// Adjacency, Laplacian (degree minus adjacency), directed Laplacian
/// (out-degree minus adjacency, loops cancel), or signed incidence matrix.
/// Undirected incidence orients each edge from its lower to higher index;
/// loops contribute zero columns.
pub fn graph_matrices(g: &Graph, kind: MatrixKind) -> Result<QMatrix, GraphCountError> {
    let n = g.vertex_count();
    match kind {
        MatrixKind::Adjacency => {
            let a = g.adjacency();
            Ok(QMatrix::from_fn(n, n, |i, j| q_from_z(a[i][j].clone())))
        }
        MatrixKind::Laplacian => {
            if g.is_directed() {
                return Err(GraphCountError::KindMismatch("undirected"));
            }
            let mut l = QMatrix::zeros(n, n);
            for &(u, v, m) in g.edges() {
                if u == v {
                    continue;
                }
                let m = q_from_z(Z::from(m));
                l[(u, u)] += &m;
                l[(v, v)] += &m;
                l[(u, v)] -= &m;
                l[(v, u)] -= &m;
            }
            Ok(l)
        }
        MatrixKind::DirectedLaplacian => {
            if !g.is_directed() {
                return Err(GraphCountError::KindMismatch("directed"));
            }
            let mut l = QMatrix::zeros(n, n);
            for &(u, v, m) in g.edges() {
                if u == v {
                    continue;
                }
                let m = q_from_z(Z::from(m));
                l[(u, u)] += &m;
                l[(u, v)] -= &m;
            }
            Ok(l)
        }
        MatrixKind::Incidence => {
            let mut cols = Vec::new();
            for &(u, v, m) in g.edges() {
                for _ in 0..m {
                    cols.push((u, v));
                }
            }
            let mut b = QMatrix::zeros(n, cols.len());
            for (j, &(u, v)) in cols.iter().enumerate() {
                if u == v {
                    continue;
                }
                let (tail, head) = if g.is_directed() || u < v { (u, v) } else { (v, u) };
                b[(tail, j)] = Q::one();
                b[(head, j)] = -Q::one();
            }
            Ok(b)
        }
    }
}

fn mat_mul_z(a: &[Vec<Z>], b: &[Vec<Z>]) -> Vec<Vec<Z>> {
    let n = a.len();
    let mut out = vec![vec![Z::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn mat_pow_z(a: &[Vec<Z>], mut e: usize) -> Vec<Vec<Z>> {
    let n = a.len();
    let mut result: Vec<Vec<Z>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Z::one() } else { Z::zero() }).collect())
        .collect();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul_z(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul_z(&base, &base);
        }
    }
    result
}

/// Number of walks of length n from u to v: the (u, v) entry of the n-th
/// power of the adjacency matrix.
pub fn count_walks(g: &Graph, u: &str, v: &str, n: usize) -> Result<Z, GraphCountError> {
    let ui = g.vertex(u)?;
    let vi = g.vertex(v)?;
    let p = mat_pow_z(&g.adjacency(), n);
    Ok(p[ui][vi].clone())
}

/// Sum of walk counts of length n over all ordered vertex pairs.
pub fn total_walks(g: &Graph, n: usize) -> Z {
    let p = mat_pow_z(&g.adjacency(), n);
    p.iter().flatten().sum()
}

fn identity_minus_x_adjacency(g: &Graph) -> Vec<Vec<Poly>> {
    let a = g.adjacency();
    let n = g.vertex_count();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = vec![Q::zero(); 2];
                    if i == j {
                        p[0] = Q::one();
                    }
                    p[1] = -q_from_z(a[i][j].clone());
                    Poly::new(p)
                })
                .collect()
        })
        .collect()
}

/// Generating function of walk counts from u to v: the (v, u) cofactor of
/// I - xA over det(I - xA).
pub fn walk_gf(g: &Graph, u: &str, v: &str) -> Result<RationalFn, GraphCountError> {
    let ui = g.vertex(u)?;
    let vi = g.vertex(v)?;
    let m = identity_minus_x_adjacency(g);
    let den = det_poly(&m);
    let minor: Vec<Vec<Poly>> = m
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != vi)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != ui)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect();
    let mut num = det_poly(&minor);
    if (ui + vi) % 2 == 1 {
        num = num.neg();
    }
    Ok(RationalFn::new(num, den))
}

/// Generating function of closed-walk counts (trace of A^n for n >= 1):
/// -x Q'(x) / Q(x) with Q = det(I - xA).
pub fn closed_walk_gf(g: &Graph) -> RationalFn {
    let q = det_poly(&identity_minus_x_adjacency(g));
    let num = q.derivative().mul(&Poly::x()).neg();
    RationalFn::new(num, q)
}

/// Number of spanning trees of a connected loopless undirected graph, by a
/// principal cofactor of the Laplacian. A disconnected graph yields 0.
pub fn spanning_tree_count(g: &Graph) -> Result<Z, GraphCountError> {
    if g.is_directed() {
        return Err(GraphCountError::KindMismatch("undirected"));
    }
    if g.has_loop() {
        return Err(GraphCountError::LoopPresent);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Z::zero());
    }
    Ok(laplacian_cofactor_z(g, 0))
}

/// Laplacian with row and column `v` deleted, as an integer determinant.
fn laplacian_cofactor_z(g: &Graph, v: usize) -> Z {
    let n = g.vertex_count();
    let mut l = vec![vec![Z::zero(); n]; n];
    for &(a, b, m) in g.edges() {
        if a == b {
            continue;
        }
        let m = Z::from(m);
        l[a][a] += &m;
        l[a][b] -= &m;
        if !g.is_directed() {
            l[b][b] += &m;
            l[b][a] -= &m;
        }
    }
    let minor: Vec<Vec<Z>> = l
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, row)| {
            row.into_iter()
                .enumerate()
                .filter(|&(j, _)| j != v)
                .map(|(_, x)| x)
                .collect()
        })
        .collect();
    det_bareiss(minor)
}

/// Number of oriented spanning trees with all paths directed toward the
/// root, by the root cofactor of the out-degree Laplacian. Loops are
/// ignored: no tree can use them.
pub fn rooted_tree_count(g: &Graph, root: &str) -> Result<Z, GraphCountError> {
    if !g.is_directed() {
        return Err(GraphCountError::KindMismatch("directed"));
    }
    let v = g.vertex(root)?;
    Ok(laplacian_cofactor_z(g, v))
}

/// Number of Eulerian cycles counted up to rotation: a rooted-tree count
/// times the product of (outdeg - 1)! over vertices that carry edges.
pub fn eulerian_count(g: &Graph) -> Result<Z, GraphCountError> {
    if !g.is_directed() {
        return Err(GraphCountError::KindMismatch("directed"));
    }
    let n = g.vertex_count();
    let mut outdeg = vec![0u64; n];
    let mut indeg = vec![0u64; n];
    for &(u, v, m) in g.edges() {
        outdeg[u] += m;
        indeg[v] += m;
    }
    for v in 0..n {
        if outdeg[v] != indeg[v] {
            return Err(GraphCountError::NotEulerian {
                vertex: g.labels[v].clone(),
                indeg: indeg[v],
                outdeg: outdeg[v],
            });
        }
    }
    let active: Vec<usize> = (0..n).filter(|&v| outdeg[v] > 0).collect();
    let Some(&root) = active.first() else {
        return Ok(Z::zero());
    };
    // Restrict to active vertices so isolated ones cannot zero the cofactor.
    let sub_labels: Vec<&String> = active.iter().map(|&v| &g.labels[v]).collect();
    let mut sub = Graph::new(true, &sub_labels).expect("labels stay distinct");
    let pos: HashMap<usize, usize> =
        active.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for &(u, v, m) in g.edges() {
        sub.add_edge_idx(pos[&u], pos[&v], m);
    }
    let trees = laplacian_cofactor_z(&sub, pos[&root]);
    let mut count = trees;
    for &v in &active {
        count *= factorial((outdeg[v] - 1) as usize);
    }
    Ok(count)
}

/// Parameterized graph families with documented canonical labelings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// K_n, vertices 0..n-1.
    Complete(usize),
    /// K_{m,n}, vertices a0..a{m-1}, b0..b{n-1}.
    CompleteBipartite(usize, usize),
    /// n-dimensional cube, vertices are length-n bitstrings.
    Cube(usize),
    /// Complete graph on pairs 1,1',..,n,n' minus the matching i--i'.
    Hyperoctahedral(usize),
    /// m x n grid, vertices "i,j" with row-adjacent and column-adjacent edges.
    Grid(usize, usize),
    /// Undirected cycle on n >= 3 vertices 0..n-1.
    Cycle(usize),
    /// Directed cycle on n >= 1 vertices 0..n-1.
    DirectedCycle(usize),
    /// De Bruijn graph: vertices are (n-1)-letter words over k symbols,
    /// edges append one symbol and drop the first.
    DeBruijn(usize, usize),
    /// Wheel: hub "h" joined to an n-cycle 0..n-1.
    Wheel(usize),
}

pub fn build_named_graph(spec: &NamedGraph) -> Result<Graph, GraphCountError> {
    let bad = |msg: &str| Err(GraphCountError::BadSpec(msg.to_string()));
    match *spec {
        NamedGraph::Complete(n) => {
            if n == 0 {
                return bad("complete graph needs at least one vertex");
            }
            let mut g = Graph::numeric(false, n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge_idx(u, v, 1);
                }
            }
            Ok(g)
        }
        NamedGraph::CompleteBipartite(m, n) => {
            if m == 0 || n == 0 {
                return bad("bipartite parts must be nonempty");
            }
            let labels: Vec<String> = (0..m)
                .map(|i| format!("a{i}"))
                .chain((0..n).map(|j| format!("b{j}")))
                .collect();
            let mut g = Graph::new(false, &labels)?;
            for i in 0..m {
                for j in 0..n {
                    g.add_edge_idx(i, m + j, 1);
                }
            }
            Ok(g)
        }
        NamedGraph::Cube(n) => {
            if n == 0 || n > 20 {
                return bad("cube dimension must be in 1..=20");
            }
            let size = 1usize << n;
            let labels: Vec<String> =
                (0..size).map(|v| format!("{v:0width$b}", width = n)).collect();
            let mut g = Graph::new(false, &labels)?;
            for v in 0..size {
                for bit in 0..n {
                    let w = v ^ (1 << bit);
                    if v < w {
                        g.add_edge_idx(v, w, 1);
                    }
                }
            }
            Ok(g)
        }
        NamedGraph::Hyperoctahedral(n) => {
            if n == 0 {
                return bad("hyperoctahedral index must be positive");
            }
            let labels: Vec<String> = (1..=n)
                .flat_map(|i| [format!("{i}"), format!("{i}'")])
                .collect();
            let mut g = Graph::new(false, &labels)?;
            let size = 2 * n;
            for u in 0..size {
                for v in u + 1..size {
                    // vertices 2k and 2k+1 are the matched pair k+1, (k+1)'
                    if u / 2 == v / 2 {
                        continue;
                    }
                    g.add_edge_idx(u, v, 1);
                }
            }
            Ok(g)
        }
        NamedGraph::Grid(m, n) => {
            if m == 0 || n == 0 {
                return bad("grid dimensions must be positive");
            }
            let labels: Vec<String> = (0..m)
                .flat_map(|i| (0..n).map(move |j| format!("{i},{j}")))
                .collect();
            let mut g = Graph::new(false, &labels)?;
            let at = |i: usize, j: usize| i * n + j;
            for i in 0..m {
                for j in 0..n {
                    if i + 1 < m {
                        g.add_edge_idx(at(i, j), at(i + 1, j), 1);
                    }
                    if j + 1 < n {
                        g.add_edge_idx(at(i, j), at(i, j + 1), 1);
                    }
                }
            }
            Ok(g)
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return bad("undirected cycle needs at least 3 vertices");
            }
            let mut g = Graph::numeric(false, n);
            for v in 0..n {
                g.add_edge_idx(v, (v + 1) % n, 1);
            }
            Ok(g)
        }
        NamedGraph::DirectedCycle(n) => {
            if n == 0 {
                return bad("directed cycle needs at least one vertex");
            }
            let mut g = Graph::numeric(true, n);
            for v in 0..n {
                g.add_edge_idx(v, (v + 1) % n, 1);
            }
            Ok(g)
        }
        NamedGraph::DeBruijn(k, n) => {
            if k < 2 || n == 0 {
                return bad("de Bruijn graph needs k >= 2 symbols and order n >= 1");
            }
            if k.saturating_pow(n as u32) > 1 << 16 {
                return bad("de Bruijn graph too large");
            }
            let m = n - 1;
            let words = all_words(k, m);
            let labels: Vec<String> = words.iter().map(|w| word_label(w)).collect();
            let mut g = Graph::new(true, &labels)?;
            let index: HashMap<&[u8], usize> =
                words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
            for (i, w) in words.iter().enumerate() {
                for c in 0..k as u8 {
                    let mut t = w[1.min(w.len())..].to_vec();
                    if m > 0 {
                        t.push(c);
                    }
                    g.add_edge_idx(i, index[t.as_slice()], 1);
                }
            }
            Ok(g)
        }
        NamedGraph::Wheel(n) => {
            if n < 3 {
                return bad("wheel rim needs at least 3 vertices");
            }
            let mut labels: Vec<String> = (0..n).map(|v| v.to_string()).collect();
            labels.push("h".to_string());
            let mut g = Graph::new(false, &labels)?;
            for v in 0..n {
                g.add_edge_idx(v, (v + 1) % n, 1);
                g.add_edge_idx(v, n, 1);
            }
            Ok(g)
        }
    }
}

fn all_words(k: usize, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k as u8).map(move |c| {
                    let mut w2 = w.clone();
                    w2.push(c);
                    w2
                })
            })
            .collect();
    }
    out
}

fn word_label(w: &[u8]) -> String {
    if w.is_empty() {
        return "^".to_string();
    }
    w.iter().map(|&c| char::from(b'0' + c)).collect()
}

fn contains_forbidden(word: &[u8], forbidden: &[Vec<u8>]) -> bool {
    forbidden
        .iter()
        .any(|f| word.windows(f.len()).any(|w| w == f.as_slice()))
}

/// Transfer graph whose length-m walks are exactly the words of length
/// m + L - 1 avoiding every forbidden factor, where L is the longest
/// forbidden length. Vertices are the allowed windows of length L - 1.
pub fn forbidden_word_automaton(
    alphabet: &[char],
    forbidden: &[&str],
) -> Result<Graph, GraphCountError> {
    let (graph, _) = forbidden_word_automaton_indexed(alphabet, forbidden)?;
    Ok(graph)
}

fn forbidden_word_automaton_indexed(
    alphabet: &[char],
    forbidden: &[&str],
) -> Result<(Graph, Vec<Vec<u8>>), GraphCountError> {
    if alphabet.is_empty() {
        return Err(GraphCountError::BadSpec("alphabet is empty".into()));
    }
    if forbidden.is_empty() || forbidden.iter().any(|f| f.is_empty()) {
        return Err(GraphCountError::BadSpec(
            "forbidden words must be nonempty".into(),
        ));
    }
    let to_sym = |c: char| -> Result<u8, GraphCountError> {
        alphabet
            .iter()
            .position(|&a| a == c)
            .map(|i| i as u8)
            .ok_or_else(|| GraphCountError::BadSpec(format!("symbol {c} not in alphabet")))
    };
    let forbidden: Vec<Vec<u8>> = forbidden
        .iter()
        .map(|f| f.chars().map(to_sym).collect())
        .collect::<Result<_, _>>()?;
    let l = forbidden.iter().map(Vec::len).max().expect("nonempty list");
    let k = alphabet.len();
    let windows: Vec<Vec<u8>> = all_words(k, l - 1)
        .into_iter()
        .filter(|w| !contains_forbidden(w, &forbidden))
        .collect();
    let labels: Vec<String> = windows
        .iter()
        .map(|w| {
            if w.is_empty() {
                "^".to_string()
            } else {
                w.iter().map(|&c| alphabet[c as usize]).collect()
            }
        })
        .collect();
    let mut g = Graph::new(true, &labels)?;
    let index: HashMap<&[u8], usize> =
        windows.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    for (i, w) in windows.iter().enumerate() {
        for c in 0..k as u8 {
            let mut ext = w.clone();
            ext.push(c);
            if contains_forbidden(&ext, &forbidden) {
                continue;
            }
            if let Some(&j) = index.get(&ext[1..]) {
                g.add_edge_idx(i, j, 1);
            }
        }
    }
    Ok((g, windows))
}

/// Number of length-n words over the alphabet avoiding all forbidden
/// factors, counted through the transfer graph.
pub fn avoiding_word_count(
    alphabet: &[char],
    forbidden: &[&str],
    n: usize,
) -> Result<Z, GraphCountError> {
    let (g, windows) = forbidden_word_automaton_indexed(alphabet, forbidden)?;
    let m = windows.first().map_or(0, Vec::len);
    if n < m {
        let forbidden_syms: Vec<Vec<u8>> = {
            let to_sym = |c: char| alphabet.iter().position(|&a| a == c).unwrap() as u8;
            forbidden.iter().map(|f| f.chars().map(to_sym).collect()).collect()
        };
        let count = all_words(alphabet.len(), n)
            .into_iter()
            .filter(|w| !contains_forbidden(w, &forbidden_syms))
            .count();
        return Ok(Z::from(count));
    }
    Ok(total_walks(&g, n - m))
}

/// Fibonacci(n+1) with Fibonacci(1) = Fibonacci(2) = 1: the number of
/// monomer-dimer tilings of a 1 x n strip.
fn strip_tilings(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        let c = a + b;
        a = b;
        b = c;
    }
    a
}

/// Transfer graph for monomer-dimer tilings of an h x n strip. Vertices
/// are occupancy patterns of a column boundary (1 = free on entry); the
/// walk count of length n from the all-free vertex to itself is the number
/// of tilings of the h x n rectangle by monomers, vertical dimers, and
/// horizontal dimers.
pub fn monomer_dimer_strip_graph(h: usize) -> Graph {
    assert!(h >= 1 && h <= 12, "strip height out of supported range");
    let size = 1usize << h;
    let label = |s: usize| -> String {
        (0..h).map(|i| if s >> i & 1 == 1 { '1' } else { '0' }).collect()
    };
    let labels: Vec<String> = (0..size).map(label).collect();
    let mut g = Graph::new(true, &labels).expect("distinct patterns");
    for s in 0..size {
        for t in 0..size {
            // Cells busy on entry now must be free in the next column.
            if (!s & !t) & (size - 1) != 0 {
                continue;
            }
            // Cells free now and not starting a horizontal dimer are covered
            // by monomers and vertical dimers, one run at a time.
            let free = s & t;
            let mut mult = 1u64;
            let mut run = 0usize;
            for i in 0..=h {
                if i < h && free >> i & 1 == 1 {
                    run += 1;
                } else {
                    mult *= strip_tilings(run);
                    run = 0;
                }
            }
            g.add_edge_idx(s, t, mult);
        }
    }
    g
}

/// All-free boundary label for `monomer_dimer_strip_graph`.
pub fn strip_start_label(h: usize) -> String {
    "1".repeat(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::qi;

    fn k(n: usize) -> Graph {
        build_named_graph(&NamedGraph::Complete(n)).unwrap()
    }

    #[test]
    fn complete_graph_matrices() {
        let g = k(3);
        let a = graph_matrices(&g, MatrixKind::Adjacency).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a[(i, j)], if i == j { qi(0) } else { qi(1) });
            }
        }
        let l = graph_matrices(&g, MatrixKind::Laplacian).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(l[(i, j)], if i == j { qi(2) } else { qi(-1) });
            }
        }
        let b = graph_matrices(&g, MatrixKind::Incidence).unwrap();
        assert_eq!(b.mul(&b.transpose()), l);
    }

    #[test]
    fn directed_laplacian_of_cycle() {
        let g = build_named_graph(&NamedGraph::DirectedCycle(3)).unwrap();
        let l = graph_matrices(&g, MatrixKind::DirectedLaplacian).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j {
                    qi(1)
                } else if (i + 1) % 3 == j {
                    qi(-1)
                } else {
                    qi(0)
                };
                assert_eq!(l[(i, j)], expect);
            }
        }
        assert_eq!(
            graph_matrices(&g, MatrixKind::Laplacian),
            Err(GraphCountError::KindMismatch("undirected"))
        );
    }

    #[test]
    fn closed_walks_in_k3() {
        assert_eq!(count_walks(&k(3), "0", "0", 2).unwrap(), Z::from(2));
        let trace: Z = (0..3)
            .map(|v| count_walks(&k(3), &v.to_string(), &v.to_string(), 2).unwrap())
            .sum();
        assert_eq!(trace, Z::from(6));
        assert_eq!(count_walks(&k(3), "0", "0", 0).unwrap(), Z::one());
        assert_eq!(count_walks(&k(3), "0", "1", 0).unwrap(), Z::zero());
        assert!(count_walks(&k(3), "0", "9", 1).is_err());
    }

    #[test]
    fn closed_walk_gf_of_k3() {
        // n-th closed-walk count is 2^n + 2(-1)^n for n >= 1
        let gf = closed_walk_gf(&k(3));
        let coeffs = gf.series_coeffs(8).unwrap();
        for n in 1..=8 {
            let expect = qi((1i64 << n) + 2 * if n % 2 == 0 { 1 } else { -1 });
            assert_eq!(coeffs[n], expect, "length {n}");
        }
    }

    #[test]
    fn walk_gf_single_loop() {
        let mut g = Graph::numeric(true, 1);
        g.add_edge_idx(0, 0, 1);
        let gf = walk_gf(&g, "0", "0").unwrap();
        assert_eq!(gf.num, Poly::one());
        assert_eq!(gf.den, Poly::from_ints(&[1, -1]));
    }

    #[test]
    fn walk_gf_matches_count_walks() {
        let g = build_named_graph(&NamedGraph::Cycle(5)).unwrap();
        let gf = walk_gf(&g, "0", "2").unwrap();
        let coeffs = gf.series_coeffs(12).unwrap();
        for n in 0..=12 {
            assert_eq!(
                coeffs[n],
                crate::util::q_from_z(count_walks(&g, "0", "2", n).unwrap())
            );
        }
    }

    #[test]
    fn aa_avoidance_is_fibonacci() {
        let auto = forbidden_word_automaton(&['a', 'b'], &["aa"]).unwrap();
        assert_eq!(auto.vertex_count(), 2);
        // words of length 4 avoiding factor aa: 8
        assert_eq!(total_walks(&auto, 3), Z::from(8));
        for (n, expect) in [(0, 1u64), (1, 2), (2, 3), (3, 5), (4, 8), (5, 13)] {
            assert_eq!(
                avoiding_word_count(&['a', 'b'], &["aa"], n).unwrap(),
                Z::from(expect)
            );
        }
    }

    #[test]
    fn aa_abba_automaton() {
        let auto = forbidden_word_automaton(&['a', 'b'], &["aa", "abba"]).unwrap();
        assert_eq!(auto.vertex_count(), 5);
        let gf = closed_walk_gf(&auto);
        assert_eq!(gf.den, Poly::from_ints(&[1, -1, -1, 1, -1]));
        let coeffs = gf.series_coeffs(9).unwrap();
        let expect = [0, 1, 3, 1, 7, 6, 15, 15, 31, 37];
        for (n, e) in expect.into_iter().enumerate() {
            assert_eq!(coeffs[n], qi(e), "cyclic words of length {n}");
        }
    }

    #[test]
    fn unary_alphabet_cutoff() {
        for (n, expect) in [(0, 1u64), (1, 1), (2, 0), (3, 0)] {
            assert_eq!(
                avoiding_word_count(&['a'], &["aa"], n).unwrap(),
                Z::from(expect)
            );
        }
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(spanning_tree_count(&k(4)).unwrap(), Z::from(16));
        let k23 = build_named_graph(&NamedGraph::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(spanning_tree_count(&k23).unwrap(), Z::from(12));
        let cube = build_named_graph(&NamedGraph::Cube(3)).unwrap();
        assert_eq!(spanning_tree_count(&cube).unwrap(), Z::from(384));
        let wheel = build_named_graph(&NamedGraph::Wheel(4)).unwrap();
        assert_eq!(spanning_tree_count(&wheel).unwrap(), Z::from(45));
    }

    #[test]
    fn spanning_trees_of_disconnected_graph() {
        let g = Graph::numeric(false, 3);
        assert_eq!(spanning_tree_count(&g).unwrap(), Z::zero());
        let mut looped = Graph::numeric(false, 2);
        looped.add_edge_idx(0, 0, 1);
        assert_eq!(spanning_tree_count(&looped), Err(GraphCountError::LoopPresent));
    }

    #[test]
    fn rooted_trees() {
        let c3 = build_named_graph(&NamedGraph::DirectedCycle(3)).unwrap();
        assert_eq!(rooted_tree_count(&c3, "0").unwrap(), Z::one());
        let db = build_named_graph(&NamedGraph::DeBruijn(2, 3)).unwrap();
        assert_eq!(db.vertex_count(), 4);
        assert_eq!(db.edge_count(), 8);
        for v in db.labels().to_vec() {
            assert_eq!(rooted_tree_count(&db, &v).unwrap(), Z::from(2));
        }
        let mut bi = Graph::numeric(true, 3);
        for u in 0..3 {
            for v in 0..3 {
                if u != v {
                    bi.add_edge_idx(u, v, 1);
                }
            }
        }
        assert_eq!(rooted_tree_count(&bi, "0").unwrap(), Z::from(3));
    }

    #[test]
    fn eulerian_counts() {
        let c3 = build_named_graph(&NamedGraph::DirectedCycle(3)).unwrap();
        assert_eq!(eulerian_count(&c3).unwrap(), Z::one());
        for (k_sym, n, expect) in [(2, 2, 1i64), (2, 3, 2), (2, 4, 16)] {
            let db = build_named_graph(&NamedGraph::DeBruijn(k_sym, n)).unwrap();
            assert_eq!(eulerian_count(&db).unwrap(), Z::from(expect), "de Bruijn({k_sym},{n})");
        }
        let mut unbalanced = Graph::numeric(true, 2);
        unbalanced.add_edge_idx(0, 1, 1);
        assert!(matches!(
            eulerian_count(&unbalanced),
            Err(GraphCountError::NotEulerian { .. })
        ));
    }

    #[test]
    fn named_graph_shapes() {
        let hyper = build_named_graph(&NamedGraph::Hyperoctahedral(2)).unwrap();
        assert_eq!(hyper.vertex_count(), 4);
        assert_eq!(hyper.edge_count(), 4);
        let k4 = k(4);
        assert_eq!(k4.edge_count(), 6);
        let grid = build_named_graph(&NamedGraph::Grid(2, 3)).unwrap();
        assert_eq!(grid.vertex_count(), 6);
        assert_eq!(grid.edge_count(), 7);
        assert!(build_named_graph(&NamedGraph::Cycle(2)).is_err());
    }

    #[test]
    fn monomer_dimer_strips() {
        let g2 = monomer_dimer_strip_graph(2);
        let start = strip_start_label(2);
        let gf = walk_gf(&g2, &start, &start).unwrap();
        let coeffs = gf.series_coeffs(4).unwrap();
        assert_eq!(coeffs, [1, 2, 7, 22, 71].map(qi).to_vec());

        let g3 = monomer_dimer_strip_graph(3);
        let start = strip_start_label(3);
        let gf = walk_gf(&g3, &start, &start).unwrap();
        let coeffs = gf.series_coeffs(7).unwrap();
        assert_eq!(
            coeffs,
            [1, 3, 22, 131, 823, 5096, 31687, 196785].map(qi).to_vec()
        );
    }
}
