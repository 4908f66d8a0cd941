//! Input decoding and output rendering for the command line.
//!
//! Big values always travel as decimal strings in JSON so downstream
//! consumers never lose precision. Text output is deterministic: every
//! collection printed here iterates an ordered structure.

use std::fmt;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use ec_core::arrkit::{build_named_arrangement, Arrangement, Hyperplane, NamedArrangement};
use ec_core::cfinite::Recurrence;
use ec_core::detcount::GridRegion;
use ec_core::ehrhartkit::{
    chain_polytope, cross_polytope, hypersimplex, order_polytope, standard_simplex, unit_cube,
    LatticePolytope,
};
use ec_core::graphcount::{build_named_graph, Graph, NamedGraph};
use ec_core::matroidkit::{Matroid, TuttePoly};
use ec_core::poly::{Poly, RationalFn};
use ec_core::posetkit::{build_named_poset, NamedPoset, Poset, WordPoly};
use ec_core::powser::Series;
use ec_core::util::{q_from_string, q_to_string, Q, Z};
use serde::Deserialize;
use serde_json::{json, Value};

/// Errors split by exit status: bad input exits 2, a failed computation
/// exits 1.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Compute(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Compute(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

pub type CliResult<T> = Result<T, CliError>;

pub fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

/// Map a module error to parse status: the input itself was unusable.
pub trait OrParse<T> {
    fn or_parse(self) -> CliResult<T>;
}

impl<T, E: fmt::Display> OrParse<T> for Result<T, E> {
    fn or_parse(self) -> CliResult<T> {
        self.map_err(|e| CliError::Parse(e.to_string()))
    }
}

/// Map a module error to compute status: the input was fine but the
/// requested computation refused.
pub trait OrCompute<T> {
    fn or_compute(self) -> CliResult<T>;
}

impl<T, E: fmt::Display> OrCompute<T> for Result<T, E> {
    fn or_compute(self) -> CliResult<T> {
        self.map_err(|e| CliError::Compute(e.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
}

// -------------------------------------------------------------------
// Output payloads.

/// Everything a verb can print, rendered per `--format`.
pub enum Payload {
    Int(Z),
    Rat(Q),
    Float(f64),
    Flag(bool),
    /// Truncated series coefficients; JSON uses the series file schema.
    Series(Vec<Q>),
    /// Integer sequence (h* vectors, term lists).
    Ints(Vec<Z>),
    Poly {
        var: &'static str,
        poly: Poly,
    },
    Gf(RationalFn),
    Rec(Recurrence),
    Words(WordPoly),
    Tutte(TuttePoly),
    /// Labeled values, printed one per line in the given order.
    Pairs(Vec<(String, String)>),
}

fn q_list(coeffs: &[Q]) -> Value {
    Value::Array(coeffs.iter().map(|c| Value::String(q_to_string(c))).collect())
}

fn z_list(values: &[Z]) -> Value {
    Value::Array(values.iter().map(|z| Value::String(z.to_string())).collect())
}

fn join_q(coeffs: &[Q]) -> String {
    coeffs.iter().map(q_to_string).collect::<Vec<_>>().join(", ")
}

pub fn render(payload: &Payload, format: OutFormat) -> String {
    match format {
        OutFormat::Text => render_text(payload),
        OutFormat::Json => render_json(payload).to_string(),
    }
}

fn render_text(payload: &Payload) -> String {
    match payload {
        Payload::Int(z) => z.to_string(),
        Payload::Rat(q) => q_to_string(q),
        Payload::Float(x) => format!("{x:.6}"),
        Payload::Flag(b) => b.to_string(),
        Payload::Series(coeffs) => join_q(coeffs),
        Payload::Ints(values) => values
            .iter()
            .map(Z::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        Payload::Poly { var, poly } => poly.to_string_var(var),
        Payload::Gf(gf) => gf.to_string(),
        Payload::Rec(rec) => {
            // Stored coefficients are the GF denominator tail, so the
            // recurrence itself uses their negatives.
            let terms: Vec<String> = rec
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{} a(n-{})", q_to_string(&-c), i + 1))
                .collect();
            format!("a(n) = {}; start {}", terms.join(" + "), join_q(rec.init()))
        }
        Payload::Words(w) => w.to_string(),
        Payload::Tutte(t) => t.to_string(),
        Payload::Pairs(pairs) => pairs
            .iter()
            .map(|(k, v)| format!("{k}: {v}"))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn render_json(payload: &Payload) -> Value {
    match payload {
        Payload::Int(z) => json!({ "value": z.to_string() }),
        Payload::Rat(q) => json!({ "value": q_to_string(q) }),
        Payload::Float(x) => json!({ "value": x }),
        Payload::Flag(b) => json!({ "value": b }),
        Payload::Series(coeffs) => json!({
            "coeffs": q_list(coeffs),
            "order": coeffs.len().saturating_sub(1),
        }),
        Payload::Ints(values) => json!({ "values": z_list(values) }),
        Payload::Poly { var, poly } => json!({
            "var": var,
            "coeffs": q_list(poly.coeffs()),
        }),
        Payload::Gf(gf) => json!({
            "num": q_list(gf.num.coeffs()),
            "den": q_list(gf.den.coeffs()),
        }),
        Payload::Rec(rec) => json!({
            "coeffs": q_list(rec.coeffs()),
            "init": q_list(rec.init()),
        }),
        Payload::Words(w) => {
            let mut terms = serde_json::Map::new();
            for (word, coeff) in w.terms() {
                terms.insert(word.clone(), Value::String(coeff.to_string()));
            }
            json!({ "terms": terms })
        }
        Payload::Tutte(t) => {
            let terms: Vec<Value> = t
                .terms()
                .iter()
                .map(|(&(i, j), c)| json!([i, j, c.to_string()]))
                .collect();
            json!({ "terms": terms })
        }
        Payload::Pairs(pairs) => {
            let mut map = serde_json::Map::new();
            for (k, v) in pairs {
                map.insert(k.clone(), Value::String(v.clone()));
            }
            Value::Object(map)
        }
    }
}

// -------------------------------------------------------------------
// Primitive parsers.

pub fn parse_q(s: &str) -> CliResult<Q> {
    q_from_string(s).ok_or_else(|| parse_err(format!("bad rational: {s}")))
}

pub fn parse_q_list(s: &str) -> CliResult<Vec<Q>> {
    s.split(',').map(parse_q).collect()
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| parse_err(format!("{}: {e}", path.display())))
}

/// Lines that carry content: trimmed, non-empty, not `#` comments.
fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn split_spec(s: &str) -> (&str, Vec<&str>) {
    match s.split_once(':') {
        Some((head, rest)) => (head, rest.split(',').map(str::trim).collect()),
        None => (s, Vec::new()),
    }
}

fn usize_params(spec: &str, params: &[&str], want: usize) -> CliResult<Vec<usize>> {
    if params.len() != want {
        return Err(parse_err(format!(
            "{spec}: expected {want} parameter(s), got {}",
            params.len()
        )));
    }
    params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| parse_err(format!("{spec}: bad parameter {p}")))
        })
        .collect()
}

// -------------------------------------------------------------------
// Named objects.

pub fn parse_graph_name(spec: &str) -> CliResult<Graph> {
    let (head, params) = split_spec(spec);
    let one = || usize_params(spec, &params, 1).map(|v| v[0]);
    let two = || usize_params(spec, &params, 2).map(|v| (v[0], v[1]));
    let named = match head {
        "complete" => NamedGraph::Complete(one()?),
        "bipartite" => {
            let (m, n) = two()?;
            NamedGraph::CompleteBipartite(m, n)
        }
        "cube" => NamedGraph::Cube(one()?),
        "hyperoctahedral" => NamedGraph::Hyperoctahedral(one()?),
        "grid" => {
            let (m, n) = two()?;
            NamedGraph::Grid(m, n)
        }
        "cycle" => NamedGraph::Cycle(one()?),
        "dicycle" => NamedGraph::DirectedCycle(one()?),
        "debruijn" => {
            let (k, n) = two()?;
            NamedGraph::DeBruijn(k, n)
        }
        "wheel" => NamedGraph::Wheel(one()?),
        other => return Err(parse_err(format!("unknown graph family: {other}"))),
    };
    build_named_graph(&named).or_parse()
}

pub fn parse_arrangement_name(spec: &str) -> CliResult<Arrangement> {
    let (head, params) = split_spec(spec);
    let one = || usize_params(spec, &params, 1).map(|v| v[0]);
    let named = match head {
        "coordinate" => NamedArrangement::Coordinate(one()?),
        "braid" => NamedArrangement::Braid(one()?),
        "shi" => NamedArrangement::Shi(one()?),
        "ish" => NamedArrangement::Ish(one()?),
        "catalan" => NamedArrangement::Catalan(one()?),
        "linial" => NamedArrangement::Linial(one()?),
        "threshold" => NamedArrangement::Threshold(one()?),
        "typeb" => NamedArrangement::TypeB(one()?),
        "typed" => NamedArrangement::TypeD(one()?),
        "augbraid" => NamedArrangement::AugmentedBraid(one()?),
        "generic" => {
            let v = usize_params(spec, &params, 2)?;
            NamedArrangement::Generic { planes: v[0], dim: v[1] }
        }
        other => return Err(parse_err(format!("unknown arrangement family: {other}"))),
    };
    build_named_arrangement(&named).or_parse()
}

pub fn parse_poset_name(spec: &str) -> CliResult<Poset> {
    let (head, params) = split_spec(spec);
    let one = || usize_params(spec, &params, 1).map(|v| v[0]);
    let named = match head {
        "chain" => NamedPoset::Chain(one()?),
        "antichain" => NamedPoset::Antichain(one()?),
        "boolean" => NamedPoset::Boolean(one()?),
        "divisor" => NamedPoset::Divisor(one()? as u64),
        "partition" => NamedPoset::Partition(one()?),
        "noncrossing" => NamedPoset::NonCrossing(one()?),
        "twobyn" => NamedPoset::TwoByN(one()?),
        "bruhat-s3" => NamedPoset::BruhatS3,
        "polygon" => NamedPoset::PolygonFaces(one()?),
        "hexprism" => NamedPoset::HexagonalPrismFaces,
        other => return Err(parse_err(format!("unknown poset family: {other}"))),
    };
    build_named_poset(&named).or_parse()
}

pub fn parse_polytope_name(spec: &str) -> CliResult<LatticePolytope> {
    if let Some(rest) = spec.strip_prefix("order-polytope:") {
        return Ok(order_polytope(&parse_poset_name(rest)?));
    }
    if let Some(rest) = spec.strip_prefix("chain-polytope:") {
        return Ok(chain_polytope(&parse_poset_name(rest)?));
    }
    let (head, params) = split_spec(spec);
    let one = || usize_params(spec, &params, 1).map(|v| v[0]);
    match head {
        "simplex" => Ok(standard_simplex(one()?)),
        "cube" => Ok(unit_cube(one()?)),
        "cross" => Ok(cross_polytope(one()?)),
        "hypersimplex" => {
            let v = usize_params(spec, &params, 2)?;
            hypersimplex(v[0], v[1]).or_parse()
        }
        other => Err(parse_err(format!("unknown polytope family: {other}"))),
    }
}

/// A recurrence by name (`fib`, `lucas`, `pell`, `tribonacci`, `padovan`)
/// or inline as `coeffs|init` where the generating function denominator is
/// `1 + c_1 x + .. + c_d x^d`, i.e. `a(n) = -(c_1 a(n-1) + .. + c_d a(n-d))`.
pub fn parse_rec_spec(spec: &str) -> CliResult<Recurrence> {
    let from_ints = |coeffs: &[i64], init: &[i64]| {
        Recurrence::from_ints(coeffs, init).expect("builtin recurrences are valid")
    };
    match spec {
        "fib" => return Ok(from_ints(&[-1, -1], &[1, 1])),
        "lucas" => return Ok(from_ints(&[-1, -1], &[2, 1])),
        "pell" => return Ok(from_ints(&[-2, -1], &[0, 1])),
        "tribonacci" => return Ok(from_ints(&[-1, -1, -1], &[0, 0, 1])),
        "padovan" => return Ok(from_ints(&[0, -1, -1], &[1, 1, 1])),
        _ => {}
    }
    let (coeffs, init) = spec
        .split_once('|')
        .ok_or_else(|| parse_err(format!("unknown recurrence: {spec} (want a name or coeffs|init)")))?;
    Recurrence::new(parse_q_list(coeffs)?, parse_q_list(init)?).or_parse()
}

// -------------------------------------------------------------------
// File loaders.

#[derive(Deserialize)]
struct SeriesFile {
    coeffs: Vec<String>,
    order: usize,
}

pub fn load_series(path: &Path) -> CliResult<Series> {
    let file: SeriesFile = serde_json::from_str(&read(path)?)
        .map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    if file.coeffs.len() != file.order + 1 {
        return Err(parse_err(format!(
            "{}: order {} wants {} coefficients, found {}",
            path.display(),
            file.order,
            file.order + 1,
            file.coeffs.len()
        )));
    }
    let coeffs = file
        .coeffs
        .iter()
        .map(|s| parse_q(s))
        .collect::<CliResult<Vec<Q>>>()?;
    Ok(Series::new(coeffs))
}

/// Edge list: first content line `directed` or `undirected`, then
/// `u v [multiplicity]` per line. Vertices appear in first-use order.
pub fn load_graph(path: &Path) -> CliResult<Graph> {
    let text = read(path)?;
    let mut lines = content_lines(&text);
    let directed = match lines.next() {
        Some("directed") => true,
        Some("undirected") => false,
        other => {
            return Err(parse_err(format!(
                "{}: first line must be directed|undirected, found {other:?}",
                path.display()
            )))
        }
    };
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize, u64)> = Vec::new();
    let intern = |labels: &mut Vec<String>, token: &str| -> usize {
        match labels.iter().position(|l| l == token) {
            Some(i) => i,
            None => {
                labels.push(token.to_string());
                labels.len() - 1
            }
        }
    };
    for line in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let mult = match tokens.len() {
            2 => 1u64,
            3 => tokens[2]
                .parse()
                .map_err(|_| parse_err(format!("bad multiplicity: {}", tokens[2])))?,
            _ => {
                return Err(parse_err(format!(
                    "bad edge line (want `u v [multiplicity]`): {line}"
                )))
            }
        };
        let u = intern(&mut labels, tokens[0]);
        let v = intern(&mut labels, tokens[1]);
        edges.push((u, v, mult));
    }
    let mut g = Graph::new(directed, &labels).or_parse()?;
    for (u, v, m) in edges {
        g.add_edge_idx(u, v, m);
    }
    Ok(g)
}

pub fn load_region(path: &Path) -> CliResult<GridRegion> {
    GridRegion::from_ascii(&read(path)?).or_parse()
}

/// Cover relations, one `u < v` per line.
pub fn load_poset(path: &Path) -> CliResult<Poset> {
    let text = read(path)?;
    let mut labels: Vec<String> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    let intern = |labels: &mut Vec<String>, token: &str| {
        if !labels.iter().any(|l| l == token) {
            labels.push(token.to_string());
        }
    };
    for line in content_lines(&text) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 || tokens[1] != "<" {
            return Err(parse_err(format!("bad cover line (want `u < v`): {line}")));
        }
        intern(&mut labels, tokens[0]);
        intern(&mut labels, tokens[2]);
        covers.push((tokens[0].to_string(), tokens[2].to_string()));
    }
    Poset::from_covers(&labels, &covers).or_parse()
}

/// First content line is the ambient dimension d, then one hyperplane per
/// line as `a_1 .. a_d b`, meaning `a . x = b`.
pub fn load_arrangement(path: &Path) -> CliResult<Arrangement> {
    let text = read(path)?;
    let mut lines = content_lines(&text);
    let dim: usize = lines
        .next()
        .ok_or_else(|| parse_err(format!("{}: empty arrangement file", path.display())))?
        .parse()
        .map_err(|_| parse_err(format!("{}: first line must be the dimension", path.display())))?;
    let mut hyperplanes = Vec::new();
    for line in lines {
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| parse_err(format!("bad coefficient: {t}"))))
            .collect::<CliResult<Vec<i64>>>()?;
        if row.len() != dim + 1 {
            return Err(parse_err(format!(
                "hyperplane row wants {} numbers, found {}: {line}",
                dim + 1,
                row.len()
            )));
        }
        hyperplanes.push(Hyperplane::from_ints(&row[..dim], row[dim]).or_parse()?);
    }
    Arrangement::new(dim, hyperplanes).or_parse()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FieldSpec {
    Prime(u64),
    Name(String),
}

/// Matrix entries may be bare integers or strings like "3/4".
#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixEntry {
    Int(i64),
    Str(String),
}

impl MatrixEntry {
    fn as_q(&self) -> CliResult<Q> {
        match self {
            MatrixEntry::Int(v) => Ok(Q::from(Z::from(*v))),
            MatrixEntry::Str(s) => parse_q(s),
        }
    }

    fn as_i64(&self) -> CliResult<i64> {
        match self {
            MatrixEntry::Int(v) => Ok(*v),
            MatrixEntry::Str(s) => s
                .parse::<i64>()
                .map_err(|_| parse_err(format!("bad entry: {s}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum MatroidSpec {
    Uniform {
        rank: usize,
        size: usize,
    },
    Bases {
        size: usize,
        bases: Vec<Vec<usize>>,
    },
    Matrix {
        field: FieldSpec,
        columns: Vec<Vec<MatrixEntry>>,
    },
    Graph {
        name: Option<String>,
        vertices: Option<usize>,
        edges: Option<Vec<(usize, usize)>>,
    },
}

/// Tagged JSON: `{"kind": "uniform", ...}` with kinds `uniform`, `bases`,
/// `matrix` (field `"rational"` or a prime), and `graph`.
pub fn load_matroid(path: &Path) -> CliResult<Matroid> {
    let spec: MatroidSpec = serde_json::from_str(&read(path)?)
        .map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    match spec {
        MatroidSpec::Uniform { rank, size } => Matroid::uniform(rank, size).or_parse(),
        MatroidSpec::Bases { size, bases } => Matroid::from_bases(size, &bases).or_parse(),
        MatroidSpec::Matrix { field, columns } => match field {
            FieldSpec::Name(name) if name == "rational" => {
                let cols = columns
                    .iter()
                    .map(|col| col.iter().map(MatrixEntry::as_q).collect())
                    .collect::<CliResult<Vec<Vec<Q>>>>()?;
                Matroid::from_columns_q(&cols).or_parse()
            }
            FieldSpec::Name(name) => Err(parse_err(format!(
                "unknown field {name:?} (want \"rational\" or a prime)"
            ))),
            FieldSpec::Prime(p) => {
                if p == 0 {
                    return Err(parse_err("field size must be a prime".to_string()));
                }
                let cols = columns
                    .iter()
                    .map(|col| {
                        col.iter()
                            .map(|e| e.as_i64().map(|v| v.rem_euclid(p as i64) as u64))
                            .collect()
                    })
                    .collect::<CliResult<Vec<Vec<u64>>>>()?;
                Matroid::from_columns_fp(p, &cols).or_parse()
            }
        },
        MatroidSpec::Graph { name, vertices, edges } => {
            let g = match (name, vertices, edges) {
                (Some(name), None, None) => parse_graph_name(&name)?,
                (None, Some(n), Some(edges)) => {
                    let mut g = Graph::numeric(false, n);
                    for (u, v) in edges {
                        if u >= n || v >= n {
                            return Err(parse_err(format!("edge ({u}, {v}) out of range")));
                        }
                        g.add_edge_idx(u, v, 1);
                    }
                    g
                }
                _ => {
                    return Err(parse_err(
                        "graph matroid wants either name or vertices+edges".to_string(),
                    ))
                }
            };
            Matroid::from_graph(&g).or_parse()
        }
    }
}

#[derive(Deserialize)]
struct PolytopeSpec {
    ambient: usize,
    #[serde(rename = "A", default)]
    a: Vec<Vec<i64>>,
    #[serde(rename = "b", default)]
    b: Vec<i64>,
    #[serde(rename = "C", default)]
    c: Vec<Vec<i64>>,
    #[serde(rename = "e", default)]
    e: Vec<i64>,
}

/// H-form JSON: `{"ambient": d, "A": [[..]], "b": [..], "C": [[..]],
/// "e": [..]}` describing `A x <= b`, `C x = e`.
pub fn load_polytope(path: &Path) -> CliResult<LatticePolytope> {
    let spec: PolytopeSpec = serde_json::from_str(&read(path)?)
        .map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    if spec.a.len() != spec.b.len() || spec.c.len() != spec.e.len() {
        return Err(parse_err(
            "row counts disagree: A with b, or C with e".to_string(),
        ));
    }
    let rows = |m: &[Vec<i64>], rhs: &[i64]| -> Vec<(Vec<Z>, Z)> {
        m.iter()
            .zip(rhs)
            .map(|(row, &v)| (row.iter().map(|&x| Z::from(x)).collect(), Z::from(v)))
            .collect()
    };
    LatticePolytope::new(spec.ambient, rows(&spec.a, &spec.b), rows(&spec.c, &spec.e)).or_parse()
}

/// Polynomial from parsed coefficients, lowest degree first.
pub fn poly_from_qs(coeffs: &[Q]) -> Poly {
    Poly::new(coeffs.to_vec())
}
