//! `ec`: exact enumerative counting from the command line.
//!
//! Every invocation is pure: the same arguments and input files produce
//! byte-identical output. Exit codes: 0 on success, 1 when a computation
//! refuses (with a structured diagnostic on stderr), 2 on unusable input.

mod formats;
mod recipes;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ec_core::arrkit::{
    arrangement_cd_index, bounded_regions, char_poly, char_poly_ff_above, coboundary_histogram,
    regions, Arrangement, CharBackend,
};
use ec_core::cfinite::{dominant_growth, gf_to_rec, guess_recurrence, rec_to_gf};
use ec_core::detcount::{aztec_count, hankel_det, hexagon_rhombus_dag, kasteleyn_match_count, lgv_routing_count, GridRegion};
use ec_core::ehrhartkit::{ehrhart_polynomial, h_star_vector, reciprocity_holds, LatticePolytope};
use ec_core::graphcount::{
    avoiding_word_count, closed_walk_gf, count_walks, eulerian_count, spanning_tree_count,
    walk_gf, Graph,
};
use ec_core::matroidkit::{
    basis_count, matroid_char_poly, tutte, tutte_ff_above, Matroid, TutteBackend,
};
use ec_core::poly::RationalFn;
use ec_core::posetkit::{
    cd_index, linear_extensions, linear_extensions_capped, order_polynomial, zeta_polynomial,
    Poset,
};
use ec_core::powser::{
    egf_ogf_convert, lagrange_inverse, partition_gf, ps_analytic, ps_arith, ps_calculus,
    ps_compose, ps_hadamard, ps_inverse, AnalyticKind, ArithKind, CalculusKind, ConvertDir,
    PartitionSpec, Series,
};
use formats::{
    load_arrangement, load_graph, load_matroid, load_polytope, load_poset, load_region,
    load_series, parse_arrangement_name, parse_err, parse_graph_name, parse_polytope_name,
    parse_poset_name, parse_q, parse_q_list, parse_rec_spec, render, CliError, CliResult,
    OrCompute, OrParse, OutFormat, Payload,
};
use recipes::{RecipeCtx, RECIPES};

#[derive(Parser)]
#[command(name = "ec", version, about = "exact enumerative counting toolkit")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Truncated power series arithmetic.
    Series {
        #[command(subcommand)]
        verb: SeriesVerb,
    },
    /// Linear recurrences with constant coefficients.
    Cfinite {
        #[command(subcommand)]
        verb: CfiniteVerb,
    },
    /// Walks, spanning trees, and word counting on graphs.
    Graph {
        #[command(subcommand)]
        verb: GraphVerb,
    },
    /// Determinant-based tiling and routing counts.
    Count {
        #[command(subcommand)]
        verb: CountVerb,
    },
    /// Partial orders: Moebius functions, extensions, flag data.
    Poset {
        #[command(subcommand)]
        verb: PosetVerb,
    },
    /// Hyperplane arrangements.
    Arr {
        #[command(subcommand)]
        verb: ArrVerb,
    },
    /// Matroids and Tutte polynomials.
    Matroid {
        #[command(subcommand)]
        verb: MatroidVerb,
    },
    /// Lattice-point counting in polytopes.
    Ehrhart {
        #[command(subcommand)]
        verb: EhrhartVerb,
    },
    /// Re-run documented results and report PASS or FAIL.
    Reproduce(ReproduceArgs),
}

// -------------------------------------------------------------------
// series

#[derive(Clone, Copy, ValueEnum)]
enum ArithOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnalyticOp {
    Exp,
    Log,
    Sqrt,
    Pow,
    Sin,
    Cos,
}

#[derive(Clone, Copy, ValueEnum)]
enum CalcOp {
    Derivative,
    Integrate,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvOp {
    /// Divide coefficient n by n!.
    OgfToEgf,
    /// Multiply coefficient n by n!.
    EgfToOgf,
}

#[derive(Subcommand)]
enum SeriesVerb {
    /// Print a series file, optionally truncated.
    Show {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Pointwise add, subtract, or convolve two series.
    Op {
        #[arg(long, value_enum)]
        kind: ArithOp,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Multiplicative inverse.
    Inverse {
        #[arg(long)]
        file: PathBuf,
    },
    /// Substitute the inner series into the outer one.
    Compose {
        #[arg(long)]
        outer: PathBuf,
        #[arg(long)]
        inner: PathBuf,
    },
    /// Compositional inverse.
    Revert {
        #[arg(long)]
        file: PathBuf,
    },
    /// exp, log, sqrt, pow, sin, cos of a series.
    Analytic {
        #[arg(long, value_enum)]
        kind: AnalyticOp,
        #[arg(long)]
        file: PathBuf,
        /// Exponent for pow.
        #[arg(long)]
        exponent: Option<String>,
    },
    /// Termwise derivative or integral.
    Calculus {
        #[arg(long, value_enum)]
        kind: CalcOp,
        #[arg(long)]
        file: PathBuf,
    },
    /// Coefficientwise product.
    Hadamard {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// The series 1/(1 - c x).
    Geometric {
        #[arg(long)]
        ratio: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Relabel coefficients between ordinary and exponential conventions.
    Convert {
        #[arg(long, value_enum)]
        dir: ConvOp,
        #[arg(long)]
        file: PathBuf,
    },
    /// Partition generating function with size and multiplicity filters.
    Partitions {
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Allowed part sizes, comma separated; all sizes when omitted.
        #[arg(long)]
        sizes: Option<String>,
        /// Each part size used at most once.
        #[arg(long)]
        distinct: bool,
        /// Cap on the number of parts.
        #[arg(long)]
        max_parts: Option<usize>,
    },
}

fn series_payload(s: Series) -> Payload {
    Payload::Series(s.coeffs().to_vec())
}

fn run_series(verb: SeriesVerb) -> CliResult<Payload> {
    match verb {
        SeriesVerb::Show { file, order } => {
            let mut s = load_series(&file)?;
            if let Some(k) = order {
                s = s.truncate(k);
            }
            Ok(series_payload(s))
        }
        SeriesVerb::Op { kind, a, b } => {
            let kind = match kind {
                ArithOp::Add => ArithKind::Add,
                ArithOp::Sub => ArithKind::Sub,
                ArithOp::Mul => ArithKind::Mul,
            };
            Ok(series_payload(ps_arith(kind, &load_series(&a)?, &load_series(&b)?)))
        }
        SeriesVerb::Inverse { file } => {
            Ok(series_payload(ps_inverse(&load_series(&file)?).or_compute()?))
        }
        SeriesVerb::Compose { outer, inner } => Ok(series_payload(
            ps_compose(&load_series(&outer)?, &load_series(&inner)?).or_compute()?,
        )),
        SeriesVerb::Revert { file } => {
            Ok(series_payload(lagrange_inverse(&load_series(&file)?).or_compute()?))
        }
        SeriesVerb::Analytic { kind, file, exponent } => {
            let kind = match kind {
                AnalyticOp::Exp => AnalyticKind::Exp,
                AnalyticOp::Log => AnalyticKind::Log,
                AnalyticOp::Sqrt => AnalyticKind::Sqrt,
                AnalyticOp::Pow => AnalyticKind::PowR,
                AnalyticOp::Sin => AnalyticKind::Sin,
                AnalyticOp::Cos => AnalyticKind::Cos,
            };
            let exponent = exponent.map(|e| parse_q(&e)).transpose()?;
            let s = ps_analytic(kind, &load_series(&file)?, exponent.as_ref()).or_compute()?;
            Ok(series_payload(s))
        }
        SeriesVerb::Calculus { kind, file } => {
            let kind = match kind {
                CalcOp::Derivative => CalculusKind::Derivative,
                CalcOp::Integrate => CalculusKind::Integrate,
            };
            Ok(series_payload(ps_calculus(kind, &load_series(&file)?)))
        }
        SeriesVerb::Hadamard { a, b } => {
            Ok(series_payload(ps_hadamard(&load_series(&a)?, &load_series(&b)?)))
        }
        SeriesVerb::Geometric { ratio, order } => {
            Ok(series_payload(Series::geometric(&parse_q(&ratio)?, order)))
        }
        SeriesVerb::Convert { dir, file } => {
            let dir = match dir {
                ConvOp::OgfToEgf => ConvertDir::OgfToEgf,
                ConvOp::EgfToOgf => ConvertDir::EgfToOgf,
            };
            Ok(series_payload(egf_ogf_convert(dir, &load_series(&file)?)))
        }
        SeriesVerb::Partitions { order, sizes, distinct, max_parts } => {
            let mut spec = match sizes {
                Some(list) => {
                    let sizes = list
                        .split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<usize>()
                                .map_err(|_| parse_err(format!("bad part size: {t}")))
                        })
                        .collect::<CliResult<Vec<usize>>>()?;
                    PartitionSpec::with_sizes(sizes)
                }
                None => PartitionSpec::all_parts(),
            };
            if distinct {
                spec = spec.distinct();
            }
            if let Some(m) = max_parts {
                spec = spec.max_parts(m);
            }
            Ok(series_payload(partition_gf(&spec, order).or_compute()?))
        }
    }
}

// -------------------------------------------------------------------
// cfinite

#[derive(Subcommand)]
enum CfiniteVerb {
    /// One term of the sequence.
    Nth {
        /// Named recurrence (fib, lucas, pell, tribonacci, padovan) or `coeffs|init`.
        #[arg(long)]
        rec: String,
        #[arg(long)]
        n: usize,
    },
    /// The first `count` terms.
    Terms {
        #[arg(long)]
        rec: String,
        #[arg(long, default_value_t = 12)]
        count: usize,
    },
    /// Rational generating function of the sequence.
    Gf {
        #[arg(long)]
        rec: String,
    },
    /// Recover the recurrence behind a rational generating function.
    Fromgf {
        /// Numerator coefficients, constant first.
        #[arg(long)]
        num: String,
        /// Denominator coefficients, constant first.
        #[arg(long)]
        den: String,
    },
    /// Fit the shortest recurrence that explains a sequence window.
    Guess {
        /// Comma-separated terms.
        #[arg(long)]
        terms: String,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
    },
    /// Dominant growth rate of the sequence.
    Growth {
        #[arg(long)]
        rec: String,
    },
}

fn run_cfinite(verb: CfiniteVerb) -> CliResult<Payload> {
    match verb {
        CfiniteVerb::Nth { rec, n } => {
            let r = parse_rec_spec(&rec)?;
            Ok(Payload::Rat(r.nth_term(n)))
        }
        CfiniteVerb::Terms { rec, count } => {
            let r = parse_rec_spec(&rec)?;
            Ok(Payload::Series(r.terms(count)))
        }
        CfiniteVerb::Gf { rec } => Ok(Payload::Gf(rec_to_gf(&parse_rec_spec(&rec)?))),
        CfiniteVerb::Fromgf { num, den } => {
            let gf = RationalFn::new(
                formats::poly_from_qs(&parse_q_list(&num)?),
                formats::poly_from_qs(&parse_q_list(&den)?),
            );
            Ok(Payload::Rec(gf_to_rec(&gf).or_compute()?))
        }
        CfiniteVerb::Guess { terms, max_order } => {
            let window = parse_q_list(&terms)?;
            Ok(Payload::Rec(guess_recurrence(&window, max_order).or_compute()?))
        }
        CfiniteVerb::Growth { rec } => {
            Ok(Payload::Float(dominant_growth(&parse_rec_spec(&rec)?).or_compute()?))
        }
    }
}

// -------------------------------------------------------------------
// graph

#[derive(Args)]
struct GraphSource {
    /// Edge-list file: `directed|undirected`, then `u v [multiplicity]` lines.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Named family, e.g. complete:4, grid:2,3, debruijn:2,3, wheel:4.
    #[arg(long)]
    name: Option<String>,
}

impl GraphSource {
    fn load(&self) -> CliResult<Graph> {
        match (&self.file, &self.name) {
            (Some(path), None) => load_graph(path),
            (None, Some(spec)) => parse_graph_name(spec),
            _ => Err(parse_err("give exactly one of --file or --name")),
        }
    }
}

#[derive(Subcommand)]
enum GraphVerb {
    /// Count spanning trees.
    Spanning {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Count Eulerian circuits of a directed graph.
    Eulerian {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Count walks of a fixed length between two vertices.
    Walks {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        n: usize,
    },
    /// Generating function for walks between two vertices.
    Walkgf {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Generating function for closed walks from anywhere.
    Closedwalkgf {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Count words avoiding the given subwords.
    Avoid {
        /// Alphabet, one letter per symbol, e.g. `ab`.
        #[arg(long)]
        alphabet: String,
        /// Forbidden subwords, comma separated.
        #[arg(long)]
        words: String,
        /// Word length.
        #[arg(long)]
        n: usize,
    },
}

fn run_graph(verb: GraphVerb) -> CliResult<Payload> {
    match verb {
        GraphVerb::Spanning { source } => {
            Ok(Payload::Int(spanning_tree_count(&source.load()?).or_compute()?))
        }
        GraphVerb::Eulerian { source } => {
            Ok(Payload::Int(eulerian_count(&source.load()?).or_compute()?))
        }
        GraphVerb::Walks { source, from, to, n } => Ok(Payload::Int(
            count_walks(&source.load()?, &from, &to, n).or_compute()?,
        )),
        GraphVerb::Walkgf { source, from, to } => {
            Ok(Payload::Gf(walk_gf(&source.load()?, &from, &to).or_compute()?))
        }
        GraphVerb::Closedwalkgf { source } => Ok(Payload::Gf(closed_walk_gf(&source.load()?))),
        GraphVerb::Avoid { alphabet, words, n } => {
            let letters: Vec<char> = alphabet.chars().collect();
            let words: Vec<&str> = words.split(',').map(str::trim).collect();
            Ok(Payload::Int(avoiding_word_count(&letters, &words, n).or_compute()?))
        }
    }
}

// -------------------------------------------------------------------
// count

#[derive(Subcommand)]
enum CountVerb {
    /// Perfect matchings of a grid region.
    Matchings {
        /// ASCII region file: `#` is a cell, `.` is a hole.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Full rectangle `rows,cols`.
        #[arg(long)]
        rect: Option<String>,
    },
    /// Nonintersecting routing count for the hexagon family.
    Routings {
        /// Hexagon side length.
        #[arg(long)]
        hexagon: usize,
    },
    /// Hankel determinant of a sequence.
    Hankel {
        /// Comma-separated sequence values.
        #[arg(long)]
        seq: String,
        #[arg(long)]
        n: usize,
        /// Drop the leading term before building the matrix.
        #[arg(long)]
        shifted: bool,
    },
    /// Domino tilings of the Aztec diamond.
    Aztec {
        #[arg(long)]
        n: usize,
    },
}

fn run_count(verb: CountVerb) -> CliResult<Payload> {
    match verb {
        CountVerb::Matchings { file, rect } => {
            let region = match (file, rect) {
                (Some(path), None) => load_region(&path)?,
                (None, Some(spec)) => {
                    let (r, c) = spec
                        .split_once(',')
                        .ok_or_else(|| parse_err("--rect wants rows,cols"))?;
                    let rows = r.trim().parse::<usize>().map_err(|_| parse_err("bad row count"))?;
                    let cols = c.trim().parse::<usize>().map_err(|_| parse_err("bad col count"))?;
                    GridRegion::rectangle(rows, cols)
                }
                _ => return Err(parse_err("give exactly one of --file or --rect")),
            };
            Ok(Payload::Int(kasteleyn_match_count(&region)))
        }
        CountVerb::Routings { hexagon } => {
            if hexagon == 0 || hexagon > 6 {
                return Err(parse_err("hexagon side must be between 1 and 6"));
            }
            Ok(Payload::Rat(lgv_routing_count(&hexagon_rhombus_dag(hexagon))))
        }
        CountVerb::Hankel { seq, n, shifted } => {
            let values = parse_q_list(&seq)?;
            Ok(Payload::Rat(hankel_det(&values, n, shifted).or_compute()?))
        }
        CountVerb::Aztec { n } => {
            if n == 0 || n > 16 {
                return Err(parse_err("aztec order must be between 1 and 16"));
            }
            Ok(Payload::Int(aztec_count(n)))
        }
    }
}

// -------------------------------------------------------------------
// poset

#[derive(Args)]
struct PosetSource {
    /// Cover-relation file, one `u < v` per line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Named family, e.g. boolean:3, partition:4, twobyn:5, hexprism.
    #[arg(long)]
    name: Option<String>,
}

impl PosetSource {
    fn load(&self) -> CliResult<Poset> {
        match (&self.file, &self.name) {
            (Some(path), None) => load_poset(path),
            (None, Some(spec)) => parse_poset_name(spec),
            _ => Err(parse_err("give exactly one of --file or --name")),
        }
    }
}

#[derive(Subcommand)]
enum PosetVerb {
    /// Moebius function between two elements, or bottom to top.
    Mobius {
        #[command(flatten)]
        source: PosetSource,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
    },
    /// Zeta polynomial: Z(k) counts multichains of k-1 elements.
    Zeta {
        #[command(flatten)]
        source: PosetSource,
    },
    /// Order polynomial: order-preserving maps into a k-chain.
    Omega {
        #[command(flatten)]
        source: PosetSource,
    },
    /// Count linear extensions.
    Linext {
        #[command(flatten)]
        source: PosetSource,
        /// Cap on the element count accepted by the dynamic program.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// cd-index of an Eulerian poset.
    Cdindex {
        #[command(flatten)]
        source: PosetSource,
    },
}

fn run_poset(verb: PosetVerb) -> CliResult<Payload> {
    match verb {
        PosetVerb::Mobius { source, from, to } => {
            let p = source.load()?;
            match (from, to) {
                (Some(a), Some(b)) => {
                    let a = p.index(&a).or_parse()?;
                    let b = p.index(&b).or_parse()?;
                    Ok(Payload::Int(p.mobius(a, b)))
                }
                (None, None) => Ok(Payload::Int(p.mobius_bounds().or_compute()?)),
                _ => Err(parse_err("give both --from and --to, or neither")),
            }
        }
        PosetVerb::Zeta { source } => Ok(Payload::Poly {
            var: "k",
            poly: zeta_polynomial(&source.load()?),
        }),
        PosetVerb::Omega { source } => Ok(Payload::Poly {
            var: "k",
            poly: order_polynomial(&source.load()?).or_compute()?,
        }),
        PosetVerb::Linext { source, budget } => {
            let p = source.load()?;
            let count = match budget {
                Some(cap) => linear_extensions_capped(&p, cap).or_compute()?,
                None => linear_extensions(&p).or_compute()?,
            };
            Ok(Payload::Int(count))
        }
        PosetVerb::Cdindex { source } => {
            Ok(Payload::Words(cd_index(&source.load()?).or_compute()?))
        }
    }
}

// -------------------------------------------------------------------
// arr

#[derive(Args)]
struct ArrSource {
    /// File: first line the dimension, then `a_1 .. a_d b` per hyperplane.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Named family, e.g. braid:3, shi:3, typeb:2, generic:4,2.
    #[arg(long)]
    name: Option<String>,
}

impl ArrSource {
    fn load(&self) -> CliResult<Arrangement> {
        match (&self.file, &self.name) {
            (Some(path), None) => load_arrangement(path),
            (None, Some(spec)) => parse_arrangement_name(spec),
            _ => Err(parse_err("give exactly one of --file or --name")),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CharB {
    /// Point counts over prime fields, interpolated.
    Ff,
    /// Moebius sum over the intersection poset.
    Poset,
    /// Signed central-subset sum.
    Whitney,
}

#[derive(Subcommand)]
enum ArrVerb {
    /// Characteristic polynomial.
    Charpoly {
        #[command(flatten)]
        source: ArrSource,
        #[arg(long, value_enum, default_value_t = CharB::Ff)]
        backend: CharB,
        /// Sample only primes strictly above this floor (ff backend).
        #[arg(long)]
        primes: Option<u64>,
    },
    /// Number of regions of the complement.
    Regions {
        #[command(flatten)]
        source: ArrSource,
    },
    /// Number of bounded regions.
    Bounded {
        #[command(flatten)]
        source: ArrSource,
    },
    /// cd-index of the face structure.
    Cdindex {
        #[command(flatten)]
        source: ArrSource,
    },
    /// Coboundary histogram over one prime field.
    Histogram {
        #[command(flatten)]
        source: ArrSource,
        /// Field size, a prime.
        #[arg(long)]
        q: u64,
    },
}

fn run_arr(verb: ArrVerb) -> CliResult<Payload> {
    match verb {
        ArrVerb::Charpoly { source, backend, primes } => {
            let arr = source.load()?;
            let poly = match (backend, primes) {
                (CharB::Ff, Some(floor)) => char_poly_ff_above(&arr, floor).or_compute()?,
                (CharB::Ff, None) => char_poly(&arr, CharBackend::FiniteField).or_compute()?,
                (CharB::Poset, None) => {
                    char_poly(&arr, CharBackend::IntersectionPoset).or_compute()?
                }
                (CharB::Whitney, None) => char_poly(&arr, CharBackend::Whitney).or_compute()?,
                _ => return Err(parse_err("--primes only applies to the ff backend")),
            };
            Ok(Payload::Poly { var: "q", poly })
        }
        ArrVerb::Regions { source } => Ok(Payload::Int(regions(&source.load()?).or_compute()?)),
        ArrVerb::Bounded { source } => {
            Ok(Payload::Int(bounded_regions(&source.load()?).or_compute()?))
        }
        ArrVerb::Cdindex { source } => {
            Ok(Payload::Words(arrangement_cd_index(&source.load()?).or_compute()?))
        }
        ArrVerb::Histogram { source, q } => Ok(Payload::Poly {
            var: "t",
            poly: coboundary_histogram(&source.load()?, q),
        }),
    }
}

// -------------------------------------------------------------------
// matroid

#[derive(Args)]
struct MatroidSource {
    /// Matroid JSON file, tagged by `kind`.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Uniform matroid `rank,size`.
    #[arg(long)]
    uniform: Option<String>,
    /// Cycle matroid of a named graph.
    #[arg(long)]
    graph: Option<String>,
    /// Matroid of a named arrangement.
    #[arg(long)]
    arrangement: Option<String>,
}

impl MatroidSource {
    fn load(&self) -> CliResult<Matroid> {
        let picks = [
            self.file.is_some(),
            self.uniform.is_some(),
            self.graph.is_some(),
            self.arrangement.is_some(),
        ];
        if picks.iter().filter(|&&p| p).count() != 1 {
            return Err(parse_err(
                "give exactly one of --file, --uniform, --graph, --arrangement",
            ));
        }
        if let Some(path) = &self.file {
            return load_matroid(path);
        }
        if let Some(spec) = &self.uniform {
            let (k, n) = spec
                .split_once(',')
                .ok_or_else(|| parse_err("--uniform wants rank,size"))?;
            let k = k.trim().parse::<usize>().map_err(|_| parse_err("bad rank"))?;
            let n = n.trim().parse::<usize>().map_err(|_| parse_err("bad size"))?;
            return Matroid::uniform(k, n).or_parse();
        }
        if let Some(spec) = &self.graph {
            return Matroid::from_graph(&parse_graph_name(spec)?).or_parse();
        }
        let spec = self.arrangement.as_ref().expect("one source is set");
        Matroid::from_arrangement(&parse_arrangement_name(spec)?).or_parse()
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TutteB {
    Subset,
    Delcon,
    Activities,
}

impl TutteB {
    fn backend(self) -> TutteBackend {
        match self {
            TutteB::Subset => TutteBackend::SubsetSum,
            TutteB::Delcon => TutteBackend::DeletionContraction,
            TutteB::Activities => TutteBackend::Activities,
        }
    }
}

#[derive(Subcommand)]
enum MatroidVerb {
    /// Tutte polynomial.
    Tutte {
        #[command(flatten)]
        source: MatroidSource,
        #[arg(long, value_enum, default_value_t = TutteB::Delcon)]
        backend: TutteB,
    },
    /// Number of bases.
    Bases {
        #[command(flatten)]
        source: MatroidSource,
    },
    /// Characteristic polynomial.
    Charpoly {
        #[command(flatten)]
        source: MatroidSource,
    },
    /// Evaluate the Tutte polynomial at a point.
    Eval {
        #[command(flatten)]
        source: MatroidSource,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Tutte polynomial of an arrangement by finite-field point counts.
    Fftutte {
        /// Named arrangement.
        #[arg(long)]
        name: Option<String>,
        /// Arrangement file.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Sample only primes strictly above this floor.
        #[arg(long, default_value_t = 0)]
        primes: u64,
    },
}

fn run_matroid(verb: MatroidVerb) -> CliResult<Payload> {
    match verb {
        MatroidVerb::Tutte { source, backend } => {
            Ok(Payload::Tutte(tutte(&source.load()?, backend.backend())))
        }
        MatroidVerb::Bases { source } => Ok(Payload::Int(basis_count(&source.load()?))),
        MatroidVerb::Charpoly { source } => Ok(Payload::Poly {
            var: "q",
            poly: matroid_char_poly(&source.load()?),
        }),
        MatroidVerb::Eval { source, x, y } => {
            let t = tutte(&source.load()?, TutteBackend::DeletionContraction);
            Ok(Payload::Rat(t.eval(&parse_q(&x)?, &parse_q(&y)?)))
        }
        MatroidVerb::Fftutte { name, file, primes } => {
            let arr = match (&file, &name) {
                (Some(path), None) => load_arrangement(path)?,
                (None, Some(spec)) => parse_arrangement_name(spec)?,
                _ => return Err(parse_err("give exactly one of --file or --name")),
            };
            Ok(Payload::Tutte(tutte_ff_above(&arr, primes).or_compute()?))
        }
    }
}

// -------------------------------------------------------------------
// ehrhart

#[derive(Args)]
struct PolytopeSource {
    /// Polytope JSON file: ambient dimension with A, b, C, e.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Named family, e.g. simplex:3, cube:2, cross:3, hypersimplex:4,2,
    /// order-polytope:boolean:2.
    #[arg(long)]
    name: Option<String>,
}

impl PolytopeSource {
    fn load(&self) -> CliResult<LatticePolytope> {
        match (&self.file, &self.name) {
            (Some(path), None) => load_polytope(path),
            (None, Some(spec)) => parse_polytope_name(spec),
            _ => Err(parse_err("give exactly one of --file or --name")),
        }
    }
}

#[derive(Subcommand)]
enum EhrhartVerb {
    /// Lattice points in the n-th dilate.
    Count {
        #[command(flatten)]
        source: PolytopeSource,
        #[arg(long)]
        n: u64,
        /// Cap on scanned box cells.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Interior lattice points in the n-th dilate.
    Interior {
        #[command(flatten)]
        source: PolytopeSource,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Ehrhart polynomial.
    Poly {
        #[command(flatten)]
        source: PolytopeSource,
    },
    /// h* vector.
    Hstar {
        #[command(flatten)]
        source: PolytopeSource,
    },
    /// Check Ehrhart reciprocity by direct interior scans.
    Reciprocity {
        #[command(flatten)]
        source: PolytopeSource,
        #[arg(long, default_value_t = 4)]
        max: u64,
    },
}

fn run_ehrhart(verb: EhrhartVerb) -> CliResult<Payload> {
    match verb {
        EhrhartVerb::Count { source, n, budget } => {
            let p = source.load()?;
            let count = match budget {
                Some(cap) => p.count_points_budgeted(n, cap).or_compute()?,
                None => p.count_points(n).or_compute()?,
            };
            Ok(Payload::Int(count))
        }
        EhrhartVerb::Interior { source, n, budget } => {
            let p = source.load()?;
            let count = match budget {
                Some(cap) => p.count_interior_budgeted(n, cap).or_compute()?,
                None => p.count_interior(n).or_compute()?,
            };
            Ok(Payload::Int(count))
        }
        EhrhartVerb::Poly { source } => Ok(Payload::Poly {
            var: "n",
            poly: ehrhart_polynomial(&source.load()?).or_compute()?,
        }),
        EhrhartVerb::Hstar { source } => {
            Ok(Payload::Ints(h_star_vector(&source.load()?).or_compute()?))
        }
        EhrhartVerb::Reciprocity { source, max } => Ok(Payload::Flag(
            reciprocity_holds(&source.load()?, max).or_compute()?,
        )),
    }
}

// -------------------------------------------------------------------
// reproduce

#[derive(Args)]
struct ReproduceArgs {
    /// Recipe name; see --list.
    recipe: Option<String>,
    /// Run every recipe.
    #[arg(long)]
    all: bool,
    /// List available recipes.
    #[arg(long)]
    list: bool,
    /// Size override for recipes with a natural parameter.
    #[arg(long)]
    n: Option<u64>,
    /// Seed for randomized recipes.
    #[arg(long, default_value_t = 20260816)]
    seed: u64,
}

struct Output {
    text: String,
    failed: bool,
}

fn run_reproduce(args: ReproduceArgs, format: OutFormat) -> CliResult<Output> {
    let ctx = RecipeCtx { n: args.n, seed: args.seed };
    if args.list {
        let pairs: Vec<(String, String)> = RECIPES
            .iter()
            .map(|r| (r.name.to_string(), r.about.to_string()))
            .collect();
        return Ok(Output {
            text: render(&Payload::Pairs(pairs), format),
            failed: false,
        });
    }
    if args.all {
        let mut lines = Vec::new();
        let mut results = Vec::new();
        let mut failed = 0usize;
        for recipe in RECIPES {
            let report = (recipe.run)(&ctx)?;
            if !report.pass {
                failed += 1;
            }
            let status = if report.pass { "PASS" } else { "FAIL" };
            lines.push(format!("{status} {} ({})", recipe.name, report.detail));
            results.push(serde_json::json!({
                "recipe": recipe.name,
                "pass": report.pass,
                "detail": report.detail,
            }));
        }
        let passed = RECIPES.len() - failed;
        let text = match format {
            OutFormat::Text => {
                lines.push(format!("{passed} passed, {failed} failed"));
                lines.join("\n")
            }
            OutFormat::Json => serde_json::json!({
                "results": results,
                "passed": passed,
                "failed": failed,
            })
            .to_string(),
        };
        return Ok(Output { text, failed: failed > 0 });
    }
    let name = args
        .recipe
        .ok_or_else(|| parse_err("give a recipe name, --all, or --list"))?;
    let recipe = recipes::find(&name)
        .ok_or_else(|| parse_err(format!("unknown recipe: {name} (try --list)")))?;
    let report = (recipe.run)(&ctx)?;
    let status = if report.pass { "PASS" } else { "FAIL" };
    let text = match format {
        OutFormat::Text => format!("{status} ({})", report.detail),
        OutFormat::Json => serde_json::json!({
            "recipe": recipe.name,
            "pass": report.pass,
            "detail": report.detail,
        })
        .to_string(),
    };
    Ok(Output { text, failed: !report.pass })
}

// -------------------------------------------------------------------

fn run(cli: Cli) -> CliResult<Output> {
    let format = cli.format;
    let payload = match cli.command {
        Command::Series { verb } => run_series(verb)?,
        Command::Cfinite { verb } => run_cfinite(verb)?,
        Command::Graph { verb } => run_graph(verb)?,
        Command::Count { verb } => run_count(verb)?,
        Command::Poset { verb } => run_poset(verb)?,
        Command::Arr { verb } => run_arr(verb)?,
        Command::Matroid { verb } => run_matroid(verb)?,
        Command::Ehrhart { verb } => run_ehrhart(verb)?,
        Command::Reproduce(args) => return run_reproduce(args, format),
    };
    Ok(Output { text: render(&payload, format), failed: false })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{}", out.text);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("{}", serde_json::json!({ "error": msg }));
            ExitCode::from(1)
        }
    }
}
