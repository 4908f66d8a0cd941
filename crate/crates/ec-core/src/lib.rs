//! Exact enumerative combinatorics at desk scale.
//!
//! Everything here computes with arbitrary-precision rationals; floating
//! point appears only in explicitly documented growth-rate estimates. The
//! crate is organized around nine toolkits:
//!
//! - [`powser`]: truncated formal power series and generating-function ops
//! - [`cfinite`]: linear recurrences with constant coefficients
//! - [`graphcount`]: transfer matrices, Matrix-Tree, BEST theorem
//! - [`detcount`]: Pfaffians, Kasteleyn, LGV routings, Hankel, condensation
//! - [`posetkit`]: Möbius functions, zeta/order polynomials, cd-indices
//! - [`arrkit`]: hyperplane arrangements and characteristic polynomials
//! - [`matroidkit`]: matroids and the Tutte polynomial, three ways
//! - [`ehrhartkit`]: lattice-point counting in dilated polytopes
//! - [`bruteforce`] and [`corpus`]: independent oracles and named test data

pub mod util;
pub mod poly;
pub mod linalg;
pub mod matroidkit;
pub mod powser;
pub mod arrkit;
pub mod cfinite;
pub mod corpus;
pub mod detcount;
pub mod ehrhartkit;
pub mod graphcount;
pub mod posetkit;
pub mod bruteforce;

pub use util::{Q, Z};
