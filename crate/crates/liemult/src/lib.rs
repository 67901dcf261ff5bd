//! Exact computation of branching multiplicities for compact connected Lie
//! groups by counting integer points in rational convex polytopes.
//!
//! The library answers questions of the form: given a homomorphism
//! `f: H -> G` of compact connected Lie groups and irreducible
//! representations `V_{G,lambda}` and `V_{H,mu}`, with what multiplicity does
//! the latter occur in the restriction of the former? Weight multiplicities,
//! Littlewood-Richardson coefficients and Kronecker coefficients of the
//! symmetric group are all special cases.
//!
//! Every computation is exact: the counting engine works with
//! arbitrary-precision integers and rationals throughout, and the answers are
//! exact integers no matter how large the inputs grow.
//!
//! The main entry points are:
//!
//! - [`rootdata`]: root systems, Weyl groups and weight lattices for tori,
//!   `SU(n)`, `U(n)`, the B/C/D classical series and finite products.
//! - [`latcount`]: exact lattice-point counting in rational polytopes
//!   `{x : x_1..x_s >= 0, Ax = b}`, with an enumeration backend and a
//!   Barvinok-style short-rational-function backend.
//! - [`multiplicity`]: Kostant partition functions, weight multiplicities
//!   (Gelfand-Tsetlin and Kostant routes), the finite-difference expansion,
//!   and the full branching pipeline.
//! - [`kronecker`]: the specialized Kronecker-coefficient path through the
//!   marginal polytope of `Sym^k(C^(abc))`.
//! - [`oracle`]: independent brute-force cross-checks (Murnaghan-Nakayama
//!   characters, tensor product decompositions) used by tests and the CLI.

pub mod error;
pub mod kronecker;
pub mod latcount;
pub mod linalg;
pub mod multiplicity;
pub mod oracle;
pub mod output;
pub mod rootdata;

pub use error::{Error, Result};
