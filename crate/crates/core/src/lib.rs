//! Representations of the symmetric group `S_n` and the wreath product
//! `W_n = G wr S_n`, hypergraph Laplacians in their group algebras, and
//! numerical checkers for the spectral-gap identities relating the two.
//!
//! The library is organized around a handful of layers:
//!
//! * [`combinatorics`] — partitions, standard Young tableaux and
//!   multi-partitions (the index sets of the irreducible representations);
//! * [`groups`] — permutations, finite base groups given by explicit
//!   multiplication tables with unitary irreps, and wreath-product elements;
//! * [`sn_reps`] / [`wreath_reps`] — matrix representations: Young's
//!   orthogonal form for `S_n`, induced representations for `W_n`, lifts,
//!   and isotypic projectors;
//! * [`hypergraph`] — weighted hypergraphs, degree profiles and generators;
//! * [`spectral`] — averaging projectors `J_B`, Laplacians, Hermitian
//!   eigenvalues, and the non-trivial minimum `lambda*_min`;
//! * [`verify`] — executable checks for the spectral-gap statements plus a
//!   brute-force regular-representation oracle and a corpus runner.
//!
//! All linear algebra is generic over the real scalar type via
//! [`scalar::Scalar`]; the aliases below fix the `f64` instantiation used by
//! the CLI and the verification suites.

pub mod combinatorics;
pub mod error;
pub mod groups;
pub mod hypergraph;
pub mod linalg;
pub mod scalar;
pub mod sn_reps;
pub mod spectral;
pub mod subset;
pub mod verify;
pub mod wreath_reps;

pub use error::{Error, Result};

/// Default real scalar.
pub type Real = f64;
/// Default complex scalar.
pub type Cplx = num_complex::Complex<f64>;
/// Default dense complex matrix.
pub type Mat = linalg::CMat<f64>;
/// Base-group table over the default scalar.
pub type GroupTable = groups::FiniteGroupTable<f64>;
/// `S_n` representation over the default scalar.
pub type SnRepresentation = sn_reps::SnRep<f64>;
/// `W_n` representation over the default scalar.
pub type WnRepresentation = wreath_reps::WnRep<f64>;
