//! Exact homology basis and symmetric-group action for the two-row Springer
//! fiber `X_n`, built from standard dotted noncrossing matchings.
//!
//! The crate is organised bottom-up:
//!
//! * [`matchcore`] – matchings, dottings, two-row tableaux, the `phi`/`theta`
//!   bijection and the counting formulas.
//! * [`homology`] – Type I/II rewriting to the standard basis plus a
//!   linear-algebra quotient oracle.
//! * [`linediag`] – signed line-diagram expansions `L_M` in the product basis
//!   of `H_*((S^2)^n)`.
//! * [`snaction`] – the transposition chart, representation matrices,
//!   Coxeter checks and characters.
//! * [`specht`] – polytabloids, matching generators and the rank comparison
//!   of the two modules.
//!
//! All arithmetic is exact. The linear algebra in [`linalg`] and the formal
//! sums in [`formal`] are generic over the scalar type; the aliases below fix
//! the concrete types used throughout.

pub mod error;
pub mod formal;
pub mod homology;
pub mod json;
pub mod linalg;
pub mod linediag;
pub mod matchcore;
pub mod permutation;
pub mod scalar;
pub mod snaction;
pub mod specht;

pub use error::{Error, Result};
pub use formal::FormalSum;
pub use linalg::Matrix;
pub use matchcore::{Arc, DottedMatching, NoncrossingMatching, Partition, StandardMatching, TwoRowTableau};

/// Coefficient ring for diagram sums and representation matrices.
pub type Int = i64;

/// Arbitrary-precision integers, used where elimination can grow entries.
pub type BigInt = num_bigint::BigInt;

/// Exact rationals for quotient coordinates and character inner products.
pub type Rational = num_rational::BigRational;

/// Integer matrix, e.g. a representation matrix in the standard basis.
pub type IntMatrix = Matrix<Int>;

/// Rational matrix.
pub type RationalMatrix = Matrix<Rational>;

/// Formal integer combination of dotted matchings.
pub type MatchingSum = FormalSum<DottedMatching, Int>;

/// Formal integer combination of standard matchings.
pub type StandardSum = FormalSum<StandardMatching, Int>;
