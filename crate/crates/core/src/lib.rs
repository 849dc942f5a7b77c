//! Exact algebraic combinatorics with a small numerical wing.
//!
//! The crate is organised bottom-up:
//!
//! - [`tableaux`]: partitions, standard tableaux, hook lengths, major index.
//! - [`poly`] and [`symfunc`]: sparse exact polynomials, Schur polynomials,
//!   Kostka numbers and Littlewood-Richardson coefficients.
//! - [`horn`]: saturation scans and Horn inequality systems.
//! - [`hall`]: subgroup counting in finite abelian p-groups.
//! - [`apolar`]: derivative spans, Garsia-Haiman determinants and graded
//!   symmetric-group characters.
//! - [`groebner`] and [`diagcoinv`]: Buchberger's algorithm and the diagonal
//!   coinvariant quotient.
//! - [`lis`] and [`series`]: increasing subsequences, RSK, Gessel's determinant.
//! - [`tracywidom`]: Airy, Painleve II, the Tracy-Widom CDF and GUE sampling.
//! - [`verify`]: the acceptance checks shared by the CLI and the test suite.

pub mod apolar;
pub mod diagcoinv;
pub mod error;
pub mod groebner;
pub mod hall;
pub mod horn;
pub mod intpoly;
pub mod linalg;
pub mod lis;
pub mod poly;
pub mod series;
pub mod symfunc;
pub mod tableaux;
pub mod tracywidom;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational scalar used by every algebraic module.
pub type Rational = num_rational::BigRational;
