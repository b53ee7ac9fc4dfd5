//! Linearizations of matrix polynomials through bivariate matrix polynomials.
//!
//! Block matrices are identified with bivariate matrix polynomials through
//! the map `φ`, which turns statements about pencils `λX + Y` into identities
//! between polynomials in `x` and `y`. On top of that duality the crate
//! builds:
//!
//! * [`dl`]: the `DL(P)` space in any degree-graded basis, by a direct
//!   recurrence and by Bézoutians, with ansatz recovery and the eigenvalue
//!   exclusion test;
//! * [`bezout`]: scalar, one-sided and Lerer–Tismenetsky Bézout matrices;
//! * [`bdl`]: companion matrices, matrix polynomial division, and the
//!   `BDL(P, v)` pencils including structure-preserving variants;
//! * [`conditioning`]: floating point conditioning of Chebyshev `DL(P, 1)`
//!   linearizations on `[−1, 1]`.
//!
//! All exact algorithms are generic over [`fields::Field`].

pub mod bases;
pub mod bdl;
pub mod bezout;
pub mod blockpoly;
pub mod cli;
pub mod conditioning;
pub mod dl;
pub mod error;
pub mod fields;
pub mod matrix;
pub mod poly;
pub mod random;

pub use bases::Basis;
pub use blockpoly::{Bivariate, BlockMatrix, MatrixPolynomial, Pencil};
pub use error::{Error, Result};
pub use fields::{Field, GaussianRational, Gf, Rational, C64};
pub use matrix::Matrix;
pub use poly::Poly;
