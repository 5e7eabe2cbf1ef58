//! Exact arithmetic: rationals, sparse polynomials, matrices over ℚ and over
//! polynomial rings.

pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod polymatrix;
pub mod rational;
pub mod span;

pub use matrix::{QMatrix, Rref};
pub use monomial::{Monomial, MAX_VARS};
pub use parse::{parse_poly, parse_poly_list};
pub use poly::{Poly, Ring};
pub use polymatrix::PolyMatrix;
pub use rational::Rational;
pub use span::LinearSpan;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("polynomials from different rings ({left}) and ({right})")]
    RingMismatch { left: String, right: String },
    #[error("minor order {order} out of range for a {rows}x{cols} matrix")]
    MinorOrder { order: usize, rows: usize, cols: usize },
    #[error("parse error at offset {pos}: {message}")]
    Parse { pos: usize, message: String },
}
