//! Sparse multivariate polynomials, binary forms and resultants.

mod binary;
mod calculus;
mod monomial;
mod multipoly;
mod parse;
mod resultant;

use thiserror::Error;

use crate::arith::ArithError;

pub use binary::{line_parametrization, restrict_to_line, BinaryForm};
pub use monomial::{Monomial, Vars, MAX_VARS};
pub use multipoly::MultiPoly;
pub use parse::{parse_poly, parse_poly_with_generator};
pub use resultant::{bareiss_determinant, resultant, subresultant_coefficient, sylvester_matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable sets differ: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("expected {expected} substitution images, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero input: {0}")]
    ZeroInput(&'static str),
    #[error("degree zero in `{0}`")]
    DegreeZero(String),
    #[error("not a form in exactly two variables")]
    NotBinary,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
