//! Exact dense linear algebra: echelon forms, rank and kernels over any
//! supported field, with a fast path for prime fields.

mod dense;
mod modp;

use num_rational::BigRational;
use thiserror::Error;

use crate::arith::{ArithError, ExtensionField, ExtensionReduction, Field, PrimeField, Rationals};

pub use dense::DenseMatrix;
pub use modp::ModpMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Rank of the image of a matrix over `Q[r]/(m)` in `F_p[t]/(g)`.
///
/// The result is a lower bound for the rank over `Q[r]/(m)`; callers
/// confirm it with a second prime. A linear `g` routes through the `u64`
/// elimination kernel.
pub fn rank_modular(m: &DenseMatrix<ExtensionField<Rationals>>, p: u64, g: &[u64]) -> Result<usize, LinalgError> {
    let red = ExtensionReduction::new(m.field(), p, g.to_vec())?;
    if red.target().degree() == 1 {
        let fp = PrimeField::new(p)?;
        // t = -g_0 in F_p[t]/(t + g_0)
        let root = fp.neg(&red.target().modulus()[0]);
        let image = m.map(&fp, |a| -> Result<u64, ArithError> {
            let coeffs = a.iter().map(|c| fp.from_rational(c)).collect::<Result<Vec<_>, _>>()?;
            Ok(crate::arith::upoly::eval(&fp, &coeffs, &root))
        })?;
        return Ok(image.rank());
    }
    let image = m.map(red.target(), |a| red.map(a))?;
    Ok(image.rank())
}

/// Rank of the image of a rational matrix in `F_p`.
pub fn rank_mod_prime(m: &DenseMatrix<Rationals>, p: u64) -> Result<usize, LinalgError> {
    let fp = PrimeField::new(p)?;
    let image = m.map(&fp, |a: &BigRational| fp.from_rational(a))?;
    Ok(image.rank())
}
