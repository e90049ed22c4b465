//! Exact coefficient fields.
//!
//! Every computation in this crate is carried out over a field given by a
//! *value* implementing [`Field`]: the rationals, a prime field `F_p`, or a
//! simple algebraic extension `K[r]/(m)` of one of those. Field elements are
//! plain data ([`Field::Elem`]); the field value supplies the operations.
//! This keeps elements small (a `u64` for `F_p`) while still allowing
//! runtime-described fields such as `Q[r]/(r^16 + 6r^12 + 39r^8 - 18r^4 + 9)`.

mod extension;
mod modular;
pub(crate) mod prime;
mod rational;
pub mod upoly;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::RngCore;
use thiserror::Error;

pub use extension::ExtensionField;
pub use modular::{
    degree_pattern_mod_p, distinct_prime_targets, factor_degrees_mod_p, find_modular_parameters,
    irreducibility_by_degree_patterns, is_irreducible_mod_p, reduce_to_prime_field, search_modular_parameters,
    ExtensionReduction, IrreducibilityEvidence, ModularParameters, PrimeTarget, ReduceModP,
};
pub use prime::{is_prime_u64, next_prime_at_least, PrimeField};
pub use rational::Rationals;

/// Errors raised by coefficient arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("denominator {den} is divisible by p = {p}")]
    DenominatorDivisibleByP { den: BigInt, p: u64 },
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinimalPolynomial(String),
    #[error("factor does not divide the minimal polynomial modulo {0}")]
    FactorDoesNotDivide(u64),
    #[error("polynomial is reducible modulo {0}")]
    Reducible(u64),
    #[error("element {0} is a zero divisor in the quotient ring")]
    ZeroDivisor(String),
    #[error("no usable prime found: {0}")]
    NoUsablePrime(String),
}

/// Serializable description of a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u64),
    Extension {
        base: Box<FieldDescriptor>,
        generator: String,
        /// Human-readable minimal polynomial in the generator.
        minimal_polynomial: String,
    },
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "Fp({p})"),
            FieldDescriptor::Extension { base, generator, minimal_polynomial } => {
                write!(f, "{base}[{generator}]/({minimal_polynomial})")
            }
        }
    }
}

/// A field, given as a value that carries whatever runtime data its
/// arithmetic needs (a modulus, a minimal polynomial, ...).
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ArithError>;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ArithError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Image of a rational number; fails in characteristic `p` when `p`
    /// divides the denominator.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem, ArithError>;

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    fn descriptor(&self) -> FieldDescriptor;

    /// Renders an element in the crate's polynomial grammar.
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// Whether [`Field::format_elem`] needs parentheses when used as a
    /// coefficient of a monomial.
    fn needs_parens(&self, _a: &Self::Elem) -> bool {
        false
    }
    /// Sign hint used by printers: `true` when the rendered element starts
    /// with a minus sign and the sign can be pulled out.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// `Some(p)` when this is the prime field `F_p`; enables the dense
    /// word-level elimination kernel in [`crate::linalg`].
    fn prime_modulus(&self) -> Option<u64> {
        None
    }
    fn to_residue(&self, _a: &Self::Elem) -> Option<u64> {
        None
    }
    fn from_residue(&self, _v: u64) -> Self::Elem {
        unimplemented!("from_residue is only available on prime fields")
    }

    /// A random element; used by property tests and probabilistic checks.
    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem;

    /// Pseudo-rational content normalization for a coefficient list: returns
    /// a nonzero scalar `c` such that `c * coeffs` has a "small" canonical
    /// form. Defaults to the inverse of the first coefficient (monic).
    fn normalizer(&self, coeffs: &[Self::Elem]) -> Self::Elem {
        match coeffs.first() {
            Some(c) if !self.is_zero(c) => self.inv(c).expect("nonzero"),
            _ => self.one(),
        }
    }
}

/// A field element bundled with its field, with checked binary operations.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldElement<F: Field> {
    field: F,
    value: F::Elem,
}

impl<F: Field> FieldElement<F> {
    pub fn new(field: F, value: F::Elem) -> Self {
        Self { field, value }
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn value(&self) -> &F::Elem {
        &self.value
    }
    pub fn into_value(self) -> F::Elem {
        self.value
    }

    fn check(&self, other: &Self) -> Result<(), ArithError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(ArithError::FieldMismatch(self.field.descriptor().to_string(), other.field.descriptor().to_string()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        Ok(Self::new(self.field.clone(), self.field.add(&self.value, &other.value)))
    }
    pub fn sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        Ok(Self::new(self.field.clone(), self.field.sub(&self.value, &other.value)))
    }
    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        Ok(Self::new(self.field.clone(), self.field.mul(&self.value, &other.value)))
    }
    pub fn neg(&self) -> Self {
        Self::new(self.field.clone(), self.field.neg(&self.value))
    }
    pub fn inv(&self) -> Result<Self, ArithError> {
        Ok(Self::new(self.field.clone(), self.field.inv(&self.value)?))
    }
    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }
}

impl<F: Field> fmt::Display for FieldElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_elem(&self.value))
    }
}
