use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::RngCore;

use super::upoly::{self, UPoly};
use super::{is_irreducible_mod_p, ArithError, Field, FieldDescriptor, PrimeField};

/// A simple algebraic extension `K[r]/(m)` of a base field `K`.
///
/// Elements are coefficient vectors in the generator, always reduced modulo
/// the monic minimal polynomial `m` and trimmed of trailing zeros, so that
/// equality and hashing are structural.
#[derive(Clone)]
pub struct ExtensionField<B: Field> {
    inner: Arc<Inner<B>>,
}

struct Inner<B: Field> {
    base: B,
    modulus: UPoly<B::Elem>,
    /// Nonzero `(j, -m_j)` for `j < deg m`, used for reduction.
    tail: Vec<(usize, B::Elem)>,
    generator: String,
}

impl<B: Field> ExtensionField<B> {
    /// Builds `base[generator]/(modulus)`. The modulus must be monic of
    /// degree at least one; irreducibility is trusted (see
    /// [`ExtensionField::<PrimeField>::new_checked`] for a verified variant).
    pub fn new(base: B, modulus: UPoly<B::Elem>, generator: &str) -> Result<Self, ArithError> {
        let modulus = upoly::trimmed(&base, modulus);
        let deg = upoly::degree(&modulus).unwrap_or(0);
        if deg == 0 {
            return Err(ArithError::InvalidMinimalPolynomial("degree must be at least 1".into()));
        }
        if !base.is_one(&modulus[deg]) {
            return Err(ArithError::InvalidMinimalPolynomial("not monic".into()));
        }
        let tail = modulus[..deg]
            .iter()
            .enumerate()
            .filter(|(_, c)| !base.is_zero(c))
            .map(|(j, c)| (j, base.neg(c)))
            .collect();
        Ok(Self { inner: Arc::new(Inner { base, modulus, tail, generator: generator.to_string() }) })
    }

    pub fn base(&self) -> &B {
        &self.inner.base
    }

    pub fn modulus(&self) -> &[B::Elem] {
        &self.inner.modulus
    }

    pub fn degree(&self) -> usize {
        self.inner.modulus.len() - 1
    }

    pub fn generator_name(&self) -> &str {
        &self.inner.generator
    }

    /// The class of the generator `r`.
    pub fn generator(&self) -> Vec<B::Elem> {
        self.reduce(vec![self.base().zero(), self.base().one()])
    }

    pub fn from_base(&self, c: B::Elem) -> Vec<B::Elem> {
        upoly::trimmed(self.base(), vec![c])
    }

    /// Reduces an arbitrary coefficient vector modulo the minimal polynomial.
    pub fn reduce(&self, mut a: Vec<B::Elem>) -> Vec<B::Elem> {
        let b = self.base();
        let m = self.degree();
        upoly::trim(b, &mut a);
        while a.len() > m {
            let top = a.pop().expect("nonempty");
            if !b.is_zero(&top) {
                let shift = a.len() - m;
                for (j, c) in &self.inner.tail {
                    a[shift + j] = b.add(&a[shift + j], &b.mul(&top, c));
                }
            }
            upoly::trim(b, &mut a);
        }
        a
    }

    /// Coefficient of `r^i` (zero past the stored length).
    pub fn coeff(&self, a: &[B::Elem], i: usize) -> B::Elem {
        a.get(i).cloned().unwrap_or_else(|| self.base().zero())
    }
}

impl ExtensionField<PrimeField> {
    /// Like [`ExtensionField::new`], additionally verifying irreducibility
    /// of the modulus over `F_p`.
    pub fn new_checked(base: PrimeField, modulus: Vec<u64>, generator: &str) -> Result<Self, ArithError> {
        let field = Self::new(base, modulus, generator)?;
        if !is_irreducible_mod_p(base.modulus(), field.modulus()) {
            return Err(ArithError::Reducible(base.modulus()));
        }
        Ok(field)
    }
}

impl<B: Field> PartialEq for ExtensionField<B> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.base == other.inner.base
                && self.inner.modulus == other.inner.modulus
                && self.inner.generator == other.inner.generator)
    }
}

impl<B: Field> fmt::Debug for ExtensionField<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

impl<B: Field> Field for ExtensionField<B> {
    type Elem = Vec<B::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        vec![self.base().one()]
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        a.len() == 1 && self.base().is_one(&a[0])
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        upoly::add(self.base(), a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        upoly::sub(self.base(), a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        upoly::neg(self.base(), a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        if a.len() == 1 {
            return upoly::scale(self.base(), b, &a[0]);
        }
        if b.len() == 1 {
            return upoly::scale(self.base(), a, &b[0]);
        }
        self.reduce(upoly::mul(self.base(), a, b))
    }
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ArithError> {
        if a.is_empty() {
            return Err(ArithError::DivisionByZero);
        }
        if a.len() == 1 {
            return Ok(vec![self.base().inv(&a[0])?]);
        }
        let (g, s, _) = upoly::ext_gcd(self.base(), a, self.modulus());
        if g.len() != 1 {
            return Err(ArithError::ZeroDivisor(self.format_elem(a)));
        }
        Ok(self.reduce(s))
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_base(self.base().from_i64(n))
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.from_base(self.base().from_bigint(n))
    }
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem, ArithError> {
        Ok(self.from_base(self.base().from_rational(q)?))
    }
    fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Extension {
            base: Box::new(self.base().descriptor()),
            generator: self.generator_name().to_string(),
            minimal_polynomial: upoly::format(self.base(), self.modulus(), self.generator_name()),
        }
    }
    fn format_elem(&self, a: &Self::Elem) -> String {
        upoly::format(self.base(), a, self.generator_name())
    }
    fn needs_parens(&self, a: &Self::Elem) -> bool {
        a.iter().filter(|c| !self.base().is_zero(c)).count() > 1
            || a.first().is_some_and(|c| a.len() == 1 && self.base().needs_parens(c))
    }
    fn is_negative(&self, a: &Self::Elem) -> bool {
        let nz: Vec<_> = a.iter().filter(|c| !self.base().is_zero(c)).collect();
        nz.len() == 1 && self.base().is_negative(nz[0])
    }
    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let v = (0..self.degree()).map(|_| self.base().random_elem(rng)).collect();
        upoly::trimmed(self.base(), v)
    }
}
