use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, RngCore};

use super::{ArithError, Field, FieldDescriptor};

/// The prime field `F_p` for a word-sized prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if p >= 1 << 63 || !is_prime_u64(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u64().expect("residue fits in u64")
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller-Rabin for all 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn next_prime_at_least(n: u64) -> u64 {
    let mut c = n.max(2);
    while !is_prime_u64(c) {
        c += 1;
    }
    c
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> Result<u64, ArithError> {
        inv_mod(*a, self.p).ok_or(ArithError::DivisionByZero)
    }
    fn pow(&self, a: &u64, e: u64) -> u64 {
        pow_mod(*a, e, self.p)
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        self.reduce_big(n)
    }
    fn from_rational(&self, q: &BigRational) -> Result<u64, ArithError> {
        let den = self.reduce_big(q.denom());
        if den.is_zero() {
            return Err(ArithError::DenominatorDivisibleByP { den: q.denom().clone(), p: self.p });
        }
        let num = self.reduce_big(q.numer());
        Ok(mul_mod(num, inv_mod(den, self.p).expect("unit"), self.p))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn prime_modulus(&self) -> Option<u64> {
        Some(self.p)
    }
    fn to_residue(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
    fn from_residue(&self, v: u64) -> u64 {
        v % self.p
    }
    fn random_elem(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime_u64(65537));
        assert!(!is_prime_u64(65537 * 65539));
        assert!(is_prime_u64((1 << 61) - 1));
    }

    #[test]
    fn f7_examples() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.inv(&3).unwrap(), 5);
        assert_eq!(f.inv(&0), Err(ArithError::DivisionByZero));
        assert!(PrimeField::new(9).is_err());
    }

    #[test]
    fn rational_image_rejects_bad_denominator() {
        let f = PrimeField::new(7).unwrap();
        let q = BigRational::new(3.into(), 14.into());
        assert!(matches!(f.from_rational(&q), Err(ArithError::DenominatorDivisibleByP { .. })));
        let q = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&q).unwrap(), 4);
    }
}
