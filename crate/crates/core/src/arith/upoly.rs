//! Dense univariate polynomials over a [`Field`], stored as coefficient
//! vectors indexed by degree with no trailing zeros.

use num_bigint::BigUint;

use super::{ArithError, Field};

pub type UPoly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, a: &mut UPoly<F::Elem>) {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
}

pub fn trimmed<F: Field>(f: &F, mut a: UPoly<F::Elem>) -> UPoly<F::Elem> {
    trim(f, &mut a);
    a
}

/// Degree of a trimmed polynomial; `None` for zero.
pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn constant<F: Field>(f: &F, c: F::Elem) -> UPoly<F::Elem> {
    trimmed(f, vec![c])
}

/// `t^k` times `c`.
pub fn monomial<F: Field>(f: &F, c: F::Elem, k: usize) -> UPoly<F::Elem> {
    let mut v = vec![f.zero(); k + 1];
    v[k] = c;
    trimmed(f, v)
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n).map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trimmed(f, out)
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n).map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trimmed(f, out)
}

pub fn neg<F: Field>(f: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn scale<F: Field>(f: &F, a: &[F::Elem], c: &F::Elem) -> UPoly<F::Elem> {
    if f.is_zero(c) {
        return Vec::new();
    }
    a.iter().map(|x| f.mul(x, c)).collect()
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if f.is_zero(y) {
                continue;
            }
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trimmed(f, out)
}

/// Euclidean division `a = q*b + r` with `deg r < deg b`.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<(UPoly<F::Elem>, UPoly<F::Elem>), ArithError> {
    let db = degree(b).ok_or(ArithError::DivisionByZero)?;
    let lc_inv = f.inv(&b[db])?;
    let mut r: Vec<F::Elem> = a.to_vec();
    trim(f, &mut r);
    if r.len() <= db {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![f.zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = f.mul(r.last().expect("nonempty"), &lc_inv);
        for (j, bj) in b.iter().enumerate() {
            if !f.is_zero(bj) {
                r[k + j] = f.sub(&r[k + j], &f.mul(&c, bj));
            }
        }
        q[k] = c;
        r.pop();
        trim(f, &mut r);
    }
    trim(f, &mut q);
    Ok((q, r))
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<UPoly<F::Elem>, ArithError> {
    divrem(f, a, b).map(|(_, r)| r)
}

pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(lc) => scale(f, a, &f.inv(lc).expect("trimmed polynomial has nonzero lc")),
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    let mut x = trimmed(f, a.to_vec());
    let mut y = trimmed(f, b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y).expect("nonzero divisor");
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn ext_gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (UPoly<F::Elem>, UPoly<F::Elem>, UPoly<F::Elem>) {
    let (mut r0, mut r1) = (trimmed(f, a.to_vec()), trimmed(f, b.to_vec()));
    let (mut s0, mut s1) = (constant(f, f.one()), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), constant(f, f.one()));
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1).expect("nonzero divisor");
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(lc) => {
            let c = f.inv(lc).expect("nonzero");
            (scale(f, &r0, &c), scale(f, &s0, &c), scale(f, &t0, &c))
        }
    }
}

pub fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    let out = a.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect();
    trimmed(f, out)
}

pub fn eval<F: Field>(f: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    a.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

pub fn mulmod<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> UPoly<F::Elem> {
    rem(f, &mul(f, a, b), m).expect("nonzero modulus")
}

/// `base^e mod m` for a big exponent.
pub fn powmod<F: Field>(f: &F, base: &[F::Elem], e: &BigUint, m: &[F::Elem]) -> UPoly<F::Elem> {
    let mut acc = rem(f, &constant(f, f.one()), m).expect("nonzero modulus");
    let b = rem(f, base, m).expect("nonzero modulus");
    for i in (0..e.bits()).rev() {
        acc = mulmod(f, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(f, &acc, &b, m);
        }
    }
    acc
}

/// Renders `a` as a polynomial in `var`, highest degree first.
pub fn format<F: Field>(f: &F, a: &[F::Elem], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in a.iter().enumerate().rev() {
        if f.is_zero(c) {
            continue;
        }
        let (neg, mag) = if f.is_negative(c) { (true, f.neg(c)) } else { (false, c.clone()) };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coeff = f.format_elem(&mag);
        let paren = f.needs_parens(&mag);
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&coeff);
        } else if f.is_one(&mag) {
            out.push_str(&mono);
        } else if paren {
            out.push_str(&format!("({coeff}){mono}"));
        } else {
            out.push_str(&format!("{coeff}{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
