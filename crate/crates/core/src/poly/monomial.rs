use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Maximum number of variables in a polynomial ring.
pub const MAX_VARS: usize = 12;

/// An exponent vector with its cached total degree.
///
/// Stored inline so monomials are `Copy`; the derived ordering is
/// lexicographic on the exponent vector and only serves as the canonical
/// storage order. Term orders for Gröbner computations live in
/// [`crate::groebner::MonomialOrder`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS], degree: 0 };

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut m = Self::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent overflow");
            m.degree += e;
        }
        m
    }

    pub fn var(i: usize, e: u32) -> Self {
        let mut m = Self::ONE;
        m.exps[i] = e as u16;
        m.degree = e;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    /// Sum of the exponents of the listed variables.
    pub fn partial_degree(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.exps[i] as u32).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.degree += other.degree;
        m
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.degree -= self.degree;
        Some(m)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut m = Self::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.degree += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut m = Self::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.degree += m.exps[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Lowers the exponent of variable `i` by one, returning the old
    /// exponent, or `None` when it is already zero.
    pub fn decrement(&self, i: usize) -> Option<(Self, u32)> {
        let e = self.exps[i];
        if e == 0 {
            return None;
        }
        let mut m = *self;
        m.exps[i] -= 1;
        m.degree -= 1;
        Some((m, e as u32))
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Self {
        let mut m = *self;
        m.degree = m.degree - m.exps[i] as u32 + e;
        m.exps[i] = e as u16;
        m
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut m = *self;
        for e in m.exps.iter_mut() {
            *e *= k as u16;
        }
        m.degree *= k;
        m
    }

    /// Degree-then-lex comparison used for display and canonical iteration.
    pub fn display_cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }

    pub fn format(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, name) in vars.iter().enumerate() {
            match self.exps[i] {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// An ordered list of variable names shared between polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        assert!(names.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        Vars(Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    pub fn xyz() -> Self {
        Self::new(&["x", "y", "z"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// Appends fresh variables; fails beyond [`MAX_VARS`].
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Self {
        let mut names: Vec<String> = self.0.to_vec();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Vars::new(&names)
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
