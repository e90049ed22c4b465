use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{ArithError, Field};

use super::{Monomial, PolyError, Vars};

/// A sparse multivariate polynomial over a field.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector; zero
/// coefficients are never stored, so structural equality is coefficient-wise
/// equality.
#[derive(Clone)]
pub struct MultiPoly<F: Field> {
    field: F,
    vars: Vars,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.terms == other.terms
    }
}

impl<F: Field> Eq for MultiPoly<F> {}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: &F, vars: &Vars) -> Self {
        Self { field: field.clone(), vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(field: &F, vars: &Vars, c: F::Elem) -> Self {
        Self::from_terms(field, vars, [(Monomial::ONE, c)])
    }

    pub fn one(field: &F, vars: &Vars) -> Self {
        Self::constant(field, vars, field.one())
    }

    pub fn from_i64(field: &F, vars: &Vars, n: i64) -> Self {
        Self::constant(field, vars, field.from_i64(n))
    }

    /// The variable with index `i`.
    pub fn var(field: &F, vars: &Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        Self::from_terms(field, vars, [(Monomial::var(i, 1), field.one())])
    }

    pub fn var_named(field: &F, vars: &Vars, name: &str) -> Result<Self, PolyError> {
        let i = vars.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(field, vars, i))
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms<I>(field: &F, vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        let mut p = Self::zero(field, vars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, F::Elem> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Constant term.
    pub fn constant_term(&self) -> F::Elem {
        self.coeff(&Monomial::ONE)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &F::Elem) {
        if self.field.is_zero(c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = self.field.add(e.get(), c);
                if self.field.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Degree in the listed variables only (parameters excluded).
    pub fn degree_in_vars(&self, vars: &[usize]) -> Option<u32> {
        self.terms.keys().map(|m| m.partial_degree(vars)).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(i)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneity with respect to a subset of the variables.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let mut degs = self.terms.keys().map(|m| m.partial_degree(vars));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::Arith(ArithError::FieldMismatch(
                self.field.descriptor().to_string(),
                other.field.descriptor().to_string(),
            )));
        }
        if self.vars != other.vars {
            return Err(PolyError::VariableMismatch(format!("{:?}", self.vars), format!("{:?}", other.vars)));
        }
        Ok(())
    }

    fn assert_compatible(&self, other: &Self) {
        if let Err(e) = self.compatible(other) {
            panic!("incompatible polynomials: {e}");
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        Ok(self.add(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        Ok(self.sub(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        Ok(self.mul(other))
    }

    /// # Panics
    /// On field or variable mismatch; see [`MultiPoly::checked_add`].
    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &self.field.neg(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect();
        Self { field: self.field.clone(), vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field, &self.vars);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, self.field.mul(a, c))).collect();
        Self { field: self.field.clone(), vars: self.vars.clone(), terms }
    }

    /// Multiplies by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field, &self.vars);
        }
        let terms = self.terms.iter().map(|(a, x)| (a.mul(m), self.field.mul(x, c))).collect();
        Self { field: self.field.clone(), vars: self.vars.clone(), terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc: std::collections::HashMap<Monomial, F::Elem> =
            std::collections::HashMap::with_capacity(small.len() * large.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let prod = self.field.mul(ca, cb);
                acc.entry(m).and_modify(|e| *e = self.field.add(e, &prod)).or_insert(prod);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !self.field.is_zero(c)).collect();
        Self { field: self.field.clone(), vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.field, &self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Self>>(field: &F, vars: &Vars, factors: I) -> Self {
        factors.into_iter().fold(Self::one(field, vars), |acc, f| acc.mul(f))
    }

    /// Evaluates at a point given as one field element per variable.
    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars(), "point dimension");
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = f.mul(&t, &f.pow(x, e as u64));
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Applies a coefficient map into another field, keeping variables.
    pub fn map_coefficients<G: Field, E>(
        &self,
        target: &G,
        mut map: impl FnMut(&F::Elem) -> Result<G::Elem, E>,
    ) -> Result<MultiPoly<G>, E> {
        let mut out = MultiPoly::zero(target, &self.vars);
        for (m, c) in &self.terms {
            out.add_term(*m, &map(c)?);
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in a larger variable list whose prefix
    /// is the current one.
    pub fn extend_vars(&self, vars: &Vars) -> Self {
        assert!(vars.len() >= self.nvars() && vars.names()[..self.nvars()] == *self.vars.names());
        Self { field: self.field.clone(), vars: vars.clone(), terms: self.terms.clone() }
    }

    /// Re-expresses the polynomial in a variable list that contains all
    /// variables actually used, matching by name.
    pub fn rename_into(&self, vars: &Vars) -> Result<Self, PolyError> {
        let map: Vec<Option<usize>> = self.vars.names().iter().map(|n| vars.index_of(n)).collect();
        let mut out = Self::zero(&self.field, vars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; vars.len()];
            for (i, target) in map.iter().enumerate() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                let j = target.ok_or_else(|| PolyError::UnknownVariable(self.vars.names()[i].clone()))?;
                exps[j] += e;
            }
            out.add_term(Monomial::from_exponents(&exps), c);
        }
        Ok(out)
    }

    /// Coefficients as a polynomial in variable `i`: entry `k` is the
    /// coefficient of `v_i^k` (a polynomial free of `v_i`).
    pub fn coefficients_in(&self, i: usize) -> Vec<Self> {
        let deg = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.field, &self.vars); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exp(i) as usize;
            out[k].add_term(m.with_exp(i, 0), c);
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    /// Groups terms by their exponents in `keys`: maps each key monomial to
    /// its coefficient polynomial in the remaining variables.
    pub fn coefficients_wrt(&self, keys: &[usize]) -> BTreeMap<Monomial, Self> {
        let mut out: BTreeMap<Monomial, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = Monomial::ONE;
            let mut rest = *m;
            for &i in keys {
                key = key.with_exp(i, m.exp(i));
                rest = rest.with_exp(i, 0);
            }
            out.entry(key).or_insert_with(|| Self::zero(&self.field, &self.vars)).add_term(rest, c);
        }
        out
    }

    /// Leading term in the canonical (lex) storage order.
    pub fn lex_leading(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.iter().next_back()
    }

    /// Division with remainder by a single polynomial using lex leading
    /// terms; the remainder has no term divisible by the leading monomial
    /// of `d`. Since `{d}` is a Gröbner basis of `(d)`, `d` divides `self`
    /// iff the remainder is zero.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        self.compatible(d)?;
        let (lm, lc) = d.lex_leading().ok_or(PolyError::Arith(ArithError::DivisionByZero))?;
        let (lm, lc_inv) = (*lm, self.field.inv(lc)?);
        let mut q = Self::zero(&self.field, &self.vars);
        let mut r = Self::zero(&self.field, &self.vars);
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            match lm.div(&m) {
                Some(quot) => {
                    let k = self.field.mul(&c, &lc_inv);
                    q.add_term(quot, &k);
                    for (dm, dc) in &d.terms {
                        p.add_term(dm.mul(&quot), &self.field.neg(&self.field.mul(dc, &k)));
                    }
                }
                None => {
                    p.terms.remove(&m);
                    r.add_term(m, &c);
                }
            }
        }
        Ok((q, r))
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Substitutes `images[i]` for variable `i`. All images must share a
    /// field and variable list (which may differ from `self`'s).
    pub fn substitute(&self, images: &[Self]) -> Result<Self, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::Arity { expected: self.nvars(), found: images.len() });
        }
        let target = images.first().map(|p| p.vars.clone()).unwrap_or_else(|| self.vars.clone());
        for img in images {
            if img.field != self.field {
                return Err(PolyError::Arith(ArithError::FieldMismatch(
                    self.field.descriptor().to_string(),
                    img.field.descriptor().to_string(),
                )));
            }
            if img.vars != target {
                return Err(PolyError::VariableMismatch(format!("{:?}", target), format!("{:?}", img.vars)));
            }
        }
        // powers[i][e] = images[i]^e, built lazily
        let mut powers: Vec<Vec<Self>> = images.iter().map(|_| vec![Self::one(&self.field, &target)]).collect();
        let mut out = Self::zero(&self.field, &target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&self.field, &target, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i) as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().expect("nonempty").mul(img);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[i][e]);
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, &tc);
            }
        }
        Ok(out)
    }

    /// Substitution given by name, the unnamed variables being kept.
    pub fn substitute_named(&self, assignment: &[(&str, Self)]) -> Result<Self, PolyError> {
        let mut images: Vec<Self> = (0..self.nvars()).map(|i| Self::var(&self.field, &self.vars, i)).collect();
        for (name, img) in assignment {
            let i = self.vars.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            images[i] = img.clone();
        }
        self.substitute(&images)
    }

    /// Terms sorted by degree then lex, highest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &F::Elem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.display_cmp(a.0));
        v
    }

    /// Scales so that the leading coefficient (in display order) is one.
    pub fn monic(&self) -> Self {
        match self.sorted_terms().first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field.inv(c).expect("nonzero")),
        }
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let field = &self.field;
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = field.is_negative(c);
            let mag = if neg { field.neg(c) } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = m.format(self.vars.names());
            let coeff = field.format_elem(&mag);
            if mono.is_empty() {
                if field.needs_parens(&mag) && k > 0 {
                    write!(f, "({coeff})")?;
                } else {
                    f.write_str(&coeff)?;
                }
            } else if field.is_one(&mag) {
                f.write_str(&mono)?;
            } else if field.needs_parens(&mag) {
                write!(f, "({coeff})*{mono}")?;
            } else {
                write!(f, "{coeff}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
