use std::fmt;

use crate::arith::upoly::{self, UPoly};
use crate::arith::Field;

use super::{Monomial, MultiPoly, PolyError, Vars};

/// A homogeneous form of degree `d` in two variables `s, t`, stored densely:
/// `coeffs[i]` is the coefficient of `s^i t^(d-i)`.
///
/// The zero form keeps its nominal degree so that a line lying on a curve
/// restricts to the zero form of the curve's degree.
#[derive(Clone, PartialEq)]
pub struct BinaryForm<F: Field> {
    field: F,
    degree: u32,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> BinaryForm<F> {
    pub fn new(field: &F, degree: u32, mut coeffs: Vec<F::Elem>) -> Self {
        assert!(coeffs.len() <= degree as usize + 1, "too many coefficients");
        coeffs.resize(degree as usize + 1, field.zero());
        Self { field: field.clone(), degree, coeffs }
    }

    /// Reads a polynomial homogeneous in variables `s` and `t` and free of
    /// all others.
    pub fn from_poly(p: &MultiPoly<F>, s: usize, t: usize) -> Result<Self, PolyError> {
        if !p.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        let d = p.total_degree().unwrap_or(0);
        let mut coeffs = vec![p.field().zero(); d as usize + 1];
        for (m, c) in p.terms() {
            if m.exp(s) + m.exp(t) != m.degree() {
                return Err(PolyError::NotBinary);
            }
            coeffs[m.exp(s) as usize] = c.clone();
        }
        Ok(Self { field: p.field().clone(), degree: d, coeffs })
    }

    /// Homogenizes a univariate polynomial in `s` to degree `d`.
    pub fn homogenize(field: &F, u: &[F::Elem], degree: u32) -> Self {
        Self::new(field, degree, u.to_vec())
    }

    pub fn to_poly(&self, vars: &Vars, s: usize, t: usize) -> MultiPoly<F> {
        let d = self.degree;
        let terms = self.coeffs.iter().enumerate().map(|(i, c)| {
            let m = Monomial::var(s, i as u32).mul(&Monomial::var(t, d - i as u32));
            (m, c.clone())
        });
        MultiPoly::from_terms(&self.field, vars, terms)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    /// The dehomogenization at `t = 1`, a univariate polynomial in `s`.
    pub fn dehomogenize(&self) -> UPoly<F::Elem> {
        upoly::trimmed(&self.field, self.coeffs.clone())
    }

    /// Multiplicity of the root `(1:0)`, i.e. the power of `t` dividing the
    /// form; `None` for the zero form.
    pub fn t_multiplicity(&self) -> Option<u32> {
        upoly::degree(&self.dehomogenize()).map(|k| self.degree - k as u32)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let c = upoly::mul(&self.field, &self.coeffs, &other.coeffs);
        Self::new(&self.field, self.degree + other.degree, c)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::new(&self.field, 0, vec![self.field.one()]), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let v = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self { field: self.field.clone(), degree: self.degree, coeffs: v }
    }

    /// Normalizes so the highest nonzero `s`-coefficient is one.
    pub fn monic(&self) -> Self {
        match self.coeffs.iter().rev().find(|c| !self.field.is_zero(c)) {
            None => self.clone(),
            Some(c) => self.scale(&self.field.inv(c).expect("nonzero")),
        }
    }

    /// True when `self = c * other` for a nonzero scalar `c`.
    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        self.degree == other.degree && self.is_zero() == other.is_zero() && self.monic() == other.monic()
    }

    /// Greatest common divisor, normalized by [`BinaryForm::monic`].
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let f = &self.field;
        let g = upoly::gcd(f, &self.dehomogenize(), &other.dehomogenize());
        let tm = self.t_multiplicity().unwrap().min(other.t_multiplicity().unwrap());
        let deg = upoly::degree(&g).unwrap_or(0) as u32 + tm;
        Self::new(f, deg, g)
    }

    /// Squarefree decomposition `q = c * prod f_i^(e_i)` with pairwise
    /// coprime squarefree `f_i` and strictly increasing `e_i`.
    ///
    /// Requires characteristic zero or larger than the degree.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, u32)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroInput("squarefree decomposition of the zero form"));
        }
        let f = &self.field;
        let mut parts: Vec<(Self, u32)> = yun(f, &self.dehomogenize())
            .into_iter()
            .map(|(u, e)| {
                let d = upoly::degree(&u).unwrap() as u32;
                (Self::new(f, d, u), e)
            })
            .collect();
        let tm = self.t_multiplicity().unwrap();
        if tm > 0 {
            let t = Self::new(f, 1, vec![f.one()]);
            match parts.iter_mut().find(|(_, e)| *e == tm) {
                Some((g, _)) => *g = g.mul(&t),
                None => parts.push((t, tm)),
            }
            parts.sort_by_key(|(_, e)| *e);
        }
        Ok(parts)
    }

    /// Root multiplicities over the algebraic closure, largest first; for a
    /// quartic this is the contact pattern with a line.
    pub fn multiplicity_pattern(&self) -> Result<Vec<u32>, PolyError> {
        let mut out = Vec::new();
        for (g, e) in self.squarefree_decomposition()? {
            out.extend(std::iter::repeat_n(e, g.degree as usize));
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    pub fn is_squarefree(&self) -> bool {
        self.multiplicity_pattern().map(|p| p.iter().all(|&e| e == 1)).unwrap_or(false)
    }
}

/// Yun's algorithm on a univariate polynomial; factors are monic, constant
/// factors are skipped.
fn yun<F: Field>(f: &F, u: &[F::Elem]) -> Vec<(UPoly<F::Elem>, u32)> {
    let mut out = Vec::new();
    if upoly::degree(u).unwrap_or(0) == 0 {
        return out;
    }
    let a = upoly::monic(f, u);
    let b = upoly::derivative(f, &a);
    let c = upoly::gcd(f, &a, &b);
    let div = |x: &[F::Elem], y: &[F::Elem]| upoly::divrem(f, x, y).expect("nonzero divisor").0;
    let mut w = div(&a, &c);
    let mut y = div(&b, &c);
    let mut z = upoly::sub(f, &y, &upoly::derivative(f, &w));
    let mut i = 1;
    while upoly::degree(&w).unwrap_or(0) > 0 {
        let g = upoly::gcd(f, &w, &z);
        if upoly::degree(&g).unwrap_or(0) > 0 {
            out.push((g.clone(), i));
        }
        w = div(&w, &g);
        y = div(&z, &g);
        z = upoly::sub(f, &y, &upoly::derivative(f, &w));
        i += 1;
    }
    out
}

impl<F: Field> fmt::Display for BinaryForm<F> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = Vars::new(&["s", "t"]);
        write!(fm, "{}", self.to_poly(&vars, 0, 1))
    }
}

impl<F: Field> fmt::Debug for BinaryForm<F> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "BinaryForm(deg {}: {self})", self.degree)
    }
}

/// Two independent points spanning the line `a x + b y + c z = 0`.
///
/// With `i` the first nonzero coefficient, one point is produced for each
/// other index `j` in increasing order: coordinate `j` is `coeff[i]`,
/// coordinate `i` is `-coeff[j]`, the rest zero. For `x = 0` this gives
/// `(0:1:0)` and `(0:0:1)`.
pub fn line_parametrization<F: Field>(field: &F, line: &[F::Elem; 3]) -> Result<[[F::Elem; 3]; 2], PolyError> {
    let i =
        line.iter().position(|c| !field.is_zero(c)).ok_or(PolyError::ZeroInput("line with all coefficients zero"))?;
    let mut pts = (0..3).filter(|&j| j != i).map(|j| {
        let mut p = [field.zero(), field.zero(), field.zero()];
        p[j] = line[i].clone();
        p[i] = field.neg(&line[j]);
        p
    });
    Ok([pts.next().unwrap(), pts.next().unwrap()])
}

/// Restricts a form in the first three variables to a line, returning
/// `f(sP + tQ)` for the points of [`line_parametrization`].
pub fn restrict_to_line<F: Field>(f: &MultiPoly<F>, line: &[F::Elem; 3]) -> Result<BinaryForm<F>, PolyError> {
    if !f.is_homogeneous() {
        return Err(PolyError::NotHomogeneous);
    }
    if f.terms().any(|(m, _)| m.partial_degree(&[0, 1, 2]) != m.degree()) {
        return Err(PolyError::VariableMismatch("x, y, z".into(), format!("{:?}", f.vars())));
    }
    let field = f.field();
    let [p, q] = line_parametrization(field, line)?;
    let st = Vars::new(&["s", "t"]);
    let s = MultiPoly::var(field, &st, 0);
    let t = MultiPoly::var(field, &st, 1);
    let mut images: Vec<MultiPoly<F>> = (0..3).map(|k| s.scale(&p[k]).add(&t.scale(&q[k]))).collect();
    images.resize(f.nvars(), MultiPoly::zero(field, &st));
    let r = f.substitute(&images)?;
    let d = f.total_degree().unwrap_or(0);
    if r.is_zero() {
        return Ok(BinaryForm::new(field, d, Vec::new()));
    }
    BinaryForm::from_poly(&r, 0, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rationals;
    use crate::poly::parse_poly;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn bf(s: &str) -> BinaryForm<Rationals> {
        let p = parse_poly(s, &Rationals, &Vars::new(&["s", "t"])).unwrap();
        BinaryForm::from_poly(&p, 0, 1).unwrap()
    }

    fn xyz(s: &str) -> MultiPoly<Rationals> {
        parse_poly(s, &Rationals, &Vars::xyz()).unwrap()
    }

    #[test]
    fn restrictions() {
        let c48 = xyz("x^4 + y^4 + x z^3");
        let r = restrict_to_line(&c48, &[q(1), q(0), q(0)]).unwrap();
        assert_eq!(r, bf("s^4"));
        assert_eq!(r.multiplicity_pattern().unwrap(), vec![4]);
        let r = restrict_to_line(&c48, &[q(1), q(0), q(1)]).unwrap();
        assert_eq!(r, bf("s^4"));
        let fermat = xyz("x^4 + y^4 + z^4");
        let r = restrict_to_line(&fermat, &[q(0), q(0), q(1)]).unwrap();
        assert_eq!(r, bf("s^4 + t^4"));
        assert!(r.is_squarefree());
        let conic = xyz("x^2 - y z");
        let r = restrict_to_line(&conic, &[q(1), q(0), q(0)]).unwrap();
        assert_eq!(r, bf("-s t"));
        assert!(r.is_squarefree());
    }

    #[test]
    fn component_lines_restrict_to_zero() {
        let f = xyz("x (y^3 + z^3)");
        let r = restrict_to_line(&f, &[q(1), q(0), q(0)]).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.degree(), 4);
        assert!(restrict_to_line(&f, &[q(0), q(0), q(0)]).is_err());
    }

    #[test]
    fn gcds() {
        assert_eq!(bf("s^2 t").gcd(&bf("s t^2")), bf("s t"));
        assert_eq!(bf("s^4").gcd(&bf("4 s^3 t")), bf("s^3"));
        assert_eq!(bf("(s^2+t^2)^2 s").gcd(&bf("(s^2+t^2) t^3")), bf("s^2 + t^2"));
    }

    #[test]
    fn squarefree_parts() {
        let d = bf("s^4").squarefree_decomposition().unwrap();
        assert_eq!(d, vec![(bf("s"), 4)]);
        let d = bf("s^2 (s - t)^2").squarefree_decomposition().unwrap();
        assert_eq!(d, vec![(bf("s^2 - s t"), 2)]);
        let d = bf("s^4 + t^4").squarefree_decomposition().unwrap();
        assert_eq!(d, vec![(bf("s^4 + t^4"), 1)]);
        let d = bf("3 s t^3 (s+t)").squarefree_decomposition().unwrap();
        assert_eq!(d, vec![(bf("s^2 + s t"), 1), (bf("t"), 3)]);
        assert_eq!(bf("t^4").multiplicity_pattern().unwrap(), vec![4]);
        assert_eq!(bf("s t (s-t)^2").multiplicity_pattern().unwrap(), vec![2, 1, 1]);
        assert!(bf("0 s").squarefree_decomposition().is_err());
    }
}
