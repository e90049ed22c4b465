use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{ExtensionField, Field, Rationals};
use crate::linalg::DenseMatrix;
use crate::poly::MultiPoly;

/// A polynomial over `Q[r]/(m)` rewritten, up to a nonzero scalar, over a
/// smaller field that contains all its coefficients.
#[derive(Clone, Debug)]
pub enum Descended {
    Rational(MultiPoly<Rationals>),
    /// Over `Q[w]/(p)` where `w` is one of the original coefficients.
    Subfield(MultiPoly<ExtensionField<Rationals>>),
}

fn padded(a: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut v = a.to_vec();
    v.resize(n, BigRational::zero());
    v
}

/// Kernel vector of the matrix with the given columns, if the kernel is
/// one-dimensional or larger.
fn column_relation(columns: &[Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let rows = columns[0].len();
    let data = (0..rows).flat_map(|i| columns.iter().map(move |c| c[i].clone())).collect();
    let m = DenseMatrix::from_data(&Rationals, rows, columns.len(), data).ok()?;
    m.kernel_basis().into_iter().next()
}

/// Minimal polynomial over `Q` of an element of `Q[r]/(m)`, monic, lowest
/// coefficient first.
pub fn minimal_polynomial(k: &ExtensionField<Rationals>, a: &[BigRational]) -> Vec<BigRational> {
    let n = k.degree();
    let mut powers = vec![padded(&k.one(), n)];
    let mut cur = k.one();
    loop {
        cur = k.mul(&cur, &a.to_vec());
        powers.push(padded(&cur, n));
        if let Some(rel) = column_relation(&powers) {
            let lead = rel.last().expect("nonempty").clone();
            return rel.iter().map(|c| c / &lead).collect();
        }
    }
}

/// Coordinates of `c` in the power basis `1, w, ..., w^(e-1)` given as
/// padded vectors, or `None` when `c` lies outside their span.
fn coordinates(basis: &[Vec<BigRational>], c: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut cols = basis.to_vec();
    cols.push(padded(c, basis[0].len()));
    let rel = column_relation(&cols)?;
    let last = rel.last().expect("nonempty").clone();
    if last.is_zero() {
        return None;
    }
    Some(rel[..basis.len()].iter().map(|q| -q / &last).collect())
}

/// Tries to rewrite `f` over `Q` or over the subfield generated by its
/// first irrational coefficient (after scaling the leading coefficient to
/// one). Returns `None` when that subfield is the whole field or does not
/// contain every coefficient.
pub fn descend(f: &MultiPoly<ExtensionField<Rationals>>) -> Option<Descended> {
    let k = f.field();
    let g = f.monic();
    if g.terms().all(|(_, c)| c.len() <= 1) {
        let q = g
            .map_coefficients(&Rationals, |c| Ok::<_, ()>(c.first().cloned().unwrap_or_else(BigRational::zero)))
            .ok()?;
        return Some(Descended::Rational(q));
    }
    let alpha = g.sorted_terms().into_iter().map(|(_, c)| c.clone()).find(|c| c.len() > 1)?;
    let minpoly = minimal_polynomial(k, &alpha);
    let e = minpoly.len() - 1;
    if e == k.degree() {
        return None;
    }
    let n = k.degree();
    let mut basis = vec![padded(&k.one(), n)];
    for _ in 1..e {
        let next = k.mul(&basis.last().cloned().map(|v| k.reduce(v)).unwrap(), &alpha);
        basis.push(padded(&next, n));
    }
    let sub = ExtensionField::new(Rationals, minpoly, "w").ok()?;
    let h = g.map_coefficients(&sub, |c| coordinates(&basis, c).map(|v| sub.reduce(v)).ok_or(())).ok()?;
    Some(Descended::Subfield(h))
}

/// A computation that can run over any field; used to route curves over
/// `Q[r]/(m)` through the smallest field found by [`descend`].
pub trait CurveTask {
    type Output;
    fn run<F: Field>(&self, c: &super::PlaneCurve<F>) -> Result<Self::Output, super::CurveError>;
}

/// Field a computation actually ran over.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Route {
    pub field: String,
    pub degree: usize,
}

/// Runs `task` exactly on `c`, after moving `c` (up to scale) to `Q` or a
/// proper subfield when possible.
pub fn run_descended<T: CurveTask>(
    c: &super::PlaneCurve<ExtensionField<Rationals>>,
    task: &T,
) -> Result<(T::Output, Route), super::CurveError> {
    use super::PlaneCurve;
    match descend(c.polynomial()) {
        Some(Descended::Rational(q)) => Ok((task.run(&PlaneCurve::new(q)?)?, Route { field: "Q".into(), degree: 1 })),
        Some(Descended::Subfield(s)) => {
            let route = Route { field: s.field().descriptor().to_string(), degree: s.field().degree() };
            Ok((task.run(&PlaneCurve::new(s)?)?, route))
        }
        None => Ok((task.run(c)?, Route { field: c.field().descriptor().to_string(), degree: c.field().degree() })),
    }
}
