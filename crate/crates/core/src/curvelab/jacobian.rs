use std::collections::HashMap;

use serde::Serialize;

use crate::arith::{Field, PrimeField, ReduceModP};
use crate::linalg::DenseMatrix;
use crate::poly::{Monomial, MultiPoly};

use super::{CurveError, PlaneCurve};

/// Monomials of degree `k` in the three coordinates.
pub fn monomials_of_degree(k: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((k + 1) * (k + 2) / 2) as usize);
    for a in (0..=k).rev() {
        for b in (0..=k - a).rev() {
            out.push(Monomial::from_exponents(&[a, b, k - a - b]));
        }
    }
    out
}

pub fn dim_forms(k: u32) -> usize {
    ((k + 1) * (k + 2) / 2) as usize
}

/// Rows `m * g` for every generator `g` of degree `e <= k` and monomial `m`
/// of degree `k - e`, in the basis of degree-`k` monomials.
pub fn macaulay_matrix<F: Field>(gens: &[MultiPoly<F>], k: u32) -> DenseMatrix<F> {
    let field = gens[0].field();
    let cols = monomials_of_degree(k);
    let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for g in gens {
        let Some(e) = g.total_degree() else { continue };
        if e > k {
            continue;
        }
        for m in monomials_of_degree(k - e) {
            let mut row = vec![field.zero(); cols.len()];
            for (t, c) in g.terms() {
                row[index[&t.mul(&m)]] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return DenseMatrix::zeros(field, 0, cols.len());
    }
    DenseMatrix::from_rows(field, rows).expect("rectangular")
}

/// `dim (S / I)_k` for the ideal generated by homogeneous `gens`.
pub fn hilbert_value<F: Field>(gens: &[MultiPoly<F>], k: u32) -> usize {
    dim_forms(k) - macaulay_matrix(gens, k).rank()
}

/// Degree window used to decide that a Hilbert function has become
/// constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationPolicy {
    /// First degree examined; `None` means `3(d - 2)`.
    pub start: Option<u32>,
    /// Number of equal consecutive values required.
    pub window: usize,
    /// Degrees added per extension.
    pub step: u32,
    /// How far past the start the window may be extended.
    pub max_extension: u32,
}

impl Default for StabilizationPolicy {
    fn default() -> Self {
        Self { start: None, window: 3, step: 3, max_extension: 12 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// `window` equal consecutive values.
    Window,
    /// Two equal values `c = h(k) = h(k+1)` with `c <= k` in a degree `k`
    /// at or above every generator degree; by Gotzmann persistence the
    /// Hilbert function is constant from `k` on.
    Persistence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertRun {
    pub value: usize,
    pub values: Vec<(u32, usize)>,
    pub certificate: Certificate,
}

fn stabilize(
    mut h: impl FnMut(u32) -> usize,
    start: u32,
    policy: &StabilizationPolicy,
    persistence_from: Option<u32>,
) -> Result<HilbertRun, CurveError> {
    let window = policy.window.max(2);
    let mut values: Vec<(u32, usize)> = Vec::new();
    let mut limit = start + window as u32 - 1;
    let last = start + policy.max_extension + window as u32 - 1;
    let mut k = start;
    while k <= limit {
        values.push((k, h(k)));
        let n = values.len();
        if let Some(e) = persistence_from {
            if n >= 2 && values[n - 2].1 == values[n - 1].1 {
                let (k0, c) = values[n - 2];
                if k0 >= e && c as u32 <= k0 {
                    return Ok(HilbertRun { value: c, values, certificate: Certificate::Persistence });
                }
            }
        } else if n >= window && values[n - window..].iter().all(|v| v.1 == values[n - 1].1) {
            return Ok(HilbertRun { value: values[n - 1].1, values, certificate: Certificate::Window });
        }
        if k == limit && limit < last {
            limit = (limit + policy.step).min(last);
        }
        k += 1;
    }
    let growing = values.len() >= 3 && values.windows(2).rev().take(2).all(|w| w[1].1 > w[0].1);
    if growing {
        Err(CurveError::PositiveDimensional(values))
    } else {
        Err(CurveError::NotStabilized(values))
    }
}

/// The three first partials (the Jacobian ideal generators).
pub fn jacobian_generators<F: Field>(c: &PlaneCurve<F>) -> Vec<MultiPoly<F>> {
    let f = c.polynomial();
    (0..3).map(|i| f.derivative(i)).collect()
}

/// All partial derivatives of the given order, zero ones dropped.
pub fn derivative_generators<F: Field>(c: &PlaneCurve<F>, order: u32) -> Vec<MultiPoly<F>> {
    let f = c.polynomial();
    let mut out = Vec::new();
    for i in (0..=order).rev() {
        for j in (0..=order - i).rev() {
            let k = order - i - j;
            let mut g = f.clone();
            for (var, times) in [(0, i), (1, j), (2, k)] {
                for _ in 0..times {
                    g = g.derivative(var);
                }
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
    }
    out
}

fn require_plane<F: Field>(c: &PlaneCurve<F>) -> Result<(), CurveError> {
    if c.vars().len() != 3 {
        return Err(CurveError::Invalid("expected a curve in exactly x, y, z".into()));
    }
    Ok(())
}

/// Total Tjurina number: the stable value of the Hilbert function of
/// `S / J_f`, computed exactly over the curve's field.
pub fn tjurina_number<F: Field>(c: &PlaneCurve<F>, policy: &StabilizationPolicy) -> Result<HilbertRun, CurveError> {
    require_plane(c)?;
    c.require_reduced()?;
    let gens = jacobian_generators(c);
    let start = policy.start.unwrap_or(3 * c.degree().saturating_sub(2));
    stabilize(|k| hilbert_value(&gens, k), start, policy, None)
}

/// Degree of the scheme cut out by all partials of the given order.
///
/// The scan starts at the generator degree and stops at the first
/// persistence certificate, capped at `3(d - 2) + max_extension`.
pub fn higher_derivative_degree<F: Field>(
    c: &PlaneCurve<F>,
    order: u32,
    policy: &StabilizationPolicy,
) -> Result<HilbertRun, CurveError> {
    require_plane(c)?;
    if order == 0 || order >= c.degree() {
        return Err(CurveError::Invalid(format!("derivative order {order} out of range")));
    }
    let gens = derivative_generators(c, order);
    let e = c.degree() - order;
    let start = policy.start.unwrap_or(e);
    let cap = (3 * c.degree().saturating_sub(2)).max(start) + policy.max_extension;
    let scan = StabilizationPolicy { start: Some(start), window: 2, step: 1, max_extension: cap - start };
    stabilize(|k| hilbert_value(&gens, k), start, &scan, Some(e))
}

/// `dim AR(f)_r`: syzygies `(a, b, c)` of degree `r` among the partials.
pub fn syzygy_dimension<F: Field>(c: &PlaneCurve<F>, r: u32) -> usize {
    let gens = jacobian_generators(c);
    let d = c.degree();
    let m = macaulay_matrix(&gens, d - 1 + r);
    3 * dim_forms(r) - m.rank()
}

pub fn syzygy_hilbert<F: Field>(c: &PlaneCurve<F>, k_max: u32) -> Vec<(u32, usize)> {
    (0..=k_max).map(|k| (k, syzygy_dimension(c, k))).collect()
}

/// Minimal degree of a Jacobian syzygy.
pub fn mdr<F: Field>(c: &PlaneCurve<F>) -> Result<u32, CurveError> {
    require_plane(c)?;
    c.require_reduced()?;
    (0..c.degree()).find(|&r| syzygy_dimension(c, r) > 0).ok_or(CurveError::Invalid("no syzygy below degree d".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub degree: u32,
    pub mdr: u32,
    pub tau: usize,
    /// `(d - 1)^2 - r (d - r - 1) - tau`.
    pub residual: i64,
    pub free: bool,
    pub exponents: Option<(u32, u32)>,
    pub reason: String,
}

pub fn freeness_residual(d: u32, r: u32, tau: usize) -> i64 {
    let (d, r) = (d as i64, r as i64);
    (d - 1) * (d - 1) - r * (d - r - 1) - tau as i64
}

/// Assembles the freeness criterion from `d`, `mdr` and `tau`.
pub fn assemble_freeness(d: u32, r: u32, tau: usize) -> FreenessReport {
    let residual = freeness_residual(d, r, tau);
    let (free, reason) = if 2 * r > d - 1 {
        (false, "criterion precondition: mdr exceeds (d - 1)/2".to_string())
    } else if residual == 0 {
        (true, "residual vanishes".to_string())
    } else {
        (false, format!("residual {residual} is nonzero"))
    };
    FreenessReport { degree: d, mdr: r, tau, residual, free, exponents: free.then_some((r, d - 1 - r)), reason }
}

pub fn freeness_report<F: Field>(
    c: &PlaneCurve<F>,
    policy: &StabilizationPolicy,
) -> Result<FreenessReport, CurveError> {
    let r = mdr(c)?;
    let tau = tjurina_number(c, policy)?.value;
    Ok(assemble_freeness(c.degree(), r, tau))
}

/// Image of a curve in `F_p` for a target of [`ReduceModP`].
pub fn reduce_curve<F: ReduceModP>(
    c: &PlaneCurve<F>,
    target: &crate::arith::PrimeTarget,
) -> Result<PlaneCurve<PrimeField>, CurveError> {
    let fp = PrimeField::new(target.p)?;
    let g = c.polynomial().map_coefficients(&fp, |a| c.field().reduce_elem(a, target))?;
    PlaneCurve::new(g)
}

/// Result of running a computation at several primes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularRun<T> {
    pub primes: Vec<u64>,
    pub results: Vec<T>,
    pub agreed: bool,
}

/// Runs `compute` on the images of `c` at `count` distinct primes of about
/// `bits` bits.
pub fn at_primes<F: ReduceModP, T: PartialEq + Clone>(
    c: &PlaneCurve<F>,
    bits: u32,
    seed: u64,
    count: usize,
    mut compute: impl FnMut(&PlaneCurve<PrimeField>) -> Result<T, CurveError>,
) -> Result<ModularRun<T>, CurveError> {
    let targets = c.field().prime_targets(bits, seed, count)?;
    let mut primes = Vec::new();
    let mut results = Vec::new();
    for t in &targets {
        let image = reduce_curve(c, t)?;
        if image.degree() != c.degree() || image.polynomial().len() != c.polynomial().len() {
            return Err(CurveError::Invalid(format!("a coefficient vanishes modulo {}", t.p)));
        }
        primes.push(t.p);
        results.push(compute(&image)?);
    }
    let agreed = results.windows(2).all(|w| w[0] == w[1]);
    Ok(ModularRun { primes, results, agreed })
}
