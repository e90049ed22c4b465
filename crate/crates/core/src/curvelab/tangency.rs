use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{ExtensionField, Field, Rationals};
use crate::poly::{restrict_to_line, resultant, subresultant_coefficient, BinaryForm, MultiPoly};

use super::jacobian::{tjurina_number, StabilizationPolicy};
use super::{CurveError, PlaneCurve, ProjectiveLine};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TangencyKind {
    Transversal,
    SimpleTangent,
    FlexTangent,
    Bitangent,
    Hyperflex,
}

impl TangencyKind {
    /// Reads the kind off the contact pattern of a line with a quartic.
    pub fn from_pattern(pattern: &[u32]) -> Option<Self> {
        Some(match pattern {
            [1, 1, 1, 1] => TangencyKind::Transversal,
            [2, 1, 1] => TangencyKind::SimpleTangent,
            [3, 1] => TangencyKind::FlexTangent,
            [2, 2] => TangencyKind::Bitangent,
            [4] => TangencyKind::Hyperflex,
            _ => return None,
        })
    }
}

/// Singularity of `C + line` at a point of contact order `m`: `A_(2m-1)`.
pub fn contact_singularity(m: u32) -> String {
    format!("A{}", 2 * m - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineTangency {
    pub line: String,
    pub pattern: Vec<u32>,
    pub kind: TangencyKind,
    pub singularities: Vec<String>,
}

pub fn classify_tangency<F: Field>(c: &PlaneCurve<F>, line: &ProjectiveLine<F>) -> Result<LineTangency, CurveError> {
    if c.degree() != 4 {
        return Err(CurveError::Invalid(format!("tangency classification needs a quartic, got degree {}", c.degree())));
    }
    let r = restrict_to_line(c.polynomial(), line.coeffs())?;
    if r.is_zero() {
        return Err(CurveError::LineIsComponent(line.format(c.field())));
    }
    let pattern = r.multiplicity_pattern()?;
    let kind = TangencyKind::from_pattern(&pattern).expect("patterns of a quartic are partitions of 4");
    let singularities = pattern.iter().map(|&m| contact_singularity(m)).collect();
    Ok(LineTangency { line: line.format(c.field()), pattern, kind, singularities })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TangencyReport {
    pub lines: Vec<LineTangency>,
    pub bitangents: usize,
    pub hyperflexes: usize,
    /// Indices of lines that are neither bitangents nor hyperflex lines.
    pub others: Vec<usize>,
}

pub fn verify_bitangents<F: Field>(
    c: &PlaneCurve<F>,
    lines: &[ProjectiveLine<F>],
) -> Result<TangencyReport, CurveError> {
    let entries = lines.iter().map(|l| classify_tangency(c, l)).collect::<Result<Vec<_>, _>>()?;
    let count = |k| entries.iter().filter(|e| e.kind == k).count();
    let others = (0..entries.len())
        .filter(|&i| !matches!(entries[i].kind, TangencyKind::Bitangent | TangencyKind::Hyperflex))
        .collect();
    Ok(TangencyReport {
        bitangents: count(TangencyKind::Bitangent),
        hyperflexes: count(TangencyKind::Hyperflex),
        others,
        lines: entries,
    })
}

/// Roots of a univariate polynomial (lowest coefficient first) by the
/// Durand-Kerner iteration.
pub fn complex_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| Complex64::new(c / lead, 0.0)).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (roots[i] - roots[j]));
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

fn eval_element(a: &[BigRational], r: Complex64) -> Complex64 {
    a.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * r + c.to_f64().unwrap_or(f64::NAN))
}

fn mul_binary(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Largest deviation of a monic quartic from the shape `(u + a)^4`
/// (`hyperflex`) or `(u^2 + a u + b)^2` (otherwise), coefficients lowest
/// first.
fn shape_residual(q: &[Complex64], hyperflex: bool) -> f64 {
    let (c0, c1, c2, c3) = (q[0], q[1], q[2], q[3]);
    if hyperflex {
        let a = c3 / 4.0;
        [(c2 - 6.0 * a * a).norm(), (c1 - 4.0 * a * a * a).norm(), (c0 - a * a * a * a).norm()]
            .into_iter()
            .fold(0.0, f64::max)
    } else {
        let a = c3 / 2.0;
        let b = (c2 - a * a) / 2.0;
        [(c1 - 2.0 * a * b).norm(), (c0 - b * b).norm()].into_iter().fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericCheck {
    pub embeddings: usize,
    pub real_embeddings: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub consistent: bool,
}

/// Instantiates the lines at every complex root of the minimal polynomial
/// and checks that each restricted quartic has the shape predicted by the
/// exact classification (a square, or a fourth power for hyperflex lines).
pub fn numeric_cross_check(
    c: &PlaneCurve<Rationals>,
    k: &ExtensionField<Rationals>,
    lines: &[ProjectiveLine<ExtensionField<Rationals>>],
    report: &TangencyReport,
    tolerance: f64,
) -> NumericCheck {
    let m: Vec<f64> = k.modulus().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let roots = complex_roots(&m);
    let real = roots.iter().filter(|z| z.im.abs() < 1e-9).count();
    let zero = Complex64::new(0.0, 0.0);
    let mut worst = 0.0f64;
    for r in &roots {
        for (line, entry) in lines.iter().zip(&report.lines) {
            let coeffs = line.coeffs();
            let i = (0..3).find(|&j| !k.is_zero(&coeffs[j])).expect("nonzero line");
            let v: Vec<Complex64> = coeffs.iter().map(|a| eval_element(a, *r)).collect();
            let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
            let mut param = [[zero; 2]; 3];
            for (slot, &j) in others.iter().enumerate() {
                param[j][slot] = v[i];
                param[i][slot] = -v[j];
            }
            let mut q = [zero; 5];
            for (mono, coef) in c.polynomial().terms() {
                let mut term = vec![Complex64::new(coef.to_f64().unwrap_or(f64::NAN), 0.0)];
                for (var, lin) in param.iter().enumerate() {
                    for _ in 0..mono.exp(var) {
                        term = mul_binary(&term, &[lin[1], lin[0]]);
                    }
                }
                for (d, t) in term.into_iter().enumerate() {
                    q[d] += t;
                }
            }
            if q[0].norm() > q[4].norm() {
                q.reverse();
            }
            let lead = q[4];
            let monic: Vec<Complex64> = q.iter().map(|z| z / lead).collect();
            let scale = monic.iter().map(|z| z.norm()).fold(1.0, f64::max);
            let res = shape_residual(&monic, entry.kind == TangencyKind::Hyperflex) / scale;
            worst = worst.max(if matches!(entry.kind, TangencyKind::Bitangent | TangencyKind::Hyperflex) {
                res
            } else {
                f64::INFINITY
            });
        }
    }
    NumericCheck {
        embeddings: roots.len(),
        real_embeddings: real,
        max_residual: worst,
        tolerance,
        consistent: worst <= tolerance,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct FlexAnalysis<F: Field> {
    pub total_multiplicity: u32,
    pub hyperflex_count: usize,
    /// Intersection multiplicities of the curve with its Hessian, largest
    /// first.
    pub pattern: Vec<u32>,
    /// `(a, b, c)` of the change `x <- x + c y + a z`, `y <- y + b z`.
    pub coordinate_change: (i64, i64, i64),
    /// Equations whose common zeros are exactly the hyperflex points.
    #[serde(skip)]
    pub hyperflex_locus: Vec<MultiPoly<F>>,
}

const SHIFTS: [(i64, i64, i64); 12] = [
    (0, 0, 0),
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 1, 0),
    (1, 2, 3),
    (2, -1, 1),
    (3, 1, -2),
    (-1, 3, 2),
    (5, -3, 7),
    (-4, 7, 5),
    (11, 6, -9),
];

fn shift_matrix<F: Field>(field: &F, (a, b, c): (i64, i64, i64), inverse: bool) -> [[F::Elem; 3]; 3] {
    let e = |n: i64| field.from_i64(n);
    if inverse {
        [[e(1), e(-c), e(c * b - a)], [e(0), e(1), e(-b)], [e(0), e(0), e(1)]]
    } else {
        [[e(1), e(c), e(a)], [e(0), e(1), e(b)], [e(0), e(0), e(1)]]
    }
}

/// Intersects a smooth curve with its Hessian by a resultant in `z`, after
/// a coordinate change making every fiber over a root meet the curves in a
/// single point.
pub fn flex_analysis<F: Field>(c: &PlaneCurve<F>) -> Result<FlexAnalysis<F>, CurveError> {
    if c.vars().len() != 3 || c.degree() < 3 {
        return Err(CurveError::Invalid("flex analysis needs a plane curve of degree at least 3".into()));
    }
    if tjurina_number(c, &StabilizationPolicy::default())?.value != 0 {
        return Err(CurveError::NotSmooth);
    }
    let field = c.field();
    let zd = |p: &MultiPoly<F>, d: u32| !field.is_zero(&p.coeff(&crate::poly::Monomial::var(2, d)));
    for shift in SHIFTS {
        let g = c.transformed(&shift_matrix(field, shift, false))?;
        let h = g.polynomial().hessian_det();
        let e = 3 * (c.degree() - 2);
        if !zd(g.polynomial(), c.degree()) || !zd(&h, e) {
            continue;
        }
        let res = BinaryForm::from_poly(&resultant(g.polynomial(), &h, 2)?, 0, 1)?;
        if res.is_zero() {
            return Err(CurveError::NotSmooth);
        }
        let psc = BinaryForm::from_poly(&subresultant_coefficient(g.polynomial(), &h, 2, 1)?, 0, 1)?;
        let parts = res.squarefree_decomposition()?;
        if parts.iter().any(|(p, _)| p.gcd(&psc).degree() > 0) {
            continue;
        }
        let pattern = res.multiplicity_pattern()?;
        let higher = parts
            .iter()
            .filter(|(_, m)| *m >= 2)
            .fold(BinaryForm::new(field, 0, vec![field.one()]), |acc, (p, _)| acc.mul(p));
        let higher = PlaneCurve::new(higher.to_poly(c.vars(), 0, 1));
        let mut locus = vec![c.polynomial().clone(), c.polynomial().hessian_det()];
        if let Ok(hc) = higher {
            locus.insert(0, hc.transformed(&shift_matrix(field, shift, true))?.polynomial().clone());
        }
        return Ok(FlexAnalysis {
            total_multiplicity: pattern.iter().sum(),
            hyperflex_count: pattern.iter().filter(|&&m| m >= 2).count(),
            pattern,
            coordinate_change: shift,
            hyperflex_locus: locus,
        });
    }
    Err(CurveError::Invalid("no coordinate change in the budget separates the flexes".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualSingularityCounts {
    pub nodes: usize,
    pub cusps: usize,
    pub e6: usize,
}

/// Singularities of the dual of a smooth quartic from its complete list of
/// 28 bitangent and hyperflex lines.
pub fn dual_singularity_counts(report: &TangencyReport) -> Result<DualSingularityCounts, CurveError> {
    if report.lines.len() != 28 || !report.others.is_empty() {
        return Err(CurveError::Invalid("the bitangent report must list 28 bitangent or hyperflex lines".into()));
    }
    Ok(dual_counts_from(report.bitangents, report.hyperflexes))
}

pub fn dual_counts_from(bitangents: usize, hyperflexes: usize) -> DualSingularityCounts {
    DualSingularityCounts { nodes: bitangents, cusps: 24 - 2 * hyperflexes, e6: hyperflexes }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct DualMembership<F: Field> {
    pub holds: bool,
    pub cofactor_degree: Option<u32>,
    #[serde(skip)]
    pub cofactor: Option<MultiPoly<F>>,
    /// Number of terms of the remainder when the division fails.
    pub remainder_terms: usize,
}

/// Whether `G(f_x, f_y, f_z)` is divisible by `f`, i.e. whether `G`
/// vanishes on the image of the gradient map of `C`.
pub fn dual_membership_check<F: Field>(c: &PlaneCurve<F>, g: &PlaneCurve<F>) -> Result<DualMembership<F>, CurveError> {
    let d = c.degree();
    if g.degree() != d * (d - 1) {
        return Err(CurveError::Invalid(format!("expected a dual of degree {}, got {}", d * (d - 1), g.degree())));
    }
    let f = c.polynomial();
    let grad = f.gradient();
    let gx = g.polynomial().rename_into(f.vars())?;
    let mut images = grad.to_vec();
    for i in 3..f.nvars() {
        images.push(MultiPoly::var(f.field(), f.vars(), i));
    }
    let composed = gx.substitute(&images)?;
    let (q, r) = composed.divrem(f)?;
    if r.is_zero() {
        Ok(DualMembership { holds: true, cofactor_degree: q.total_degree(), cofactor: Some(q), remainder_terms: 0 })
    } else {
        Ok(DualMembership { holds: false, cofactor_degree: None, cofactor: None, remainder_terms: r.len() })
    }
}
