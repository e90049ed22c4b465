use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Field;
use crate::poly::{restrict_to_line, MultiPoly, Vars};

use super::CurveError;

/// A plane curve `f = 0` with `f` homogeneous in the first three variables.
/// Further variables, if any, are parameters of degree zero.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneCurve<F: Field> {
    f: MultiPoly<F>,
    degree: u32,
}

impl<F: Field> PlaneCurve<F> {
    pub fn new(f: MultiPoly<F>) -> Result<Self, CurveError> {
        if f.nvars() < 3 {
            return Err(CurveError::Invalid("a plane curve needs three coordinate variables".into()));
        }
        if f.is_zero() {
            return Err(CurveError::Invalid("the zero polynomial defines no curve".into()));
        }
        if !f.is_homogeneous_in(&[0, 1, 2]) {
            return Err(CurveError::Invalid("not homogeneous in the coordinates".into()));
        }
        let degree = f.degree_in_vars(&[0, 1, 2]).unwrap_or(0);
        Ok(Self { f, degree })
    }

    pub fn polynomial(&self) -> &MultiPoly<F> {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> &F {
        self.f.field()
    }

    pub fn vars(&self) -> &Vars {
        self.f.vars()
    }

    pub fn has_parameters(&self) -> bool {
        self.f.nvars() > 3 && self.f.terms().any(|(m, _)| m.partial_degree(&[0, 1, 2]) != m.degree())
    }

    fn require_plain(&self) -> Result<(), CurveError> {
        if self.has_parameters() {
            return Err(CurveError::Invalid("curve still depends on parameters".into()));
        }
        Ok(())
    }

    /// Squarefreeness of the restriction to pseudo-random lines. A
    /// squarefree restriction proves the curve reduced; several failures in
    /// a row are taken as evidence of a multiple component.
    pub fn is_reduced(&self, seed: u64) -> Result<bool, CurveError> {
        self.require_plain()?;
        let field = self.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..8 {
            let line = [
                field.from_i64(rng.gen_range(-40..=40)),
                field.from_i64(rng.gen_range(-40..=40)),
                field.from_i64(rng.gen_range(1..=40)),
            ];
            let r = restrict_to_line(&self.f, &line)?;
            if !r.is_zero() && r.is_squarefree() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn require_reduced(&self) -> Result<(), CurveError> {
        if self.is_reduced(0)? {
            Ok(())
        } else {
            Err(CurveError::NotReduced)
        }
    }

    pub fn scaled(&self, c: &F::Elem) -> Result<Self, CurveError> {
        if self.field().is_zero(c) {
            return Err(CurveError::Invalid("scaling by zero".into()));
        }
        Self::new(self.f.scale(c))
    }

    /// The curve in new coordinates `x_i <- sum_j m[i][j] x_j`.
    pub fn transformed(&self, m: &[[F::Elem; 3]; 3]) -> Result<Self, CurveError> {
        let (field, vars) = (self.field(), self.vars());
        let mut images = Vec::with_capacity(vars.len());
        for row in m {
            let mut img = MultiPoly::zero(field, vars);
            for (j, c) in row.iter().enumerate() {
                img = img.add(&MultiPoly::var(field, vars, j).scale(c));
            }
            images.push(img);
        }
        for k in 3..vars.len() {
            images.push(MultiPoly::var(field, vars, k));
        }
        Self::new(self.f.substitute(&images)?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CurveError> {
        Self::new(self.f.checked_mul(&other.f)?)
    }
}

impl<F: Field> fmt::Display for PlaneCurve<F> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}", self.f)
    }
}

/// Normalizes a nonzero triple so its first nonzero entry is one.
fn normalize<F: Field>(field: &F, v: [F::Elem; 3]) -> Option<[F::Elem; 3]> {
    let lead = v.iter().find(|c| !field.is_zero(c))?;
    let inv = field.inv(lead).ok()?;
    Some([field.mul(&v[0], &inv), field.mul(&v[1], &inv), field.mul(&v[2], &inv)])
}

/// The line `a x + b y + c z = 0`, normalized so the first nonzero
/// coefficient is one.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveLine<F: Field> {
    coeffs: [F::Elem; 3],
}

impl<F: Field> ProjectiveLine<F> {
    pub fn new(field: &F, coeffs: [F::Elem; 3]) -> Result<Self, CurveError> {
        let coeffs = normalize(field, coeffs).ok_or(CurveError::Invalid("all line coefficients are zero".into()))?;
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[F::Elem; 3] {
        &self.coeffs
    }

    pub fn to_poly(&self, field: &F, vars: &Vars) -> MultiPoly<F> {
        (0..3).fold(MultiPoly::zero(field, vars), |acc, i| {
            acc.add(&MultiPoly::var(field, vars, i).scale(&self.coeffs[i]))
        })
    }

    pub fn contains(&self, field: &F, p: &ProjectivePoint<F>) -> bool {
        let s = (0..3).fold(field.zero(), |acc, i| field.add(&acc, &field.mul(&self.coeffs[i], &p.coords[i])));
        field.is_zero(&s)
    }

    pub fn format(&self, field: &F) -> String {
        self.to_poly(field, &Vars::xyz()).to_string()
    }
}

/// A point `(X : Y : Z)`, normalized like [`ProjectiveLine`].
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectivePoint<F: Field> {
    coords: [F::Elem; 3],
}

impl<F: Field> ProjectivePoint<F> {
    pub fn new(field: &F, coords: [F::Elem; 3]) -> Result<Self, CurveError> {
        let coords = normalize(field, coords).ok_or(CurveError::Invalid("all point coordinates are zero".into()))?;
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[F::Elem; 3] {
        &self.coords
    }

    pub fn format(&self, field: &F) -> String {
        let c: Vec<String> = self.coords.iter().map(|a| field.format_elem(a)).collect();
        format!("({})", c.join(" : "))
    }
}

/// Intersection point of two distinct lines (cross product of their
/// coefficient vectors).
pub fn meet<F: Field>(
    field: &F,
    a: &ProjectiveLine<F>,
    b: &ProjectiveLine<F>,
) -> Result<ProjectivePoint<F>, CurveError> {
    let (u, v) = (a.coeffs(), b.coeffs());
    let cross = |i: usize, j: usize| field.sub(&field.mul(&u[i], &v[j]), &field.mul(&u[j], &v[i]));
    ProjectivePoint::new(field, [cross(1, 2), cross(2, 0), cross(0, 1)]).map_err(|_| CurveError::DuplicateLine)
}

impl<F: Field> Eq for ProjectiveLine<F> {}

impl<F: Field> std::hash::Hash for ProjectiveLine<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl<F: Field> Eq for ProjectivePoint<F> {}

impl<F: Field> std::hash::Hash for ProjectivePoint<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}
