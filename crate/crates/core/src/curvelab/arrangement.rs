use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::arith::Field;
use crate::poly::{restrict_to_line, MultiPoly, Vars};

use super::{meet, CurveError, PlaneCurve, ProjectiveLine, ProjectivePoint};

/// Counts `n_k` of points lying on exactly `k >= 2` lines.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WeakCombinatorics {
    pub counts: BTreeMap<usize, usize>,
}

impl WeakCombinatorics {
    pub fn n(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// `sum C(k, 2) n_k`, the number of line pairs accounted for.
    pub fn pair_count(&self) -> usize {
        self.counts.iter().map(|(k, n)| k * (k - 1) / 2 * n).sum()
    }

    /// `sum (k - 1)^2 n_k`, the total Tjurina number when every multiple
    /// point is ordinary.
    pub fn ordinary_tjurina(&self) -> usize {
        self.counts.iter().map(|(k, n)| (k - 1) * (k - 1) * n).sum()
    }
}

/// Intersection points with the indices of the lines through each, in
/// order of first appearance.
pub fn intersection_points<F: Field>(
    field: &F,
    lines: &[ProjectiveLine<F>],
) -> Result<Vec<(ProjectivePoint<F>, Vec<usize>)>, CurveError> {
    let mut index: HashMap<ProjectivePoint<F>, usize> = HashMap::new();
    let mut points: Vec<(ProjectivePoint<F>, Vec<usize>)> = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = meet(field, &lines[i], &lines[j])?;
            let slot = *index.entry(p.clone()).or_insert_with(|| {
                points.push((p, Vec::new()));
                points.len() - 1
            });
            let through = &mut points[slot].1;
            for k in [i, j] {
                if !through.contains(&k) {
                    through.push(k);
                }
            }
        }
    }
    for (_, through) in &mut points {
        through.sort_unstable();
    }
    Ok(points)
}

pub fn line_intersections<F: Field>(field: &F, lines: &[ProjectiveLine<F>]) -> Result<WeakCombinatorics, CurveError> {
    let mut counts = BTreeMap::new();
    for (_, through) in intersection_points(field, lines)? {
        *counts.entry(through.len()).or_insert(0) += 1;
    }
    Ok(WeakCombinatorics { counts })
}

/// The product of the linear forms, as a curve in `x, y, z`.
pub fn arrangement_curve<F: Field>(field: &F, lines: &[ProjectiveLine<F>]) -> Result<PlaneCurve<F>, CurveError> {
    let vars = Vars::xyz();
    let f = lines.iter().fold(MultiPoly::one(field, &vars), |acc, l| acc.mul(&l.to_poly(field, &vars)));
    PlaneCurve::new(f)
}

/// `C` times the given lines. The lines must be distinct and none may be a
/// component of `C`.
pub fn build_octic<F: Field>(c: &PlaneCurve<F>, lines: &[ProjectiveLine<F>]) -> Result<PlaneCurve<F>, CurveError> {
    let field = c.field();
    for (i, l) in lines.iter().enumerate() {
        if lines[..i].contains(l) {
            return Err(CurveError::DuplicateLine);
        }
        if restrict_to_line(c.polynomial(), l.coeffs())?.is_zero() {
            return Err(CurveError::NotReduced);
        }
    }
    let product = arrangement_curve(field, lines)?;
    let f = c.polynomial().checked_mul(&product.polynomial().rename_into(c.vars())?)?;
    PlaneCurve::new(f)
}

/// Counts `(n2, n3, n4, t3, t7)` of nodes, ordinary triple and quadruple
/// points, tacnodes and `A7` points of a quartic plus lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SingularityProfile {
    pub n2: u32,
    pub n3: u32,
    pub n4: u32,
    pub t3: u32,
    pub t7: u32,
}

impl SingularityProfile {
    pub fn tau(&self) -> u32 {
        self.n2 + 3 * self.t3 + 4 * self.n3 + 7 * self.t7 + 9 * self.n4
    }

    /// Intersection multiplicity absorbed by the profile: pairwise
    /// intersections among the lines and with the quartic.
    pub fn bezout_charge(&self) -> u32 {
        self.n2 + 2 * self.t3 + 3 * self.n3 + 4 * self.t7 + 6 * self.n4
    }

    pub fn as_tuple(&self) -> (u32, u32, u32, u32, u32) {
        (self.n2, self.n3, self.n4, self.t3, self.t7)
    }
}

/// All profiles with Bézout charge `quartic_degree * line_count +
/// C(line_count, 2)` whose Tjurina number lies in `taus`, sorted.
pub fn diophantine_profiles(line_count: u32, quartic_degree: u32, taus: &[u32]) -> Vec<SingularityProfile> {
    let charge = quartic_degree * line_count + line_count * line_count.saturating_sub(1) / 2;
    let mut out = Vec::new();
    for n4 in 0..=charge / 6 {
        for t7 in 0..=(charge - 6 * n4) / 4 {
            let r1 = charge - 6 * n4 - 4 * t7;
            for n3 in 0..=r1 / 3 {
                let r2 = r1 - 3 * n3;
                for t3 in 0..=r2 / 2 {
                    let p = SingularityProfile { n2: r2 - 2 * t3, n3, n4, t3, t7 };
                    if taus.contains(&p.tau()) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out.sort_by_key(SingularityProfile::as_tuple);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realizability {
    pub profile: SingularityProfile,
    pub accepted: bool,
    pub violations: Vec<String>,
}

/// Rejects a profile needing more `A7` points than hyperflex lines, or more
/// contact with the quartic than `4 * line_count`.
pub fn realizability_filter(
    profiles: &[SingularityProfile],
    line_count: u32,
    hyperflex_lines: u32,
) -> Vec<Realizability> {
    profiles
        .iter()
        .map(|p| {
            let mut violations = Vec::new();
            if p.t7 > hyperflex_lines {
                violations.push(format!("t7 = {} exceeds the {hyperflex_lines} available hyperflex lines", p.t7));
            }
            let contact = 4 * p.t7 + 2 * p.t3;
            if contact > 4 * line_count {
                violations.push(format!("contact budget {contact} exceeds {}", 4 * line_count));
            }
            Realizability { profile: *p, accepted: violations.is_empty(), violations }
        })
        .collect()
}
