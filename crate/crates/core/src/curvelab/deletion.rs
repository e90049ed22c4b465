use serde::Serialize;

use crate::arith::{ExtensionField, Field, Rationals};

use super::jacobian::{freeness_report, syzygy_hilbert, FreenessReport, StabilizationPolicy};
use super::{build_octic, run_descended, CurveError, CurveTask, PlaneCurve, ProjectiveLine, Route};

/// Freeness data of the curve left after removing one line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deletion {
    /// Index of the removed line in the input list.
    pub removed: usize,
    pub route: Route,
    pub report: FreenessReport,
    /// `dim AR(f)_k` for `k = 0..=degree`.
    pub syzygy_dims: Vec<(u32, usize)>,
}

struct FreenessWithTable<'a> {
    policy: &'a StabilizationPolicy,
}

impl CurveTask for FreenessWithTable<'_> {
    type Output = (FreenessReport, Vec<(u32, usize)>);

    fn run<F: Field>(&self, c: &PlaneCurve<F>) -> Result<Self::Output, CurveError> {
        Ok((freeness_report(c, self.policy)?, syzygy_hilbert(c, c.degree())))
    }
}

/// For each line, the freeness report and syzygy table of
/// `quartic * (product of the other lines)`, computed exactly over the
/// smallest field found by descent.
pub fn deletion_study(
    quartic: &PlaneCurve<ExtensionField<Rationals>>,
    lines: &[ProjectiveLine<ExtensionField<Rationals>>],
    policy: &StabilizationPolicy,
) -> Result<Vec<Deletion>, CurveError> {
    let task = FreenessWithTable { policy };
    (0..lines.len())
        .map(|skip| {
            let rest: Vec<_> = lines.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, l)| l.clone()).collect();
            let ((report, syzygy_dims), route) = run_descended(&build_octic(quartic, &rest)?, &task)?;
            Ok(Deletion { removed: skip, route, report, syzygy_dims })
        })
        .collect()
}
