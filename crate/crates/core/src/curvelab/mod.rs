//! Plane curves and the invariants computed from them: Tjurina numbers,
//! Jacobian syzygies, freeness, line arrangements, tangency of lines and
//! the quartics invariant under the group of order eight.

mod arrangement;
mod curve;
mod deletion;
mod descent;
pub mod g8;
pub mod jacobian;
mod tangency;

use thiserror::Error;

use crate::arith::ArithError;
use crate::groebner::GroebnerError;
use crate::linalg::LinalgError;
use crate::poly::PolyError;

pub use arrangement::{
    arrangement_curve, build_octic, diophantine_profiles, intersection_points, line_intersections,
    realizability_filter, Realizability, SingularityProfile, WeakCombinatorics,
};
pub use curve::{meet, PlaneCurve, ProjectiveLine, ProjectivePoint};
pub use deletion::{deletion_study, Deletion};
pub use descent::{descend, minimal_polynomial, run_descended, CurveTask, Descended, Route};
pub use g8::{
    factor_binomial_quartic, fermat_equivalence_witness, hessian_coefficient_system, hessian_residual, is_g8_invariant,
    verify_theorem_2_3, BinomialFactorization, FermatWitness, G8Quartic, StageStatus, TheoremConfig,
    VerificationReport,
};
pub use jacobian::{
    assemble_freeness, freeness_report, higher_derivative_degree, mdr, syzygy_dimension, syzygy_hilbert,
    tjurina_number, Certificate, FreenessReport, HilbertRun, ModularRun, StabilizationPolicy,
};
pub use tangency::{
    classify_tangency, complex_roots, contact_singularity, dual_counts_from, dual_membership_check,
    dual_singularity_counts, flex_analysis, numeric_cross_check, verify_bitangents, DualMembership,
    DualSingularityCounts, FlexAnalysis, LineTangency, NumericCheck, TangencyKind, TangencyReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("curve is not reduced")]
    NotReduced,
    #[error("line {0} is a component of the curve")]
    LineIsComponent(String),
    #[error("curve is singular")]
    NotSmooth,
    #[error("duplicate line")]
    DuplicateLine,
    #[error("Hilbert function did not stabilize: {0:?}")]
    NotStabilized(Vec<(u32, usize)>),
    #[error("Hilbert function keeps growing (positive-dimensional locus): {0:?}")]
    PositiveDimensional(Vec<(u32, usize)>),
    #[error("modular results disagree: {0}")]
    ModularDisagreement(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}
