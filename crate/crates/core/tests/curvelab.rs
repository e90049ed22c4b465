use num_rational::BigRational;
use quartics::arith::{ExtensionField, Field, Rationals};
use quartics::curvelab::jacobian::{at_primes, syzygy_dimension};
use quartics::curvelab::*;
use quartics::fixtures;
use quartics::poly::{parse_poly, MultiPoly, Vars};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn curve(src: &str) -> PlaneCurve<Rationals> {
    PlaneCurve::new(parse_poly(src, &Rationals, &Vars::xyz()).unwrap()).unwrap()
}

fn line(a: i64, b: i64, c: i64) -> ProjectiveLine<Rationals> {
    let k = Rationals;
    ProjectiveLine::new(&k, [k.from_i64(a), k.from_i64(b), k.from_i64(c)]).unwrap()
}

fn policy() -> StabilizationPolicy {
    StabilizationPolicy::default()
}

#[test]
fn smooth_quartics_have_tjurina_zero() {
    for c in [fixtures::c48(), fixtures::c96(), fixtures::c168(), fixtures::c9()] {
        assert_eq!(tjurina_number(&c, &policy()).unwrap().value, 0);
    }
}

#[test]
fn triangle_tjurina_matches_node_count() {
    let lines = [line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)];
    let wc = line_intersections(&Rationals, &lines).unwrap();
    assert_eq!(wc.n(2), 3);
    let c = curve("x*y*z");
    assert_eq!(tjurina_number(&c, &policy()).unwrap().value, wc.ordinary_tjurina());
}

#[test]
fn tjurina_rejects_multiple_components() {
    assert_eq!(tjurina_number(&curve("x^2*y"), &policy()), Err(CurveError::NotReduced));
}

#[test]
fn higher_derivative_schemes() {
    assert_eq!(higher_derivative_degree(&fixtures::c96(), 1, &policy()).unwrap().value, 0);
    let concurrent = curve("x*y*(x + y)");
    assert_eq!(higher_derivative_degree(&concurrent, 2, &policy()).unwrap().value, 1);
    assert!(matches!(higher_derivative_degree(&curve("x^3*y"), 1, &policy()), Err(CurveError::PositiveDimensional(_))));
}

#[test]
fn minimal_syzygy_degrees() {
    assert_eq!(mdr(&curve("x*y*z")).unwrap(), 1);
    let fermat = fixtures::c96();
    assert_eq!(mdr(&fermat).unwrap(), 3);
    // Partials 4x^3, 4y^3, 4z^3: only the three Koszul relations in degree 3.
    assert_eq!(syzygy_dimension(&fermat, 3), 3);
}

#[test]
fn triangle_is_free() {
    let r = freeness_report(&curve("x*y*z"), &policy()).unwrap();
    assert_eq!((r.degree, r.mdr, r.tau, r.residual, r.free, r.exponents), (3, 1, 3, 0, true, Some((1, 1))));
}

#[test]
fn smooth_quartic_is_not_free() {
    let r = freeness_report(&fixtures::c96(), &policy()).unwrap();
    assert_eq!(r.tau, 0);
    assert!(!r.free);
    for k in 0..=3 {
        assert!(jacobian::freeness_residual(4, k, 0) > 0);
    }
}

#[test]
fn freeness_precondition_is_reported() {
    let r = assemble_freeness(4, 3, 0);
    assert!(!r.free);
    assert!(r.reason.contains("precondition"));
}

#[test]
fn bitangent_arrangement_combinatorics() {
    let (k, lines) = fixtures::bitangents28();
    let wc = line_intersections(&k, &lines).unwrap();
    assert_eq!((wc.n(2), wc.n(3), wc.n(4)), (240, 32, 7));
    assert_eq!(wc.pair_count(), 378);
    assert_eq!(wc.ordinary_tjurina(), 431);
}

#[test]
fn hyperflex_lines_are_concurrent() {
    let (k, lines) = fixtures::bitangents28();
    let four = &lines[24..28];
    let points = intersection_points(&k, four).unwrap();
    assert_eq!(points.len(), 1);
    assert_eq!(points[0].1, vec![0, 1, 2, 3]);
    let p = ProjectivePoint::new(&k, [k.zero(), k.one(), k.zero()]).unwrap();
    assert_eq!(points[0].0, p);
    for l in four {
        assert!(l.contains(&k, &p));
    }
}

#[test]
fn duplicate_lines_are_rejected() {
    assert_eq!(line_intersections(&Rationals, &[line(1, 2, 3), line(2, 4, 6)]), Err(CurveError::DuplicateLine));
}

#[test]
fn arrangement_tjurina_modular() {
    let (k, lines) = fixtures::bitangents28();
    let c = arrangement_curve(&k, &lines).unwrap();
    assert_eq!(c.degree(), 28);
    let run = at_primes(&c, 24, 7, 2, |img| Ok(tjurina_number(img, &policy())?.value)).unwrap();
    assert!(run.agreed);
    assert_eq!(run.results[0], 431);
    let run = at_primes(&c, 24, 7, 2, |img| Ok(higher_derivative_degree(img, 3, &policy())?.value)).unwrap();
    assert_eq!(run.results, vec![7, 7]);
}

#[test]
fn diophantine_profiles_and_filter() {
    let tuples =
        |taus: &[u32]| diophantine_profiles(4, 4, taus).iter().map(SingularityProfile::as_tuple).collect::<Vec<_>>();
    assert_eq!(tuples(&[37]), vec![(0, 0, 0, 3, 4), (0, 0, 1, 0, 4), (2, 0, 0, 0, 5)]);
    assert!(tuples(&[39]).is_empty());
    assert_eq!(tuples(&[22]), vec![(22, 0, 0, 0, 0)]);
    let verdicts = realizability_filter(&diophantine_profiles(4, 4, &[37]), 4, 4);
    let accepted: Vec<_> = verdicts.iter().filter(|v| v.accepted).map(|v| v.profile.as_tuple()).collect();
    assert_eq!(accepted, vec![(0, 0, 1, 0, 4)]);
    let v = verdicts.iter().find(|v| v.profile.as_tuple() == (0, 0, 0, 3, 4)).unwrap();
    assert_eq!(v.violations, vec!["contact budget 22 exceeds 16".to_string()]);
    let v = verdicts.iter().find(|v| v.profile.as_tuple() == (2, 0, 0, 0, 5)).unwrap();
    assert!(v.violations[0].starts_with("t7 = 5"));
}

#[test]
fn profile_formulas() {
    let p = SingularityProfile { n2: 0, n3: 0, n4: 1, t3: 0, t7: 4 };
    assert_eq!((p.tau(), p.bezout_charge()), (37, 22));
}

struct Freeness;

impl CurveTask for Freeness {
    type Output = (FreenessReport, Vec<(u32, usize)>);
    fn run<F: Field>(&self, c: &PlaneCurve<F>) -> Result<Self::Output, CurveError> {
        Ok((freeness_report(c, &StabilizationPolicy::default())?, syzygy_hilbert(c, 7)))
    }
}

#[test]
fn octic_is_free_and_deletions_are_not() {
    let (k, lines) = fixtures::bitangents28();
    let c48 = fixtures::c48_over(&k);
    let el = build_octic(&c48, &lines[24..28]).unwrap();
    assert_eq!(el.degree(), 8);
    let ((r, dims), route) = run_descended(&el, &Freeness).unwrap();
    assert_eq!(route.degree, 1);
    assert_eq!((r.mdr, r.tau, r.residual, r.exponents), (3, 37, 0, Some((3, 4))));
    assert!(r.free);
    assert_eq!(dims[3], (3, 1));
    assert_eq!(dims[4], (4, 4));
}

#[test]
fn deletions_of_the_octic_are_not_free() {
    let (k, lines) = fixtures::bitangents28();
    let study = deletion_study(&fixtures::c48_over(&k), &lines[24..28], &policy()).unwrap();
    assert_eq!(study.len(), 4);
    for d in &study {
        assert_eq!(d.report.degree, 7);
        assert!(!d.report.free);
        assert_ne!(d.report.residual, 0);
        assert_eq!(d.syzygy_dims.len(), 8);
    }
    let degrees: Vec<usize> = study.iter().map(|d| d.route.degree).collect();
    assert_eq!(degrees, vec![2, 2, 1, 1]);
}

#[test]
fn build_octic_errors_and_toy() {
    let conic = curve("x^2 + y^2 - z^2");
    let toy = build_octic(&conic, &[line(1, 0, -1), line(0, 1, -1)]).unwrap();
    assert_eq!(toy.degree(), 4);
    assert_eq!(build_octic(&conic, &[line(1, 0, -1), line(1, 0, -1)]), Err(CurveError::DuplicateLine));
}

#[test]
fn syzygy_dimensions_do_not_decrease() {
    let c = curve("x*y*(x - y)*(x + 2*z)");
    let dims = syzygy_hilbert(&c, 5);
    assert!(dims.windows(2).all(|w| w[1].1 >= w[0].1));
}

#[test]
fn tangency_of_special_lines() {
    let c48 = fixtures::c48();
    let t = classify_tangency(&c48, &line(1, 0, 0)).unwrap();
    assert_eq!((t.pattern.clone(), t.kind), (vec![4], TangencyKind::Hyperflex));
    assert_eq!(t.singularities, vec!["A7"]);
    let t = classify_tangency(&c48, &line(1, 0, 1)).unwrap();
    assert_eq!(t.kind, TangencyKind::Hyperflex);
    // The contact point of x + z = 0 is (1 : 0 : -1): on the curve, with
    // the line as tangent.
    let f = c48.polynomial();
    let k = Rationals;
    let p = [k.from_i64(1), k.zero(), k.from_i64(-1)];
    assert!(k.is_zero(&f.eval(&p)));
    let grad: Vec<_> = f.gradient().iter().map(|g| g.eval(&p)).collect();
    assert_eq!(grad, vec![k.from_i64(3), k.zero(), k.from_i64(3)]);
    let t = classify_tangency(&fixtures::c96(), &line(0, 0, 1)).unwrap();
    assert_eq!(t.kind, TangencyKind::Transversal);
    assert!(matches!(
        classify_tangency(&curve("x*(x^3 + y^3 + z^3)"), &line(1, 0, 0)),
        Err(CurveError::LineIsComponent(_))
    ));
}

#[test]
fn bitangent_audit() {
    let (k, lines) = fixtures::bitangents28();
    let c = fixtures::c48_over(&k);
    let report = verify_bitangents(&c, &lines).unwrap();
    assert_eq!((report.bitangents, report.hyperflexes), (24, 4));
    let hyper: Vec<usize> = (0..28).filter(|&i| report.lines[i].kind == TangencyKind::Hyperflex).collect();
    assert_eq!(hyper, vec![24, 25, 26, 27]);
    assert_eq!(report.lines[0].pattern, vec![2, 2]);
    assert_eq!(report.lines[0].singularities, vec!["A3", "A3"]);
    let check = numeric_cross_check(&fixtures::c48(), &k, &lines, &report, 1e-8);
    assert_eq!(check.embeddings, 16);
    assert!(check.consistent, "{check:?}");
    assert_eq!(dual_singularity_counts(&report).unwrap(), DualSingularityCounts { nodes: 24, cusps: 16, e6: 4 });
}

#[test]
fn random_line_is_not_a_bitangent() {
    let (k, mut lines) = fixtures::bitangents28();
    lines.truncate(3);
    lines.push(ProjectiveLine::new(&k, [k.from_i64(3), k.from_i64(-7), k.from_i64(11)]).unwrap());
    let c = fixtures::c48_over(&k);
    let report = verify_bitangents(&c, &lines).unwrap();
    assert_eq!(report.others, vec![3]);
    assert_eq!(report.lines[3].kind, TangencyKind::Transversal);
    assert!(dual_singularity_counts(&report).is_err());
    let check = numeric_cross_check(&fixtures::c48(), &k, &lines, &report, 1e-8);
    assert!(!check.consistent);
}

#[test]
fn dual_counts_dictionary() {
    assert_eq!(dual_counts_from(28, 0), DualSingularityCounts { nodes: 28, cusps: 24, e6: 0 });
}

fn q_omega() -> ExtensionField<Rationals> {
    ExtensionField::new(Rationals, vec![q(1, 1), q(1, 1), q(1, 1)], "w").unwrap()
}

#[test]
fn flexes_of_c48() {
    let fa = flex_analysis(&fixtures::c48()).unwrap();
    assert_eq!((fa.total_multiplicity, fa.hyperflex_count), (24, 4));
    let k = q_omega();
    let locus: Vec<MultiPoly<_>> = fa
        .hyperflex_locus
        .iter()
        .map(|p| p.map_coefficients(&k, |c| Ok::<_, ()>(k.from_base(c.clone()))).unwrap())
        .collect();
    let w = k.generator();
    let candidates = [
        [k.zero(), k.zero(), k.one()],
        [k.from_i64(-1), k.zero(), k.one()],
        [k.neg(&w), k.zero(), k.one()],
        [k.neg(&k.mul(&w, &w)), k.zero(), k.one()],
    ];
    for p in &candidates {
        assert!(locus.iter().all(|g| k.is_zero(&g.eval(p))));
    }
}

#[test]
fn flexes_of_other_smooth_quartics() {
    let fermat = flex_analysis(&fixtures::c96()).unwrap();
    assert_eq!((fermat.total_multiplicity, fermat.hyperflex_count), (24, 12));
    let klein = flex_analysis(&fixtures::c168()).unwrap();
    assert_eq!((klein.total_multiplicity, klein.hyperflex_count), (24, 0));
    assert_eq!(flex_analysis(&curve("x*y*z*(x + y + z)")).unwrap_err(), CurveError::NotSmooth);
}

#[test]
fn dual_membership() {
    let c48 = fixtures::c48();
    let g = fixtures::dual12();
    let ok = dual_membership_check(&c48, &g).unwrap();
    assert!(ok.holds);
    assert_eq!(ok.cofactor_degree, Some(32));
    let perturbed = PlaneCurve::new(g.polynomial().add(&parse_poly("x^12", &Rationals, g.vars()).unwrap())).unwrap();
    let bad = dual_membership_check(&c48, &perturbed).unwrap();
    assert!(!bad.holds);
    assert!(bad.remainder_terms > 0);
    let conic = curve("x^2 + y^2 + z^2");
    let r = dual_membership_check(&conic, &conic).unwrap();
    assert!(r.holds);
    assert_eq!(r.cofactor.unwrap().to_string(), "4");
}

#[test]
fn invariance_under_sign_changes() {
    assert!(is_g8_invariant(&fixtures::c96()));
    assert!(!is_g8_invariant(&fixtures::c48()));
    let generic = PlaneCurve::new(g8::generic_quartic()).unwrap();
    assert!(is_g8_invariant(&generic));
    let h = PlaneCurve::new(generic.polynomial().hessian_det()).unwrap();
    assert!(is_g8_invariant(&h));
}

#[test]
fn hessian_residuals() {
    let k = Rationals;
    let at = |c: [BigRational; 6]| hessian_residual(&k, &G8Quartic::new(&k, c).unwrap());
    assert!(at([q(1, 1), q(1, 1), q(1, 1728), q(0, 1), q(0, 1), q(0, 1)]).iter().all(|r| k.is_zero(r)));
    assert!(at([q(0, 1), q(0, 1), q(-1, 144), q(1, 1), q(0, 1), q(0, 1)]).iter().all(|r| k.is_zero(r)));
    let r = at([q(1, 1), q(1, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1)]);
    assert_eq!(r[9], q(1727, 1));
    assert!(r[..9].iter().all(|x| k.is_zero(x)));
}

#[test]
fn classification_stages_pass() {
    let report = verify_theorem_2_3(&TheoremConfig::default());
    assert_eq!(report.stages.len(), 5);
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.trust, "exact");
    assert!(report.stages[3].detail.contains("0 outside"));
}

#[test]
fn regeneration_multipliers() {
    let ratios = g8::regeneration_ratios(&hessian_coefficient_system(), &fixtures::si()).unwrap();
    let expect: Vec<BigRational> = [48, 48, 48, 24, 24, 24, 24, 24, 24, 1].iter().map(|&n| q(n, 1)).collect();
    assert_eq!(ratios, expect);
}

#[test]
fn binomial_factorizations() {
    let vars = Vars::xyz();
    let p = |s: &str| parse_poly(s, &Rationals, &vars).unwrap();
    let f = factor_binomial_quartic(&p("x^2*y^2 - z^4/144")).unwrap();
    let BinomialFactorization::Rational { factors, .. } = &f else { panic!("{f:?}") };
    let mut got = [factors[0].to_string(), factors[1].to_string()];
    got.sort();
    assert_eq!(got, ["x*y + 1/12*z^2", "x*y - 1/12*z^2"]);
    assert!(f.verify(&p("x^2*y^2 - z^4/144")));
    let f = factor_binomial_quartic(&p("x^4 - y^4")).unwrap();
    assert!(matches!(f, BinomialFactorization::Rational { .. }) && f.verify(&p("x^4 - y^4")));
    let f = factor_binomial_quartic(&p("x^4 + y^4")).unwrap();
    let BinomialFactorization::Quadratic { field, .. } = &f else { panic!("{f:?}") };
    assert_eq!(field.descriptor().to_string(), "Q[w]/(w^2 + 1)");
    assert!(f.verify(&p("x^4 + y^4")));
    assert!(factor_binomial_quartic(&p("x^4 + y^4 + z^4")).is_err());
    assert!(factor_binomial_quartic(&p("x^3*y + z^4")).is_err());
}

#[test]
fn fermat_witnesses() {
    let w = fermat_equivalence_witness([q(1, 1), q(1, 1), q(1, 1)]).unwrap();
    assert_eq!((w.field.as_str(), w.verified), ("Q", true));
    assert_eq!(w.scalars, ["1", "1", "1"]);
    let w = fermat_equivalence_witness([q(16, 1), q(1, 1), q(1, 1)]).unwrap();
    assert_eq!(w.scalars[0], "1/2");
    let w = fermat_equivalence_witness([q(1, 1), q(1, 1), q(1, 1728)]).unwrap();
    assert_eq!(w.field, "Q[t]/(t^4 - 1728)");
    assert!(w.verified);
    assert!(fermat_equivalence_witness([q(0, 1), q(1, 1), q(1, 1)]).is_err());
}

#[test]
fn descent_finds_small_fields() {
    let (k, lines) = fixtures::bitangents28();
    let l25 = lines[24].to_poly(&k, &Vars::xyz());
    match descend(&l25) {
        Some(Descended::Subfield(p)) => assert_eq!(p.field().degree(), 2),
        other => panic!("{other:?}"),
    }
    assert!(matches!(descend(&lines[26].to_poly(&k, &Vars::xyz())), Some(Descended::Rational(_))));
    // Re-embed w -> alpha (the first irrational coefficient) and compare.
    let l1 = lines[0].to_poly(&k, &Vars::xyz()).monic();
    let alpha = l1.sorted_terms().into_iter().map(|(_, c)| c.clone()).find(|c| c.len() > 1).unwrap();
    let Some(Descended::Subfield(p)) = descend(&l1) else { panic!("expected a proper subfield") };
    assert_eq!(p.field().degree(), 8);
    let back = p.map_coefficients(&k, |c| {
        Ok::<_, ()>(c.iter().rev().fold(k.zero(), |acc, a| k.add(&k.mul(&acc, &alpha), &k.from_base(a.clone()))))
    });
    assert_eq!(back.unwrap(), l1);
    assert_eq!(minimal_polynomial(&k, &k.generator()).len(), 17);
}
