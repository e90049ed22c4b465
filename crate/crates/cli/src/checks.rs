use std::fmt::Display;
use std::time::{Duration, Instant};

use quartics::arith::{ExtensionField, Field, PrimeField, Rationals};
use quartics::curvelab::g8::{self, hessian_coefficients, scan_solutions, COEFFICIENT_NAMES, HESSIAN_MONOMIALS};
use quartics::curvelab::jacobian::at_primes;
use quartics::curvelab::*;
use quartics::fixtures;
use quartics::linalg::DenseMatrix;
use quartics::poly::{parse_poly, BinaryForm, MultiPoly, Vars};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Basis, Check, Findings, RunConfig};

pub(crate) trait OrMsg<T> {
    fn msg(self) -> Result<T, String>;
}

impl<T, E: Display> OrMsg<T> for Result<T, E> {
    fn msg(self) -> Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}

pub static REGISTRY: &[Check] = &[
    Check {
        name: "generic-hessian",
        criterion: 1,
        summary: "Hessian of the generic invariant quartic, all ten coefficients",
        budget_secs: 1,
        run: generic_hessian,
    },
    Check {
        name: "thm23",
        criterion: 2,
        summary: "classification of invariant quartics with Hessian x^2 y^2 z^2",
        budget_secs: 1800,
        run: thm23,
    },
    Check {
        name: "bitangents28",
        criterion: 3,
        summary: "the 28 lines are 24 bitangents and 4 hyperflex lines",
        budget_secs: 120,
        run: bitangents28,
    },
    Check {
        name: "combinatorics28",
        criterion: 4,
        summary: "weak combinatorics of the 28 lines",
        budget_secs: 60,
        run: combinatorics28,
    },
    Check {
        name: "tjurina28",
        criterion: 5,
        summary: "Tjurina number and quadruple points of the 28-line arrangement",
        budget_secs: 600,
        run: tjurina28,
    },
    Check {
        name: "freeness-octic",
        criterion: 6,
        summary: "the quartic plus its four hyperflex lines is free",
        budget_secs: 300,
        run: freeness_octic,
    },
    Check {
        name: "diophantine",
        criterion: 7,
        summary: "singularity profiles of a quartic plus four lines",
        budget_secs: 1,
        run: diophantine,
    },
    Check {
        name: "flexes-c48",
        criterion: 8,
        summary: "flexes of x^4 + y^4 + x z^3 and singularities of its dual",
        budget_secs: 60,
        run: flexes_c48,
    },
    Check {
        name: "dual-membership",
        criterion: 9,
        summary: "the degree-12 curve vanishes on the gradient image",
        budget_secs: 120,
        run: dual_membership,
    },
    Check {
        name: "smoothness",
        criterion: 10,
        summary: "three smooth quartics have Tjurina number 0",
        budget_secs: 180,
        run: smoothness,
    },
    Check { name: "properties", criterion: 11, summary: "seeded invariant sampler", budget_secs: 600, run: properties },
    Check {
        name: "deletion-study",
        criterion: 12,
        summary: "deleting any hyperflex line breaks freeness",
        budget_secs: 600,
        run: deletion_study_check,
    },
];

/// The coefficients as printed in the published Hessian display, in the
/// order of [`HESSIAN_MONOMIALS`].
pub const PUBLISHED_HESSIAN: [&str; 10] = [
    "48ADE",
    "48BDF",
    "48CEF",
    "288ABE + 48ADF - 24D^2E",
    "288ACD + 48AEF - 24DE^2",
    "288ABF + 48BDE - 24D^2F",
    "288BCD + 48BEF - 24DF^2",
    "288ACF + 48CDE - 24E^2F",
    "288BCE + 48CDF - 24EF^2",
    "1728ABC - 144AF^2 - 144BE^2 - 144CD^2 + 144DEF",
];

fn monomial_name(e: &[u32; 3]) -> String {
    let parts: Vec<String> = ["x", "y", "z"]
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
        .collect();
    parts.join("*")
}

fn generic_hessian(_: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let vars = Vars::new(&COEFFICIENT_NAMES);
    let computed = hessian_coefficients();
    for ((e, published), got) in HESSIAN_MONOMIALS.iter().zip(PUBLISHED_HESSIAN).zip(&computed) {
        let expected = parse_poly(published, &Rationals, &vars).msg()?;
        let quantity = format!("coefficient of {}", monomial_name(e));
        f.expect(&quantity, Basis::Claim, expected.to_string(), got.to_string());
    }
    let h = g8::generic_quartic().hessian_det();
    f.expect(
        "terms outside the ten monomials",
        Basis::Derived,
        0,
        h.len() - computed.iter().map(MultiPoly::len).sum::<usize>(),
    );
    Ok(())
}

fn thm23(config: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let tc = TheoremConfig { budget: Duration::from_secs(config.budget_secs), ..TheoremConfig::default() };
    let report = verify_theorem_2_3(&tc);
    f.expect("stages", Basis::Derived, 5, report.stages.len());
    for s in &report.stages {
        f.expect(&format!("stage {} passes", s.stage), Basis::Derived, true, s.status != StageStatus::Fail);
    }
    if report.trust != "exact" {
        f.modular();
    }
    let si = fixtures::si();
    let families: Vec<_> = fixtures::g8_families().into_iter().map(|(_, g)| g).collect();
    for &p in &tc.scan_primes {
        let (solutions, outside) = scan_solutions(p, &si, &families).msg()?;
        f.expect(&format!("solutions mod {p} outside the families"), Basis::Claim, 0, outside);
        f.detail(&format!("solutions_mod_{p}"), solutions);
    }
    f.detail("stages", &report.stages);
    f.detail("trust", &report.trust);
    Ok(())
}

fn bitangent_report(
) -> Result<(ExtensionField<Rationals>, Vec<ProjectiveLine<ExtensionField<Rationals>>>, TangencyReport), String> {
    let (k, lines) = fixtures::bitangents28();
    let report = verify_bitangents(&fixtures::c48_over(&k), &lines).msg()?;
    Ok((k, lines, report))
}

fn bitangents28(_: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let (k, lines, report) = bitangent_report()?;
    f.expect("lines", Basis::Claim, 28, report.lines.len());
    f.expect("bitangents", Basis::Claim, 24, report.bitangents);
    f.expect("hyperflex lines", Basis::Claim, 4, report.hyperflexes);
    let hyper: Vec<usize> =
        (0..report.lines.len()).filter(|&i| report.lines[i].kind == TangencyKind::Hyperflex).map(|i| i + 1).collect();
    f.expect("hyperflex line labels", Basis::Claim, vec![25, 26, 27, 28], hyper);
    let double = report.lines.iter().filter(|l| l.pattern == [2, 2]).count();
    f.expect("lines with contact pattern (2,2)", Basis::Claim, 24, double);
    f.expect("lines that are not tangent", Basis::Claim, Vec::<usize>::new(), report.others.clone());
    let numeric = numeric_cross_check(&fixtures::c48(), &k, &lines, &report, 1e-8);
    f.expect("numeric shape check at all 16 embeddings", Basis::Derived, true, numeric.consistent);
    f.detail("numeric", &numeric);
    f.detail("patterns", report.lines.iter().map(|l| (l.kind, l.pattern.clone())).collect::<Vec<_>>());
    Ok(())
}

fn combinatorics28(_: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let (k, lines) = fixtures::bitangents28();
    let wc = line_intersections(&k, &lines).msg()?;
    f.expect("n2", Basis::Claim, 240, wc.n(2));
    f.expect("n3", Basis::Claim, 32, wc.n(3));
    f.expect("n4", Basis::Claim, 7, wc.n(4));
    f.expect("sum of C(k,2) n_k", Basis::Claim, 378, wc.pair_count());
    f.expect("sum of C(k,2) n_k equals C(28,2)", Basis::Derived, 28 * 27 / 2, wc.pair_count());
    f.detail("counts", &wc.counts);
    Ok(())
}

fn tjurina28(config: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let (k, lines) = fixtures::bitangents28();
    let wc = line_intersections(&k, &lines).msg()?;
    let c = arrangement_curve(&k, &lines).msg()?;
    let policy = &config.policy;
    let (tau, n4) = if config.modular_for(c.degree()) {
        f.modular();
        let t = at_primes(&c, config.prime_bits, config.seed, 2, |img| Ok(tjurina_number(img, policy)?.value)).msg()?;
        let h =
            at_primes(&c, config.prime_bits, config.seed, 2, |img| Ok(higher_derivative_degree(img, 3, policy)?.value))
                .msg()?;
        f.expect("two-prime agreement for tau", Basis::Derived, true, t.agreed);
        f.expect("two-prime agreement for deg T_f", Basis::Derived, true, h.agreed);
        f.detail("primes", &t.primes);
        (t.results[0], h.results[0])
    } else {
        (tjurina_number(&c, policy).msg()?.value, higher_derivative_degree(&c, 3, policy).msg()?.value)
    };
    f.expect("tau", Basis::Claim, 431, tau);
    f.expect("tau equals sum of (k-1)^2 n_k", Basis::Derived, wc.ordinary_tjurina(), tau);
    f.expect("deg T_f for third derivatives", Basis::Claim, 7, n4);
    f.expect("deg T_f equals n4", Basis::Derived, wc.n(4), n4);
    Ok(())
}

struct FreenessTable<'a>(&'a StabilizationPolicy);

impl CurveTask for FreenessTable<'_> {
    type Output = (FreenessReport, Vec<(u32, usize)>);
    fn run<F: Field>(&self, c: &PlaneCurve<F>) -> Result<Self::Output, CurveError> {
        Ok((freeness_report(c, self.0)?, syzygy_hilbert(c, c.degree())))
    }
}

fn octic() -> Result<PlaneCurve<ExtensionField<Rationals>>, String> {
    let (k, lines) = fixtures::bitangents28();
    build_octic(&fixtures::c48_over(&k), &lines[24..28]).msg()
}

fn freeness_octic(config: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let el = octic()?;
    f.expect("degree", Basis::Claim, 8, el.degree());
    let report = if config.modular_for(el.degree()) {
        f.modular();
        let run =
            at_primes(&el, config.prime_bits, config.seed, 2, |img| freeness_report(img, &config.policy)).msg()?;
        f.expect("two-prime agreement", Basis::Derived, true, run.agreed);
        run.results[0].clone()
    } else {
        let ((report, dims), route) = run_descended(&el, &FreenessTable(&config.policy)).msg()?;
        f.detail("route", &route);
        f.detail("syzygy_dims", &dims);
        report
    };
    f.expect("mdr", Basis::Claim, 3, report.mdr);
    f.expect("tau", Basis::Claim, 37, report.tau);
    f.expect("residual (d-1)^2 - r(d-r-1) - tau", Basis::Claim, 0, report.residual);
    f.expect("free", Basis::Claim, true, report.free);
    f.expect("exponents", Basis::Claim, Some((3, 4)), report.exponents);
    Ok(())
}

fn diophantine(_: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let tuples =
        |taus: &[u32]| diophantine_profiles(4, 4, taus).iter().map(SingularityProfile::as_tuple).collect::<Vec<_>>();
    f.expect("profiles with tau = 39", Basis::Claim, vec![], tuples(&[39]));
    f.expect(
        "profiles with tau = 37",
        Basis::Claim,
        vec![(0, 0, 0, 3, 4), (0, 0, 1, 0, 4), (2, 0, 0, 0, 5)],
        tuples(&[37]),
    );
    let verdicts = realizability_filter(&diophantine_profiles(4, 4, &[37]), 4, 4);
    let verdict = |t: (u32, u32, u32, u32, u32)| verdicts.iter().find(|v| v.profile.as_tuple() == t).cloned();
    let reject =
        |t, rule: &str| verdict(t).is_some_and(|v| !v.accepted && v.violations.iter().any(|m| m.contains(rule)));
    f.expect(
        "(0,0,0,3,4) rejected by the contact budget",
        Basis::Claim,
        true,
        reject((0, 0, 0, 3, 4), "contact budget"),
    );
    f.expect("(2,0,0,0,5) rejected by t7 > 4", Basis::Claim, true, reject((2, 0, 0, 0, 5), "hyperflex lines"));
    f.expect("(0,0,1,0,4) accepted", Basis::Claim, true, verdict((0, 0, 1, 0, 4)).is_some_and(|v| v.accepted));
    f.detail("verdicts", &verdicts);
    Ok(())
}

fn q_omega() -> ExtensionField<Rationals> {
    let k = Rationals;
    ExtensionField::new(Rationals, vec![k.one(), k.one(), k.one()], "w").expect("w^2 + w + 1 is irreducible")
}

fn flexes_c48(_: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let fa = flex_analysis(&fixtures::c48()).msg()?;
    f.expect("total flex multiplicity", Basis::Claim, 24, fa.total_multiplicity);
    f.expect("hyperflexes", Basis::Claim, 4, fa.hyperflex_count);
    let k = q_omega();
    let locus: Vec<MultiPoly<_>> = fa
        .hyperflex_locus
        .iter()
        .map(|p| p.map_coefficients(&k, |c| Ok::<_, String>(k.from_base(c.clone()))))
        .collect::<Result<_, _>>()?;
    let w = k.generator();
    let points = [
        ("(0:0:1)", [k.zero(), k.zero(), k.one()]),
        ("(-1:0:1)", [k.from_i64(-1), k.zero(), k.one()]),
        ("(-w:0:1)", [k.neg(&w), k.zero(), k.one()]),
        ("(-w^2:0:1)", [k.neg(&k.mul(&w, &w)), k.zero(), k.one()]),
    ];
    for (name, p) in &points {
        let on = locus.iter().all(|g| k.is_zero(&g.eval(p)));
        f.expect(&format!("{name} is a hyperflex"), Basis::Claim, true, on);
    }
    let (_, _, report) = bitangent_report()?;
    let counts = dual_singularity_counts(&report).msg()?;
    f.expect("dual (nodes, cusps, E6)", Basis::Claim, (24, 16, 4), (counts.nodes, counts.cusps, counts.e6));
    f.expect(
        "cusps + 2 E6 equals the flex count",
        Basis::Derived,
        fa.total_multiplicity as usize,
        counts.cusps + 2 * counts.e6,
    );
    f.detail("pattern", &fa.pattern);
    f.detail("coordinate_change", fa.coordinate_change);
    Ok(())
}

fn dual_membership(_: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let c48 = fixtures::c48();
    let g = fixtures::dual12();
    let ok = dual_membership_check(&c48, &g).msg()?;
    f.expect("G(grad f) divisible by f", Basis::Claim, true, ok.holds);
    f.expect("cofactor degree", Basis::Derived, Some(32), ok.cofactor_degree);
    let bump = parse_poly("x^12", &Rationals, g.vars()).msg()?;
    let perturbed = PlaneCurve::new(g.polynomial().add(&bump)).msg()?;
    let bad = dual_membership_check(&c48, &perturbed).msg()?;
    f.expect("perturbed control fails", Basis::Control, false, bad.holds);
    f.detail("perturbed_remainder_terms", bad.remainder_terms);
    Ok(())
}

fn smoothness(config: &RunConfig, f: &mut Findings) -> Result<(), String> {
    for (name, c) in [("c48", fixtures::c48()), ("c96", fixtures::c96()), ("c168", fixtures::c168())] {
        let start = Instant::now();
        let tau = tjurina_number(&c, &config.policy).msg()?.value;
        f.expect(&format!("tau({name})"), Basis::Claim, 0, tau);
        f.detail(&format!("{name}_millis"), start.elapsed().as_millis());
    }
    Ok(())
}

fn deletion_study_check(config: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let (k, lines) = fixtures::bitangents28();
    let quartic = fixtures::c48_over(&k);
    let study = deletion_study(&quartic, &lines[24..28], &config.policy).msg()?;
    for d in &study {
        let label = d.removed + 25;
        f.expect(&format!("octic minus line {label} is free"), Basis::Claim, false, d.report.free);
        f.expect(
            &format!("octic minus line {label} has nonzero residual"),
            Basis::Derived,
            true,
            d.report.residual != 0,
        );
    }
    let ((whole, _), _) = run_descended(&octic()?, &FreenessTable(&config.policy)).msg()?;
    f.expect("the octic itself is free", Basis::Claim, true, whole.free);
    f.detail("deletions", &study);
    Ok(())
}

/// Tallies of one family of sampled identities.
#[derive(serde::Serialize)]
struct Tally {
    identity: &'static str,
    samples: usize,
    failures: usize,
    millis: u128,
}

fn small_rational(rng: &mut ChaCha8Rng) -> <Rationals as Field>::Elem {
    let k = Rationals;
    k.div(&k.from_i64(rng.gen_range(-20..=20)), &k.from_i64(rng.gen_range(1..=9))).expect("nonzero")
}

fn axioms_hold<F: Field>(k: &F, rng: &mut ChaCha8Rng) -> bool {
    let [a, b, c] = [(); 3].map(|_| k.random_elem(rng));
    let inverse_ok = k.is_zero(&a) || k.inv(&a).is_ok_and(|i| k.is_one(&k.mul(&a, &i)));
    k.add(&a, &b) == k.add(&b, &a)
        && k.mul(&a, &b) == k.mul(&b, &a)
        && k.mul(&k.mul(&a, &b), &c) == k.mul(&a, &k.mul(&b, &c))
        && k.mul(&a, &k.add(&b, &c)) == k.add(&k.mul(&a, &b), &k.mul(&a, &c))
        && k.is_zero(&k.add(&a, &k.neg(&a)))
        && inverse_ok
}

fn random_form(rng: &mut ChaCha8Rng, d: u32) -> MultiPoly<Rationals> {
    let k = Rationals;
    let mut terms = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            if rng.gen_bool(0.6) {
                terms.push((quartics::poly::Monomial::from_exponents(&[a, b, d - a - b]), small_rational(rng)));
            }
        }
    }
    MultiPoly::from_terms(&k, &Vars::xyz(), terms)
}

fn random_binary_form(rng: &mut ChaCha8Rng, k: &PrimeField) -> BinaryForm<PrimeField> {
    let mut acc = BinaryForm::new(k, 0, vec![k.one()]);
    for _ in 0..rng.gen_range(1..=4) {
        let deg = rng.gen_range(1..=2);
        let coeffs = (0..=deg).map(|_| k.random_elem(rng)).collect();
        let factor = BinaryForm::new(k, deg, coeffs);
        if !factor.is_zero() {
            acc = acc.mul(&factor.pow(rng.gen_range(1..=3)));
        }
    }
    acc
}

fn squarefree_reassembles(g: &BinaryForm<PrimeField>) -> bool {
    let Ok(parts) = g.squarefree_decomposition() else { return false };
    let k = g.field();
    let product = parts.iter().fold(BinaryForm::new(k, 0, vec![k.one()]), |acc, (h, e)| acc.mul(&h.pow(*e)));
    let coprime = (0..parts.len()).all(|i| (i + 1..parts.len()).all(|j| parts[i].0.gcd(&parts[j].0).degree() == 0));
    product.is_scalar_multiple_of(g) && coprime && parts.iter().all(|(h, _)| h.is_squarefree())
}

fn rank_nullity_holds<F: Field>(k: &F, rng: &mut ChaCha8Rng) -> bool {
    let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
    let data = (0..r * c).map(|_| if rng.gen_bool(0.3) { k.zero() } else { k.random_elem(rng) }).collect();
    let Ok(m) = DenseMatrix::from_data(k, r, c, data) else { return false };
    let kernel = m.kernel_basis();
    m.rank() + kernel.len() == c && kernel.iter().all(|v| m.mul_vec(v).is_ok_and(|w| w.iter().all(|x| k.is_zero(x))))
}

/// Lines through pairs of a few random points, so that the arrangement
/// has points of higher multiplicity.
fn random_lines(rng: &mut ChaCha8Rng) -> Vec<ProjectiveLine<Rationals>> {
    let k = Rationals;
    let points: Vec<[i64; 3]> =
        (0..rng.gen_range(3..=5)).map(|_| [rng.gen_range(-4..=4), rng.gen_range(-4..=4), 1]).collect();
    let mut lines: Vec<ProjectiveLine<Rationals>> = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (p, q) = (points[i], points[j]);
            let cross = [p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]];
            if cross == [0, 0, 0] {
                continue;
            }
            if let Ok(l) = ProjectiveLine::new(&k, cross.map(|v| k.from_i64(v))) {
                if !lines.contains(&l) {
                    lines.push(l);
                }
            }
        }
    }
    lines
}

fn unimodular(rng: &mut ChaCha8Rng) -> [[<Rationals as Field>::Elem; 3]; 3] {
    let mut m = [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..4 {
        let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
        if i != j {
            let s = rng.gen_range(-2..=2);
            let row = m[j];
            for (a, b) in m[i].iter_mut().zip(row) {
                *a += s * b;
            }
        }
    }
    let k = Rationals;
    m.map(|row| row.map(|v| k.from_i64(v)))
}

fn properties(config: &RunConfig, f: &mut Findings) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut tallies = Vec::new();
    let mut run = |identity: &'static str,
                   samples: usize,
                   rng: &mut ChaCha8Rng,
                   mut ok: Box<dyn FnMut(&mut ChaCha8Rng) -> bool>| {
        let start = Instant::now();
        let failures = (0..samples).filter(|_| !ok(rng)).count();
        tallies.push(Tally { identity, samples, failures, millis: start.elapsed().as_millis() });
    };

    let fp = PrimeField::new(1_000_003).msg()?;
    let (r16, _) = fixtures::bitangents28();
    run("field axioms over Q", 200, &mut rng, Box::new(|r| axioms_hold(&Rationals, r)));
    run("field axioms over F_p", 200, &mut rng, Box::new(move |r| axioms_hold(&fp, r)));
    run("field axioms over Q[r]/(m)", 30, &mut rng, Box::new(move |r| axioms_hold(&r16, r)));
    run(
        "Euler relation",
        100,
        &mut rng,
        Box::new(|r| {
            let d = r.gen_range(1..=6);
            let g = random_form(r, d);
            g.is_zero() || g.euler_check().unwrap_or(false)
        }),
    );
    let f101 = PrimeField::new(101).msg()?;
    run(
        "squarefree reassembly",
        200,
        &mut rng,
        Box::new(move |r| squarefree_reassembles(&random_binary_form(r, &f101))),
    );
    run("rank-nullity over Q", 100, &mut rng, Box::new(|r| rank_nullity_holds(&Rationals, r)));
    run("rank-nullity over F_101", 100, &mut rng, Box::new(move |r| rank_nullity_holds(&f101, r)));
    run(
        "sum of C(k,2) n_k = C(L,2)",
        50,
        &mut rng,
        Box::new(|r| {
            let lines = random_lines(r);
            let n = lines.len();
            line_intersections(&Rationals, &lines).is_ok_and(|wc| wc.pair_count() == n * (n - 1) / 2)
        }),
    );
    let policy = config.policy.clone();
    run(
        "tau and mdr invariant under coordinate changes",
        12,
        &mut rng,
        Box::new(move |r| {
            let curves = [fixtures::c48(), fixtures::c96(), fixtures::c168()];
            let c = &curves[r.gen_range(0..3)];
            let lines = random_lines(r);
            let arrangement = arrangement_curve(&Rationals, &lines[..lines.len().min(4)]);
            let m = unimodular(r);
            let same = |c: &PlaneCurve<Rationals>| -> bool {
                let Ok(t) = c.transformed(&m) else { return false };
                let invariants =
                    |c: &PlaneCurve<Rationals>| Ok::<_, CurveError>((tjurina_number(c, &policy)?.value, mdr(c)?));
                let before = invariants(c).ok();
                before.is_some() && before == invariants(&t).ok()
            };
            same(c) && arrangement.is_ok_and(|a| same(&a))
        }),
    );

    for t in &tallies {
        f.expect(&format!("failures of {}", t.identity), Basis::Derived, 0, t.failures);
    }
    f.detail("tallies", &tallies);
    f.detail("seed", config.seed);
    Ok(())
}
