use num_rational::BigRational;
use quartics::arith::{upoly, ArithError, ExtensionField, Field, PrimeField, Rationals, ReduceModP};
use quartics::curvelab::jacobian::{at_primes, macaulay_matrix};
use quartics::curvelab::*;
use quartics::linalg::{rank_modular, DenseMatrix, LinalgError};
use quartics::poly::{parse_poly, restrict_to_line, BinaryForm, MultiPoly, PolyError, Vars};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn poly(src: &str, vars: &Vars) -> MultiPoly<Rationals> {
    parse_poly(src, &Rationals, vars).unwrap()
}

fn xyz(src: &str) -> MultiPoly<Rationals> {
    poly(src, &Vars::xyz())
}

fn gaussian() -> ExtensionField<Rationals> {
    let k = Rationals;
    ExtensionField::new(k, vec![k.one(), k.zero(), k.one()], "i").unwrap()
}

#[test]
fn field_constructors_reject_bad_input() {
    assert_eq!(PrimeField::new(1 << 63), Err(ArithError::NotPrime(1 << 63)));
    assert!(PrimeField::new(1).is_err());
    assert_eq!(Rationals.inv(&q(0, 1)), Err(ArithError::DivisionByZero));
    let k = gaussian();
    assert_eq!(k.inv(&k.zero()), Err(ArithError::DivisionByZero));
}

#[test]
fn extension_fields_compare_by_value() {
    let a = gaussian();
    let b = gaussian();
    assert_eq!(a, b);
    let k = Rationals;
    let other = ExtensionField::new(k, vec![k.from_i64(-2), k.zero(), k.one()], "i").unwrap();
    assert_ne!(a, other);
    let renamed = ExtensionField::new(k, vec![k.one(), k.zero(), k.one()], "j").unwrap();
    assert_ne!(a, renamed);
}

#[test]
fn extension_reduction_skips_vanishing_top_terms() {
    let k = gaussian();
    let one = Rationals.one();
    let zero = Rationals.zero();
    // 1 + i + 0 i^2 + i^3 = 1
    assert_eq!(k.reduce(vec![one.clone(), one.clone(), zero, one.clone()]), vec![one]);
}

#[test]
fn rational_normalizer_clears_denominators_and_sign() {
    let k = Rationals;
    assert_eq!(k.normalizer(&[q(0, 1), q(-2, 3), q(4, 1)]), q(-3, 2));
    assert_eq!(k.normalizer(&[q(0, 1), q(0, 1)]), q(1, 1));
    assert_eq!(k.normalizer(&[q(1, 2), q(1, 3)]), q(6, 1));
}

#[test]
fn univariate_helpers() {
    let k = Rationals;
    assert!(upoly::scale(&k, &[q(1, 1), q(2, 1)], &q(0, 1)).is_empty());
    let g = gaussian();
    let one_plus_i = vec![q(1, 1), q(1, 1)];
    assert_eq!(upoly::format(&g, &[one_plus_i.clone(), one_plus_i], "t"), "(i + 1)t + i + 1");
}

#[test]
fn tower_elements_are_parenthesized() {
    let g = gaussian();
    let tower = ExtensionField::new(g.clone(), vec![g.neg(&g.generator()), g.zero(), g.one()], "s").unwrap();
    let one_plus_i = vec![q(1, 1), q(1, 1)];
    assert!(tower.needs_parens(&vec![one_plus_i.clone()]));
    assert!(!tower.needs_parens(&vec![g.one()]));
    assert_eq!(tower.format_elem(&vec![g.zero(), one_plus_i]), "(i + 1)s");
}

#[test]
fn display_of_extension_coefficients() {
    let g = gaussian();
    let vars = Vars::xyz();
    let x = MultiPoly::var(&g, &vars, 0);
    let c = MultiPoly::constant(&g, &vars, vec![q(1, 1), q(1, 1)]);
    assert_eq!(x.add(&c).to_string(), "x + (i + 1)");
    assert_eq!(c.mul(&x).to_string(), "(i + 1)*x");
    assert_eq!(MultiPoly::zero(&g, &vars).to_string(), "0");
}

#[test]
fn polynomials_over_different_rings_do_not_mix() {
    let vars = Vars::xyz();
    let f7 = PrimeField::new(7).unwrap();
    let f11 = PrimeField::new(11).unwrap();
    let a = parse_poly("x + y", &f7, &vars).unwrap();
    let b = parse_poly("x + y", &f11, &vars).unwrap();
    assert_ne!(a, b);
    assert!(matches!(a.checked_add(&b), Err(PolyError::Arith(ArithError::FieldMismatch(..)))));
    assert!(matches!(a.substitute(&[b.clone(), b.clone(), b]), Err(PolyError::Arith(ArithError::FieldMismatch(..)))));

    let f = xyz("x + y");
    let h = poly("x + y", &Vars::new(&["x", "y"]));
    assert!(matches!(f.checked_add(&h), Err(PolyError::VariableMismatch(..))));
    assert_ne!(f, h);
}

#[test]
#[should_panic(expected = "incompatible polynomials")]
fn mixing_variable_sets_panics_in_unchecked_arithmetic() {
    let _ = xyz("x").add(&poly("x", &Vars::new(&["x", "y"])));
}

#[test]
fn substitution_checks_its_images() {
    let f = xyz("x*y + z");
    let vars = Vars::new(&["s", "t"]);
    let s = poly("s", &vars);
    let t = poly("t", &vars);
    assert!(matches!(f.substitute(&[s.clone(), t.clone()]), Err(PolyError::Arity { expected: 3, found: 2 })));
    let mixed = [s.clone(), t.clone(), poly("s", &Vars::new(&["s"]))];
    assert!(matches!(f.substitute(&mixed), Err(PolyError::VariableMismatch(..))));
    assert_eq!(f.substitute(&[s.clone(), t.clone(), s.clone()]).unwrap(), poly("s*t + s", &vars));
}

#[test]
fn variable_extension_and_coefficient_slices() {
    let f = xyz("x^2*y + z");
    let wide = Vars::new(&["x", "y", "z", "d"]);
    assert_eq!(f.extend_vars(&wide).to_string(), "x^2*y + z");
    assert_eq!(f.coefficients_in(0).len(), 3);
    assert!(MultiPoly::zero(&Rationals, &Vars::xyz()).coefficients_in(0).is_empty());
    assert!(MultiPoly::zero(&Rationals, &Vars::xyz()).euler_check().unwrap());
}

#[test]
fn binary_forms_reject_non_binary_input() {
    assert_eq!(BinaryForm::from_poly(&xyz("x^2 + y"), 0, 1).unwrap_err(), PolyError::NotHomogeneous);
    assert_eq!(BinaryForm::from_poly(&xyz("x^2 + y*z"), 0, 1).unwrap_err(), PolyError::NotBinary);
    let k = Rationals;
    let line = [k.one(), k.zero(), k.zero()];
    assert_eq!(restrict_to_line(&xyz("x^2 + y"), &line).unwrap_err(), PolyError::NotHomogeneous);
    let with_parameter = poly("x^2 + d*y", &Vars::new(&["x", "y", "z", "d"]));
    assert!(matches!(restrict_to_line(&with_parameter, &line), Err(PolyError::VariableMismatch(..))));
}

#[test]
fn binary_gcd_and_scalar_multiples() {
    let k = Rationals;
    let f = BinaryForm::from_poly(&xyz("x^2 - y^2"), 0, 1).unwrap();
    let zero = BinaryForm::new(&k, 2, vec![k.zero(), k.zero(), k.zero()]);
    assert_eq!(zero.gcd(&f), f.monic());
    assert_eq!(f.gcd(&zero), f.monic());
    assert!(f.scale(&k.from_i64(-3)).is_scalar_multiple_of(&f));
    assert!(!zero.is_scalar_multiple_of(&f));
    let g = BinaryForm::from_poly(&xyz("x - y"), 0, 1).unwrap();
    assert!(!g.is_scalar_multiple_of(&f));
}

#[test]
fn plane_curve_constructor_checks() {
    let k = Rationals;
    let invalid = |r: Result<PlaneCurve<Rationals>, CurveError>| matches!(r, Err(CurveError::Invalid(_)));
    assert!(invalid(PlaneCurve::new(poly("x^2 + y^2", &Vars::new(&["x", "y"])))));
    assert!(invalid(PlaneCurve::new(MultiPoly::zero(&k, &Vars::xyz()))));
    assert!(invalid(PlaneCurve::new(xyz("x^2 + y"))));
    let c = PlaneCurve::new(xyz("x^2 + y^2 - z^2")).unwrap();
    assert!(invalid(c.scaled(&k.zero())));
    assert!(!c.has_parameters());
    let family = PlaneCurve::new(poly("x^4 + y^4 + z^4 + d*y^2*z^2", &Vars::new(&["x", "y", "z", "d"]))).unwrap();
    assert!(family.has_parameters());
    assert!(family.is_reduced(1).is_err());
    assert!(invalid(tjurina_number(&family, &StabilizationPolicy::default()).map(|_| c.clone())));
}

#[test]
fn octic_rejects_a_line_inside_the_curve() {
    let k = Rationals;
    let c = PlaneCurve::new(xyz("x*(x^3 + y^3 + z^3)")).unwrap();
    let x = ProjectiveLine::new(&k, [k.one(), k.zero(), k.zero()]).unwrap();
    assert_eq!(build_octic(&c, &[x]).unwrap_err(), CurveError::NotReduced);
}

#[test]
fn macaulay_matrices_of_degenerate_generators() {
    let k = Rationals;
    let vars = Vars::xyz();
    let m = macaulay_matrix(&[MultiPoly::zero(&k, &vars), xyz("x^2")], 2);
    assert_eq!((m.rows(), m.rank()), (1, 1));
    let empty = macaulay_matrix(&[xyz("x^3")], 1);
    assert_eq!((empty.rows(), empty.cols()), (0, 3));
}

#[test]
fn stabilization_can_fail_without_growth() {
    let c = PlaneCurve::new(xyz("y^2*z - x^3")).unwrap();
    let tight = StabilizationPolicy { start: Some(0), window: 3, step: 1, max_extension: 0 };
    assert!(matches!(tjurina_number(&c, &tight), Err(CurveError::NotStabilized(_))));
}

#[test]
fn higher_derivative_orders_out_of_range() {
    let c = PlaneCurve::new(xyz("x^4 + y^4 + z^4")).unwrap();
    let policy = StabilizationPolicy::default();
    for order in [0, 4] {
        assert!(matches!(higher_derivative_degree(&c, order, &policy), Err(CurveError::Invalid(_))));
    }
    // the second partials 12x^2, 12y^2, 12z^2 have no common projective zero
    let run = higher_derivative_degree(&c, 2, &policy).unwrap();
    assert_eq!(run.value, 0);
    assert_eq!(run.values.last().map(|v| v.1), Some(0));
}

#[test]
fn modular_runs_refuse_primes_that_kill_a_coefficient() {
    let k = Rationals;
    let p = k.prime_targets(12, 3, 1).unwrap()[0].p;
    let c = PlaneCurve::new(xyz(&format!("x^4 + y^4 + {p}*z^4 + x*y*z^2"))).unwrap();
    let err = at_primes(&c, 12, 3, 2, |image| Ok(image.degree())).unwrap_err();
    assert!(matches!(err, CurveError::Invalid(ref m) if m.contains("vanishes modulo")), "{err}");
}

#[test]
fn dense_matrix_shape_errors() {
    let k = Rationals;
    assert!(matches!(DenseMatrix::from_data(&k, 2, 2, vec![k.one()]), Err(LinalgError::Shape(_))));
    assert!(matches!(DenseMatrix::from_rows(&k, vec![vec![k.one()], vec![]]), Err(LinalgError::Shape(_))));
    let m = DenseMatrix::identity(&k, 2);
    assert!(matches!(m.mul_vec(&[k.one()]), Err(LinalgError::Shape(_))));
}

#[test]
fn modular_rank_through_a_quadratic_factor() {
    let g = gaussian();
    let i = g.generator();
    let rows = vec![vec![g.one(), i.clone()], vec![i.clone(), g.from_i64(-1)], vec![g.one(), g.zero()]];
    let m = DenseMatrix::from_rows(&g, rows).unwrap();
    assert_eq!(m.rank(), 2);
    // t^2 + 1 stays irreducible modulo 3
    assert_eq!(rank_modular(&m, 3, &[1, 0, 1]).unwrap(), 2);
}

#[test]
fn prime_field_kernels_with_zero_entries() {
    let fp = PrimeField::new(11).unwrap();
    let m = DenseMatrix::from_i64_rows(&fp, &[&[1, 0, 3, 0], &[0, 1, 0, 0]]).unwrap();
    let kernel = m.kernel_basis();
    assert_eq!(kernel.len(), 2);
    for v in &kernel {
        assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == 0));
    }
}
