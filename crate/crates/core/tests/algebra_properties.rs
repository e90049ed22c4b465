use num_rational::BigRational;
use proptest::prelude::*;
use quartics::arith::{find_modular_parameters, reduce_to_prime_field, ExtensionField, Field, PrimeField, Rationals};
use quartics::groebner::{buchberger, normal_form, MonomialOrder};
use quartics::linalg::DenseMatrix;
use quartics::poly::{resultant, BinaryForm, Monomial, MultiPoly, Vars};

fn rat() -> impl Strategy<Value = BigRational> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn check_axioms<F: Field>(k: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> Result<(), TestCaseError> {
    prop_assert_eq!(k.add(a, b), k.add(b, a));
    prop_assert_eq!(k.mul(a, b), k.mul(b, a));
    prop_assert_eq!(k.add(&k.add(a, b), c), k.add(a, &k.add(b, c)));
    prop_assert_eq!(k.mul(&k.mul(a, b), c), k.mul(a, &k.mul(b, c)));
    prop_assert_eq!(k.mul(a, &k.add(b, c)), k.add(&k.mul(a, b), &k.mul(a, c)));
    prop_assert!(k.is_zero(&k.add(a, &k.neg(a))));
    prop_assert_eq!(k.mul(a, &k.one()), a.clone());
    if !k.is_zero(a) {
        prop_assert!(k.is_one(&k.mul(a, &k.inv(a).unwrap())));
    }
    Ok(())
}

fn gaussian() -> ExtensionField<Rationals> {
    ExtensionField::new(Rationals, vec![q(1), q(0), q(1)], "i").unwrap()
}

fn r_field() -> ExtensionField<Rationals> {
    let mut m = vec![q(0); 17];
    (m[0], m[4], m[8], m[12], m[16]) = (q(9), q(-18), q(39), q(6), q(1));
    ExtensionField::new(Rationals, m, "r").unwrap()
}

fn cubic_mod_p() -> ExtensionField<PrimeField> {
    // r^3 + r + 1 is irreducible modulo 101.
    ExtensionField::new_checked(PrimeField::new(101).unwrap(), vec![1, 1, 0, 1], "r").unwrap()
}

fn small_ext_elem(n: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-5i64..6).prop_map(q), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rationals_form_a_field(a in rat(), b in rat(), c in rat()) {
        check_axioms(&Rationals, &a, &b, &c)?;
    }

    #[test]
    fn prime_fields_form_fields(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        for p in [101u64, (1 << 61) - 1] {
            let k = PrimeField::new(p).unwrap();
            check_axioms(&k, &(a % p), &(b % p), &(c % p))?;
        }
    }

    #[test]
    fn quadratic_number_field_axioms(a in prop::collection::vec(rat(), 2), b in prop::collection::vec(rat(), 2), c in prop::collection::vec(rat(), 2)) {
        let k = gaussian();
        check_axioms(&k, &k.reduce(a), &k.reduce(b), &k.reduce(c))?;
    }

    #[test]
    fn finite_extension_axioms(a in prop::collection::vec(0u64..101, 3), b in prop::collection::vec(0u64..101, 3), c in prop::collection::vec(0u64..101, 3)) {
        let k = cubic_mod_p();
        check_axioms(&k, &k.reduce(a), &k.reduce(b), &k.reduce(c))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn degree_16_field_axioms(a in small_ext_elem(16), b in small_ext_elem(16), c in small_ext_elem(4)) {
        let k = r_field();
        let (a, b, c) = (k.reduce(a), k.reduce(b), k.reduce(c));
        check_axioms(&k, &a, &b, &c)?;
        for v in [k.mul(&a, &b), k.add(&a, &c), k.inv(&a).unwrap_or_default()] {
            prop_assert!(v.len() <= 16);
        }
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(a in small_ext_elem(16), b in small_ext_elem(16), seed in 0u64..4) {
        let k = r_field();
        let (a, b) = (k.reduce(a), k.reduce(b));
        let params = find_modular_parameters(k.modulus(), 20, seed).unwrap();
        let red = |x: &[BigRational]| reduce_to_prime_field(&k, x, params.p, params.factor.clone()).unwrap();
        let ((t, ra), (_, rb)) = (red(&a), red(&b));
        prop_assert_eq!(red(&k.add(&a, &b)).1, t.add(&ra, &rb));
        prop_assert_eq!(red(&k.mul(&a, &b)).1, t.mul(&ra, &rb));
    }
}

fn random_poly(vars: &Vars, terms: &[(u32, u32, u32, i64)]) -> MultiPoly<Rationals> {
    MultiPoly::from_terms(
        &Rationals,
        vars,
        terms.iter().map(|&(a, b, c, v)| (Monomial::from_exponents(&[a, b, c]), q(v))),
    )
}

fn form(d: u32, coeffs: &[i64]) -> MultiPoly<Rationals> {
    let mut terms = Vec::new();
    let mut it = coeffs.iter().cycle();
    for a in 0..=d {
        for b in 0..=d - a {
            terms.push((a, b, d - a - b, *it.next().unwrap()));
        }
    }
    random_poly(&Vars::xyz(), &terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_relation_for_forms(d in 1u32..6, coeffs in prop::collection::vec(-9i64..10, 28)) {
        prop_assert!(form(d, &coeffs).euler_check().unwrap());
    }

    #[test]
    fn resultant_is_multiplicative(
        f in prop::collection::vec((0u32..3, 0u32..2, 0u32..3, -5i64..6), 1..4),
        h in prop::collection::vec((0u32..3, 0u32..2, 0u32..3, -5i64..6), 1..4),
        g in prop::collection::vec((0u32..3, 0u32..2, 0u32..3, -5i64..6), 1..4),
    ) {
        let vars = Vars::xyz();
        let (f, h, g) = (random_poly(&vars, &f), random_poly(&vars, &h), random_poly(&vars, &g));
        prop_assume!([&f, &h, &g].iter().all(|p| p.degree_in(2).unwrap_or(0) > 0));
        let lhs = resultant(&f.mul(&h), &g, 2).unwrap();
        let rhs = resultant(&f, &g, 2).unwrap().mul(&resultant(&h, &g, 2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hessian_chain_rule(coeffs in prop::collection::vec(-9i64..10, 15), a in 1i64..5, b in -4i64..5, c in 1i64..5) {
        prop_assume!(b != 0);
        let k = Rationals;
        let f = form(4, &coeffs);
        let vars = f.vars().clone();
        let diag = |p: &MultiPoly<Rationals>| {
            let images: Vec<_> = [a, b, c].iter().enumerate().map(|(i, s)| MultiPoly::var(&k, &vars, i).scale(&q(*s))).collect();
            p.substitute(&images).unwrap()
        };
        let lhs = diag(&f).hessian_det();
        let rhs = diag(&f.hessian_det()).scale(&q((a * b * c) * (a * b * c)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_nullity(rows in 1usize..7, cols in 1usize..7, data in prop::collection::vec(-3i64..4, 36)) {
        let k = Rationals;
        let m = DenseMatrix::from_data(&k, rows, cols, data[..rows * cols].iter().map(|&v| k.from_i64(v)).collect()).unwrap();
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| k.is_zero(x)));
        }
        let fp = PrimeField::new(7).unwrap();
        let mp = m.map(&fp, |c| fp.from_rational(c)).unwrap();
        prop_assert_eq!(mp.rank() + mp.kernel_basis().len(), cols);
        for v in mp.kernel_basis() {
            prop_assert!(mp.mul_vec(&v).unwrap().iter().all(|&x| x == 0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn squarefree_parts_reassemble(d in 1u32..9, coeffs in prop::collection::vec(-4i64..5, 9)) {
        let k = Rationals;
        let c: Vec<BigRational> = coeffs[..=d as usize].iter().map(|&v| q(v)).collect();
        let f = BinaryForm::new(&k, d, c);
        prop_assume!(!f.is_zero());
        let parts = f.squarefree_decomposition().unwrap();
        let product = parts.iter().fold(BinaryForm::new(&k, 0, vec![k.one()]), |acc, (g, e)| acc.mul(&g.pow(*e)));
        prop_assert!(product.is_scalar_multiple_of(&f));
        for i in 0..parts.len() {
            prop_assert!(parts[i].0.is_squarefree());
            for j in i + 1..parts.len() {
                prop_assert_eq!(parts[i].0.gcd(&parts[j].0).degree(), 0);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn modular_rank_matches_exact(rows in 1usize..9, cols in 1usize..9, data in prop::collection::vec(-9i64..10, 64), dep in any::<bool>()) {
        let k = Rationals;
        let mut entries: Vec<i64> = data[..rows * cols].to_vec();
        if dep && rows > 1 {
            // Force a dependency: last row = first + second.
            for j in 0..cols {
                entries[(rows - 1) * cols + j] = entries[j] + if rows > 2 { entries[cols + j] } else { 0 };
            }
        }
        let m = DenseMatrix::from_data(&k, rows, cols, entries.iter().map(|&v| k.from_i64(v)).collect()).unwrap();
        let exact = m.rank();
        for p in [65_537u64, 1_000_003] {
            prop_assert_eq!(quartics::linalg::rank_mod_prime(&m, p).unwrap(), exact);
        }
    }
}

type Fp = PrimeField;

fn leading(p: &MultiPoly<Fp>, order: &MonomialOrder) -> (Monomial, u64) {
    let n = p.nvars();
    let (m, c) = p.terms().max_by(|a, b| order.cmp(a.0, b.0, n)).unwrap();
    (*m, *c)
}

fn s_poly(f: &MultiPoly<Fp>, g: &MultiPoly<Fp>, order: &MonomialOrder) -> MultiPoly<Fp> {
    let k = *f.field();
    let ((mf, cf), (mg, cg)) = (leading(f, order), leading(g, order));
    let l = mf.lcm(&mg);
    let mono = |m: Monomial, c: u64| MultiPoly::from_terms(&k, f.vars(), [(m, k.inv(&c).unwrap())]);
    f.mul(&mono(mf.div(&l).unwrap(), cf)).sub(&g.mul(&mono(mg.div(&l).unwrap(), cg)))
}

// Over F_32003: random Lex bases over Q suffer enormous coefficient growth.
fn small_ideal() -> impl Strategy<Value = Vec<MultiPoly<Fp>>> {
    let term = (0u32..3, 0u32..3, 0u32..2, -4i64..5);
    prop::collection::vec(prop::collection::vec(term, 1..4), 1..4).prop_map(|gens| {
        let k = PrimeField::new(32003).unwrap();
        gens.iter()
            .map(|t| random_poly(&Vars::xyz(), t).map_coefficients(&k, |c| k.from_rational(c)).unwrap())
            .filter(|p| !p.is_zero())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn groebner_bases_are_closed_and_canonical(gens in small_ideal(), order_lex in any::<bool>()) {
        prop_assume!(!gens.is_empty());
        let order = if order_lex { MonomialOrder::Lex } else { MonomialOrder::DegRevLex };
        let basis = buchberger(&gens, &order).unwrap();
        for g in &gens {
            prop_assert!(normal_form(g, &basis).is_zero());
        }
        let b = &basis.generators;
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                prop_assert!(normal_form(&s_poly(&b[i], &b[j], &order), &basis).is_zero());
            }
        }
        let mut shuffled = gens.clone();
        shuffled.reverse();
        shuffled.rotate_left(gens.len() / 2);
        prop_assert_eq!(buchberger(&shuffled, &order).unwrap().generators, basis.generators);
    }
}

#[test]
fn coefficient_ideal_basis_commutes_with_reduction() {
    let si = quartics::fixtures::si();
    let over_q = buchberger(&si, &MonomialOrder::DegRevLex).unwrap();
    for p in [1_000_003u64, 998_244_353] {
        let fp = PrimeField::new(p).unwrap();
        let image = |g: &MultiPoly<Rationals>| g.map_coefficients(&fp, |c| fp.from_rational(c)).unwrap();
        let mod_p = buchberger(&si.iter().map(image).collect::<Vec<_>>(), &MonomialOrder::DegRevLex).unwrap();
        let expected: Vec<_> = over_q.generators.iter().map(image).collect();
        assert_eq!(mod_p.generators, expected);
    }
}
