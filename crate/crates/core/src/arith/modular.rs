//! Reduction of rational data modulo primes: factoring minimal polynomials
//! over `F_p`, choosing modular parameters, and the ring homomorphisms
//! `Q[r]/(m) -> F_p[t]/(g)` used by the modular pipelines.

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::upoly;
use super::{is_prime_u64, next_prime_at_least, ArithError, ExtensionField, Field, PrimeField, Rationals};

/// A prime `p` together with a monic irreducible factor `g` of the
/// minimal polynomial modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularParameters {
    pub p: u64,
    pub factor: Vec<u64>,
}

impl ModularParameters {
    /// The root `c` when the factor is `t - c`.
    pub fn root(&self) -> Option<u64> {
        (self.factor.len() == 2).then(|| (self.p - self.factor[0]) % self.p)
    }
}

/// Image of a rational polynomial in `F_p[t]`.
pub fn reduce_rational_poly(m: &[BigRational], p: u64) -> Result<Vec<u64>, ArithError> {
    let fp = PrimeField::new(p)?;
    let v = m.iter().map(|c| fp.from_rational(c)).collect::<Result<Vec<_>, _>>()?;
    Ok(upoly::trimmed(&fp, v))
}

fn t_poly() -> Vec<u64> {
    vec![0, 1]
}

fn frobenius_power(fp: &PrimeField, a: &[u64], m: &[u64]) -> Vec<u64> {
    upoly::powmod(fp, a, &BigUint::from(fp.modulus()), m)
}

fn is_squarefree(fp: &PrimeField, f: &[u64]) -> bool {
    let d = upoly::derivative(fp, f);
    !d.is_empty() && upoly::gcd(fp, f, &d).len() == 1
}

/// Distinct-degree factorization of a squarefree monic polynomial:
/// `(k, product of all irreducible factors of degree k)`.
fn distinct_degree(fp: &PrimeField, f: &[u64]) -> Vec<(usize, Vec<u64>)> {
    let mut out = Vec::new();
    let mut h = upoly::monic(fp, f);
    let mut w = t_poly();
    let mut k = 0;
    while upoly::degree(&h).unwrap_or(0) >= 2 * (k + 1) {
        k += 1;
        w = frobenius_power(fp, &w, &h);
        let g = upoly::gcd(fp, &h, &upoly::sub(fp, &w, &t_poly()));
        if g.len() > 1 {
            h = upoly::divrem(fp, &h, &g).expect("nonzero").0;
            w = upoly::rem(fp, &w, &h).expect("nonzero");
            out.push((k, g));
        }
    }
    if h.len() > 1 {
        out.push((h.len() - 1, h));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
/// degree `k` (odd `p`).
fn equal_degree(fp: &PrimeField, f: &[u64], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let n = f.len() - 1;
    if n == k {
        return vec![f.to_vec()];
    }
    let p = fp.modulus();
    let e = (BigUint::from(p).pow(k as u32) - 1u32) / 2u32;
    loop {
        let a: Vec<u64> = upoly::trimmed(fp, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let mut g = upoly::gcd(fp, &a, f);
        if g.len() == 1 {
            let b = upoly::powmod(fp, &a, &e, f);
            g = upoly::gcd(fp, &upoly::sub(fp, &b, &[1]), f);
        }
        if g.len() > 1 && g.len() < f.len() {
            let h = upoly::divrem(fp, f, &g).expect("nonzero").0;
            let mut out = equal_degree(fp, &g, k, rng);
            out.extend(equal_degree(fp, &upoly::monic(fp, &h), k, rng));
            return out;
        }
    }
}

/// Rabin's irreducibility test over `F_p`.
pub fn is_irreducible_mod_p(p: u64, g: &[u64]) -> bool {
    let Ok(fp) = PrimeField::new(p) else { return false };
    let g = upoly::trimmed(&fp, g.to_vec());
    let Some(n) = upoly::degree(&g) else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let g = upoly::monic(&fp, &g);
    // powers[j] = t^(p^j) mod g
    let mut powers = vec![t_poly()];
    for _ in 0..n {
        let next = frobenius_power(&fp, powers.last().expect("nonempty"), &g);
        powers.push(next);
    }
    if upoly::sub(&fp, &powers[n], &t_poly()) != Vec::<u64>::new() {
        return false;
    }
    let mut m = n;
    let mut q = 2;
    let mut prime_divisors = Vec::new();
    while q * q <= m {
        if m % q == 0 {
            prime_divisors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        prime_divisors.push(m);
    }
    prime_divisors.into_iter().all(|q| {
        let h = upoly::sub(&fp, &powers[n / q], &t_poly());
        upoly::gcd(&fp, &h, &g).len() == 1
    })
}

/// Degrees of the irreducible factors of `f` over `F_p`, sorted; `None`
/// when `f` is not squarefree modulo `p`.
pub fn factor_degrees_mod_p(p: u64, f: &[u64]) -> Option<Vec<usize>> {
    let fp = PrimeField::new(p).ok()?;
    let f = upoly::trimmed(&fp, f.to_vec());
    if f.len() < 2 || !is_squarefree(&fp, &f) {
        return None;
    }
    let mut out = Vec::new();
    for (k, g) in distinct_degree(&fp, &f) {
        out.extend(std::iter::repeat_n(k, (g.len() - 1) / k));
    }
    out.sort_unstable();
    Some(out)
}

/// Factor-degree pattern of a rational polynomial modulo `p`.
pub fn degree_pattern_mod_p(m: &[BigRational], p: u64) -> Option<Vec<usize>> {
    let f = reduce_rational_poly(m, p).ok()?;
    if f.len() != m.len() {
        return None;
    }
    factor_degrees_mod_p(p, &f)
}

/// Minimal-degree monic irreducible factor of squarefree `f` mod `p`,
/// chosen canonically (smallest root for linear factors, otherwise the
/// lexicographically smallest coefficient vector).
fn min_degree_factor(fp: &PrimeField, f: &[u64], seed: u64) -> (usize, Vec<u64>) {
    let (k, prod) = distinct_degree(fp, f).into_iter().next().expect("nonconstant input");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fp.modulus());
    let mut factors: Vec<Vec<u64>> =
        equal_degree(fp, &prod, k, &mut rng).into_iter().map(|g| upoly::monic(fp, &g)).collect();
    if k == 1 {
        factors.sort_by_key(|g| fp.neg(&g[0]));
    } else {
        factors.sort();
    }
    (k, factors.swap_remove(0))
}

/// Scans primes upward from `start` (skipping 2, 3, primes dividing a
/// denominator of `m`, and primes where `m` is not squarefree) and returns
/// the first one, with its minimal-degree irreducible factor, whose factor
/// degree is at most `max_factor_degree`.
pub fn search_modular_parameters(
    m: &[BigRational],
    start: u64,
    max_factor_degree: Option<usize>,
    seed: u64,
) -> Result<ModularParameters, ArithError> {
    let deg = m
        .len()
        .checked_sub(1)
        .filter(|&d| d >= 1)
        .ok_or_else(|| ArithError::InvalidMinimalPolynomial("degree must be at least 1".into()))?;
    if !m[deg].numer().eq(m[deg].denom()) {
        return Err(ArithError::InvalidMinimalPolynomial("not monic".into()));
    }
    let mut p = next_prime_at_least(start.max(5));
    for _ in 0..100_000 {
        if let Ok(f) = reduce_rational_poly(m, p) {
            let fp = PrimeField::new(p)?;
            if f.len() == deg + 1 && (deg == 1 || is_squarefree(&fp, &f)) {
                let (k, g) = min_degree_factor(&fp, &f, seed);
                if max_factor_degree.is_none_or(|max| k <= max) {
                    return Ok(ModularParameters { p, factor: g });
                }
            }
        }
        p = next_prime_at_least(p + 1);
    }
    Err(ArithError::NoUsablePrime(format!("no prime found from {start}")))
}

fn seeded_start(bits: u32, seed: u64) -> u64 {
    let bits = bits.clamp(16, 62);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.gen_range((1u64 << (bits - 1))..(1u64 << bits))
}

/// Modular parameters for a prime of about `bits` bits, deterministic in
/// `seed`.
pub fn find_modular_parameters(m: &[BigRational], bits: u32, seed: u64) -> Result<ModularParameters, ArithError> {
    search_modular_parameters(m, seeded_start(bits, seed), None, seed)
}

/// A prime-field reduction target; `root` is the image of the generator
/// for extension fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeTarget {
    pub p: u64,
    pub root: Option<u64>,
}

/// `count` distinct prime targets of about `bits` bits. For a minimal
/// polynomial `m`, only primes at which `m` has a root are used.
pub fn distinct_prime_targets(
    m: Option<&[BigRational]>,
    bits: u32,
    seed: u64,
    count: usize,
) -> Result<Vec<PrimeTarget>, ArithError> {
    let mut start = seeded_start(bits, seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let target = match m {
            None => {
                let p = next_prime_at_least(start.max(5));
                PrimeTarget { p, root: None }
            }
            Some(m) => {
                let params = search_modular_parameters(m, start, Some(1), seed)?;
                PrimeTarget { p: params.p, root: params.root() }
            }
        };
        start = target.p + 1;
        out.push(target);
    }
    Ok(out)
}

/// Fields whose elements can be mapped homomorphically into a prime field.
pub trait ReduceModP: Field {
    fn prime_targets(&self, bits: u32, seed: u64, count: usize) -> Result<Vec<PrimeTarget>, ArithError>;
    fn reduce_elem(&self, a: &Self::Elem, target: &PrimeTarget) -> Result<u64, ArithError>;
}

impl ReduceModP for Rationals {
    fn prime_targets(&self, bits: u32, seed: u64, count: usize) -> Result<Vec<PrimeTarget>, ArithError> {
        distinct_prime_targets(None, bits, seed, count)
    }
    fn reduce_elem(&self, a: &BigRational, target: &PrimeTarget) -> Result<u64, ArithError> {
        PrimeField::new(target.p)?.from_rational(a)
    }
}

impl ReduceModP for ExtensionField<Rationals> {
    fn prime_targets(&self, bits: u32, seed: u64, count: usize) -> Result<Vec<PrimeTarget>, ArithError> {
        distinct_prime_targets(Some(self.modulus()), bits, seed, count)
    }
    fn reduce_elem(&self, a: &Vec<BigRational>, target: &PrimeTarget) -> Result<u64, ArithError> {
        let fp = PrimeField::new(target.p)?;
        let root = target.root.ok_or(ArithError::NoUsablePrime("target has no root".into()))?;
        let coeffs = a.iter().map(|c| fp.from_rational(c)).collect::<Result<Vec<_>, _>>()?;
        Ok(upoly::eval(&fp, &coeffs, &root))
    }
}

/// The ring homomorphism `Q[r]/(m) -> F_p[t]/(g)` sending `r` to `t`.
#[derive(Clone, Debug)]
pub struct ExtensionReduction {
    source: ExtensionField<Rationals>,
    target: ExtensionField<PrimeField>,
}

impl ExtensionReduction {
    pub fn new(source: &ExtensionField<Rationals>, p: u64, g: Vec<u64>) -> Result<Self, ArithError> {
        let fp = PrimeField::new(p)?;
        let m = reduce_rational_poly(source.modulus(), p)?;
        let g = upoly::trimmed(&fp, g);
        if g.len() < 2 || *g.last().expect("nonempty") != 1 {
            return Err(ArithError::InvalidMinimalPolynomial("factor must be monic of positive degree".into()));
        }
        if !upoly::rem(&fp, &m, &g)?.is_empty() {
            return Err(ArithError::FactorDoesNotDivide(p));
        }
        let target = ExtensionField::new_checked(fp, g, "t")?;
        Ok(Self { source: source.clone(), target })
    }

    pub fn from_parameters(source: &ExtensionField<Rationals>, params: &ModularParameters) -> Result<Self, ArithError> {
        Self::new(source, params.p, params.factor.clone())
    }

    pub fn source(&self) -> &ExtensionField<Rationals> {
        &self.source
    }

    pub fn target(&self) -> &ExtensionField<PrimeField> {
        &self.target
    }

    pub fn map(&self, a: &[BigRational]) -> Result<Vec<u64>, ArithError> {
        let fp = self.target.base();
        let coeffs = a.iter().map(|c| fp.from_rational(c)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.target.reduce(coeffs))
    }
}

/// Image of `a` under `Q[r]/(m) -> F_p[t]/(g)`.
pub fn reduce_to_prime_field(
    source: &ExtensionField<Rationals>,
    a: &[BigRational],
    p: u64,
    g: Vec<u64>,
) -> Result<(ExtensionField<PrimeField>, Vec<u64>), ArithError> {
    let hom = ExtensionReduction::new(source, p, g)?;
    let image = hom.map(a)?;
    Ok((hom.target, image))
}

/// Outcome of the degree-pattern irreducibility test over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityEvidence {
    pub patterns: Vec<(u64, Vec<usize>)>,
    /// `true` when no proper factor degree is compatible with every
    /// pattern, which proves irreducibility over `Q`.
    pub certified: bool,
    /// Proper factor degrees still compatible with all patterns.
    pub surviving_degrees: Vec<usize>,
}

/// Factors `m` modulo `count` good primes from `start` and intersects the
/// sets of achievable proper factor degrees.
pub fn irreducibility_by_degree_patterns(m: &[BigRational], start: u64, count: usize) -> IrreducibilityEvidence {
    let n = m.len().saturating_sub(1);
    let mut surviving: Vec<bool> = (0..=n).map(|d| d > 0 && d < n).collect();
    let mut patterns = Vec::new();
    let mut p = next_prime_at_least(start.max(5));
    while patterns.len() < count && n > 1 {
        if let Some(pattern) = degree_pattern_mod_p(m, p) {
            let mut reach = vec![false; n + 1];
            reach[0] = true;
            for &d in &pattern {
                for s in (d..=n).rev() {
                    reach[s] = reach[s] || reach[s - d];
                }
            }
            for d in 0..=n {
                surviving[d] = surviving[d] && reach[d];
            }
            patterns.push((p, pattern));
        }
        p = next_prime_at_least(p + 1);
        debug_assert!(is_prime_u64(p));
    }
    let surviving_degrees: Vec<usize> = (0..=n).filter(|&d| surviving[d]).collect();
    IrreducibilityEvidence { patterns, certified: surviving_degrees.is_empty(), surviving_degrees }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&n| BigRational::from_integer(n.into())).collect()
    }

    fn r_poly() -> Vec<BigRational> {
        let mut m = vec![0i64; 17];
        m[16] = 1;
        m[12] = 6;
        m[8] = 39;
        m[4] = -18;
        m[0] = 9;
        q(&m)
    }

    #[test]
    fn t_squared_plus_one_from_five() {
        let params = search_modular_parameters(&q(&[1, 0, 1]), 5, None, 0).unwrap();
        assert_eq!(params.p, 5);
        assert_eq!(params.factor, vec![3, 1]); // t - 2
        assert_eq!(params.root(), Some(2));
    }

    #[test]
    fn degree_one_minimal_polynomial() {
        let params = find_modular_parameters(&q(&[-3, 1]), 20, 7).unwrap();
        assert_eq!(params.factor, vec![params.p - 3, 1]);
    }

    #[test]
    fn r_polynomial_factor_divides() {
        let m = r_poly();
        for seed in 0..3 {
            let params = find_modular_parameters(&m, 20, seed).unwrap();
            let fp = PrimeField::new(params.p).unwrap();
            let mp = reduce_rational_poly(&m, params.p).unwrap();
            assert!(upoly::rem(&fp, &mp, &params.factor).unwrap().is_empty());
            assert_eq!(16 % (params.factor.len() - 1), 0);
            assert!(is_irreducible_mod_p(params.p, &params.factor));
        }
    }

    #[test]
    fn trial_factorization_small_primes() {
        // Independent check: the minimal factor degree found by the search
        // matches brute-force root finding when it is 1.
        let m = r_poly();
        for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            let Some(pattern) = degree_pattern_mod_p(&m, p) else { continue };
            let f = reduce_rational_poly(&m, p).unwrap();
            let fp = PrimeField::new(p).unwrap();
            let roots = (0..p).filter(|c| upoly::eval(&fp, &f, c) == 0).count();
            assert_eq!(pattern.iter().filter(|&&d| d == 1).count(), roots, "p = {p}");
            assert_eq!(pattern.iter().sum::<usize>(), 16);
        }
    }

    #[test]
    fn reduction_is_a_homomorphism_on_powers() {
        let m = r_poly();
        let k = ExtensionField::new(Rationals, m.clone(), "r").unwrap();
        let params = find_modular_parameters(&m, 20, 1).unwrap();
        let hom = ExtensionReduction::from_parameters(&k, &params).unwrap();
        let r = k.generator();
        let r4 = k.pow(&r, 4);
        let r12 = k.pow(&r, 12);
        let lhs = hom.map(&k.mul(&r4, &r12)).unwrap();
        let t = hom.target();
        let rhs = t.mul(&hom.map(&r4).unwrap(), &hom.map(&r12).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(hom.map(&k.one()).unwrap(), t.one());
    }

    #[test]
    fn reduction_errors() {
        let m = q(&[1, 0, 1]);
        let k = ExtensionField::new(Rationals, m, "i").unwrap();
        // t^2 + 1 is reducible mod 5
        assert_eq!(ExtensionReduction::new(&k, 5, vec![1, 0, 1]).unwrap_err(), ArithError::Reducible(5));
        // t - 1 does not divide t^2 + 1 mod 5
        assert_eq!(ExtensionReduction::new(&k, 5, vec![4, 1]).unwrap_err(), ArithError::FactorDoesNotDivide(5));
        let hom = ExtensionReduction::new(&k, 5, vec![3, 1]).unwrap();
        let half = vec![BigRational::new(1.into(), 10.into())];
        assert!(matches!(hom.map(&half), Err(ArithError::DenominatorDivisibleByP { .. })));
        let (_, image) = reduce_to_prime_field(&k, &k.generator(), 5, vec![3, 1]).unwrap();
        assert_eq!(image, vec![2]);
    }

    #[test]
    fn irreducibility_patterns() {
        // x^2 - 2 irreducible: some prime is inert
        let ev = irreducibility_by_degree_patterns(&q(&[-2, 0, 1]), 5, 4);
        assert!(ev.certified);
        // (x^2 + 1)(x^2 - 2) can never be certified
        let red = upoly::mul(&Rationals, &q(&[1, 0, 1]), &q(&[-2, 0, 1]));
        let ev = irreducibility_by_degree_patterns(&red, 5, 8);
        assert!(!ev.certified);
        assert!(ev.surviving_degrees.contains(&2));
    }
}
