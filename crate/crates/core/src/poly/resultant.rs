use crate::arith::Field;

use super::{MultiPoly, PolyError};

fn coefficients<F: Field>(f: &MultiPoly<F>, v: usize, name: &str) -> Result<Vec<MultiPoly<F>>, PolyError> {
    let c = f.coefficients_in(v);
    if c.len() < 2 {
        return Err(PolyError::DegreeZero(name.to_string()));
    }
    Ok(c)
}

/// Rows of the Sylvester-type matrix built from `cols_low..cols_high`
/// (descending powers of `v`) for the shifts `v^k f`, `k < nf`, and
/// `v^k g`, `k < ng`.
fn shifted_rows<F: Field>(
    a: &[MultiPoly<F>],
    b: &[MultiPoly<F>],
    nf: usize,
    ng: usize,
    top: usize,
    low: usize,
) -> Vec<Vec<MultiPoly<F>>> {
    let zero = MultiPoly::zero(a[0].field(), a[0].vars());
    let mut rows = Vec::with_capacity(nf + ng);
    let mut push = |coeffs: &[MultiPoly<F>], k: usize| {
        let row = (low..=top)
            .rev()
            .map(|pw| if pw >= k && pw - k < coeffs.len() { coeffs[pw - k].clone() } else { zero.clone() })
            .collect();
        rows.push(row);
    };
    for k in (0..nf).rev() {
        push(a, k);
    }
    for k in (0..ng).rev() {
        push(b, k);
    }
    rows
}

/// The Sylvester matrix of `f` and `g` with respect to variable `v`.
pub fn sylvester_matrix<F: Field>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
    v: usize,
) -> Result<Vec<Vec<MultiPoly<F>>>, PolyError> {
    let name = f.vars().names().get(v).cloned().unwrap_or_default();
    let a = coefficients(f, v, &name)?;
    let b = coefficients(g, v, &name)?;
    let (p, q) = (a.len() - 1, b.len() - 1);
    Ok(shifted_rows(&a, &b, q, p, p + q - 1, 0))
}

/// Determinant by fraction-free Gaussian elimination. Every division is
/// exact, so entries stay polynomial.
pub fn bareiss_determinant<F: Field>(mut m: Vec<Vec<MultiPoly<F>>>) -> MultiPoly<F> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix required");
    let Some(first) = m.first().and_then(|r| r.first()) else {
        panic!("empty matrix");
    };
    let (field, vars) = (first.field().clone(), first.vars().clone());
    let mut prev = MultiPoly::one(&field, &vars);
    let mut negate = false;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return MultiPoly::zero(&field, &vars);
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero(&field, &vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Resultant of `f` and `g` with respect to variable `v`.
pub fn resultant<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, v: usize) -> Result<MultiPoly<F>, PolyError> {
    Ok(bareiss_determinant(sylvester_matrix(f, g, v)?))
}

/// The `j`-th principal subresultant coefficient of `f` and `g` in `v`.
/// For `j = 0` this is the resultant; `psc_1` vanishes exactly where the
/// two polynomials have at least two common roots (or a double one).
pub fn subresultant_coefficient<F: Field>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
    v: usize,
    j: usize,
) -> Result<MultiPoly<F>, PolyError> {
    let name = f.vars().names().get(v).cloned().unwrap_or_default();
    let a = coefficients(f, v, &name)?;
    let b = coefficients(g, v, &name)?;
    let (p, q) = (a.len() - 1, b.len() - 1);
    assert!(j <= p.min(q), "subresultant index out of range");
    if j == p.min(q) && p == q {
        // 0x0 minor when both have degree j
        return Ok(MultiPoly::one(f.field(), f.vars()));
    }
    Ok(bareiss_determinant(shifted_rows(&a, &b, q - j, p - j, p + q - j - 1, j)))
}
