use crate::arith::Field;

use super::{MultiPoly, PolyError};

impl<F: Field> MultiPoly<F> {
    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let field = self.field();
        let mut out = Self::zero(field, self.vars());
        for (m, c) in self.terms() {
            if let Some((m2, e)) = m.decrement(i) {
                out.add_term(m2, &field.mul(c, &field.from_i64(e as i64)));
            }
        }
        out
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Self, PolyError> {
        let i = self.vars().index_of(var).ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        Ok(self.derivative(i))
    }

    /// Gradient with respect to the first three variables.
    pub fn gradient(&self) -> [Self; 3] {
        [self.derivative(0), self.derivative(1), self.derivative(2)]
    }

    /// Determinant of the matrix of second partials in the first three
    /// variables. Any further variables are carried as parameters.
    pub fn hessian_det(&self) -> Self {
        let g = self.gradient();
        let h: Vec<Vec<Self>> = (0..3)
            .map(|i| {
                (0..3).map(|j| if j < i { Self::zero(self.field(), self.vars()) } else { g[i].derivative(j) }).collect()
            })
            .collect();
        let e = |i: usize, j: usize| if i <= j { &h[i][j] } else { &h[j][i] };
        let minor = |a: usize, b: usize, c: usize, d: usize| e(1, a).mul(e(2, b)).sub(&e(1, c).mul(e(2, d)));
        e(0, 0).mul(&minor(1, 2, 2, 1)).sub(&e(0, 1).mul(&minor(0, 2, 2, 0))).add(&e(0, 2).mul(&minor(0, 1, 1, 0)))
    }

    /// Checks Euler's relation `sum x_i f_i = d f` over all variables.
    pub fn euler_check(&self) -> Result<bool, PolyError> {
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        let Some(d) = self.total_degree() else { return Ok(true) };
        let field = self.field();
        let mut lhs = Self::zero(field, self.vars());
        for i in 0..self.nvars() {
            lhs = lhs.add(&Self::var(field, self.vars(), i).mul(&self.derivative(i)));
        }
        Ok(lhs == self.scale(&field.from_i64(d as i64)))
    }
}

#[cfg(test)]
mod tests {
    use crate::arith::Rationals;
    use crate::poly::{parse_poly, Vars};

    fn p(s: &str) -> crate::poly::MultiPoly<Rationals> {
        parse_poly(s, &Rationals, &Vars::xyz()).unwrap()
    }

    #[test]
    fn partials_of_c48() {
        let f = p("x^4 + y^4 + x*z^3");
        assert_eq!(f.partial_derivative("x").unwrap(), p("4x^3 + z^3"));
        assert_eq!(f.partial_derivative("y").unwrap(), p("4y^3"));
        assert!(p("y^4").derivative(0).is_zero());
        assert!(f.partial_derivative("w").is_err());
    }

    #[test]
    fn hessians() {
        assert_eq!(p("x^4 + y^4 + x z^3").hessian_det(), p("864x^3y^2z - 108y^2z^4"));
        let vars = Vars::new(&["x", "y", "z", "A", "B", "C"]);
        let f = parse_poly("A x^4 + B y^4 + C z^4", &Rationals, &vars).unwrap();
        let h = parse_poly("1728 A B C x^2 y^2 z^2", &Rationals, &vars).unwrap();
        assert_eq!(f.hessian_det(), h);
    }

    #[test]
    fn euler_relation() {
        assert!(p("x^4 + y^4 + x z^3").euler_check().unwrap());
        assert!(p("x^2 + y").euler_check().is_err());
    }
}
