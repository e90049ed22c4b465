use std::cmp::Ordering;

use crate::poly::Monomial;

/// A term order on monomials in `nvars` variables, variable 0 largest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Degree-reverse-lexicographic on the first `split` variables, ties
    /// broken by degree-reverse-lexicographic on the rest. Eliminates the
    /// first `split` variables.
    Block {
        split: usize,
    },
}

fn degrevlex(a: &Monomial, b: &Monomial, from: usize, to: usize) -> Ordering {
    let da: u32 = (from..to).map(|i| a.exp(i)).sum();
    let db: u32 = (from..to).map(|i| b.exp(i)).sum();
    da.cmp(&db).then_with(|| {
        for i in (from..to).rev() {
            match a.exp(i).cmp(&b.exp(i)) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for i in 0..nvars {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => {
                if a.degree() != b.degree() {
                    return a.degree().cmp(&b.degree());
                }
                degrevlex(a, b, 0, nvars)
            }
            MonomialOrder::Block { split } => degrevlex(a, b, 0, *split).then_with(|| degrevlex(a, b, *split, nvars)),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Block { split } => format!("block({split})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn classic_comparisons() {
        use Ordering::*;
        // x*z^2 vs y^3
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0]), 3), Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0]), 3), Less);
        // x*z vs y^2 in degrevlex: y^2 > x z
        assert_eq!(MonomialOrder::DegRevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0]), 3), Less);
        // block eliminating t (variable 0): t > any power of x
        let b = MonomialOrder::Block { split: 1 };
        assert_eq!(b.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5]), 3), Greater);
        assert_eq!(b.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1]), 3), Greater);
    }
}
