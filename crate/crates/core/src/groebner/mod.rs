//! Gröbner bases: term orders, normal forms, Buchberger completion,
//! elimination, intersection and radical membership.

mod buchberger;
mod order;

use std::time::Instant;

use thiserror::Error;

use crate::arith::Field;
use crate::poly::{MultiPoly, PolyError, Vars};

use buchberger::{complete, Ring, SortedPoly};
pub use order::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("time budget exhausted")]
    Timeout,
    #[error("empty generator list")]
    NoGenerators,
    #[error("too many variables for the auxiliary construction")]
    TooManyVariables,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A list of generators with the order they were computed for. When
/// `reduced` is set the list is the reduced Gröbner basis, sorted by
/// decreasing leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis<F: Field> {
    pub generators: Vec<MultiPoly<F>>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl<F: Field> IdealBasis<F> {
    pub fn is_unit(&self) -> bool {
        self.reduced && self.generators.len() == 1 && self.generators[0].is_constant() && !self.generators[0].is_zero()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Leading monomial of each generator.
    pub fn leading_monomials(&self) -> Vec<crate::poly::Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.terms().map(|(m, _)| *m).max_by(|a, b| self.order.cmp(a, b, g.nvars())))
            .collect()
    }
}

fn ring_of<'a, F: Field>(field: &'a F, order: &'a MonomialOrder, vars: &Vars) -> Ring<'a, F> {
    Ring { field, order, nvars: vars.len() }
}

fn common_ring<F: Field>(gens: &[MultiPoly<F>]) -> Result<(F, Vars), GroebnerError> {
    let first = gens.first().ok_or(GroebnerError::NoGenerators)?;
    for g in gens {
        if g.vars() != first.vars() {
            return Err(PolyError::VariableMismatch(format!("{:?}", first.vars()), format!("{:?}", g.vars())).into());
        }
    }
    Ok((first.field().clone(), first.vars().clone()))
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<F: Field>(gens: &[MultiPoly<F>], order: &MonomialOrder) -> Result<IdealBasis<F>, GroebnerError> {
    buchberger_with_deadline(gens, order, None)
}

/// As [`buchberger`], giving up with [`GroebnerError::Timeout`] once the
/// deadline passes.
pub fn buchberger_with_deadline<F: Field>(
    gens: &[MultiPoly<F>],
    order: &MonomialOrder,
    deadline: Option<Instant>,
) -> Result<IdealBasis<F>, GroebnerError> {
    let (field, vars) = common_ring(gens)?;
    let ring = ring_of(&field, order, &vars);
    let sorted = gens.iter().map(|g| ring.sorted(g)).collect();
    let basis = complete(&ring, sorted, deadline)?;
    Ok(IdealBasis {
        generators: basis.iter().map(|p| ring.unsorted(p, &vars)).collect(),
        order: order.clone(),
        reduced: true,
    })
}

/// Remainder of `f` on division by the basis; no term of the result is
/// divisible by a leading monomial of the basis.
pub fn normal_form<F: Field>(f: &MultiPoly<F>, basis: &IdealBasis<F>) -> MultiPoly<F> {
    let field = f.field().clone();
    let ring = ring_of(&field, &basis.order, f.vars());
    let sorted: Vec<SortedPoly<F::Elem>> = basis
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut s = ring.sorted(g);
            ring.monic(&mut s);
            s
        })
        .collect();
    let refs: Vec<&SortedPoly<F::Elem>> = sorted.iter().collect();
    ring.unsorted(&ring.normal_form(&ring.sorted(f), &refs), f.vars())
}

pub fn ideal_membership<F: Field>(
    f: &MultiPoly<F>,
    gens: &[MultiPoly<F>],
    order: &MonomialOrder,
) -> Result<bool, GroebnerError> {
    let basis = buchberger(gens, order)?;
    Ok(normal_form(f, &basis).is_zero())
}

/// Moves the listed variables to the front of the variable list.
fn front_load<F: Field>(gens: &[MultiPoly<F>], front: &[usize]) -> Result<(Vars, Vec<MultiPoly<F>>), GroebnerError> {
    let (_, vars) = common_ring(gens)?;
    let names = vars.names();
    let mut order: Vec<String> = front.iter().map(|&i| names[i].clone()).collect();
    order.extend(names.iter().enumerate().filter(|(i, _)| !front.contains(i)).map(|(_, n)| n.clone()));
    let new_vars = Vars::new(&order);
    let moved = gens.iter().map(|g| g.rename_into(&new_vars)).collect::<Result<Vec<_>, _>>()?;
    Ok((new_vars, moved))
}

/// Elimination ideal `(gens) ∩ k[remaining variables]`, expressed in the
/// original variable list.
pub fn eliminate<F: Field>(gens: &[MultiPoly<F>], remove: &[&str]) -> Result<IdealBasis<F>, GroebnerError> {
    eliminate_with_deadline(gens, remove, None)
}

pub fn eliminate_with_deadline<F: Field>(
    gens: &[MultiPoly<F>],
    remove: &[&str],
    deadline: Option<Instant>,
) -> Result<IdealBasis<F>, GroebnerError> {
    let (_, vars) = common_ring(gens)?;
    let idx = remove
        .iter()
        .map(|n| vars.index_of(n).ok_or_else(|| PolyError::UnknownVariable(n.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let (moved_vars, moved) = front_load(gens, &idx)?;
    let order = MonomialOrder::Block { split: idx.len() };
    let basis = buchberger_with_deadline(&moved, &order, deadline)?;
    let kept: Vec<usize> = (0..idx.len()).collect();
    let generators = basis
        .generators
        .iter()
        .filter(|g| g.degree_in_vars(&kept).unwrap_or(0) == 0)
        .map(|g| g.rename_into(&vars))
        .collect::<Result<Vec<_>, _>>()?;
    debug_assert!(moved_vars.len() == vars.len());
    Ok(IdealBasis { generators, order: MonomialOrder::DegRevLex, reduced: false })
}

fn fresh_name(vars: &Vars, stem: &str) -> String {
    (0..).map(|k| format!("{stem}{k}")).find(|n| vars.index_of(n).is_none()).unwrap()
}

/// Generators of `I ∩ J` from `t I + (1 - t) J` with `t` eliminated.
pub fn ideal_intersection<F: Field>(
    i_gens: &[MultiPoly<F>],
    j_gens: &[MultiPoly<F>],
    deadline: Option<Instant>,
) -> Result<IdealBasis<F>, GroebnerError> {
    let (field, vars) = common_ring(&[i_gens, j_gens].concat())?;
    if vars.len() >= crate::poly::MAX_VARS {
        return Err(GroebnerError::TooManyVariables);
    }
    let t_name = fresh_name(&vars, "_t");
    let ext = vars.extended(&[t_name.as_str()]);
    let t = MultiPoly::var(&field, &ext, vars.len());
    let one_minus_t = MultiPoly::one(&field, &ext).sub(&t);
    let mut gens = Vec::new();
    for g in i_gens {
        gens.push(t.mul(&g.extend_vars(&ext)));
    }
    for g in j_gens {
        gens.push(one_minus_t.mul(&g.extend_vars(&ext)));
    }
    let basis = eliminate_with_deadline(&gens, &[t_name.as_str()], deadline)?;
    let generators = basis.generators.iter().map(|g| g.rename_into(&vars)).collect::<Result<Vec<_>, _>>()?;
    Ok(IdealBasis { generators, order: MonomialOrder::DegRevLex, reduced: false })
}

/// Whether `g` vanishes on the variety of `gens`, i.e. `1` lies in
/// `(gens) + (1 - t g)` for a fresh variable `t`.
pub fn radical_membership<F: Field>(
    g: &MultiPoly<F>,
    gens: &[MultiPoly<F>],
    deadline: Option<Instant>,
) -> Result<bool, GroebnerError> {
    let (field, vars) = common_ring(gens)?;
    if vars.len() >= crate::poly::MAX_VARS {
        return Err(GroebnerError::TooManyVariables);
    }
    let t_name = fresh_name(&vars, "_t");
    let ext = vars.extended(&[t_name.as_str()]);
    let t = MultiPoly::var(&field, &ext, vars.len());
    let mut all: Vec<MultiPoly<F>> = gens.iter().map(|p| p.extend_vars(&ext)).collect();
    all.push(MultiPoly::one(&field, &ext).sub(&t.mul(&g.extend_vars(&ext))));
    let basis = buchberger_with_deadline(&all, &MonomialOrder::DegRevLex, deadline)?;
    Ok(basis.is_unit())
}
