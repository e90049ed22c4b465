use std::cmp::Ordering;
use std::time::Instant;

use crate::arith::Field;
use crate::poly::{Monomial, MultiPoly, Vars};

use super::{GroebnerError, MonomialOrder};

/// Terms sorted in decreasing order for a fixed term order.
#[derive(Clone, Debug)]
pub(crate) struct SortedPoly<E> {
    pub terms: Vec<(Monomial, E)>,
}

impl<E: Clone> SortedPoly<E> {
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }
}

pub(crate) struct Ring<'a, F: Field> {
    pub field: &'a F,
    pub order: &'a MonomialOrder,
    pub nvars: usize,
}

impl<F: Field> Ring<'_, F> {
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, self.nvars)
    }

    pub fn sorted(&self, p: &MultiPoly<F>) -> SortedPoly<F::Elem> {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        SortedPoly { terms }
    }

    pub fn unsorted(&self, p: &SortedPoly<F::Elem>, vars: &Vars) -> MultiPoly<F> {
        MultiPoly::from_terms(self.field, vars, p.terms.iter().cloned())
    }

    pub fn monic(&self, p: &mut SortedPoly<F::Elem>) {
        if let Some((_, lc)) = p.terms.first() {
            if !self.field.is_one(lc) {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                for t in p.terms.iter_mut() {
                    t.1 = self.field.mul(&t.1, &inv);
                }
            }
        }
    }

    /// `a - c * m * b`, by merging.
    fn sub_mul(
        &self,
        a: &[(Monomial, F::Elem)],
        c: &F::Elem,
        m: &Monomial,
        b: &[(Monomial, F::Elem)],
    ) -> Vec<(Monomial, F::Elem)> {
        let f = self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let bm = b.get(j).map(|t| t.0.mul(m));
            let ord = match (a.get(i), bm) {
                (Some(x), Some(y)) => self.cmp(&x.0, &y),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm.unwrap(), f.neg(&f.mul(c, &b[j].1))));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.sub(&a[i].1, &f.mul(c, &b[j].1));
                    if !f.is_zero(&v) {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Full reduction of `p` by the polynomials in `basis` (assumed monic).
    pub fn normal_form(&self, p: &SortedPoly<F::Elem>, basis: &[&SortedPoly<F::Elem>]) -> SortedPoly<F::Elem> {
        let mut rest = p.terms.clone();
        let mut done: Vec<(Monomial, F::Elem)> = Vec::new();
        let mut start = 0;
        while start < rest.len() {
            let (m, c) = rest[start].clone();
            let divisor = basis.iter().find(|g| g.lm().is_some_and(|lm| lm.divides(&m)));
            match divisor {
                Some(g) => {
                    let q = g.lm().unwrap().div(&m).unwrap();
                    let tail = &g.terms[1..];
                    let mut next = self.sub_mul(&rest[start + 1..], &c, &q, tail);
                    rest.truncate(start);
                    rest.append(&mut next);
                }
                None => {
                    done.push((m, c));
                    start += 1;
                }
            }
        }
        SortedPoly { terms: done }
    }

    fn spoly(&self, a: &SortedPoly<F::Elem>, b: &SortedPoly<F::Elem>) -> SortedPoly<F::Elem> {
        let (la, lb) = (a.lm().unwrap(), b.lm().unwrap());
        let l = la.lcm(lb);
        let ma = la.div(&l).unwrap();
        let mb = lb.div(&l).unwrap();
        let shifted: Vec<_> = a.terms[1..].iter().map(|(m, c)| (m.mul(&ma), c.clone())).collect();
        let terms = self.sub_mul(&shifted, &self.field.one(), &mb, &b.terms[1..]);
        SortedPoly { terms }
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger completion with the Gebauer-Möller criteria and the normal
/// selection strategy. Returns the reduced basis as sorted polynomials.
pub(crate) fn complete<F: Field>(
    ring: &Ring<'_, F>,
    gens: Vec<SortedPoly<F::Elem>>,
    deadline: Option<Instant>,
) -> Result<Vec<SortedPoly<F::Elem>>, GroebnerError> {
    let mut store: Vec<SortedPoly<F::Elem>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let insert = |h: SortedPoly<F::Elem>,
                  store: &mut Vec<SortedPoly<F::Elem>>,
                  active: &mut Vec<usize>,
                  pairs: &mut Vec<Pair>| {
        let k = store.len();
        let lh = *h.lm().unwrap();
        store.push(h);
        // new pairs (g, h), pruned by the chain criterion among themselves
        let cands: Vec<(usize, Monomial, bool)> = active
            .iter()
            .map(|&g| {
                let lg = store[g].lm().unwrap();
                (g, lg.lcm(&lh), lg.is_coprime(&lh))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, c) in cands.iter().enumerate() {
            let dominated =
                !c.2 && (cands[idx + 1..].iter().any(|d| d.1.divides(&c.1)) || kept.iter().any(|d| d.1.divides(&c.1)));
            if !dominated {
                kept.push(*c);
            }
        }
        // equal-lcm duplicates: keep one representative
        let mut fresh: Vec<Pair> = Vec::new();
        for (g, l, coprime) in kept {
            if coprime || fresh.iter().any(|p| p.lcm == l) {
                continue;
            }
            fresh.push(Pair { i: g, j: k, lcm: l });
        }
        pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && lh.lcm(store[p.i].lm().unwrap()) != p.lcm
                && lh.lcm(store[p.j].lm().unwrap()) != p.lcm)
        });
        pairs.extend(fresh);
        active.retain(|&g| !lh.divides(store[g].lm().unwrap()));
        active.push(k);
    };

    for mut g in gens {
        if g.terms.is_empty() {
            continue;
        }
        ring.monic(&mut g);
        insert(g, &mut store, &mut active, &mut pairs);
    }
    while !pairs.is_empty() {
        if let Some(d) = deadline {
            if Instant::now() > d {
                return Err(GroebnerError::Timeout);
            }
        }
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (x, y) = (&pairs[a].lcm, &pairs[b].lcm);
                x.degree().cmp(&y.degree()).then_with(|| ring.cmp(x, y))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = ring.spoly(&store[pair.i], &store[pair.j]);
        let basis: Vec<&SortedPoly<F::Elem>> = active.iter().map(|&g| &store[g]).collect();
        let mut h = ring.normal_form(&s, &basis);
        if h.terms.is_empty() {
            continue;
        }
        ring.monic(&mut h);
        if h.lm().is_some_and(|m| m.degree() == 0) {
            // the unit ideal
            return Ok(vec![h]);
        }
        insert(h, &mut store, &mut active, &mut pairs);
    }
    Ok(interreduce(ring, active.into_iter().map(|g| store[g].clone()).collect()))
}

/// Minimalizes and tail-reduces a Gröbner basis; output sorted by leading
/// monomial, largest first.
pub(crate) fn interreduce<F: Field>(ring: &Ring<'_, F>, mut g: Vec<SortedPoly<F::Elem>>) -> Vec<SortedPoly<F::Elem>> {
    g.retain(|p| !p.terms.is_empty());
    g.sort_by(|a, b| ring.cmp(b.lm().unwrap(), a.lm().unwrap()));
    let mut minimal: Vec<SortedPoly<F::Elem>> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let lm = p.lm().unwrap();
        let redundant = g
            .iter()
            .enumerate()
            .any(|(j, q)| j != k && q.lm().unwrap().divides(lm) && (q.lm().unwrap() != lm || j > k));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&SortedPoly<F::Elem>> =
            minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, q)| q).collect();
        let head = minimal[k].terms[0].clone();
        let tail = SortedPoly { terms: minimal[k].terms[1..].to_vec() };
        let mut r = ring.normal_form(&tail, &others);
        r.terms.insert(0, head);
        ring.monic(&mut r);
        out.push(r);
    }
    out
}
