use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::render::{join_terms, monomial_to_string};
use crate::poly::{BigRational, Monomial, MonomialOrder, Polynomial, Table};

use super::field::{Field, Rationals};

/// A polynomial whose terms are sorted in descending order for the monomial
/// order of the ring it belongs to.
#[derive(Debug, Clone, PartialEq)]
pub struct GPoly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E> GPoly<E> {
    pub fn zero() -> Self {
        GPoly { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, E)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&E> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }
}

/// A polynomial ring `F[vars]` with a fixed monomial order.
#[derive(Debug, Clone)]
pub struct PolyRing<F: Field> {
    field: F,
    table: Table,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, table: Table, order: MonomialOrder) -> Result<Self> {
        if order.nvars() != table.len() {
            return Err(Error::mismatch(
                "monomial order and variable table differ in size",
            ));
        }
        Ok(PolyRing {
            field,
            table,
            order,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.table.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> GPoly<F::Elem> {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        GPoly { terms: out }
    }

    pub fn constant(&self, c: F::Elem) -> GPoly<F::Elem> {
        self.from_terms([(Monomial::one(self.nvars()), c)])
    }

    pub fn var(&self, i: usize) -> GPoly<F::Elem> {
        self.from_terms([(Monomial::var(self.nvars(), i, 1), self.field.one())])
    }

    pub fn add(&self, a: &GPoly<F::Elem>, b: &GPoly<F::Elem>) -> GPoly<F::Elem> {
        self.combine(&a.terms, &b.terms, |c| c.clone())
    }

    pub fn sub(&self, a: &GPoly<F::Elem>, b: &GPoly<F::Elem>) -> GPoly<F::Elem> {
        self.combine(&a.terms, &b.terms, |c| self.field.neg(c))
    }

    fn combine(
        &self,
        a: &[(Monomial, F::Elem)],
        b: &[(Monomial, F::Elem)],
        map_b: impl Fn(&F::Elem) -> F::Elem,
    ) -> GPoly<F::Elem> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), map_b(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&a[i].1, &map_b(&b[j].1));
                    if !self.field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), map_b(c))));
        GPoly { terms: out }
    }

    pub fn scale(&self, p: &GPoly<F::Elem>, c: &F::Elem) -> GPoly<F::Elem> {
        if self.field.is_zero(c) {
            return GPoly::zero();
        }
        GPoly {
            terms: p
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, p: &GPoly<F::Elem>, m: &Monomial, c: &F::Elem) -> GPoly<F::Elem> {
        if self.field.is_zero(c) {
            return GPoly::zero();
        }
        GPoly {
            terms: p
                .terms
                .iter()
                .map(|(pm, a)| (pm.mul(m), self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, a: &GPoly<F::Elem>, b: &GPoly<F::Elem>) -> GPoly<F::Elem> {
        let mut acc = GPoly::zero();
        for (m, c) in &b.terms {
            acc = self.add(&acc, &self.mul_term(a, m, c));
        }
        acc
    }

    pub fn monic(&self, p: &GPoly<F::Elem>) -> GPoly<F::Elem> {
        match p.leading_coefficient() {
            None => GPoly::zero(),
            Some(lc) if self.field.is_one(lc) => p.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc);
                self.scale(p, &inv)
            }
        }
    }

    /// `a - c * m * g`, where `a` is a sorted term slice.
    fn sub_mul_term_slice(
        &self,
        a: &[(Monomial, F::Elem)],
        g: &[(Monomial, F::Elem)],
        m: &Monomial,
        c: &F::Elem,
    ) -> Vec<(Monomial, F::Elem)> {
        let mut out = Vec::with_capacity(a.len() + g.len());
        let mut i = 0;
        for (gm, gc) in g {
            let tm = gm.mul(m);
            while i < a.len() && self.cmp(&a[i].0, &tm) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            let tc = self.field.mul(gc, c);
            if i < a.len() && a[i].0 == tm {
                let v = self.field.sub(&a[i].1, &tc);
                if !self.field.is_zero(&v) {
                    out.push((tm, v));
                }
                i += 1;
            } else {
                out.push((tm, self.field.neg(&tc)));
            }
        }
        out.extend(a[i..].iter().cloned());
        out
    }

    /// Full reduction of `p` modulo `divisors`, trying divisors in the given
    /// order for every term.
    pub fn normal_form(&self, p: &GPoly<F::Elem>, divisors: &[&GPoly<F::Elem>]) -> GPoly<F::Elem> {
        let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
        let mut cur: Vec<(Monomial, F::Elem)> = p.terms.clone();
        let mut start = 0;
        while start < cur.len() {
            let (m, c) = &cur[start];
            let hit = divisors.iter().find_map(|g| {
                let (gm, gc) = g.terms.first()?;
                gm.quotient_of(m).map(|q| (*g, q, gc))
            });
            match hit {
                None => {
                    rem.push(cur[start].clone());
                    start += 1;
                }
                Some((g, q, gc)) => {
                    let factor = self.field.div(c, gc);
                    cur = self.sub_mul_term_slice(&cur[start + 1..], &g.terms[1..], &q, &factor);
                    start = 0;
                }
            }
        }
        GPoly { terms: rem }
    }

    /// S-polynomial of two nonzero polynomials.
    pub fn s_polynomial(&self, f: &GPoly<F::Elem>, g: &GPoly<F::Elem>) -> GPoly<F::Elem> {
        let (fm, fc) = &f.terms[0];
        let (gm, gc) = &g.terms[0];
        let l = fm.lcm(gm);
        let qf = fm.quotient_of(&l).expect("lcm is a multiple");
        let qg = gm.quotient_of(&l).expect("lcm is a multiple");
        let a = self.mul_term(
            &GPoly {
                terms: f.terms[1..].to_vec(),
            },
            &qf,
            &self.field.inv(fc),
        );
        let b = self.mul_term(
            &GPoly {
                terms: g.terms[1..].to_vec(),
            },
            &qg,
            &self.field.inv(gc),
        );
        self.sub(&a, &b)
    }

    pub fn render(&self, p: &GPoly<F::Elem>) -> String {
        join_terms(p.terms.iter().map(|(m, c)| {
            let mono = if m.is_one() {
                None
            } else {
                Some(monomial_to_string(m, &self.table))
            };
            self.field.render_term(c, mono.as_deref())
        }))
    }
}

impl PolyRing<Rationals> {
    pub fn over_rationals(table: Table, order: MonomialOrder) -> Result<Self> {
        PolyRing::new(Rationals, table, order)
    }

    pub fn from_polynomial(&self, p: &Polynomial) -> Result<GPoly<BigRational>> {
        let p = p.embed(&self.table)?;
        Ok(self.from_terms(p.into_terms()))
    }

    pub fn to_polynomial(&self, p: &GPoly<BigRational>) -> Polynomial {
        Polynomial::from_terms(&self.table, p.terms.iter().cloned())
    }
}
