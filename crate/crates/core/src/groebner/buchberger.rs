use crate::poly::Monomial;

use super::field::Field;
use super::ring::{GPoly, PolyRing};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<'r, F: Field> {
    ring: &'r PolyRing<F>,
    polys: Vec<GPoly<F::Elem>>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'r, F: Field> State<'r, F> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i]
            .leading_monomial()
            .expect("basis elements are nonzero")
    }

    fn reduce(&self, p: &GPoly<F::Elem>) -> GPoly<F::Elem> {
        let divisors: Vec<&GPoly<F::Elem>> = self.active.iter().map(|&k| &self.polys[k]).collect();
        self.ring.normal_form(p, &divisors)
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let si = self.sugar[i] + lcm.degree() - self.lm(i).degree();
        let sj = self.sugar[j] + lcm.degree() - self.lm(j).degree();
        si.max(sj)
    }

    /// Gebauer-Möller update after adding the polynomial with index `h`.
    fn update(&mut self, h: usize) {
        let lh = self.lm(h).clone();
        let cands: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, self.lm(g).lcm(&lh)))
            .collect();

        let mut keep = vec![false; cands.len()];
        for (k, (g, l)) in cands.iter().enumerate() {
            if self.lm(*g).coprime(&lh) {
                keep[k] = true;
                continue;
            }
            let dominated = cands.iter().enumerate().any(|(k2, (_, l2))| {
                if k2 == k {
                    return false;
                }
                let later_or_kept = k2 > k || keep[k2];
                later_or_kept && l2.divides(l) && (l2 != l || k2 < k)
            });
            keep[k] = !dominated;
        }
        let new_pairs: Vec<Pair> = cands
            .iter()
            .zip(&keep)
            .filter(|((g, _), &k)| k && !self.lm(*g).coprime(&lh))
            .map(|((g, l), _)| Pair {
                i: *g,
                j: h,
                lcm: l.clone(),
                sugar: self.pair_sugar(*g, h, l),
            })
            .collect();

        let lms: Vec<Monomial> = (0..self.polys.len()).map(|k| self.lm(k).clone()).collect();
        self.pairs.retain(|p| {
            !lh.divides(&p.lcm) || lms[p.i].lcm(&lh) == p.lcm || lms[p.j].lcm(&lh) == p.lcm
        });
        self.pairs.extend(new_pairs);

        self.active.retain(|&g| !lh.divides(&lms[g]));
        self.active.push(h);
    }

    fn insert(&mut self, p: GPoly<F::Elem>, sugar: u32) {
        self.polys.push(self.ring.monic(&p));
        self.sugar.push(sugar);
        let h = self.polys.len() - 1;
        self.update(h);
    }

    fn select(&mut self) -> Option<Pair> {
        let ring = self.ring;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| ring.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`: monic elements
/// sorted by leading monomial, ascending.
pub fn reduced_basis<F: Field>(ring: &PolyRing<F>, gens: &[GPoly<F::Elem>]) -> Vec<GPoly<F::Elem>> {
    let mut inputs: Vec<&GPoly<F::Elem>> = gens.iter().filter(|g| !g.is_zero()).collect();
    inputs.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let mut st = State {
        ring,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in inputs {
        let h = st.reduce(g);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![ring.constant(ring.field().one())];
        }
        let s = h.total_degree();
        st.insert(h, s);
    }

    while let Some(pair) = st.select() {
        let s = ring.s_polynomial(&st.polys[pair.i], &st.polys[pair.j]);
        let h = st.reduce(&s);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![ring.constant(ring.field().one())];
        }
        st.insert(h, pair.sugar);
    }

    let minimal: Vec<GPoly<F::Elem>> = st.active.iter().map(|&k| st.polys[k].clone()).collect();
    interreduce(ring, minimal)
}

/// Turns a minimal basis into the reduced one.
pub(crate) fn interreduce<F: Field>(
    ring: &PolyRing<F>,
    mut basis: Vec<GPoly<F::Elem>>,
) -> Vec<GPoly<F::Elem>> {
    basis.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut out: Vec<GPoly<F::Elem>> = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&GPoly<F::Elem>> = basis
            .iter()
            .enumerate()
            .filter(|&(k2, _)| k2 != k)
            .map(|(_, g)| g)
            .collect();
        let g = &basis[k];
        let head = ring.from_terms([g.terms()[0].clone()]);
        let tail = ring.from_terms(g.terms()[1..].iter().cloned());
        let reduced = ring.add(&head, &ring.normal_form(&tail, &others));
        out.push(ring.monic(&reduced));
    }
    out
}

/// Whether `basis` is a Gröbner basis: every S-polynomial reduces to zero.
pub fn is_groebner<F: Field>(ring: &PolyRing<F>, basis: &[GPoly<F::Elem>]) -> bool {
    let divs: Vec<&GPoly<F::Elem>> = basis.iter().collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = ring.s_polynomial(&basis[i], &basis[j]);
            if !ring.normal_form(&s, &divs).is_zero() {
                return false;
            }
        }
    }
    true
}
