use crate::error::{Error, Result};
use crate::poly::{BigRational, Monomial, MonomialOrder, Polynomial, RationalFunction, Table};

use super::buchberger::{interreduce, is_groebner, reduced_basis};
use super::field::{Field, FractionField, Rationals};
use super::ring::{GPoly, PolyRing};

/// A reduced Gröbner basis together with its ring.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    elements: Vec<GPoly<F::Elem>>,
}

/// Size of `k[vars]/I` as a vector space over the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite {
        dimension: usize,
        standard_monomials: Vec<Monomial>,
    },
    Infinite,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn compute(ring: PolyRing<F>, gens: &[GPoly<F::Elem>]) -> Self {
        let elements = reduced_basis(&ring, gens);
        GroebnerBasis { ring, elements }
    }

    /// Reduced basis from elements already known to form a Gröbner basis.
    pub fn from_groebner_elements(ring: PolyRing<F>, elems: Vec<GPoly<F::Elem>>) -> Self {
        let mut elems: Vec<GPoly<F::Elem>> = elems.into_iter().filter(|g| !g.is_zero()).collect();
        if elems.iter().any(|g| g.is_constant()) {
            let one = ring.constant(ring.field().one());
            return GroebnerBasis {
                ring,
                elements: vec![one],
            };
        }
        elems
            .sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        let mut minimal: Vec<GPoly<F::Elem>> = Vec::new();
        for g in elems {
            let lm = g.leading_monomial().unwrap();
            if !minimal
                .iter()
                .any(|h| h.leading_monomial().unwrap().divides(lm))
            {
                minimal.push(g);
            }
        }
        let elements = interreduce(&ring, minimal);
        GroebnerBasis { ring, elements }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn elements(&self) -> &[GPoly<F::Elem>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    pub fn normal_form(&self, p: &GPoly<F::Elem>) -> GPoly<F::Elem> {
        let divs: Vec<&GPoly<F::Elem>> = self.elements.iter().collect();
        self.ring.normal_form(p, &divs)
    }

    pub fn contains(&self, p: &GPoly<F::Elem>) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_groebner(&self) -> bool {
        is_groebner(&self.ring, &self.elements)
    }

    pub fn render(&self) -> Vec<String> {
        self.elements.iter().map(|g| self.ring.render(g)).collect()
    }

    pub fn quotient_dimension(&self) -> QuotientDimension {
        standard_monomials(self.ring.nvars(), &self.leading_monomials())
    }
}

/// Enumerates the monomials outside the monomial ideal generated by `lms`.
pub fn standard_monomials(nvars: usize, lms: &[Monomial]) -> QuotientDimension {
    let mut bounds = vec![None; nvars];
    for m in lms {
        if m.is_one() {
            return QuotientDimension::Finite {
                dimension: 0,
                standard_monomials: Vec::new(),
            };
        }
        if let Some(v) = m.pure_power_of() {
            let e = m.exp(v);
            bounds[v] = Some(bounds[v].map_or(e, |b: u32| b.min(e)));
        }
    }
    if bounds.iter().any(Option::is_none) {
        return QuotientDimension::Infinite;
    }
    let bounds: Vec<u32> = bounds.into_iter().map(Option::unwrap).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::from_exponents(exps.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        let mut k = 0;
        loop {
            if k == nvars {
                out.sort_by(crate::poly::monomial::cmp_internal);
                return QuotientDimension::Finite {
                    dimension: out.len(),
                    standard_monomials: out,
                };
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

impl GroebnerBasis<Rationals> {
    pub fn of_polynomials(
        table: &Table,
        order: MonomialOrder,
        gens: &[Polynomial],
    ) -> Result<Self> {
        let ring = PolyRing::over_rationals(table.clone(), order)?;
        let gens = gens
            .iter()
            .map(|g| ring.from_polynomial(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::compute(ring, &gens))
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements
            .iter()
            .map(|g| self.ring.to_polynomial(g))
            .collect()
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        let g = self.ring.from_polynomial(p)?;
        Ok(self.ring.to_polynomial(&self.normal_form(&g)))
    }

    pub fn contains_polynomial(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }
}

/// An ideal of `Q[vars]` given by generators.
#[derive(Debug, Clone)]
pub struct Ideal {
    table: Table,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(table: &Table, generators: Vec<Polynomial>) -> Result<Self> {
        let generators = generators
            .iter()
            .map(|g| g.embed(table))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal {
            table: table.clone(),
            generators,
        })
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner(&self, order: MonomialOrder) -> Result<GroebnerBasis<Rationals>> {
        GroebnerBasis::of_polynomials(&self.table, order, &self.generators)
    }

    /// `I ∩ Q[kept]`, where `kept` are the variables not in `drop`. The
    /// result lives in the table restricted to the kept variables and its
    /// generators form the reduced basis for `keep_blocks` (degrevlex on
    /// the kept variables when `None`).
    pub fn eliminate(
        &self,
        drop: &[usize],
        keep_order: Option<Vec<(crate::poly::BlockKind, Vec<usize>)>>,
    ) -> Result<Ideal> {
        let n = self.table.len();
        let kept: Vec<usize> = (0..n).filter(|v| !drop.contains(v)).collect();
        let mut blocks = vec![(crate::poly::BlockKind::DegRevLex, drop.to_vec())];
        match keep_order {
            Some(b) => blocks.extend(b),
            None => blocks.push((crate::poly::BlockKind::DegRevLex, kept.clone())),
        }
        let order = MonomialOrder::product(blocks)?;
        let gb = self.groebner(order)?;
        let sub = self.table.select(&kept)?;
        let gens = gb
            .polynomials()
            .into_iter()
            .filter(|p| drop.iter().all(|&v| !p.has_var(v)))
            .map(|p| p.embed(&sub))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&sub, gens)
    }

    pub fn eliminate_by_names(&self, drop: &[&str]) -> Result<Ideal> {
        let idx = drop
            .iter()
            .map(|n| self.table.require(n))
            .collect::<Result<Vec<_>>>()?;
        self.eliminate(&idx, None)
    }
}

/// Splits a polynomial over `z ∪ Z` into one over `Q(z)[Z]`. `coeff_table`
/// holds `z`, `ring.table()` holds `Z`, names resolve the split.
pub fn to_fraction_field_poly(
    ring: &PolyRing<FractionField>,
    p: &Polynomial,
) -> Result<GPoly<RationalFunction>> {
    let src = p.table();
    let params = ring.field().params().clone();
    let mains = ring.table().clone();
    let mut to_param = vec![None; src.len()];
    let mut to_main = vec![None; src.len()];
    for i in 0..src.len() {
        if let Some(k) = mains.index_of(src.name(i)) {
            to_main[i] = Some(k);
        } else if let Some(k) = params.index_of(src.name(i)) {
            to_param[i] = Some(k);
        }
    }
    let mut terms: Vec<(Monomial, RationalFunction)> = Vec::new();
    for (m, c) in p.terms() {
        let mut zm = vec![0u32; params.len()];
        let mut big_m = vec![0u32; mains.len()];
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            match (to_main[i], to_param[i]) {
                (Some(k), _) => big_m[k] = e,
                (None, Some(k)) => zm[k] = e,
                _ => {
                    return Err(Error::DomainMismatch(format!(
                        "variable {} is neither a coefficient nor a ring variable",
                        src.name(i)
                    )))
                }
            }
        }
        let coeff = Polynomial::monomial(&params, Monomial::from_exponents(zm), c.clone());
        terms.push((
            Monomial::from_exponents(big_m),
            RationalFunction::from_poly(coeff),
        ));
    }
    Ok(ring.from_terms(terms))
}

/// Rational coefficients of a constant-coefficient fraction-field polynomial
/// converted back, if all coefficients lie in `Q`.
pub fn constant_coefficients(p: &GPoly<RationalFunction>) -> Option<Vec<(Monomial, BigRational)>> {
    p.terms()
        .iter()
        .map(|(m, c)| c.constant_value().map(|v| (m.clone(), v)))
        .collect()
}
