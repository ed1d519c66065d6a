use crate::error::{Error, Result};
use crate::groebner::{
    to_fraction_field_poly, FractionField, GPoly, GroebnerBasis, Ideal, PolyRing, QuotientDimension,
};
use crate::poly::{
    BlockKind, MonomialOrder, Polynomial, RationalFunction, Table, VarRole, VarTable,
};

use super::action::AlgebraicGroupAction;

/// A cross-section given by an ideal `K` in the target coordinates.
#[derive(Debug, Clone)]
pub struct CrossSection {
    table: Table,
    generators: Vec<Polynomial>,
    declared_codim: Option<usize>,
}

impl CrossSection {
    /// `generators` may live on any table whose variables are target names
    /// of `act`.
    pub fn new(act: &AlgebraicGroupAction, generators: Vec<Polynomial>) -> Result<Self> {
        let table = act.target_table()?;
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.is_zero() {
                return Err(Error::mismatch("cross-section generators must be nonzero"));
            }
            gens.push(g.embed(&table)?);
        }
        Ok(CrossSection {
            table,
            generators: gens,
            declared_codim: None,
        })
    }

    pub fn with_codim(mut self, s: usize) -> Self {
        self.declared_codim = Some(s);
        self
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn declared_codim(&self) -> Option<usize> {
        self.declared_codim
    }
}

/// The action ideal `A` in `Q[g, μ, z, Z]`.
#[derive(Debug, Clone)]
pub struct ActionIdeal {
    pub ideal: Ideal,
    pub group: Vec<usize>,
    pub mu: Option<usize>,
    pub sources: Vec<usize>,
    pub targets: Vec<usize>,
}

impl ActionIdeal {
    pub fn table(&self) -> &Table {
        self.ideal.table()
    }

    /// `g` and `μ`, the variables eliminated to reach the graph.
    pub fn eliminated(&self) -> Vec<usize> {
        let mut v = self.group.clone();
        v.extend(self.mu);
        v
    }
}

pub fn build_action_ideal(act: &AlgebraicGroupAction) -> Result<ActionIdeal> {
    let delta = act.saturating_denominator();
    let group = act.group_names();
    let sources = act.source_names();
    let mut names: Vec<(String, VarRole)> = group
        .iter()
        .map(|n| (n.clone(), VarRole::GroupParam))
        .collect();
    let mu_name = delta.as_ref().map(|_| {
        let taken = VarTable::with_role(
            group
                .iter()
                .chain(&sources)
                .chain(act.target_names())
                .cloned(),
            VarRole::Source,
        )
        .expect("names are distinct");
        taken.fresh_name("mu")
    });
    if let Some(m) = &mu_name {
        names.push((m.clone(), VarRole::Auxiliary));
    }
    names.extend(sources.iter().map(|n| (n.clone(), VarRole::Source)));
    names.extend(
        act.target_names()
            .iter()
            .map(|n| (n.clone(), VarRole::Target)),
    );
    let table = VarTable::new(names)?;

    let ng = group.len();
    let mu = mu_name.as_ref().map(|_| ng);
    let off = ng + usize::from(mu.is_some());
    let src: Vec<usize> = (off..off + sources.len()).collect();
    let tgt: Vec<usize> = (off + sources.len()..table.len()).collect();

    let mut gens = Vec::new();
    for (i, c) in act.components().iter().enumerate() {
        let num = c.num().embed(&table)?;
        let den = c.den().embed(&table)?;
        let z = Polynomial::var(&table, tgt[i]);
        gens.push(&(&den * &z) - &num);
    }
    if let (Some(d), Some(m)) = (&delta, mu) {
        let d = d.embed(&table)?;
        gens.push(&(&d * &Polynomial::var(&table, m)) - &Polynomial::one(&table));
    }
    for g in act.group_ideal() {
        gens.push(g.embed(&table)?);
    }
    Ok(ActionIdeal {
        ideal: Ideal::new(&table, gens)?,
        group: (0..ng).collect(),
        mu,
        sources: src,
        targets: tgt,
    })
}

/// The graph ideal `O = A ∩ Q[z, Z]`, as a reduced degrevlex basis.
pub fn graph_ideal(act: &AlgebraicGroupAction) -> Result<Ideal> {
    let a = build_action_ideal(act)?;
    a.ideal.eliminate(&a.eliminated(), None)
}

/// Lex with the last target ranked highest.
pub fn default_target_order(n: usize) -> MonomialOrder {
    MonomialOrder::lex((0..n).rev().collect()).expect("permutation")
}

/// Reduced Gröbner basis of `I^e` in `Q(z)[Z]` together with the
/// polynomials in `z` whose vanishing invalidates the specialization.
#[derive(Debug, Clone)]
pub struct GraphSectionBasis {
    pub basis: GroebnerBasis<FractionField>,
    pub non_generic_locus: Vec<Polynomial>,
    /// Basis of `(A + K) ∩ Q[z, Z]` before extension; `O` itself when `K = 0`.
    pub elimination: Vec<Polynomial>,
}

impl GraphSectionBasis {
    pub fn quotient_dimension(&self) -> QuotientDimension {
        self.basis.quotient_dimension()
    }

    pub fn render(&self) -> Vec<String> {
        self.basis.render()
    }
}

/// `O^e`: the graph ideal extended to `Q(z)[Z]`.
pub fn extended_graph_basis(
    act: &AlgebraicGroupAction,
    order: Option<&MonomialOrder>,
) -> Result<GraphSectionBasis> {
    section_basis(act, &[], order)
}

/// `I^e = ((A + K) ∩ Q[z, Z]) Q(z)[Z]` for the target order `order`
/// (default [`default_target_order`]).
pub fn graph_section_basis(
    act: &AlgebraicGroupAction,
    cs: &CrossSection,
    order: Option<&MonomialOrder>,
) -> Result<GraphSectionBasis> {
    section_basis(act, cs.generators(), order)
}

fn section_basis(
    act: &AlgebraicGroupAction,
    section: &[Polynomial],
    order: Option<&MonomialOrder>,
) -> Result<GraphSectionBasis> {
    let n = act.nsource();
    let z_order = match order {
        Some(o) if o.nvars() == n => o.clone(),
        Some(_) => {
            return Err(Error::mismatch(
                "target order must rank exactly the target variables",
            ))
        }
        None => default_target_order(n),
    };
    let a = build_action_ideal(act)?;
    let table = a.table().clone();
    let mut gens = a.ideal.generators().to_vec();
    for k in section {
        gens.push(k.embed(&table)?);
    }

    // [g, μ] >> [Z] >> [z]: the part free of g and μ is a basis of the
    // elimination ideal, and Z >> z makes it a basis over Q(z) as well.
    let mut blocks = vec![(BlockKind::DegRevLex, a.eliminated())];
    for (kind, b) in z_order.blocks() {
        blocks.push((*kind, b.iter().map(|&i| a.targets[i]).collect()));
    }
    blocks.push((BlockKind::DegRevLex, a.sources.clone()));
    let gb = GroebnerBasis::of_polynomials(&table, MonomialOrder::product(blocks)?, &gens)?;
    if gb.is_unit() {
        return Err(Error::EmptySection);
    }
    let elim = a.eliminated();
    let kept: Vec<Polynomial> = gb
        .polynomials()
        .into_iter()
        .filter(|p| elim.iter().all(|&v| !p.has_var(v)))
        .collect();

    let params = act.source_table()?;
    let ring = PolyRing::new(
        FractionField::new(params.clone()),
        act.target_table()?,
        z_order,
    )?;
    let mut locus: Vec<Polynomial> = Vec::new();
    let mut elems: Vec<GPoly<RationalFunction>> = Vec::new();
    for p in &kept {
        let f = to_fraction_field_poly(&ring, p)?;
        if let Some(lc) = f.leading_coefficient() {
            note_locus(&mut locus, lc.num());
        }
        elems.push(f);
    }
    let basis = GroebnerBasis::from_groebner_elements(ring, elems);
    if basis.is_unit() {
        return Err(Error::EmptySection);
    }
    for g in basis.elements() {
        for (_, c) in g.terms() {
            note_locus(&mut locus, c.den());
        }
    }
    Ok(GraphSectionBasis {
        basis,
        non_generic_locus: locus,
        elimination: kept,
    })
}

fn note_locus(locus: &mut Vec<Polynomial>, p: &Polynomial) {
    if p.is_constant() {
        return;
    }
    let p = p.primitive();
    if !locus.contains(&p) {
        locus.push(p);
    }
}

/// Degree `d` of the cross-section: number of points on a generic orbit.
pub fn cross_section_degree(act: &AlgebraicGroupAction, cs: &CrossSection) -> Result<usize> {
    let b = graph_section_basis(act, cs, None)?;
    match b.quotient_dimension() {
        QuotientDimension::Finite { dimension, .. } => Ok(dimension),
        QuotientDimension::Infinite => Err(Error::NotACrossSection),
    }
}
