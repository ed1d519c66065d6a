use crate::error::{Error, Result};
use crate::groebner::{FractionField, GroebnerBasis, Ideal, QuotientDimension};
use crate::poly::{MonomialOrder, Polynomial, RationalFunction, Table, VarRole, VarTable};

use super::action::AlgebraicGroupAction;

/// Non-constant coefficients of a reduced basis of `I^e`.
#[derive(Debug, Clone)]
pub struct GeneratingInvariantSet {
    pub invariants: Vec<RationalFunction>,
    pub source: GroebnerBasis<FractionField>,
    pub is_rational_section: bool,
    pub degree: Option<usize>,
}

/// Reads the generating invariants off a reduced basis over `Q(z)`. Each
/// coefficient is scaled to a canonical representative of `c*f` and
/// repeated ones are dropped; no further redundancy is removed.
pub fn extract_generating_invariants(
    basis: &GroebnerBasis<FractionField>,
) -> GeneratingInvariantSet {
    let mut invariants: Vec<RationalFunction> = Vec::new();
    for g in basis.elements() {
        for (_, c) in g.terms() {
            if c.is_constant() {
                continue;
            }
            let n = c.normalized_up_to_constant();
            if !invariants.contains(&n) {
                invariants.push(n);
            }
        }
    }
    let degree = match basis.quotient_dimension() {
        QuotientDimension::Finite { dimension, .. } => Some(dimension),
        QuotientDimension::Infinite => None,
    };
    GeneratingInvariantSet {
        invariants,
        source: basis.clone(),
        is_rational_section: degree == Some(1),
        degree,
    }
}

/// Whether `f(α(g, z)) = f(z)` on the group variety, decided by ideal
/// membership after saturating by the action denominators.
pub fn check_invariance(act: &AlgebraicGroupAction, f: &RationalFunction) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::mismatch("invariance test needs a nonzero function"));
    }
    let f = f.embed(act.table())?;
    let pulled = act.pull_back(&f)?;
    let diff = &(pulled.num() * f.den()) - &(f.num() * pulled.den());

    let table = act.table();
    let order = MonomialOrder::internal(table.len());
    let group = Ideal::new(table, act.group_ideal().to_vec())?.groebner(order)?;
    if group.reduce(pulled.den())?.is_zero() && act.saturating_denominator().is_none() {
        return Err(Error::UndefinedOnGroup);
    }
    if diff.is_zero() || group.reduce(&diff)?.is_zero() {
        return Ok(true);
    }
    let delta = match act.saturating_denominator() {
        Some(d) => d,
        None => return Ok(false),
    };
    let mu = table.fresh_name("mu");
    let ext = table.extend([(mu.as_str(), VarRole::Auxiliary)])?;
    let mu_var = Polynomial::var(&ext, table.len());
    let mut gens: Vec<Polynomial> = act
        .group_ideal()
        .iter()
        .map(|g| g.embed(&ext))
        .collect::<Result<_>>()?;
    gens.push(&(&delta.embed(&ext)? * &mu_var) - &Polynomial::one(&ext));
    let sat = Ideal::new(&ext, gens)?.groebner(MonomialOrder::internal(ext.len()))?;
    if sat.reduce(&pulled.den().embed(&ext)?)?.is_zero() {
        return Err(Error::UndefinedOnGroup);
    }
    Ok(sat.reduce(&diff.embed(&ext)?)?.is_zero())
}

/// `f` written in the replacement invariants of a rational cross-section.
#[derive(Debug, Clone)]
pub struct Rewrite {
    /// `f(r_1, ..., r_n)` with `r_i` as formal variables; constant `r_i`
    /// are substituted by their values.
    pub expression: RationalFunction,
    /// `(tag, r_i)` for the non-constant replacement invariants.
    pub tags: Vec<(String, RationalFunction)>,
}

/// Expresses an invariant `f` through the replacement invariants `r_i`
/// of a basis `{Z_i - r_i}` and verifies `f(z) = f(r(z))`.
pub fn rewrite_by_replacement(
    set: &GeneratingInvariantSet,
    f: &RationalFunction,
) -> Result<Rewrite> {
    if !set.is_rational_section {
        return Err(Error::NotInvariantOrNotRational(
            "rewriting needs a cross-section of degree 1".into(),
        ));
    }
    let ring = set.source.ring();
    let params: Table = ring.field().params().clone();
    let n = ring.nvars();
    let mut images: Vec<Option<RationalFunction>> = vec![None; n];
    for g in set.source.elements() {
        let lead = g.leading_monomial().expect("nonzero");
        let v = match lead.pure_power_of() {
            Some(v) if lead.degree() == 1 && g.len() <= 2 => v,
            _ => {
                return Err(Error::NotInvariantOrNotRational(
                    "basis is not of the form Z_i - r_i".into(),
                ))
            }
        };
        let r = match g.terms().get(1) {
            None => RationalFunction::zero(&params),
            Some((m, c)) if m.is_one() => c.neg(),
            Some(_) => {
                return Err(Error::NotInvariantOrNotRational(
                    "basis is not of the form Z_i - r_i".into(),
                ))
            }
        };
        images[v] = Some(r);
    }
    let images: Vec<RationalFunction> = images
        .into_iter()
        .map(|r| {
            r.ok_or_else(|| Error::NotInvariantOrNotRational("a target is not determined".into()))
        })
        .collect::<Result<_>>()?;

    let f = f.embed(&params)?;
    let tag_names: Vec<String> = (0..n)
        .filter(|&i| !images[i].is_constant())
        .map(|i| format!("r{}", i + 1))
        .collect();
    let tag_table = VarTable::with_role(tag_names.iter().cloned(), VarRole::Source)?;
    let mut formal = Vec::with_capacity(n);
    let mut tags = Vec::new();
    let mut k = 0;
    for (i, r) in images.iter().enumerate() {
        if let Some(c) = r.constant_value() {
            formal.push(RationalFunction::constant(&tag_table, c));
        } else {
            formal.push(RationalFunction::var(&tag_table, k));
            tags.push((format!("r{}", i + 1), r.clone()));
            k += 1;
        }
    }
    let expression = f.compose(&formal, &tag_table)?;
    let back = f.compose(&images, &params).map_err(|_| {
        Error::NotInvariantOrNotRational("f is undefined at the replacement invariants".into())
    })?;
    if back != f {
        return Err(Error::NotInvariantOrNotRational(format!(
            "f(z) differs from f(r(z)) = {back}"
        )));
    }
    Ok(Rewrite { expression, tags })
}
