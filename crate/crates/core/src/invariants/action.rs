use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{BigRational, Polynomial, RationalFunction, Table, VarRole, VarTable};

/// A rational action `Z = α(g, z)` of the group variety `V(G)` on affine
/// space. Group parameters come first in the table, followed by the source
/// coordinates.
#[derive(Debug, Clone)]
pub struct AlgebraicGroupAction {
    table: Table,
    ngroup: usize,
    targets: Vec<String>,
    group_ideal: Vec<Polynomial>,
    identity: Vec<BigRational>,
    components: Vec<RationalFunction>,
    inverse: Option<Vec<RationalFunction>>,
}

impl AlgebraicGroupAction {
    /// Builds and validates an action. `group_ideal`, `components` and
    /// `inverse` may live on any table whose names are among the group and
    /// source names.
    pub fn new<S: AsRef<str>>(
        group: &[S],
        sources: &[S],
        targets: &[S],
        group_ideal: Vec<Polynomial>,
        identity: Vec<BigRational>,
        components: Vec<RationalFunction>,
        inverse: Option<Vec<RationalFunction>>,
    ) -> Result<Self> {
        let group: Vec<String> = group.iter().map(|s| s.as_ref().to_string()).collect();
        let sources: Vec<String> = sources.iter().map(|s| s.as_ref().to_string()).collect();
        let targets: Vec<String> = targets.iter().map(|s| s.as_ref().to_string()).collect();
        if sources.is_empty() {
            return Err(Error::InvalidAction("no source coordinates".into()));
        }
        if targets.len() != sources.len() || components.len() != sources.len() {
            return Err(Error::InvalidAction(format!(
                "{} source coordinates, {} targets, {} components",
                sources.len(),
                targets.len(),
                components.len()
            )));
        }
        if identity.len() != group.len() {
            return Err(Error::InvalidAction(
                "identity must assign every group parameter".into(),
            ));
        }
        let table = VarTable::new(
            group
                .iter()
                .map(|n| (n.clone(), VarRole::GroupParam))
                .chain(sources.iter().map(|n| (n.clone(), VarRole::Source))),
        )
        .map_err(|e| Error::InvalidAction(e.to_string()))?;
        for t in &targets {
            if table.contains(t) {
                return Err(Error::InvalidAction(format!(
                    "target `{t}` clashes with another variable"
                )));
            }
        }
        let lift = |e: Error| Error::InvalidAction(e.to_string());
        let group_ideal = group_ideal
            .iter()
            .map(|p| p.embed(&table))
            .collect::<Result<Vec<_>>>()
            .map_err(lift)?;
        let components = components
            .iter()
            .map(|c| c.embed(&table))
            .collect::<Result<Vec<_>>>()
            .map_err(lift)?;
        let inverse = match inverse {
            None => None,
            Some(inv) => {
                if inv.len() != group.len() {
                    return Err(Error::InvalidAction(
                        "inverse map needs one entry per group parameter".into(),
                    ));
                }
                Some(
                    inv.iter()
                        .map(|c| c.embed(&table))
                        .collect::<Result<Vec<_>>>()
                        .map_err(lift)?,
                )
            }
        };
        let act = AlgebraicGroupAction {
            table,
            ngroup: group.len(),
            targets,
            group_ideal,
            identity,
            components,
            inverse,
        };
        act.validate()?;
        Ok(act)
    }

    fn validate(&self) -> Result<()> {
        let mut point = vec![BigRational::zero(); self.table.len()];
        point[..self.ngroup].clone_from_slice(&self.identity);
        for g in &self.group_ideal {
            if g.vars_used().iter().any(|&v| v >= self.ngroup) {
                return Err(Error::InvalidAction(
                    "group ideal involves source coordinates".into(),
                ));
            }
            if !g.evaluate(&point).is_zero() {
                return Err(Error::InvalidAction(format!(
                    "identity is not a zero of {g}"
                )));
            }
        }
        if let Some(inv) = &self.inverse {
            if inv
                .iter()
                .any(|c| c.vars_used().iter().any(|&v| v >= self.ngroup))
            {
                return Err(Error::InvalidAction(
                    "inverse map involves source coordinates".into(),
                ));
            }
        }
        let at_e = self.specialize(&self.identity)?;
        let src = self.source_table()?;
        for (i, c) in at_e.iter().enumerate() {
            if *c != RationalFunction::var(&src, i) {
                return Err(Error::InvalidAction(format!(
                    "identity does not act trivially on {}",
                    src.name(i)
                )));
            }
        }
        Ok(())
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn ngroup(&self) -> usize {
        self.ngroup
    }

    pub fn nsource(&self) -> usize {
        self.table.len() - self.ngroup
    }

    pub fn group_names(&self) -> Vec<String> {
        self.table.names()[..self.ngroup].to_vec()
    }

    pub fn source_names(&self) -> Vec<String> {
        self.table.names()[self.ngroup..].to_vec()
    }

    pub fn target_names(&self) -> &[String] {
        &self.targets
    }

    pub fn group_ideal(&self) -> &[Polynomial] {
        &self.group_ideal
    }

    pub fn identity(&self) -> &[BigRational] {
        &self.identity
    }

    pub fn components(&self) -> &[RationalFunction] {
        &self.components
    }

    pub fn inverse(&self) -> Option<&[RationalFunction]> {
        self.inverse.as_deref()
    }

    pub fn source_table(&self) -> Result<Table> {
        self.table
            .select(&(self.ngroup..self.table.len()).collect::<Vec<_>>())
    }

    pub fn group_table(&self) -> Result<Table> {
        self.table.select(&(0..self.ngroup).collect::<Vec<_>>())
    }

    pub fn target_table(&self) -> Result<Table> {
        VarTable::with_role(self.targets.iter().cloned(), VarRole::Target)
    }

    /// Components with the group parameters set to `g`, over the source
    /// table.
    pub fn specialize(&self, g: &[BigRational]) -> Result<Vec<RationalFunction>> {
        if g.len() != self.ngroup {
            return Err(Error::mismatch(
                "group element has the wrong number of parameters",
            ));
        }
        let src = self.source_table()?;
        let images: Vec<RationalFunction> = (0..self.table.len())
            .map(|i| {
                if i < self.ngroup {
                    RationalFunction::constant(&src, g[i].clone())
                } else {
                    RationalFunction::var(&src, i - self.ngroup)
                }
            })
            .collect();
        self.components
            .iter()
            .map(|c| c.compose(&images, &src))
            .collect()
    }

    /// `f(α(g, z))` over the action table for `f` in the source coordinates.
    pub fn pull_back(&self, f: &RationalFunction) -> Result<RationalFunction> {
        let f = f.embed(&self.table)?;
        if f.vars_used().iter().any(|&v| v < self.ngroup) {
            return Err(Error::mismatch(
                "function must only involve source coordinates",
            ));
        }
        let images: Vec<RationalFunction> = (0..self.table.len())
            .map(|i| {
                if i < self.ngroup {
                    RationalFunction::var(&self.table, i)
                } else {
                    self.components[i - self.ngroup].clone()
                }
            })
            .collect();
        f.compose(&images, &self.table)
    }

    /// Distinct non-constant component denominators, in component order.
    pub fn denominators(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for c in &self.components {
            let d = c.den();
            if !d.is_constant() && !out.contains(d) {
                out.push(d.clone());
            }
        }
        out
    }

    /// The polynomial `δ` inverted by the auxiliary variable: squarefree
    /// part of the product of the distinct denominators, or `None` when
    /// every component is a polynomial.
    pub fn saturating_denominator(&self) -> Option<Polynomial> {
        let dens = self.denominators();
        if dens.is_empty() {
            return None;
        }
        let mut prod = Polynomial::one(&self.table);
        for d in &dens {
            prod = &prod * d;
        }
        Some(crate::poly::squarefree_part(&prod).primitive())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn table(names: &[&str]) -> Table {
        VarTable::with_role(names.iter().copied(), VarRole::Source).unwrap()
    }

    fn scaling() -> AlgebraicGroupAction {
        let t = table(&["a", "b", "x", "y"]);
        let v = |i| Polynomial::var(&t, i);
        let g = &(&v(0) * &v(1)) - &Polynomial::one(&t);
        let comps = vec![
            RationalFunction::from_poly(&v(0) * &v(2)),
            RationalFunction::from_poly(&v(0) * &v(3)),
        ];
        AlgebraicGroupAction::new(
            &["a", "b"],
            &["x", "y"],
            &["X", "Y"],
            vec![g],
            vec![rat(1), rat(1)],
            comps,
            None,
        )
        .unwrap()
    }

    #[test]
    fn scaling_is_valid() {
        let act = scaling();
        assert_eq!(act.ngroup(), 2);
        assert!(act.saturating_denominator().is_none());
        let at = act.specialize(&[rat(2), rat(1) / rat(2)]).unwrap();
        assert_eq!(at[0].to_string(), "2*x");
    }

    #[test]
    fn bad_identity_is_rejected() {
        let t = table(&["a", "b", "x", "y"]);
        let v = |i| Polynomial::var(&t, i);
        let g = &(&v(0) * &v(1)) - &Polynomial::one(&t);
        let comps = vec![
            RationalFunction::from_poly(&v(0) * &v(2)),
            RationalFunction::from_poly(&v(0) * &v(3)),
        ];
        let err = AlgebraicGroupAction::new(
            &["a", "b"],
            &["x", "y"],
            &["X", "Y"],
            vec![g],
            vec![rat(2), rat(1)],
            comps,
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)));
    }

    #[test]
    fn pull_back_of_ratio() {
        let act = scaling();
        let src = act.source_table().unwrap();
        let f = RationalFunction::new(Polynomial::var(&src, 1), Polynomial::var(&src, 0)).unwrap();
        let pulled = act.pull_back(&f).unwrap();
        assert_eq!(pulled.to_string(), "y/x");
    }
}
