use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Rationals};
use crate::invariants::AlgebraicGroupAction;
use crate::poly::{MonomialOrder, RationalFunction, Table, VarRole, VarTable};

/// Name of the `j`-th jet coordinate over the dependent variable `y`.
pub fn jet_name(y: &str, j: usize) -> String {
    format!("{y}_{j}")
}

/// Coordinates `(x, y, y_1, ..., y_k)` of the jet space `J^k`, possibly
/// preceded by parameters that the total derivative treats as constants.
#[derive(Debug, Clone)]
pub struct JetContext {
    table: Table,
    x: usize,
    y: usize,
    order: usize,
}

impl JetContext {
    pub fn new(x: &str, y: &str, order: usize) -> Result<Self> {
        Self::with_parameters(&[], x, y, order)
    }

    pub fn with_parameters(
        params: &[(String, VarRole)],
        x: &str,
        y: &str,
        order: usize,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::mismatch("jet order must be at least 1"));
        }
        let mut vars: Vec<(String, VarRole)> = params.to_vec();
        vars.push((x.to_string(), VarRole::Source));
        vars.push((y.to_string(), VarRole::Source));
        vars.extend((1..=order).map(|j| (jet_name(y, j), VarRole::Jet)));
        let table = VarTable::new(vars)?;
        let x = params.len();
        Ok(JetContext {
            table,
            x,
            y: x + 1,
            order,
        })
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn x_name(&self) -> &str {
        self.table.name(self.x)
    }

    pub fn y_name(&self) -> &str {
        self.table.name(self.y)
    }

    /// Index of `y_j`; `jet(0)` is `y`.
    pub fn jet(&self, j: usize) -> usize {
        assert!(j <= self.order, "jet index beyond the context order");
        self.y + j
    }

    /// Highest `j` such that `f` depends on `y_j` (0 if none).
    pub fn differential_order(&self, f: &RationalFunction) -> usize {
        f.vars_used()
            .iter()
            .filter(|&&v| v > self.y)
            .map(|&v| v - self.y)
            .max()
            .unwrap_or(0)
    }

    /// `D f = f_x + y_1 f_y + Σ y_(j+1) f_(y_j)`.
    pub fn total_derivative(&self, f: &RationalFunction) -> Result<RationalFunction> {
        let f = f.embed(&self.table)?;
        let ord = self.differential_order(&f);
        if ord >= self.order {
            return Err(Error::JetOrderExceeded {
                needed: ord + 1,
                available: self.order,
            });
        }
        let mut acc = f.derivative(self.x);
        for j in 0..=ord {
            let d = f.derivative(self.jet(j));
            if d.is_zero() {
                continue;
            }
            let next = RationalFunction::var(&self.table, self.jet(j + 1));
            acc = acc.checked_add(&d.checked_mul(&next)?)?;
        }
        Ok(acc)
    }
}

/// Prolongation of a planar action to `J^k`: `Y_1 = DY/DX`,
/// `Y_(j+1) = D Y_j / DX`.
pub fn prolong_action(act: &AlgebraicGroupAction, order: usize) -> Result<AlgebraicGroupAction> {
    if act.nsource() != 2 {
        return Err(Error::InvalidAction(
            "prolongation needs an action on the plane".into(),
        ));
    }
    let group = act.group_names();
    let sources = act.source_names();
    let targets = act.target_names().to_vec();
    let params: Vec<(String, VarRole)> = group
        .iter()
        .map(|g| (g.clone(), VarRole::GroupParam))
        .collect();
    let ctx = JetContext::with_parameters(&params, &sources[0], &sources[1], order)?;
    let big_x = act.components()[0].embed(ctx.table())?;
    let big_y = act.components()[1].embed(ctx.table())?;
    let dx = ctx.total_derivative(&big_x)?;
    if dx.is_zero() {
        return Err(Error::DegenerateAction);
    }
    let reducer = match act.group_ideal() {
        [] => None,
        g => {
            let g = g
                .iter()
                .map(|p| p.embed(ctx.table()))
                .collect::<Result<Vec<_>>>()?;
            Some(GroebnerBasis::of_polynomials(
                ctx.table(),
                MonomialOrder::internal(ctx.table().len()),
                &g,
            )?)
        }
    };
    let mut comps = vec![big_x, big_y.clone()];
    let mut cur = big_y;
    for _ in 0..order {
        cur = ctx.total_derivative(&cur)?.checked_div(&dx)?;
        comps.push(match &reducer {
            Some(gb) => reduce_on_group(gb, &cur)?,
            None => cur.clone(),
        });
    }
    let mut new_sources = sources.clone();
    let mut new_targets = targets.clone();
    for j in 1..=order {
        new_sources.push(jet_name(&sources[1], j));
        new_targets.push(jet_name(&targets[1], j));
    }
    AlgebraicGroupAction::new(
        &group,
        &new_sources,
        &new_targets,
        act.group_ideal().to_vec(),
        act.identity().to_vec(),
        comps,
        act.inverse().map(|v| v.to_vec()),
    )
}

/// `f` with its numerator reduced modulo the group ideal when that makes
/// it shorter; the result agrees with `f` on the group.
fn reduce_on_group(
    gb: &GroebnerBasis<Rationals>,
    f: &RationalFunction,
) -> Result<RationalFunction> {
    let num = gb.reduce(f.num())?;
    if num.len() >= f.num().len() {
        return Ok(f.clone());
    }
    RationalFunction::new(num, f.den().clone())
}
