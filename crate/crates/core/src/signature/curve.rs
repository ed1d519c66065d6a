use crate::error::{Error, Result};
use crate::invariants::AlgebraicGroupAction;
use crate::poly::{BigRational, RationalFunction, Table};

use super::jet::JetContext;

/// A rational planar curve `t ↦ (x(t), y(t))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametricCurve {
    x: RationalFunction,
    y: RationalFunction,
}

impl ParametricCurve {
    /// Both coordinates must live on the same one-variable table.
    pub fn new(x: RationalFunction, y: RationalFunction) -> Result<Self> {
        if x.table().len() != 1 {
            return Err(Error::mismatch(
                "a parametrized curve needs exactly one parameter",
            ));
        }
        let y = y.embed(x.table())?;
        Ok(ParametricCurve { x, y })
    }

    pub fn param_table(&self) -> &Table {
        self.x.table()
    }

    pub fn param_name(&self) -> &str {
        self.x.table().name(0)
    }

    pub fn x(&self) -> &RationalFunction {
        &self.x
    }

    pub fn y(&self) -> &RationalFunction {
        &self.y
    }

    /// Substitutes `t` by a rational function of a (possibly new) parameter.
    pub fn reparametrize(&self, t: &RationalFunction) -> Result<Self> {
        let images = [t.clone()];
        let target = t.table();
        ParametricCurve::new(
            self.x.compose(&images, target)?,
            self.y.compose(&images, target)?,
        )
    }

    /// Image under a planar action at the group element `g`.
    pub fn transform(&self, act: &AlgebraicGroupAction, g: &[BigRational]) -> Result<Self> {
        if act.nsource() != 2 {
            return Err(Error::InvalidAction(
                "curves transform under planar actions".into(),
            ));
        }
        let comps = act.specialize(g)?;
        let images = [self.x.clone(), self.y.clone()];
        let t = self.param_table();
        ParametricCurve::new(comps[0].compose(&images, t)?, comps[1].compose(&images, t)?)
    }
}

/// `(y_1(t), ..., y_k(t))` with `y_1 = y'/x'` and `y_(j+1) = y_j'/x'`.
pub fn lift_curve(c: &ParametricCurve, order: usize) -> Result<Vec<RationalFunction>> {
    let dx = c.x.derivative(0);
    if dx.is_zero() {
        return Err(Error::VerticalCurve);
    }
    let mut out = Vec::with_capacity(order);
    let mut cur = c.y.clone();
    for _ in 0..order {
        cur = cur.derivative(0).checked_div(&dx)?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// Restriction of a jet function to the lift of `c`. A denominator that
/// vanishes identically on the curve is reported as an exceptional curve.
pub fn restrict_to_curve(
    ctx: &JetContext,
    f: &RationalFunction,
    c: &ParametricCurve,
) -> Result<RationalFunction> {
    let f = f.embed(ctx.table())?;
    let lift = lift_curve(c, ctx.order())?;
    let t = c.param_table();
    let mut images = Vec::with_capacity(ctx.table().len());
    for i in 0..ctx.table().len() {
        let im = if i == ctx.x() {
            c.x.clone()
        } else if i == ctx.y() {
            c.y.clone()
        } else if i > ctx.y() {
            lift[i - ctx.y() - 1].clone()
        } else if f.vars_used().contains(&i) {
            return Err(Error::mismatch(format!(
                "jet function depends on the parameter {}",
                ctx.table().name(i)
            )));
        } else {
            RationalFunction::zero(t)
        };
        images.push(im);
    }
    f.compose(&images, t).map_err(|e| match e {
        Error::DivisionByZero => Error::ExceptionalCurve(format!(
            "the denominator of {f} vanishes identically on the curve"
        )),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse_rational;
    use crate::poly::{VarRole, VarTable};

    fn t() -> Table {
        VarTable::with_role(["t"], VarRole::CurveParam).unwrap()
    }

    #[test]
    fn parabola_lift() {
        let c = ParametricCurve::new(
            parse_rational("t^2", &t()).unwrap(),
            parse_rational("t^3", &t()).unwrap(),
        )
        .unwrap();
        let l = lift_curve(&c, 1).unwrap();
        assert_eq!(l[0].to_string(), "3*t/2");
    }

    #[test]
    fn line_lift() {
        let c = ParametricCurve::new(
            parse_rational("t", &t()).unwrap(),
            parse_rational("t", &t()).unwrap(),
        )
        .unwrap();
        let l = lift_curve(&c, 3).unwrap();
        assert!(l[0].is_one() && l[1].is_zero() && l[2].is_zero());
    }

    #[test]
    fn vertical() {
        let c = ParametricCurve::new(
            parse_rational("1", &t()).unwrap(),
            parse_rational("t", &t()).unwrap(),
        )
        .unwrap();
        assert_eq!(lift_curve(&c, 1), Err(Error::VerticalCurve));
    }
}
