use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::poly::{rat, Monomial, Polynomial, RationalFunction, VarRole, VarTable};

use super::action::AlgebraicGroupAction;

/// Matrix group acting linearly on the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixGroup {
    GL2,
    SL2,
}

pub const MATRIX_PARAMS: [&str; 4] = ["a11", "a12", "a21", "a22"];

fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

/// The action on the coefficients of `f = Σ binom(m,i) c_i x^i y^(m-i)`
/// given by `f ↦ f∘g⁻¹`, optionally together with the linear action
/// `(X, Y) = g(x, y)` on the plane (for covariants).
pub fn induce_coefficient_action(
    m: usize,
    group: MatrixGroup,
    with_plane: bool,
) -> Result<AlgebraicGroupAction> {
    let coeffs: Vec<String> = (0..=m).map(|i| format!("c{i}")).collect();
    let targets_c: Vec<String> = (0..=m).map(|i| format!("C{i}")).collect();
    let work = VarTable::new(
        MATRIX_PARAMS
            .iter()
            .map(|n| (n.to_string(), VarRole::GroupParam))
            .chain(["x", "y"].iter().map(|n| (n.to_string(), VarRole::Source)))
            .chain(coeffs.iter().map(|n| (n.clone(), VarRole::Source))),
    )?;
    let v = |i: usize| Polynomial::var(&work, i);
    let (a11, a12, a21, a22, x, y) = (v(0), v(1), v(2), v(3), v(4), v(5));
    let det = &(&a11 * &a22) - &(&a12 * &a21);

    // adj(g) (x, y); g⁻¹ = adj(g)/det.
    let u = &(&a22 * &x) - &(&a12 * &y);
    let w = &(&a11 * &y) - &(&a21 * &x);
    let mut transformed = Polynomial::zero(&work);
    for i in 0..=m {
        let c = v(6 + i);
        let b = BigRational::from_integer(binomial(m, i));
        let term = &(&u.pow(i as u32) * &w.pow((m - i) as u32)) * &c;
        transformed = &transformed + &term.scale(&b);
    }
    let by_x = transformed.coefficients_in(4);
    let scale_den = match group {
        MatrixGroup::SL2 => Polynomial::one(&work),
        MatrixGroup::GL2 => det.pow(m as u32),
    };
    let mut components = Vec::new();
    if with_plane {
        components.push(RationalFunction::from_poly(&(&a11 * &x) + &(&a12 * &y)));
        components.push(RationalFunction::from_poly(&(&a21 * &x) + &(&a22 * &y)));
    }
    for j in 0..=m {
        let cj = by_x
            .get(j)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&work));
        let cj = cj.div_monomial(&Monomial::var(work.len(), 5, (m - j) as u32));
        let b = BigRational::from_integer(binomial(m, j)).recip();
        components.push(RationalFunction::new(cj.scale(&b), scale_den.clone())?);
    }

    let mut sources: Vec<String> = Vec::new();
    let mut targets: Vec<String> = Vec::new();
    if with_plane {
        sources.extend(["x".to_string(), "y".to_string()]);
        targets.extend(["X".to_string(), "Y".to_string()]);
    }
    sources.extend(coeffs.iter().cloned());
    targets.extend(targets_c);

    let (ideal, inverse) = match group {
        MatrixGroup::SL2 => {
            let inv = [&a22, &-&a12, &-&a21, &a11]
                .iter()
                .map(|p| RationalFunction::from_poly((*p).clone()))
                .collect();
            (vec![&det - &Polynomial::one(&work)], inv)
        }
        MatrixGroup::GL2 => {
            let inv = [&a22, &-&a12, &-&a21, &a11]
                .iter()
                .map(|p| RationalFunction::new((*p).clone(), det.clone()))
                .collect::<Result<Vec<_>>>()?;
            (Vec::new(), inv)
        }
    };
    let group_names: Vec<String> = MATRIX_PARAMS.iter().map(|s| s.to_string()).collect();
    AlgebraicGroupAction::new(
        &group_names,
        &sources,
        &targets,
        ideal,
        vec![rat(1), rat(0), rat(0), rat(1)],
        components,
        Some(inverse),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_gl2_component() {
        let act = induce_coefficient_action(2, MatrixGroup::GL2, false).unwrap();
        let c2 = &act.components()[2];
        let t = act.table();
        let expected = RationalFunction::new(
            crate::frontend::parse_polynomial("a21^2*c0 - 2*a21*a22*c1 + a22^2*c2", t).unwrap(),
            crate::frontend::parse_polynomial("(a11*a22 - a12*a21)^2", t).unwrap(),
        )
        .unwrap();
        assert_eq!(*c2, expected);
    }

    #[test]
    fn identity_fixes_coefficients() {
        let act = induce_coefficient_action(3, MatrixGroup::SL2, true).unwrap();
        let at = act.specialize(&[rat(1), rat(0), rat(0), rat(1)]).unwrap();
        let src = act.source_table().unwrap();
        for (i, c) in at.iter().enumerate() {
            assert_eq!(*c, RationalFunction::var(&src, i));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 0), BigInt::from(1));
    }
}
