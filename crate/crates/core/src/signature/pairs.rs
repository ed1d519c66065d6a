use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{rat, ratio, BigRational, RationalFunction};

use super::jet::JetContext;

/// Two differential invariants whose restriction to a curve gives its
/// signature.
#[derive(Debug, Clone)]
pub struct ClassifyingPair {
    ctx: JetContext,
    inv1: RationalFunction,
    inv2: RationalFunction,
}

impl ClassifyingPair {
    pub fn new(ctx: JetContext, inv1: RationalFunction, inv2: RationalFunction) -> Result<Self> {
        let inv1 = inv1.embed(ctx.table())?;
        let inv2 = inv2.embed(ctx.table())?;
        if inv1.is_constant() || inv2.is_constant() {
            return Err(Error::mismatch(
                "classifying invariants must be non-constant",
            ));
        }
        if inv1 == inv2 {
            return Err(Error::mismatch("classifying invariants must differ"));
        }
        Ok(ClassifyingPair { ctx, inv1, inv2 })
    }

    pub fn context(&self) -> &JetContext {
        &self.ctx
    }

    pub fn inv1(&self) -> &RationalFunction {
        &self.inv1
    }

    pub fn inv2(&self) -> &RationalFunction {
        &self.inv2
    }

    pub fn orders(&self) -> (usize, usize) {
        (
            self.ctx.differential_order(&self.inv1),
            self.ctx.differential_order(&self.inv2),
        )
    }

    /// Whether the Jacobian of the pair with respect to the jet coordinates
    /// has rank 2 at a random exact point (a few attempts are made to avoid
    /// poles and accidental degeneracy).
    pub fn jacobian_rank_two<R: Rng>(&self, rng: &mut R) -> bool {
        let n = self.ctx.table().len();
        let vars: Vec<usize> = (self.ctx.x()..n).collect();
        let d1: Vec<RationalFunction> = vars.iter().map(|&v| self.inv1.derivative(v)).collect();
        let d2: Vec<RationalFunction> = vars.iter().map(|&v| self.inv2.derivative(v)).collect();
        for _ in 0..8 {
            let point: Vec<BigRational> = (0..n)
                .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
                .collect();
            let r1: Option<Vec<BigRational>> = d1.iter().map(|f| f.evaluate(&point)).collect();
            let r2: Option<Vec<BigRational>> = d2.iter().map(|f| f.evaluate(&point)).collect();
            let (Some(r1), Some(r2)) = (r1, r2) else {
                continue;
            };
            for i in 0..r1.len() {
                for j in i + 1..r1.len() {
                    if !(&r1[i] * &r2[j] - &r1[j] * &r2[i]).is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// `(κ², κ_s)` with `κ² = y_2² / (1 + y_1²)³` and
/// `κ_s = ((1 + y_1²) y_3 - 3 y_1 y_2²) / (1 + y_1²)³`.
pub fn euclidean_classifying_pair() -> ClassifyingPair {
    let ctx = JetContext::new("x", "y", 3).expect("fixed names");
    let t = ctx.table().clone();
    let v = |j: usize| RationalFunction::var(&t, ctx.jet(j));
    let one = RationalFunction::one(&t);
    let w = one.checked_add(&v(1).pow(2).unwrap()).unwrap();
    let w3 = w.pow(3).unwrap();
    let k2 = v(2).pow(2).unwrap().checked_div(&w3).unwrap();
    let ks_num = w
        .checked_mul(&v(3))
        .unwrap()
        .checked_sub(
            &v(1)
                .checked_mul(&v(2).pow(2).unwrap())
                .unwrap()
                .scale(&rat(3)),
        )
        .unwrap();
    let ks = ks_num.checked_div(&w3).unwrap();
    ClassifyingPair::new(ctx, k2, ks).expect("independent pair")
}

/// The Hessian-type expressions `H, T, V` of a binary form of degree `m`
/// and the classifying pair `(T²/H³, V/H²)`, over `(p, q, q_1..q_4)`.
#[derive(Debug, Clone)]
pub struct BinaryFormPair {
    pub pair: ClassifyingPair,
    pub h: RationalFunction,
    pub t: RationalFunction,
    pub v: RationalFunction,
}

pub fn binary_form_classifying_pair(m: usize) -> Result<BinaryFormPair> {
    if m < 3 {
        return Err(Error::UnsupportedDegree(m));
    }
    let ctx = JetContext::new("p", "q", 4)?;
    let tb = ctx.table().clone();
    let q = |j: usize| RationalFunction::var(&tb, ctx.jet(j));
    let mi = m as i64;
    let c = |n: i64, d: i64| ratio(n, d);
    let mul = |fs: &[&RationalFunction]| {
        fs.iter().fold(RationalFunction::one(&tb), |acc, f| {
            acc.checked_mul(f).unwrap()
        })
    };
    let (q0, q1, q2, q3, q4) = (q(0), q(1), q(2), q(3), q(4));

    let h = mul(&[&q0, &q2]).checked_sub(&mul(&[&q1, &q1]).scale(&c(mi - 1, mi)))?;
    let t = mul(&[&q0, &q0, &q3])
        .checked_sub(&mul(&[&q0, &q1, &q2]).scale(&c(3 * (mi - 2), mi)))?
        .checked_add(&mul(&[&q1, &q1, &q1]).scale(&c(2 * (mi - 1) * (mi - 2), mi * mi)))?;
    let v = mul(&[&q0, &q0, &q0, &q4])
        .checked_sub(&mul(&[&q0, &q0, &q1, &q3]).scale(&c(4 * (mi - 3), mi)))?
        .checked_add(&mul(&[&q0, &q1, &q1, &q2]).scale(&c(6 * (mi - 2) * (mi - 3), mi * mi)))?
        .checked_sub(
            &mul(&[&q1, &q1, &q1, &q1]).scale(&c(3 * (mi - 1) * (mi - 2) * (mi - 3), mi * mi * mi)),
        )?;
    let t1 = t.pow(2)?.checked_div(&h.pow(3)?)?;
    let t2 = v.checked_div(&h.pow(2)?)?;
    Ok(BinaryFormPair {
        pair: ClassifyingPair::new(ctx, t1, t2)?,
        h,
        t,
        v,
    })
}
