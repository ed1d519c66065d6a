use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::render::rational_to_string;
use num_traits::Zero;

use crate::poly::univariate::{self, interpolate, resultant};
use crate::poly::{
    lcm, rat, squarefree_part, BigRational, Monomial, Polynomial, RationalFunction, Table, VarRole,
    VarTable,
};

use super::curve::{restrict_to_curve, ParametricCurve};
use super::pairs::{binary_form_classifying_pair, ClassifyingPair};

pub const SIGNATURE_COORDS: [&str; 2] = ["T1", "T2"];

pub fn signature_table() -> Table {
    VarTable::with_role(SIGNATURE_COORDS, VarRole::SignatureCoord).expect("fixed names")
}

/// Parametrized signature `(σ₁(t), σ₂(t))` with its normalized implicit
/// equation in `(T1, T2)`, or the point it collapses to.
#[derive(Debug, Clone, PartialEq)]
pub struct SignatureCurve {
    pub sigma1: RationalFunction,
    pub sigma2: RationalFunction,
    pub implicit: Option<Polynomial>,
    pub degenerate: bool,
}

impl SignatureCurve {
    pub fn from_parametrization(
        sigma1: RationalFunction,
        sigma2: RationalFunction,
    ) -> Result<Self> {
        let sigma2 = sigma2.embed(sigma1.table())?;
        let degenerate = sigma1.is_constant() && sigma2.is_constant();
        let implicit = if degenerate {
            None
        } else {
            Some(implicitize(&sigma1, &sigma2)?)
        };
        Ok(SignatureCurve {
            sigma1,
            sigma2,
            implicit,
            degenerate,
        })
    }

    pub fn param_table(&self) -> &Table {
        self.sigma1.table()
    }

    /// The point of a degenerate signature.
    pub fn point(&self) -> Option<(BigRational, BigRational)> {
        if !self.degenerate {
            return None;
        }
        Some((self.sigma1.constant_value()?, self.sigma2.constant_value()?))
    }
}

/// `(σ₁, σ₂)`: the pair restricted to the lift of the curve.
pub fn signature_parametrization(
    curve: &ParametricCurve,
    pair: &ClassifyingPair,
) -> Result<(RationalFunction, RationalFunction)> {
    let ctx = pair.context();
    let s1 = restrict_to_curve(ctx, pair.inv1(), curve)?;
    let s2 = restrict_to_curve(ctx, pair.inv2(), curve)?;
    Ok((s1, s2))
}

pub fn curve_signature(curve: &ParametricCurve, pair: &ClassifyingPair) -> Result<SignatureCurve> {
    let (s1, s2) = signature_parametrization(curve, pair)?;
    SignatureCurve::from_parametrization(s1, s2)
}

/// Signature of the binary form of degree `m` whose inhomogeneous
/// counterpart is `phi(p)`, a polynomial in a single variable.
pub fn form_signature(m: usize, phi: &Polynomial) -> Result<SignatureCurve> {
    if phi.table().len() != 1 {
        return Err(Error::mismatch("phi must be a polynomial in one variable"));
    }
    if phi.total_degree() as usize > m {
        return Err(Error::mismatch(format!(
            "phi has degree {} > {m}",
            phi.total_degree()
        )));
    }
    let bf = binary_form_classifying_pair(m)?;
    let t = phi.table();
    let curve = ParametricCurve::new(
        RationalFunction::var(t, 0),
        RationalFunction::from_poly(phi.clone()),
    )?;
    let ctx = bf.pair.context();
    if restrict_to_curve(ctx, &bf.h, &curve)?.is_zero() {
        return Err(Error::ExceptionalCurve(
            "the Hessian vanishes identically".into(),
        ));
    }
    curve_signature(&curve, &bf.pair)
}

/// Normalized generator of `⟨d₁T1 - n₁, d₂T2 - n₂, μ·d - 1⟩ ∩ Q[T1, T2]`
/// with `d` the squarefree part of `lcm(d₁, d₂)`: squarefree, primitive
/// and with positive leading coefficient under degrevlex `T1 > T2`.
///
/// Computed from `Res_t(d₁T1 - n₁, d₂T2 - n₂)` by evaluation and
/// interpolation. The resultant is the generator times factors in `T1`
/// alone or `T2` alone (poles and points at infinity), which are removed
/// as contents.
pub fn implicitize(sigma1: &RationalFunction, sigma2: &RationalFunction) -> Result<Polynomial> {
    let src = sigma1.table();
    let sigma2 = sigma2.embed(src)?;
    if src.len() != 1 {
        return Err(Error::mismatch("implicitization needs a single parameter"));
    }
    if sigma1.is_constant() && sigma2.is_constant() {
        return Err(Error::NotACurve);
    }
    let sig = signature_table();
    for (i, s) in [sigma1, &sigma2].into_iter().enumerate() {
        if let Some(c) = s.constant_value() {
            let line = &Polynomial::var(&sig, i) - &Polynomial::constant(&sig, c);
            return Ok(line.primitive());
        }
    }
    let a = implicit_factor(sigma1);
    let b = implicit_factor(&sigma2);
    let (da, db) = (a.len() - 1, b.len() - 1);
    // Res has degree <= db in T1 and <= da in T2; nodes avoid the roots
    // of the leading coefficients so that degrees do not drop.
    let n1 = nodes(&a[da], db + 1);
    let n2 = nodes(&b[db], da + 1);
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n2.len());
    for v in &n2 {
        let bv: Vec<BigRational> = b.iter().map(|(p, q)| p * v - q).collect();
        let vals: Vec<BigRational> = n1
            .iter()
            .map(|u| {
                let au: Vec<BigRational> = a.iter().map(|(p, q)| p * u - q).collect();
                resultant(&au, &bv)
            })
            .collect();
        rows.push(interpolate(&n1, &vals));
    }
    let mut terms = Vec::new();
    for i in 0..=db {
        let vals: Vec<BigRational> = rows.iter().map(|r| r[i].clone()).collect();
        for (j, c) in interpolate(&n2, &vals).into_iter().enumerate() {
            if !c.is_zero() {
                terms.push((Monomial::from_exponents(vec![i as u32, j as u32]), c));
            }
        }
    }
    let mut r = Polynomial::from_terms(&sig, terms);
    if r.is_zero() {
        return Err(Error::NotACurve);
    }
    for v in 0..2 {
        let other = 1 - v;
        let cont = r
            .coefficients_in(other)
            .iter()
            .fold(Vec::new(), |acc, c| univariate::gcd(&acc, &to_dense(c, v)));
        if cont.len() > 1 {
            r = r.exact_div(&from_dense(&sig, v, &cont))?;
        }
        if !r.has_var(other) {
            return Err(Error::NotACurve);
        }
    }
    if is_squarefree(&r) {
        Ok(r.primitive())
    } else {
        Ok(squarefree_part(&r).primitive())
    }
}

fn to_dense(p: &Polynomial, var: usize) -> Vec<BigRational> {
    p.coefficients_in(var)
        .iter()
        .map(|c| c.constant_value().expect("univariate"))
        .collect()
}

fn from_dense(table: &Table, var: usize, c: &[BigRational]) -> Polynomial {
    let terms = c
        .iter()
        .enumerate()
        .map(|(k, c)| (Monomial::var(table.len(), var, k as u32), c.clone()));
    Polynomial::from_terms(table, terms)
}

/// Sufficient test: one of a few specializations `T1 = u` keeps the degree in `T2`
/// and is squarefree. Needs `r` free of factors in `T1` alone.
fn is_squarefree(r: &Polynomial) -> bool {
    let e = r.degree_in(1) as usize;
    let lead = &r.coefficients_in(1)[e];
    for u in (1i64..12).map(rat) {
        if lead.evaluate(&[u.clone(), BigRational::zero()]).is_zero() {
            continue;
        }
        let f = to_dense(&r.substitute_value(0, &u), 1);
        if univariate::gcd(&f, &univariate::derivative(&f)).len() == 1 {
            return true;
        }
    }
    false
}

/// Coefficients `(dₖ, nₖ)` of `d·T - n` in the parameter.
fn implicit_factor(s: &RationalFunction) -> Vec<(BigRational, BigRational)> {
    let (d, n) = (to_dense(s.den(), 0), to_dense(s.num(), 0));
    let len = d.len().max(n.len());
    let at = |v: &[BigRational], k: usize| v.get(k).cloned().unwrap_or_else(BigRational::zero);
    (0..len).map(|k| (at(&d, k), at(&n, k))).collect()
}

/// `count` integers where `p·T - q` does not vanish.
fn nodes(lead: &(BigRational, BigRational), count: usize) -> Vec<BigRational> {
    let (p, q) = lead;
    (0i64..)
        .map(rat)
        .filter(|u| !(p * u - q).is_zero())
        .take(count)
        .collect()
}

/// The same generator computed by Gröbner elimination of `t` and `μ`.
/// Slow for high degrees; kept as an independent check.
pub fn implicitize_by_elimination(
    sigma1: &RationalFunction,
    sigma2: &RationalFunction,
) -> Result<Polynomial> {
    let src = sigma1.table();
    let sigma2 = sigma2.embed(src)?;
    if sigma1.is_constant() && sigma2.is_constant() {
        return Err(Error::NotACurve);
    }
    let mut names: Vec<(String, VarRole)> = src
        .names()
        .iter()
        .map(|n| (n.clone(), VarRole::CurveParam))
        .collect();
    let mu = src.fresh_name("mu");
    names.push((mu, VarRole::Auxiliary));
    for c in SIGNATURE_COORDS {
        if src.contains(c) {
            return Err(Error::mismatch(format!(
                "parameter clashes with signature coordinate {c}"
            )));
        }
        names.push((c.to_string(), VarRole::SignatureCoord));
    }
    let table = VarTable::new(names)?;
    let np = src.len();
    let v = |i: usize| Polynomial::var(&table, i);
    let (t1, t2, muv) = (v(np + 1), v(np + 2), v(np));
    let e = |p: &Polynomial| p.embed(&table);
    let mut gens = vec![
        &(&e(sigma1.den())? * &t1) - &e(sigma1.num())?,
        &(&e(sigma2.den())? * &t2) - &e(sigma2.num())?,
    ];
    let d = squarefree_part(&lcm(sigma1.den(), sigma2.den())?);
    if !d.is_constant() {
        gens.push(&(&e(&d)? * &muv) - &Polynomial::one(&table));
    }
    let drop: Vec<usize> = (0..=np).collect();
    let elim = Ideal::new(&table, gens)?.eliminate(&drop, None)?;
    let gens = elim.generators();
    let sig = signature_table();
    let g = match gens {
        [g] => g.embed(&sig)?,
        _ => return Err(Error::NotACurve),
    };
    Ok(squarefree_part(&g).primitive())
}

/// Equality of signatures as Zariski closures: normalized implicit
/// equations, or points for degenerate signatures.
pub fn signatures_equal(a: &SignatureCurve, b: &SignatureCurve) -> bool {
    match (a.degenerate, b.degenerate) {
        (true, true) => a.point() == b.point(),
        (false, false) => a.implicit == b.implicit,
        _ => false,
    }
}

/// One sample of a signature parametrization; `None` at a pole.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePoint {
    pub t: BigRational,
    pub value: Option<(BigRational, BigRational)>,
}

pub fn sample_signature(s: &SignatureCurve, ts: &[BigRational]) -> Vec<SamplePoint> {
    ts.iter()
        .map(|t| {
            let point = [t.clone()];
            let value = match (s.sigma1.evaluate(&point), s.sigma2.evaluate(&point)) {
                (Some(a), Some(b)) => Some((a, b)),
                _ => None,
            };
            SamplePoint {
                t: t.clone(),
                value,
            }
        })
        .collect()
}

/// CSV with header `t,sigma1,sigma2`; poles become warnings.
pub fn samples_to_csv(samples: &[SamplePoint]) -> (String, Vec<String>) {
    let mut csv = String::from("t,sigma1,sigma2\n");
    let mut warnings = Vec::new();
    for s in samples {
        match &s.value {
            Some((a, b)) => csv.push_str(&format!(
                "{},{},{}\n",
                rational_to_string(&s.t),
                rational_to_string(a),
                rational_to_string(b)
            )),
            None => warnings.push(format!(
                "pole at t = {}, sample skipped",
                rational_to_string(&s.t)
            )),
        }
    }
    (csv, warnings)
}
