//! Multivariate gcd over the rationals.
//!
//! Primitive subresultant PRS, recursing on the highest-ranked variable
//! present. Contents with respect to the main variable are computed by the
//! same routine on polynomials with one variable fewer, so the recursion
//! bottoms out at constants.

use num_traits::One;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::vars::check_same;
use crate::error::{Error, Result};

/// Gcd normalized to an integer-primitive polynomial with positive leading
/// coefficient. `gcd(f, 0)` is the normalized `f`.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_same(f.table(), g.table())?;
    if f.is_zero() && g.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    Ok(gcd_unchecked(f, g))
}

/// Gcd of nonzero-or-zero operands over one table; panics only on two zeros.
pub(crate) fn gcd_unchecked(f: &Polynomial, g: &Polynomial) -> Polynomial {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => panic!("gcd(0, 0)"),
        (true, false) => g.primitive(),
        (false, true) => f.primitive(),
        (false, false) => gcd_nonzero(f, g),
    }
}

pub fn lcm(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        check_same(f.table(), g.table())?;
        return Ok(Polynomial::zero(f.table()));
    }
    let d = gcd(f, g)?;
    Ok((f * g).exact_div(&d)?.primitive())
}

/// Squarefree part of `f`, normalized like [`gcd`].
pub fn squarefree_part(f: &Polynomial) -> Polynomial {
    if f.is_constant() {
        return if f.is_zero() {
            f.clone()
        } else {
            Polynomial::one(f.table())
        };
    }
    let mut d = f.clone();
    for v in f.vars_used() {
        if d.is_constant() {
            break;
        }
        d = gcd_unchecked(&d, &f.derivative(v));
    }
    f.exact_div(&d).expect("gcd divides f").primitive()
}

fn gcd_nonzero(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let table = f.table().clone();
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(&table);
    }
    let mf = f.monomial_content();
    let mg = g.monomial_content();
    let mono = mf.gcd(&mg);
    let f = f.div_monomial(&mf).primitive();
    let g = g.div_monomial(&mg).primitive();
    let mono_poly = Polynomial::monomial(&table, mono, One::one());
    if f.is_constant() || g.is_constant() {
        return mono_poly;
    }
    if f == g {
        return (&mono_poly * &f).primitive();
    }
    let core = gcd_primitive(&f, &g);
    (&mono_poly * &core).primitive()
}

/// Both inputs nonzero and free of monomial factors.
fn gcd_primitive(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let table = f.table().clone();
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(&table);
    }
    let v = match (f.vars_used().first(), g.vars_used().first()) {
        (Some(&a), Some(&b)) => a.min(b),
        _ => return Polynomial::one(&table),
    };
    let (fv, gv) = (f.has_var(v), g.has_var(v));
    if !fv {
        let cg = content_in(g, v);
        return gcd_nonzero(f, &cg);
    }
    if !gv {
        let cf = content_in(f, v);
        return gcd_nonzero(&cf, g);
    }
    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let pf = f.exact_div(&cf).expect("content divides");
    let pg = g.exact_div(&cg).expect("content divides");
    let c = gcd_nonzero(&cf, &cg);
    let h = subresultant_gcd(&pf, &pg, v);
    let h = if h.has_var(v) {
        let ch = content_in(&h, v);
        h.exact_div(&ch).expect("content divides")
    } else {
        Polynomial::one(&table)
    };
    (&c * &h).primitive()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let mut acc: Option<Polynomial> = None;
    let mut coeffs: Vec<Polynomial> = p
        .coefficients_in(v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    // smallest first tends to reach 1 quickly
    coeffs.sort_by_key(|c| c.len());
    for c in coeffs {
        acc = Some(match acc {
            None => c.primitive(),
            Some(a) => gcd_nonzero(&a, &c),
        });
        if acc.as_ref().is_some_and(|a| a.is_constant()) {
            return Polynomial::one(p.table());
        }
    }
    acc.unwrap_or_else(|| Polynomial::one(p.table()))
}

type Dense = Vec<Polynomial>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn deg(p: &Dense) -> usize {
    p.len() - 1
}

/// Pseudo-remainder of `a` by `b`; `b` must be nonzero.
fn prem(a: &Dense, b: &Dense) -> Dense {
    let db = deg(b);
    let lcb = &b[db];
    let mut r = a.clone();
    trim(&mut r);
    if r.is_empty() || deg(&r) < db {
        return r;
    }
    let mut e = deg(&r) - db + 1;
    while !r.is_empty() && deg(&r) >= db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] = &r[k + shift] - &(&lr * bk);
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lcb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn subresultant_gcd(f: &Polynomial, g: &Polynomial, v: usize) -> Polynomial {
    let table = f.table().clone();
    let (mut a, mut b) = (f.coefficients_in(v), g.coefficients_in(v));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut gg = Polynomial::one(&table);
    let mut h = Polynomial::one(&table);
    loop {
        let delta = deg(&a) - deg(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            return Polynomial::from_coefficients_in(&table, v, &b);
        }
        if deg(&r) == 0 {
            return Polynomial::one(&table);
        }
        a = b;
        let divisor = &gg * &h.pow(delta as u32);
        b = r
            .iter()
            .map(|c| {
                c.exact_div(&divisor)
                    .expect("subresultant division is exact")
            })
            .collect();
        gg = a[deg(&a)].clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            d => gg
                .pow(d as u32)
                .exact_div(&h.pow(d as u32 - 1))
                .expect("subresultant division is exact"),
        };
    }
}

/// Gcd of a list of monomials, as used for quick factor extraction.
pub fn monomial_gcd(monos: &[Monomial]) -> Option<Monomial> {
    let mut it = monos.iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, m| acc.gcd(m)))
}
