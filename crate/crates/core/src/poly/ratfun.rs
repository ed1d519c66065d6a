use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd_unchecked;
use super::polynomial::Polynomial;
use super::vars::{check_same, same_table, Table};
use crate::error::{Error, Result};

/// Element of the fraction field of a polynomial ring over the rationals.
///
/// Canonical form: `gcd(num, den) = 1`, both have integer coefficients
/// whose joint gcd is 1, and `den` has a positive leading coefficient
/// under the internal degrevlex order. Zero is `0/1`. Equality is
/// therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        check_same(num.table(), den.table())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero(num.table());
        }
        if den.is_constant() {
            return Self::scaled(num, den);
        }
        let g = gcd_unchecked(&num, &den);
        if g.is_constant() {
            Self::scaled(num, den)
        } else {
            let n = num.exact_div(&g).expect("gcd divides numerator");
            let d = den.exact_div(&g).expect("gcd divides denominator");
            Self::scaled(n, d)
        }
    }

    /// Fixes the scalar normalization of an already coprime pair.
    fn scaled(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero(num.table());
        }
        let l = num.denominator_lcm().lcm(&den.denominator_lcm());
        let lr = BigRational::from_integer(l);
        let mut g = BigInt::zero();
        for (_, c) in num.terms().iter().chain(den.terms()) {
            g = g.gcd(&(c * &lr).to_integer());
        }
        let mut s = lr / BigRational::from_integer(g);
        if den.leading_coefficient().is_negative() {
            s = -s;
        }
        if s.is_one() {
            RationalFunction { num, den }
        } else {
            RationalFunction {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let one = Polynomial::one(p.table());
        Self::scaled(p, one)
    }

    pub fn zero(table: &Table) -> Self {
        RationalFunction {
            num: Polynomial::zero(table),
            den: Polynomial::one(table),
        }
    }

    pub fn one(table: &Table) -> Self {
        Self::constant(table, BigRational::one())
    }

    pub fn constant(table: &Table, c: BigRational) -> Self {
        Self::from_poly(Polynomial::constant(table, c))
    }

    pub fn var(table: &Table, i: usize) -> Self {
        Self::from_poly(Polynomial::var(table, i))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn table(&self) -> &Table {
        self.num.table()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if !self.den.is_constant() {
            return None;
        }
        Some(self.num.constant_value()? / self.den.constant_value()?)
    }

    /// The polynomial `num/den` when the denominator is constant.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        let d = self.den.constant_value()?;
        Some(self.num.scale(&d.recip()))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_same(self.table(), other.table())?;
        Ok(self.add_impl(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_same(self.table(), other.table())?;
        Ok(self.add_impl(&other.neg()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_same(self.table(), other.table())?;
        Ok(self.mul_impl(other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        check_same(self.table(), other.table())?;
        let inv = other.inv()?;
        Ok(self.mul_impl(&inv))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::scaled(self.den.clone(), self.num.clone()))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn add_impl(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        if b == d {
            return Self::reduce(a + c, b.clone());
        }
        if b.is_constant() && d.is_constant() {
            return Self::scaled(&(a * d) + &(c * b), b * d);
        }
        let g = gcd_unchecked(b, d);
        if g.is_constant() {
            // reduced inputs with coprime denominators give a reduced sum
            return Self::scaled(&(a * d) + &(c * b), b * d);
        }
        let b1 = b.exact_div(&g).expect("gcd divides");
        let d1 = d.exact_div(&g).expect("gcd divides");
        let num = &(a * &d1) + &(c * &b1);
        if num.is_zero() {
            return Self::zero(self.table());
        }
        let h = gcd_unchecked(&num, &g);
        if h.is_constant() {
            Self::scaled(num, &b1 * d)
        } else {
            let num = num.exact_div(&h).expect("gcd divides");
            let den = (&b1 * d).exact_div(&h).expect("gcd divides");
            Self::scaled(num, den)
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.table());
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        let cancel = |p: &Polynomial, q: &Polynomial| -> (Polynomial, Polynomial) {
            if p.is_constant() || q.is_constant() {
                return (p.clone(), q.clone());
            }
            let g = gcd_unchecked(p, q);
            if g.is_constant() {
                (p.clone(), q.clone())
            } else {
                (p.exact_div(&g).unwrap(), q.exact_div(&g).unwrap())
            }
        };
        let (a1, d1) = cancel(a, d);
        let (c1, b1) = cancel(c, b);
        Self::scaled(&a1 * &c1, &b1 * &d1)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k = k as u32;
        Ok(Self::scaled(self.num.pow(k), self.den.pow(k)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::scaled(self.num.scale(c), self.den.clone())
    }

    /// Quotient-rule derivative.
    pub fn derivative(&self, var: usize) -> Self {
        let dn = self.num.derivative(var);
        if self.den.is_constant() {
            return Self::scaled(dn, self.den.clone());
        }
        let dd = self.den.derivative(var);
        if dd.is_zero() {
            return Self::reduce(dn, self.den.clone());
        }
        // d(n/d) = (n' d - n d') / d^2; share the factor gcd(d, d') to keep sizes down
        let g = gcd_unchecked(&self.den, &dd);
        let d1 = self.den.exact_div(&g).unwrap();
        let dd1 = dd.exact_div(&g).unwrap();
        let num = &(&dn * &d1) - &(&self.num * &dd1);
        Self::reduce(num, &self.den * &d1)
    }

    /// Derivative with respect to the variable called `name`.
    pub fn derivative_by_name(&self, name: &str) -> Result<Self> {
        Ok(self.derivative(self.table().require(name)?))
    }

    /// Exact value at a point, `None` at a pole.
    pub fn evaluate(&self, point: &[BigRational]) -> Option<BigRational> {
        let d = self.den.evaluate(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.evaluate(point) / d)
    }

    pub fn embed(&self, target: &Table) -> Result<Self> {
        if same_table(self.table(), target) {
            return Ok(self.clone());
        }
        Ok(Self::scaled(
            self.num.embed(target)?,
            self.den.embed(target)?,
        ))
    }

    /// Substitutes `images[i]` (over `target`) for variable `i`.
    pub fn compose(&self, images: &[RationalFunction], target: &Table) -> Result<Self> {
        if images.len() != self.table().len() {
            return Err(Error::mismatch("composition needs one image per variable"));
        }
        for im in images {
            check_same(im.table(), target)?;
        }
        let sub = Substitution::new(images);
        let (np, ep) = sub.apply(&self.num, target);
        let (nq, eq) = sub.apply(&self.den, target);
        let mut num = np;
        let mut den = nq;
        for (g, (dp, dq)) in ep.iter().zip(&eq).enumerate() {
            let dg = &sub.dens[g];
            if dq > dp {
                num = &num * &dg.pow(dq - dp);
            } else if dp > dq {
                den = &den * &dg.pow(dp - dq);
            }
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    /// Scalar multiple with primitive numerator of positive leading
    /// coefficient; identifies `f` with `c*f` for constants `c`.
    pub fn normalized_up_to_constant(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        RationalFunction {
            num: self.num.primitive(),
            den: self.den.primitive(),
        }
    }

    pub fn vars_used(&self) -> Vec<usize> {
        let mut v = self.num.vars_used();
        for x in self.den.vars_used() {
            if !v.contains(&x) {
                v.push(x);
            }
        }
        v.sort_unstable();
        v
    }
}

struct Substitution<'a> {
    images: &'a [RationalFunction],
    group_of: Vec<Option<usize>>,
    dens: Vec<Polynomial>,
}

impl<'a> Substitution<'a> {
    fn new(images: &'a [RationalFunction]) -> Self {
        let mut dens: Vec<Polynomial> = Vec::new();
        let mut group_of = Vec::with_capacity(images.len());
        for im in images {
            if im.den.is_one() {
                group_of.push(None);
                continue;
            }
            match dens.iter().position(|d| d == &im.den) {
                Some(g) => group_of.push(Some(g)),
                None => {
                    dens.push(im.den.clone());
                    group_of.push(Some(dens.len() - 1));
                }
            }
        }
        Substitution {
            images,
            group_of,
            dens,
        }
    }

    /// Numerator after clearing the per-group denominators, and the
    /// exponent used for each group.
    fn apply(&self, p: &Polynomial, target: &Table) -> (Polynomial, Vec<u32>) {
        let ngroups = self.dens.len();
        let mut exps = vec![0u32; ngroups];
        for (m, _) in p.terms() {
            let mut s = vec![0u32; ngroups];
            for (v, &e) in m.exponents().iter().enumerate() {
                if let Some(g) = self.group_of[v] {
                    s[g] += e;
                }
            }
            for g in 0..ngroups {
                exps[g] = exps[g].max(s[g]);
            }
        }
        let mut num_pows: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut den_pows: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(target);
        for (m, c) in p.terms() {
            let mut t = Polynomial::constant(target, c.clone());
            let mut s = vec![0u32; ngroups];
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if let Some(g) = self.group_of[v] {
                    s[g] += e;
                }
                let pw = num_pows
                    .entry((v, e))
                    .or_insert_with(|| self.images[v].num.pow(e));
                t = &t * pw;
            }
            for g in 0..ngroups {
                let k = exps[g] - s[g];
                if k > 0 {
                    let pw = den_pows
                        .entry((g, k))
                        .or_insert_with(|| self.dens[g].pow(k));
                    t = &t * pw;
                }
            }
            acc = &acc + &t;
        }
        (acc, exps)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({})", self)
    }
}
