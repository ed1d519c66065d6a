use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{cmp_internal, Monomial};
use super::vars::{check_same, same_table, Table};
use crate::error::{Error, Result};

/// Multivariate polynomial over the rationals.
///
/// Terms are kept in strictly descending internal degrevlex order with no
/// zero coefficients, so two polynomials over the same table are equal
/// exactly when their term lists are.
#[derive(Clone)]
pub struct Polynomial {
    table: Table,
    terms: Vec<(Monomial, BigRational)>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Polynomial {
    pub fn zero(table: &Table) -> Self {
        Polynomial {
            table: table.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(table: &Table) -> Self {
        Self::constant(table, BigRational::one())
    }

    pub fn constant(table: &Table, c: BigRational) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.push((Monomial::one(table.len()), c));
        }
        p
    }

    pub fn from_int(table: &Table, n: i64) -> Self {
        Self::constant(table, rat(n))
    }

    pub fn var(table: &Table, i: usize) -> Self {
        Self::monomial(table, Monomial::var(table.len(), i, 1), BigRational::one())
    }

    /// The variable called `name`, or `DomainMismatch` if the table lacks it.
    pub fn var_named(table: &Table, name: &str) -> Result<Self> {
        Ok(Self::var(table, table.require(name)?))
    }

    pub fn monomial(table: &Table, m: Monomial, c: BigRational) -> Self {
        debug_assert_eq!(m.len(), table.len());
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(
        table: &Table,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), table.len());
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        Self::from_map(table, acc)
    }

    fn from_map(table: &Table, acc: HashMap<Monomial, BigRational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| cmp_internal(&b.0, &a.0));
        Polynomial {
            table: table.clone(),
            terms,
        }
    }

    /// Trusts that `terms` are already sorted, distinct and nonzero.
    pub(crate) fn from_sorted(table: &Table, terms: Vec<(Monomial, BigRational)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| cmp_internal(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            table: table.clone(),
            terms,
        }
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, BigRational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Leading term under the internal degrevlex order.
    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exp(var))
            .max()
            .unwrap_or(0)
    }

    pub fn has_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(var) > 0)
    }

    /// Indices of the variables that actually occur.
    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.table.len()).filter(|&v| self.has_var(v)).collect()
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.table, &other.table)?;
        Ok(self.add_sorted(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.table, &other.table)?;
        Ok(self.add_sorted(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.table, &other.table)?;
        Ok(self.mul_impl(other))
    }

    fn add_sorted(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match cmp_internal(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })),
        );
        Polynomial {
            table: self.table.clone(),
            terms: out,
        }
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.table);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial::from_map(&self.table, acc)
    }

    /// Multiplication by a single term keeps the order, so no re-sorting.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.table);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), cc * c))
            .collect();
        Polynomial {
            table: self.table.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.table);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, cc)| (m.clone(), cc * c))
            .collect();
        Polynomial {
            table: self.table.clone(),
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        if k == 0 {
            return Polynomial::one(&self.table);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Polynomial::monomial(
                &self.table,
                m.pow(k),
                num_traits::pow(c.clone(), k as usize),
            );
        }
        let mut result = Polynomial::one(&self.table);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        result
    }

    /// Quotient `q` with `q * divisor == self`, or `NotDivisible`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        check_same(&self.table, &divisor.table)?;
        let (lm, lc) = divisor.leading().ok_or(Error::DivisionByZero)?;
        if divisor.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let q = lm.quotient_of(m).ok_or(Error::NotDivisible)?;
                terms.push((q, c / lc));
            }
            return Ok(Polynomial {
                table: self.table.clone(),
                terms,
            });
        }
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let qm = lm.quotient_of(m).ok_or(Error::NotDivisible)?;
            let qc = c / lc;
            rem = rem.sub_mul_term(divisor, &qm, &qc);
            quotient.push((qm, qc));
        }
        Ok(Polynomial {
            table: self.table.clone(),
            terms: quotient,
        })
    }

    /// `self - c * m * g` by a single merge pass.
    pub(crate) fn sub_mul_term(&self, g: &Polynomial, m: &Monomial, c: &BigRational) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let a = &self.terms;
        let mut i = 0;
        for (gm, gc) in &g.terms {
            let tm = gm.mul(m);
            let tc = gc * c;
            while i < a.len() && cmp_internal(&a[i].0, &tm) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].0 == tm {
                let v = &a[i].1 - &tc;
                if !v.is_zero() {
                    out.push((tm, v));
                }
                i += 1;
            } else {
                out.push((tm, -tc));
            }
        }
        out.extend(a[i..].iter().cloned());
        Polynomial {
            table: self.table.clone(),
            terms: out,
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .map(|(m, c)| {
                let e = m.exp(var);
                let mut m2 = m.clone();
                m2.exps_mut()[var] = e - 1;
                (m2, c * rat(e as i64))
            });
        // Lowering one exponent can reorder terms of different degree.
        Polynomial::from_terms(&self.table, terms)
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.table.len(), "point dimension");
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[v].clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Replaces variable `var` by the constant `value`.
    pub fn substitute_value(&self, var: usize, value: &BigRational) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exp(var);
            let mut m2 = m.clone();
            m2.exps_mut()[var] = 0;
            (m2, c * num_traits::pow(value.clone(), e as usize))
        });
        Polynomial::from_terms(&self.table, terms)
    }

    /// Re-expresses the polynomial over another table, matching variables by name.
    pub fn embed(&self, target: &Table) -> Result<Polynomial> {
        if same_table(&self.table, target) {
            return Ok(Polynomial {
                table: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut map = Vec::with_capacity(self.table.len());
        for (i, name) in self.table.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None if self.has_var(i) => {
                    return Err(Error::mismatch(format!(
                        "variable `{name}` missing from target table"
                    )))
                }
                None => map.push(None),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = x;
                }
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Coefficients in `var`: entry k is the coefficient of `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigRational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            let mut m2 = m.clone();
            m2.exps_mut()[var] = 0;
            buckets[e].push((m2, c.clone()));
        }
        // Removing one variable from every term of a bucket keeps the bucket sorted
        // only when the removed exponent is constant, which it is.
        buckets
            .into_iter()
            .map(|t| Polynomial::from_sorted(&self.table, t))
            .collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(table: &Table, var: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut m2 = m.clone();
                m2.exps_mut()[var] += k as u32;
                terms.push((m2, v.clone()));
            }
        }
        Polynomial::from_terms(table, terms)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
    }

    /// Gcd of the numerators once denominators are cleared.
    fn numerator_gcd(&self, scale: &BigInt) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, (_, c)| {
            let v = (c * BigRational::from_integer(scale.clone())).to_integer();
            acc.gcd(&v)
        })
    }

    /// Rational content `c` with `self = c * primitive`, where the primitive
    /// part has coprime integer coefficients and positive leading coefficient.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::one();
        }
        let l = self.denominator_lcm();
        let g = self.numerator_gcd(&l);
        let mut c = BigRational::new(g, l);
        if self.leading_coefficient().is_negative() {
            c = -c;
        }
        c
    }

    /// Integer-primitive with positive leading coefficient; zero stays zero.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        if c.is_one() {
            return self.clone();
        }
        self.scale(&c.recip())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Gcd of all monomials.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some(t) => t.0.clone(),
            None => return Monomial::one(self.table.len()),
        };
        it.fold(first, |acc, (m, _)| acc.gcd(m))
    }

    /// Divides every term by the monomial `m` (which must divide each term).
    pub fn div_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(mm, c)| {
                (
                    m.quotient_of(mm).expect("monomial divides every term"),
                    c.clone(),
                )
            })
            .collect();
        Polynomial {
            table: self.table.clone(),
            terms,
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

// Operator forms panic on mismatched tables; use the `checked_*` methods
// when the operands come from untrusted input.
impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs)
            .expect("polynomials over different tables")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs)
            .expect("polynomials over different tables")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs)
            .expect("polynomials over different tables")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial {
            table: self.table.clone(),
            terms,
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
