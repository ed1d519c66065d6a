//! Dense univariate polynomials over the rationals: remainders, gcd,
//! resultants and Newton interpolation.

use num_traits::{One, Zero};

use num_rational::BigRational;

/// Dense univariate polynomial, lowest coefficient first.
pub type Dense = Vec<BigRational>;

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn rem(a: &[BigRational], b: &[BigRational]) -> Dense {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = BigRational::one() / &b[db];
    while r.len() > db {
        let k = r.len() - 1;
        let q = &r[k] * &inv;
        if !q.is_zero() {
            for (i, c) in b.iter().enumerate() {
                let idx = k - db + i;
                r[idx] = &r[idx] - &q * c;
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Monic gcd; `gcd(0, 0)` is empty.
pub fn gcd(a: &[BigRational], b: &[BigRational]) -> Dense {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lc) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = &*c / &lc;
        }
    }
    a
}

pub fn derivative(a: &[BigRational]) -> Dense {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(k.into()))
            .collect(),
    )
}

/// Resultant of `a` and `b` with respect to their actual degrees. Zero if
/// either is zero.
pub fn resultant(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    if a.is_empty() || b.is_empty() {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        if db == 0 {
            return acc * num_traits::pow(b[0].clone(), da);
        }
        if da == 0 {
            return acc * num_traits::pow(a[0].clone(), db);
        }
        let r = rem(&a, &b);
        if r.is_empty() {
            return BigRational::zero();
        }
        let dr = r.len() - 1;
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(b[db].clone(), da - dr);
        a = b;
        b = r;
    }
}

/// Coefficients of the unique polynomial of degree `< nodes.len()` taking
/// `values` at the (distinct) `nodes`.
pub fn interpolate(nodes: &[BigRational], values: &[BigRational]) -> Dense {
    let n = nodes.len();
    let mut dd = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - j]);
        }
    }
    let mut out = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // out = out * (x - nodes[i]) + dd[i]
        for k in (1..n).rev() {
            out[k] = &out[k - 1] - &out[k] * &nodes[i];
        }
        out[0] = &dd[i] - &out[0] * &nodes[i];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn d(cs: &[i64]) -> Dense {
        cs.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn linear_factors() {
        // Res(x - 2, x^2 - 1) = 3
        assert_eq!(resultant(&d(&[-2, 1]), &d(&[-1, 0, 1])), rat(3));
        // common root
        assert_eq!(resultant(&d(&[-1, 1]), &d(&[-1, 0, 1])), rat(0));
        // Res(x^2 + 1, 2x) = 4 (Sylvester determinant)
        assert_eq!(resultant(&d(&[1, 0, 1]), &d(&[0, 2])), rat(4));
        assert_eq!(resultant(&d(&[0, 2]), &d(&[1, 0, 1])), rat(4));
    }

    #[test]
    fn gcd_and_derivative() {
        // (x - 1)(x + 2) and (x - 1)^2
        assert_eq!(gcd(&d(&[-2, 1, 1]), &d(&[1, -2, 1])), d(&[-1, 1]));
        assert_eq!(gcd(&d(&[1, 1]), &d(&[1, 2])), d(&[1]));
        assert_eq!(derivative(&d(&[5, 3, 0, 2])), d(&[3, 0, 6]));
    }

    #[test]
    fn interpolation_recovers() {
        let p = d(&[3, 0, -2, 1]);
        let nodes: Vec<BigRational> = (0..4).map(rat).collect();
        let vals: Vec<BigRational> = nodes
            .iter()
            .map(|x| {
                p.iter()
                    .rev()
                    .fold(BigRational::zero(), |acc, c| acc * x + c)
            })
            .collect();
        assert_eq!(interpolate(&nodes, &vals), p);
    }
}
