use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::poly::{rat, ratio};

/// Exact random points on the group varieties of the built-in actions.
/// Parameters come in the order used by the built-in specs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSampler {
    /// `(a, b)` with `ab = 1`.
    Scaling,
    /// `(c, s, a, b)` with `c² + s² = 1`.
    SE2,
    /// `(c, s)` with `c² + s² = 1`.
    SO2,
    /// `(a11, a12, a21, a22)` with determinant 1.
    SL2,
    /// `(a11, a12, a21, a22)` with nonzero determinant.
    GL2,
    /// Row-major entries of a rotation matrix.
    SO3,
}

fn small<R: Rng>(rng: &mut R) -> BigRational {
    ratio(rng.gen_range(-7..=7), rng.gen_range(1..=4))
}

fn nonzero<R: Rng>(rng: &mut R) -> BigRational {
    loop {
        let v = small(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// `((1-u²)/(1+u²), 2u/(1+u²))`, a rational point on the unit circle.
pub fn circle_point(u: &BigRational) -> (BigRational, BigRational) {
    let one = BigRational::one();
    let d = &one + u * u;
    ((&one - u * u) / &d, (rat(2) * u) / d)
}

impl GroupSampler {
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Vec<BigRational> {
        match self {
            GroupSampler::Scaling => {
                let a = nonzero(rng);
                let b = a.recip();
                vec![a, b]
            }
            GroupSampler::SO2 => {
                let (c, s) = circle_point(&small(rng));
                vec![c, s]
            }
            GroupSampler::SE2 => {
                let (c, s) = circle_point(&small(rng));
                vec![c, s, small(rng), small(rng)]
            }
            GroupSampler::SL2 => {
                let a11 = nonzero(rng);
                let a12 = small(rng);
                let a21 = small(rng);
                let a22 = (BigRational::one() + &a12 * &a21) / &a11;
                vec![a11, a12, a21, a22]
            }
            GroupSampler::GL2 => loop {
                let m: Vec<BigRational> = (0..4).map(|_| small(rng)).collect();
                if !(&m[0] * &m[3] - &m[1] * &m[2]).is_zero() {
                    return m;
                }
            },
            GroupSampler::SO3 => {
                // rotation of a unit quaternion (w, x, y, z) scaled by its norm
                let q: Vec<BigRational> = loop {
                    let q: Vec<BigRational> = (0..4).map(|_| small(rng)).collect();
                    if q.iter().any(|v| !v.is_zero()) {
                        break q;
                    }
                };
                let (w, x, y, z) = (&q[0], &q[1], &q[2], &q[3]);
                let n = w * w + x * x + y * y + z * z;
                let two = rat(2);
                let m = [
                    w * w + x * x - y * y - z * z,
                    &two * (x * y - w * z),
                    &two * (x * z + w * y),
                    &two * (x * y + w * z),
                    w * w - x * x + y * y - z * z,
                    &two * (y * z - w * x),
                    &two * (x * z - w * y),
                    &two * (y * z + w * x),
                    w * w - x * x - y * y + z * z,
                ];
                m.iter().map(|e| e / &n).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_satisfy_their_equations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = GroupSampler::SL2.sample(&mut rng);
            assert!((&g[0] * &g[3] - &g[1] * &g[2]).is_one());
            let g = GroupSampler::SE2.sample(&mut rng);
            assert!((&g[0] * &g[0] + &g[1] * &g[1]).is_one());
            let r = GroupSampler::SO3.sample(&mut rng);
            for i in 0..3 {
                for j in 0..3 {
                    let dot: BigRational = (0..3).map(|k| &r[3 * k + i] * &r[3 * k + j]).sum();
                    assert_eq!(dot, if i == j { rat(1) } else { rat(0) });
                }
            }
        }
    }
}
