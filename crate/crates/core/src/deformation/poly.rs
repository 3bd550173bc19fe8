//! Dense univariate polynomials with integer coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Ring, Scalar, Sign};

/// `c[0] + c[1] t + …`, with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    c: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `a + (b − a) t`.
    pub fn linear(a: &BigInt, b: &BigInt) -> Self {
        Poly::new(vec![a.clone(), b - a])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.c.last()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.c.iter().enumerate().skip(1).map(|(i, x)| x * BigInt::from(i)).collect())
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.c
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, x| acc * t + BigRational::from_integer(x.clone()))
    }

    /// Sign of the value at `t`, computed on the integer `den^deg · p(num/den)`.
    pub fn sign_at(&self, t: &BigRational) -> Sign {
        let (p, q) = (t.numer(), t.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for (i, x) in self.c.iter().enumerate().rev() {
            acc = acc * p + x * &qpow;
            if i > 0 {
                qpow *= q;
            }
        }
        Scalar::sign(&acc)
    }

    /// Divides by the positive gcd of the coefficients.
    pub fn primitive(&self) -> Poly {
        let g = self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Poly::new(self.c.iter().map(|x| x / &g).collect())
    }

    /// Remainder of `self` by `d` scaled by a positive constant, so its sign
    /// pattern matches the true remainder.
    pub fn pseudo_rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.leading().unwrap().clone();
        let lc_abs = lc.abs();
        let mut r = self.c.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let top = r[k].clone();
            if top.is_zero() {
                r.pop();
                continue;
            }
            // r ← |lc|·r − sign(lc)·top·t^(k−dd)·d
            for x in r.iter_mut() {
                *x *= &lc_abs;
            }
            let f = if lc.is_negative() { -top } else { top };
            for (j, y) in d.c.iter().enumerate() {
                r[k - dd + j] -= &f * y;
            }
            debug_assert!(r[k].is_zero());
            r.pop();
        }
        Poly::new(r).primitive()
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly { c: vec![BigInt::one()] }
    }
}

impl Add<&Poly> for Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (mut long, short) = if self.c.len() >= rhs.c.len() { (self.c, &rhs.c) } else { (rhs.c.clone(), &self.c) };
        for (x, y) in long.iter_mut().zip(short.iter()) {
            *x += y;
        }
        Poly::new(long)
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        self + &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly { c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul<&Poly> for Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.c.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Poly::new(out)
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        self * &rhs
    }
}

impl Ring for Poly {
    fn from_i64(v: i64) -> Self {
        Poly::new(vec![BigInt::from(v)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic() {
        let a = Poly::from_i64(&[1, 1]);
        let b = Poly::from_i64(&[-1, 1]);
        assert_eq!(a.clone() * &b, Poly::from_i64(&[-1, 0, 1]));
        assert_eq!(a.clone() - a.clone(), Poly::zero());
        assert_eq!((a.clone() * &a).derivative(), Poly::from_i64(&[2, 2]));
        assert_eq!(Poly::from_i64(&[3, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn evaluation_and_signs() {
        let p = Poly::from_i64(&[-1, 0, 4]);
        assert_eq!(p.eval(&q(1, 2)), q(0, 1));
        assert_eq!(p.sign_at(&q(1, 2)), Sign::Zero);
        assert_eq!(p.sign_at(&q(1, 3)), Sign::Negative);
        assert_eq!(p.sign_at(&q(-2, 3)), Sign::Positive);
        assert_eq!(p.eval(&q(3, 7)), q(-13, 49));
    }

    #[test]
    fn pseudo_remainder_keeps_sign() {
        // (2t² + 3t + 1) mod (−2t + 1) = 3, positive
        let r = Poly::from_i64(&[1, 3, 2]).pseudo_rem(&Poly::from_i64(&[1, -2]));
        assert_eq!(r, Poly::from_i64(&[1]));
        // t² − 2 mod (t − 1) = −1
        let r = Poly::from_i64(&[-2, 0, 1]).pseudo_rem(&Poly::from_i64(&[-1, 1]));
        assert_eq!(r, Poly::from_i64(&[-1]));
    }
}
