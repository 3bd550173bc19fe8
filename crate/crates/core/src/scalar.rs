//! Scalar abstraction shared by every predicate.
//!
//! All geometric predicates in this crate only ever inspect the *sign* of a
//! polynomial expression in the coordinates, so they are written against a
//! commutative [`Ring`] with an ordering ([`Scalar`]). The exact instantiation
//! uses arbitrary-precision integers (canonical homogeneous coordinates are
//! integral); `f64`/`f32` instantiations exist for previews and rendering and
//! carry no correctness guarantee near walls.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Result of a sign test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    /// `-1`, `0` or `1`.
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.as_i8() * rhs.as_i8() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }
}

/// Commutative ring with unit. Polynomials over a ring are rings too, which is
/// how path predicates reuse the determinant code.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;
}

/// Ordered ring used as a coordinate type.
pub trait Scalar: Ring + PartialOrd + 'static {
    /// `true` when arithmetic is exact (predicates are certified).
    const EXACT: bool;

    fn sign(&self) -> Sign;

    /// Canonical representative of a projective triple: for exact types the
    /// coordinates become coprime integers with positive leading entry; for
    /// floating types the max-norm is 1 with positive leading entry.
    /// Returns `false` for the zero triple.
    fn normalize_triple(c: &mut [Self; 3]) -> bool;

    fn from_rational(r: &BigRational) -> Self;

    fn to_f64(&self) -> f64;
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Scalar for BigInt {
    const EXACT: bool = true;

    fn sign(&self) -> Sign {
        Sign::from_ordering(self.cmp(&BigInt::zero()))
    }

    fn normalize_triple(c: &mut [Self; 3]) -> bool {
        let g = c[0].gcd(&c[1]).gcd(&c[2]);
        if g.is_zero() {
            return false;
        }
        let lead_negative = c.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        let g = if lead_negative { -g } else { g };
        for x in c.iter_mut() {
            *x = &*x / &g;
        }
        true
    }

    /// Only meaningful for integral rationals; fractional parts are truncated.
    fn from_rational(r: &BigRational) -> Self {
        r.to_integer()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn sign(&self) -> Sign {
        Sign::from_ordering(self.cmp(&BigRational::zero()))
    }

    fn normalize_triple(c: &mut [Self; 3]) -> bool {
        let ints = clear_denominators(c);
        let mut ints = ints;
        if !BigInt::normalize_triple(&mut ints) {
            return false;
        }
        for (dst, src) in c.iter_mut().zip(ints) {
            *dst = BigRational::from_integer(src);
        }
        true
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Multiplies a rational triple by the lcm of its denominators.
pub fn clear_denominators(c: &[BigRational; 3]) -> [BigInt; 3] {
    let l = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    [0, 1, 2].map(|i| c[i].numer() * (&l / c[i].denom()))
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Ring for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }

        impl Scalar for $t {
            const EXACT: bool = false;

            fn sign(&self) -> Sign {
                if *self > 0.0 {
                    Sign::Positive
                } else if *self < 0.0 {
                    Sign::Negative
                } else {
                    Sign::Zero
                }
            }

            fn normalize_triple(c: &mut [Self; 3]) -> bool {
                let m = c.iter().fold(0.0 as $t, |m, x| m.max(x.abs()));
                if m == 0.0 || !m.is_finite() {
                    return false;
                }
                let lead = c.iter().copied().find(|x| *x != 0.0).unwrap_or(1.0);
                let s = if lead < 0.0 { -m } else { m };
                for x in c.iter_mut() {
                    *x /= s;
                }
                true
            }

            fn from_rational(r: &BigRational) -> Self {
                ToPrimitive::to_f64(r).unwrap_or(f64::NAN) as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn integer_triples_are_reduced_with_positive_lead() {
        let mut c = [BigInt::from(0), BigInt::from(-4), BigInt::from(6)];
        assert!(BigInt::normalize_triple(&mut c));
        assert_eq!(c, [0.into(), 2.into(), BigInt::from(-3)]);
        let mut z = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        assert!(!BigInt::normalize_triple(&mut z));
    }

    #[test]
    fn rational_triples_clear_denominators() {
        let mut c = [r(1, 2), r(-1, 3), r(5, 6)];
        assert!(BigRational::normalize_triple(&mut c));
        assert_eq!(c, [r(3, 1), r(-2, 1), r(5, 1)]);
    }

    #[test]
    fn float_triples_scale_to_unit_max() {
        let mut c = [-2.0f64, 4.0, 1.0];
        assert!(f64::normalize_triple(&mut c));
        assert_eq!(c, [0.5, -1.0, -0.25]);
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Negative * Sign::Negative, Sign::Positive);
        assert_eq!(-Sign::Positive, Sign::Negative);
        assert_eq!(Sign::Zero * Sign::Positive, Sign::Zero);
    }
}
