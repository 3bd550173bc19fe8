//! Real root counting and isolation with Sturm sequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::scalar::Sign;

#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<Poly>,
}

impl SturmSequence {
    /// Panics on the zero polynomial.
    pub fn new(p: &Poly) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let mut seq = vec![p.primitive()];
        let d = p.derivative();
        if !d.is_zero() {
            seq.push(d.primitive());
            loop {
                let n = seq.len();
                let r = -seq[n - 2].pseudo_rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(r);
            }
        }
        SturmSequence { seq }
    }

    pub fn poly(&self) -> &Poly {
        &self.seq[0]
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Sign changes of the sequence at `t`, zeros skipped.
    pub fn variations(&self, t: &BigRational) -> usize {
        let mut last = Sign::Zero;
        let mut v = 0;
        for p in &self.seq {
            let s = p.sign_at(t);
            if s.is_zero() {
                continue;
            }
            if !last.is_zero() && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// A point of `(lo, hi)` where `p` does not vanish, near the midpoint.
fn split_point(p: &Poly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let w = hi - lo;
    let mid = lo + &w * half();
    if !p.sign_at(&mid).is_zero() {
        return mid;
    }
    let mut step = w * half() * half();
    loop {
        let cand = &mid + &step;
        if !p.sign_at(&cand).is_zero() {
            return cand;
        }
        step *= half();
    }
}

/// Shrinks an interval with one root to width at most `width`.
pub fn refine(s: &SturmSequence, lo: &BigRational, hi: &BigRational, width: &BigRational) -> (BigRational, BigRational) {
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    while &(&hi - &lo) > width {
        let m = split_point(s.poly(), &lo, &hi);
        if s.count(&lo, &m) == 1 {
            hi = m;
        } else {
            lo = m;
        }
    }
    (lo, hi)
}

/// Isolating intervals `(lo, hi)` for the distinct roots in `(a, b)`, each
/// of width at most `width` and with endpoints that are not roots.
/// `p(a)` and `p(b)` must be nonzero.
pub fn isolate_roots(
    s: &SturmSequence,
    a: &BigRational,
    b: &BigRational,
    width: &BigRational,
) -> Vec<(BigRational, BigRational)> {
    debug_assert!(!s.poly().sign_at(a).is_zero() && !s.poly().sign_at(b).is_zero());
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), b.clone(), s.count(a, b))];
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(refine(s, &lo, &hi, width)),
            _ => {
                let m = split_point(s.poly(), &lo, &hi);
                let left = s.count(&lo, &m);
                stack.push((m.clone(), hi, n - left));
                stack.push((lo, m, left));
            }
        }
    }
    out.sort();
    out
}

/// `2^-bits`.
pub fn dyadic(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

pub fn unit_interval() -> (BigRational, BigRational) {
    (BigRational::zero(), BigRational::one())
}
