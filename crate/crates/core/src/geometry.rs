//! Projective primitives: points, lines, conics and the sign predicates on them.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{cofactor_row, cross, det, det3, dot};
use crate::scalar::{Ring, Scalar, Sign};

/// A point of the real projective plane in canonical homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomPoint<T> {
    coords: [T; 3],
}

/// The line `a·x + b·y + c·z = 0`, normalized like [`HomPoint`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjLine<T> {
    coeffs: [T; 3],
}

impl<T: Scalar> HomPoint<T> {
    pub fn new(mut coords: [T; 3]) -> Result<Self> {
        if !T::normalize_triple(&mut coords) {
            return Err(Error::ZeroVector);
        }
        Ok(HomPoint { coords })
    }

    /// Affine point `(x : y : 1)`.
    pub fn affine(x: T, y: T) -> Self {
        HomPoint::new([x, y, T::one()]).expect("z = 1 is never the zero vector")
    }

    pub fn coords(&self) -> &[T; 3] {
        &self.coords
    }

    pub fn into_coords(self) -> [T; 3] {
        self.coords
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.coords[0].to_f64(), self.coords[1].to_f64(), self.coords[2].to_f64()]
    }

    /// Monomial vector `(x², xy, y², xz, yz, z²)`.
    pub fn veronese(&self) -> [T; 6] {
        veronese(&self.coords)
    }
}

impl HomPoint<BigInt> {
    pub fn from_i64(x: i64, y: i64, z: i64) -> Result<Self> {
        HomPoint::new([x.into(), y.into(), z.into()])
    }

    pub fn from_rationals(c: [BigRational; 3]) -> Result<Self> {
        HomPoint::new(crate::scalar::clear_denominators(&c))
    }

    pub fn to_scalar<U: Scalar>(&self) -> HomPoint<U> {
        let c = self.coords.clone().map(|x| U::from_rational(&BigRational::from_integer(x)));
        HomPoint::new(c).expect("nonzero")
    }
}

impl<T: Scalar> ProjLine<T> {
    pub fn new(mut coeffs: [T; 3]) -> Result<Self> {
        if !T::normalize_triple(&mut coeffs) {
            return Err(Error::ZeroVector);
        }
        Ok(ProjLine { coeffs })
    }

    pub fn coeffs(&self) -> &[T; 3] {
        &self.coeffs
    }

    /// Sign of `l·p`; zero iff `p` lies on the line.
    pub fn side(&self, p: &HomPoint<T>) -> Sign {
        dot(&self.coeffs, &p.coords).sign()
    }

    pub fn contains(&self, p: &HomPoint<T>) -> bool {
        self.side(p).is_zero()
    }
}

pub fn veronese<R: Ring>(c: &[R; 3]) -> [R; 6] {
    let [x, y, z] = c;
    [
        x.clone() * x,
        x.clone() * y,
        y.clone() * y,
        x.clone() * z,
        y.clone() * z,
        z.clone() * z,
    ]
}

/// Sign of `det[p; q; r]`.
pub fn orient3<T: Scalar>(p: &HomPoint<T>, q: &HomPoint<T>, r: &HomPoint<T>) -> Sign {
    det3(&p.coords, &q.coords, &r.coords).sign()
}

/// Sign of the 6×6 determinant of Veronese rows. Zero iff the six points lie
/// on a common (possibly degenerate) conic.
pub fn coconic6<T: Scalar>(ps: [&HomPoint<T>; 6]) -> Sign {
    let rows: Vec<[T; 6]> = ps.iter().map(|p| p.veronese()).collect();
    let refs: Vec<&[T]> = rows.iter().map(|r| r.as_slice()).collect();
    det(&refs).sign()
}

pub fn join<T: Scalar>(p: &HomPoint<T>, q: &HomPoint<T>) -> Result<ProjLine<T>> {
    ProjLine::new(cross(&p.coords, &q.coords)).map_err(|_| Error::IdenticalArguments)
}

pub fn meet<T: Scalar>(l: &ProjLine<T>, m: &ProjLine<T>) -> Result<HomPoint<T>> {
    HomPoint::new(cross(&l.coeffs, &m.coeffs)).map_err(|_| Error::IdenticalArguments)
}

/// Position of a point relative to a conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// In the disc component of the complement.
    Inside,
    On,
    /// In the Möbius band component.
    Outside,
}

/// Nondegenerate conic `q(v) = vᵀ M v`.
///
/// `form` stores a positive multiple of `M` (namely `2M`) so that integer
/// coefficient vectors stay integral. `det(M) < 0`, which makes `{q < 0}` the
/// disc component.
#[derive(Clone, Debug, PartialEq)]
pub struct Conic<T> {
    form: [[T; 3]; 3],
}

impl<T: Scalar> Conic<T> {
    /// Builds the conic from a coefficient vector over the monomials
    /// `(x², xy, y², xz, yz, z²)`, flipping the sign so that `det < 0`.
    pub fn from_coefficients(c: &[T; 6]) -> Result<Self> {
        let two = T::from_i64(2);
        let mut form = [
            [two.clone() * &c[0], c[1].clone(), c[3].clone()],
            [c[1].clone(), two.clone() * &c[2], c[4].clone()],
            [c[3].clone(), c[4].clone(), two * &c[5]],
        ];
        match det3(&form[0], &form[1], &form[2]).sign() {
            Sign::Zero => return Err(Error::DegenerateInput("singular conic".into())),
            Sign::Positive => {
                for row in form.iter_mut() {
                    for x in row.iter_mut() {
                        *x = -x.clone();
                    }
                }
            }
            Sign::Negative => {}
        }
        Ok(Conic { form })
    }

    /// The normalized form (a positive multiple of the conic's Gram matrix).
    pub fn form(&self) -> &[[T; 3]; 3] {
        &self.form
    }

    /// Coefficients over `(x², xy, y², xz, yz, z²)`, scaled by 2.
    pub fn coefficients(&self) -> [T; 6] {
        let f = &self.form;
        let two = T::from_i64(2);
        [
            f[0][0].clone(),
            two.clone() * &f[0][1],
            f[1][1].clone(),
            two.clone() * &f[0][2],
            two * &f[1][2],
            f[2][2].clone(),
        ]
    }

    pub fn eval(&self, p: &HomPoint<T>) -> T {
        let v = &p.coords;
        let mv = [dot(&self.form[0], v), dot(&self.form[1], v), dot(&self.form[2], v)];
        dot(v, &mv)
    }
}

/// Conic through five points, no three of which are collinear.
pub fn conic_through5<T: Scalar>(ps: [&HomPoint<T>; 5]) -> Result<Conic<T>> {
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                if orient3(ps[a], ps[b], ps[c]).is_zero() {
                    return Err(Error::DegenerateInput(format!("points {a}, {b}, {c} are collinear")));
                }
            }
        }
    }
    let rows: Vec<[T; 6]> = ps.iter().map(|p| p.veronese()).collect();
    let refs: Vec<&[T]> = rows.iter().map(|r| r.as_slice()).collect();
    let c = cofactor_row(&refs);
    let coeffs: [T; 6] = [0, 1, 2, 3, 4, 5].map(|k| c[k].clone());
    Conic::from_coefficients(&coeffs)
}

pub fn side_of_conic<T: Scalar>(c: &Conic<T>, p: &HomPoint<T>) -> Side {
    match c.eval(p).sign() {
        Sign::Negative => Side::Inside,
        Sign::Zero => Side::On,
        Sign::Positive => Side::Outside,
    }
}

/// Cyclic order of distinct points on a projective line.
///
/// Each point is written as `α·b₀ + β·b₁` for two base points of the line;
/// the pairs `(α, β)` are brought into the closed upper half plane and sorted
/// by the sign of 2×2 determinants, which is the order along `RP¹`. The
/// result starts at the smallest index and runs in the direction whose second
/// entry is smaller than the last.
pub fn cyclic_order_on_line<T: Scalar>(l: &ProjLine<T>, ps: &[HomPoint<T>]) -> Result<Vec<usize>> {
    for (i, p) in ps.iter().enumerate() {
        if !l.contains(p) {
            return Err(Error::PointNotOnLine(i));
        }
    }
    if ps.len() <= 3 {
        return Ok(canonical_cycle((0..ps.len()).collect()));
    }
    let (b0, b1) = line_base_points(l);
    // reference point off the line
    let k = (0..3).find(|&k| !l.coeffs[k].is_zero()).expect("nonzero line");
    let mut r = [T::zero(), T::zero(), T::zero()];
    r[k] = T::one();
    let params: Vec<(T, T)> = ps
        .iter()
        .map(|p| {
            let a = det3(&p.coords, &b1, &r);
            let b = det3(&b0, &p.coords, &r);
            let flip = match b.sign() {
                Sign::Negative => true,
                Sign::Zero => a.sign() == Sign::Negative,
                Sign::Positive => false,
            };
            if flip {
                (-a, -b)
            } else {
                (a, b)
            }
        })
        .collect();
    let mut idx: Vec<usize> = (0..ps.len()).collect();
    let mut dup = false;
    idx.sort_by(|&i, &j| {
        let (ai, bi) = &params[i];
        let (aj, bj) = &params[j];
        // u precedes v when the angle of u is smaller: αᵤβᵥ − βᵤαᵥ > 0
        let d = ai.clone() * bj - bi.clone() * aj;
        match d.sign() {
            Sign::Positive => Ordering::Less,
            Sign::Negative => Ordering::Greater,
            Sign::Zero => {
                if i != j {
                    dup = true;
                }
                Ordering::Equal
            }
        }
    });
    if dup {
        return Err(Error::IdenticalArguments);
    }
    Ok(canonical_cycle(idx))
}

fn line_base_points<T: Scalar>(l: &ProjLine<T>) -> ([T; 3], [T; 3]) {
    let [a, b, c] = l.coeffs.clone();
    // two independent solutions of a·x + b·y + c·z = 0
    let candidates = [
        [b.clone(), -a.clone(), T::zero()],
        [c.clone(), T::zero(), -a.clone()],
        [T::zero(), c, -b],
    ];
    let nz: Vec<[T; 3]> = candidates
        .into_iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let b0 = nz[0].clone();
    let b1 = nz
        .iter()
        .skip(1)
        .find(|v| cross(&b0, v).iter().any(|x| !x.is_zero()))
        .cloned()
        .expect("a line has two independent points");
    (b0, b1)
}

/// Rotates a cycle to start at its minimum and orients it so that the second
/// entry is smaller than the last.
pub fn canonical_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    if cycle.is_empty() {
        return cycle;
    }
    let start = cycle.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i).unwrap();
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    cycle
}
