//! Paths built to cross one prescribed wall, for testing wall detection.
//!
//! A point is placed a distance `δ` on either side of a line through two
//! other points, or of the conic through five others, and the path moves it
//! straight across. With small `δ` no other predicate changes near the
//! crossing for generic inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use super::{wall_signs, LinearPath, WallKind};
use crate::configuration::Configuration;
use crate::geometry::{conic_through5, HomPoint};
use crate::linalg::{dot, mat_vec3};

#[derive(Clone, Debug)]
pub struct PlantedPath {
    pub path: LinearPath,
    pub wall: WallKind,
}

fn affine(p: &HomPoint<BigInt>) -> Option<[BigRational; 2]> {
    let [x, y, z] = p.coords();
    (!z.is_zero()).then(|| [BigRational::new(x.clone(), z.clone()), BigRational::new(y.clone(), z.clone())])
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn random_direction<R: Rng>(rng: &mut R) -> [BigRational; 2] {
    loop {
        let (x, y) = (rng.random_range(-9i64..=9), rng.random_range(-9i64..=9));
        if (x, y) != (0, 0) {
            return [q(x, 1), q(y, 1)];
        }
    }
}

/// Copies of `c` with point `k` at `x − δv` and `x + δv`, if both are typical
/// and exactly one predicate vanishes with `k` at `x`.
fn straddle(
    c: &Configuration<BigInt>,
    k: usize,
    x: &[BigRational; 2],
    v: &[BigRational; 2],
    delta: &BigRational,
) -> Option<LinearPath> {
    let place = |s: i64| {
        let s = BigRational::from_integer(s.into());
        let px = &x[0] + &s * delta * &v[0];
        let py = &x[1] + &s * delta * &v[1];
        HomPoint::from_rationals([px, py, BigRational::from_integer(1.into())]).ok()
    };
    let mut pts = c.points().to_vec();
    pts[k] = place(0)?;
    let crossing = Configuration::new(pts.clone()).ok()?;
    if wall_signs(&crossing).iter().filter(|&&s| s == 0).count() != 1 {
        return None;
    }
    pts[k] = place(-1)?;
    let start = Configuration::new(pts.clone()).ok()?;
    pts[k] = place(1)?;
    let end = Configuration::new(pts).ok()?;
    LinearPath::new(start, end).ok()
}

/// Moves a random point across the line through two others, near a random
/// point of the segment between them. `None` when the endpoints come out
/// non-typical or some point of `c` is at infinity.
pub fn planted_collinear<R: Rng>(c: &Configuration<BigInt>, delta: &BigRational, rng: &mut R) -> Option<PlantedPath> {
    let mut labels: Vec<usize> = (0..c.len()).collect();
    labels.shuffle(rng);
    let (k, a, b) = (labels[0], labels[1], labels[2]);
    let (pa, pb) = (affine(c.point(a))?, affine(c.point(b))?);
    let s = q(rng.random_range(200..=800), 1000);
    let x = [&pa[0] + &s * (&pb[0] - &pa[0]), &pa[1] + &s * (&pb[1] - &pa[1])];
    let v = random_direction(rng);
    let cross = (&pb[0] - &pa[0]) * &v[1] - (&pb[1] - &pa[1]) * &v[0];
    if cross.is_zero() {
        return None;
    }
    let mut wall = [k, a, b];
    wall.sort_unstable();
    Some(PlantedPath { path: straddle(c, k, &x, &v, delta)?, wall: WallKind::Collinear(wall) })
}

/// Moves a random point across the conic through five others, near the
/// second intersection of that conic with a random line through one of them.
pub fn planted_coconic<R: Rng>(c: &Configuration<BigInt>, delta: &BigRational, rng: &mut R) -> Option<PlantedPath> {
    let mut labels: Vec<usize> = (0..c.len()).collect();
    labels.shuffle(rng);
    let (omit, k) = (labels[0], labels[1]);
    let five: Vec<usize> = labels[2..].to_vec();
    let conic = conic_through5([0, 1, 2, 3, 4].map(|i| c.point(five[i]))).ok()?;
    let form: [[BigRational; 3]; 3] = std::array::from_fn(|r| {
        std::array::from_fn(|s| BigRational::from_integer(conic.form()[r][s].clone()))
    });
    let pa = affine(c.point(five[0]))?;
    let a = [pa[0].clone(), pa[1].clone(), q(1, 1)];
    let d = random_direction(rng);
    let d3 = [d[0].clone(), d[1].clone(), BigRational::zero()];
    let bad = dot(&a, &mat_vec3(&form, &d3));
    let qd = dot(&d3, &mat_vec3(&form, &d3));
    if qd.is_zero() || bad.is_zero() {
        return None;
    }
    let s = -(bad * BigRational::from_integer(2.into())) / qd;
    let x = [&a[0] + &s * &d[0], &a[1] + &s * &d[1]];
    let grad = mat_vec3(&form, &[x[0].clone(), x[1].clone(), q(1, 1)]);
    let v = random_direction(rng);
    if (&grad[0] * &v[0] + &grad[1] * &v[1]).abs().is_zero() {
        return None;
    }
    let mut wall: Vec<usize> = (0..c.len()).filter(|&l| l != omit).collect();
    wall.sort_unstable();
    let wall: [usize; 6] = std::array::from_fn(|i| wall[i]);
    Some(PlantedPath { path: straddle(c, k, &x, &v, delta)?, wall: WallKind::Coconic(wall) })
}
