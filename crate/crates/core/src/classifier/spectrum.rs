//! Dual line arrangement on the sphere and the polygonal spectrum.
//!
//! Each point `p` is dual to the great circle `{v : p·v = 0}`. A spherical
//! cell is a sign vector over the circles; the four cells around the vertex
//! `±(pᵢ × pⱼ)` share the signs of every other circle, and those signs are the
//! orientations `[pₖ, pᵢ, pⱼ]`. Counting vertex incidences per sign vector gives
//! each cell's number of corners, which equals its number of sides in a simple
//! arrangement. Antipodal cells pair up into faces of the projective plane.

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::configuration::Configuration;
use crate::error::{Error, Result};
use crate::geometry::orient3;
use crate::scalar::{Scalar, Sign};

/// Face-size counts `(f₃, …, fₙ)` of the projective dual arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolygonalSpectrum(pub Vec<usize>);

impl PolygonalSpectrum {
    /// Number of `k`-gonal faces.
    pub fn f(&self, k: usize) -> usize {
        if k < 3 {
            return 0;
        }
        self.0.get(k - 3).copied().unwrap_or(0)
    }

    /// `Σ (k − 4) f_k`, which is `−4` for every simple configuration.
    pub fn euler_sum(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &f)| (i as i64 - 1) * f as i64).sum()
    }

    pub fn face_count(&self) -> usize {
        self.0.iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConvexityType {
    Heptagonal,
    Hexagonal,
    Pentagonal,
}

/// A face of the projective arrangement, given by one of its two spherical
/// sign vectors (bit `k` set when `p_k·v > 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub signs: u32,
    /// Bitmask of the dual lines carrying a side of the face.
    pub lines: u32,
    pub sides: usize,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    n: usize,
    faces: Vec<Face>,
}

impl Arrangement {
    pub fn new<T: Scalar>(c: &Configuration<T>) -> Result<Self> {
        c.require_simple()?;
        let n = c.len();
        let mut cells: HashMap<u32, (usize, u32)> = HashMap::new();
        for (i, j) in (0..n).tuple_combinations() {
            let mut base = 0u32;
            for k in (0..n).filter(|&k| k != i && k != j) {
                match orient3(c.point(k), c.point(i), c.point(j)) {
                    Sign::Positive => base |= 1 << k,
                    Sign::Negative => {}
                    Sign::Zero => unreachable!("simplicity checked"),
                }
            }
            let free = (1u32 << i) | (1u32 << j);
            let full = (1u32 << n) - 1;
            // the vertex v and its antipode -v
            for vertex_signs in [base, !base & full & !free] {
                for sub in [0, 1u32 << i, 1u32 << j, free] {
                    let e = cells.entry(vertex_signs | sub).or_insert((0, 0));
                    e.0 += 1;
                    e.1 |= free;
                }
            }
        }
        let full = (1u32 << n) - 1;
        let mut faces: Vec<Face> = cells
            .iter()
            .filter(|(s, _)| **s & 1 == 1 || !cells.contains_key(&(!**s & full)))
            .map(|(&signs, &(sides, lines))| Face { signs, lines, sides })
            .collect();
        faces.sort_by_key(|f| f.signs);
        if faces.iter().any(|f| f.signs & 1 == 0) {
            return Err(Error::InvariantViolated("arrangement cell without antipode".into()));
        }
        Ok(Arrangement { n, faces })
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn spectrum(&self) -> PolygonalSpectrum {
        let mut f = vec![0usize; self.n.saturating_sub(2)];
        for face in &self.faces {
            f[face.sides - 3] += 1;
        }
        PolygonalSpectrum(f)
    }
}

pub fn polygonal_spectrum<T: Scalar>(c: &Configuration<T>) -> Result<PolygonalSpectrum> {
    Ok(Arrangement::new(c)?.spectrum())
}

/// Classifies by the largest face: `f₇`, then `f₆`, then `f₅`.
pub fn convexity_type(f: &PolygonalSpectrum) -> ConvexityType {
    if f.f(7) > 0 {
        ConvexityType::Heptagonal
    } else if f.f(6) > 0 {
        ConvexityType::Hexagonal
    } else {
        ConvexityType::Pentagonal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::HomPoint;
    use num_bigint::BigInt;

    fn cfg(pts: &[(i64, i64)]) -> Configuration<BigInt> {
        Configuration::new(pts.iter().map(|&(x, y)| HomPoint::from_i64(x, y, 1).unwrap()).collect()).unwrap()
    }

    #[test]
    fn convex_heptagon_spectrum() {
        let c = cfg(&[(100, 0), (62, 78), (-22, 97), (-90, 43), (-90, -43), (-22, -97), (62, -78)]);
        let f = polygonal_spectrum(&c).unwrap();
        assert_eq!(f.0, vec![7, 14, 0, 0, 1]);
        assert_eq!(f.euler_sum(), -4);
        assert_eq!(convexity_type(&f), ConvexityType::Heptagonal);
    }

    #[test]
    fn five_points_spectrum() {
        let c = cfg(&[(100, 0), (31, 95), (-81, 59), (-81, -59), (31, -95)]);
        let f = polygonal_spectrum(&c).unwrap();
        assert_eq!(f.euler_sum(), -4);
        assert_eq!(f.face_count(), 11);
        assert_eq!(f.f(5), 1);
    }

    #[test]
    fn convexity_trichotomy() {
        assert_eq!(convexity_type(&PolygonalSpectrum(vec![7, 13, 1, 1, 0])), ConvexityType::Hexagonal);
        assert_eq!(convexity_type(&PolygonalSpectrum(vec![7, 12, 3, 0, 0])), ConvexityType::Pentagonal);
    }
}
