//! Elementary quadratic Cremona transformations based at three points of a
//! configuration.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{q_class, QClass};
use crate::configuration::Configuration;
use crate::error::{Error, Result};
use crate::geometry::HomPoint;
use crate::linalg::{adjugate3, mat_vec3};
use crate::scalar::Scalar;

/// Three distinct labels, stored in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CremonaBase(pub [usize; 3]);

impl CremonaBase {
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        let mut b = [i, j, k];
        b.sort_unstable();
        if b[0] == b[1] || b[1] == b[2] {
            return Err(Error::NotApplicable(format!("repeated base label in {i}{j}{k}")));
        }
        Ok(CremonaBase(b))
    }

    /// All 35 bases of a 7-configuration.
    pub fn all() -> Vec<CremonaBase> {
        (0..7).tuple_combinations().map(|(i, j, k)| CremonaBase([i, j, k])).collect()
    }

    pub fn contains(&self, label: usize) -> bool {
        self.0.contains(&label)
    }
}

impl std::fmt::Display for CremonaBase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [i, j, k] = self.0;
        write!(f, "{i}{j}{k}")
    }
}

impl std::str::FromStr for CremonaBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<usize> = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse(format!("bad base {s:?}")))?;
        match digits[..] {
            [i, j, k] => CremonaBase::new(i, j, k),
            _ => Err(Error::Parse(format!("bad base {s:?}"))),
        }
    }
}

/// Projective frame sending the base points to the coordinate points and
/// the lowest non-base label to `(1:1:1)`.
pub fn cremona_frame<T: Scalar>(c: &Configuration<T>, base: CremonaBase) -> Result<[[T; 3]; 3]> {
    let [i, j, k] = base.0;
    if k >= c.len() {
        return Err(Error::NotApplicable(format!("base {base} out of range")));
    }
    let col = |l: usize, r: usize| c.point(l).coords()[r].clone();
    let m: [[T; 3]; 3] = std::array::from_fn(|r| [col(i, r), col(j, r), col(k, r)]);
    let adj = adjugate3(&m);
    let fourth = (0..c.len()).find(|l| !base.contains(*l)).expect("at least four points");
    let u = mat_vec3(&adj, c.point(fourth).coords());
    if u.iter().any(|x| x.sign().is_zero()) {
        return Err(Error::NotSimple(vec![base.0]));
    }
    let scale = [
        u[1].clone() * &u[2],
        u[0].clone() * &u[2],
        u[0].clone() * &u[1],
    ];
    Ok(std::array::from_fn(|r| std::array::from_fn(|s| scale[r].clone() * &adj[r][s])))
}

/// `Cr_{ijk}`: normalize the base to the coordinate triangle, apply
/// `(x:y:z) ↦ (yz:xz:xy)` to the remaining points, and put the images of the
/// contracted lines at the base labels (label `i` receives `(1:0:0)`, the
/// image of the line `p_j p_k`, and so on).
pub fn cremona<T: Scalar>(c: &Configuration<T>, base: CremonaBase) -> Result<Configuration<T>> {
    if c.len() != 7 {
        return Err(Error::WrongSize { expected: "7", got: c.len() });
    }
    c.require_typical()?;
    let frame = cremona_frame(c, base)?;
    let unit = |r: usize| -> [T; 3] { std::array::from_fn(|s| if s == r { T::one() } else { T::zero() }) };
    let points = (0..7)
        .map(|l| {
            if let Some(r) = base.0.iter().position(|&b| b == l) {
                return HomPoint::new(unit(r));
            }
            let [x, y, z] = mat_vec3(&frame, c.point(l).coords());
            HomPoint::new([y.clone() * &z, x.clone() * &z, x * &y])
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::ImageDegenerate { base: base.0 })?;
    let image = Configuration::new(points).map_err(|_| Error::ImageDegenerate { base: base.0 })?;
    if !image.is_typical() {
        return Err(Error::ImageDegenerate { base: base.0 });
    }
    Ok(image)
}

/// Class of the image under every one of the 35 bases.
pub fn cremona_orbit<T: Scalar>(c: &Configuration<T>) -> Result<BTreeMap<CremonaBase, QClass>> {
    c.require_typical()?;
    CremonaBase::all()
        .into_par_iter()
        .map(|b| Ok((b, q_class(&cremona(c, b)?)?)))
        .collect()
}
