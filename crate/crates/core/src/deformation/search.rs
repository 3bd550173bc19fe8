//! Randomized search for certified piecewise-linear Q-deformations.

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{wall_events, wall_signs, LinearPath};
use crate::classifier::fingerprint::{canonical_form, minimizing_perms};
use crate::classifier::SevenAnalysis;
use crate::configuration::Configuration;
use crate::error::{Error, Result};
use crate::geometry::HomPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of segment certifications (calls to `wall_events`).
    pub budget: usize,
    pub seed: u64,
    /// Maximum subdivision depth of a single segment.
    pub max_depth: usize,
    /// Waypoint candidates tried per subdivision.
    pub tries: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: 400, seed: 0, max_depth: 8, tries: 3 }
    }
}

/// A chain of configurations whose consecutive pairs are joined by
/// event-free linear paths. The last waypoint is the target relabeled by
/// `relabeling` (its label `k` is the target's label `relabeling[k]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPath {
    pub waypoints: Vec<Configuration<BigInt>>,
    pub relabeling: Vec<usize>,
    pub calls: usize,
}

impl QPath {
    pub fn segments(&self) -> impl Iterator<Item = (&Configuration<BigInt>, &Configuration<BigInt>)> {
        self.waypoints.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn segment_count(&self) -> usize {
        self.waypoints.len().saturating_sub(1)
    }
}

fn bit_size(c: &Configuration<BigInt>) -> u64 {
    c.points().iter().flat_map(|p| p.coords().iter()).map(|x| x.bits()).max().unwrap_or(0)
}

/// Drops low bits so no coordinate exceeds `limit` bits.
fn shorten(p: HomPoint<BigInt>, limit: u64) -> Option<HomPoint<BigInt>> {
    let bits = p.coords().iter().map(|x| x.bits()).max().unwrap_or(0);
    if bits <= limit {
        return Some(p);
    }
    let shift = bits - limit;
    HomPoint::new(p.into_coords().map(|x| x >> shift)).ok()
}

/// Candidate waypoints drawn per attempt; cheap compared with certification.
const SAMPLES: usize = 64;

struct Search<'a> {
    cfg: SearchConfig,
    rng: ChaCha8Rng,
    calls: usize,
    signs: &'a [i8],
}

impl Search<'_> {
    fn certify(&mut self, p: &Configuration<BigInt>, q: &Configuration<BigInt>) -> Result<Option<bool>> {
        if self.calls >= self.cfg.budget {
            return Ok(None);
        }
        self.calls += 1;
        let path = match LinearPath::new(p.clone(), q.clone()) {
            Ok(path) => path,
            Err(Error::RepDegenerate(_)) => return Ok(Some(false)),
            Err(e) => return Err(e),
        };
        Ok(Some(wall_events(&path)?.is_empty()))
    }

    /// A random configuration near the segment from `p` to `q` with the same
    /// predicate signs as the endpoints, from up to [`SAMPLES`] candidates.
    fn waypoint(&mut self, p: &Configuration<BigInt>, q: &Configuration<BigInt>, depth: usize) -> Option<Configuration<BigInt>> {
        const SCALE: i64 = 1 << 12;
        let limit = bit_size(p).max(bit_size(q)) + 8;
        for _ in 0..SAMPLES {
            let t = self.rng.random_range(SCALE / 4..=3 * SCALE / 4);
            let shrink = depth + self.rng.random_range(1..=6);
            let pts = (0..7)
                .map(|i| {
                    let (a, b) = (p.point(i).coords(), q.point(i).coords());
                    let reach = (0..3).map(|k| (&b[k] - &a[k]).abs()).max().unwrap() * SCALE;
                    let radius = (reach >> shrink).max(BigInt::from(1));
                    let coords: [BigInt; 3] = std::array::from_fn(|k| {
                        let r = self.rng.random_range(-1_000_000i64..=1_000_000);
                        &a[k] * (SCALE - t) + &b[k] * t + &radius * r / 1_000_000
                    });
                    HomPoint::new(coords).ok()
                })
                .collect::<Option<Vec<_>>>()
                .and_then(|pts| pts.into_iter().map(|q| shorten(q, limit)).collect::<Option<Vec<_>>>());
            let Some(m) = pts.and_then(|pts| Configuration::new(pts).ok()) else { continue };
            if wall_signs(&m) == self.signs {
                return Some(m);
            }
        }
        None
    }

    /// Waypoints after `p` up to and including `q`.
    fn segment(
        &mut self,
        p: &Configuration<BigInt>,
        q: &Configuration<BigInt>,
        depth: usize,
    ) -> Result<Option<Vec<Configuration<BigInt>>>> {
        match self.certify(p, q)? {
            None => return Ok(None),
            Some(true) => return Ok(Some(vec![q.clone()])),
            Some(false) => {}
        }
        if depth >= self.cfg.max_depth {
            return Ok(None);
        }
        for _ in 0..self.cfg.tries {
            if self.calls >= self.cfg.budget {
                return Ok(None);
            }
            let Some(m) = self.waypoint(p, q, depth) else { continue };
            let Some(mut left) = self.segment(p, &m, depth + 1)? else { continue };
            let Some(right) = self.segment(&m, q, depth + 1)? else { continue };
            left.extend(right);
            return Ok(Some(left));
        }
        Ok(None)
    }
}

/// Searches for a certified piecewise-linear Q-deformation from `a` to `b`.
/// `Ok(None)` means the budget ran out, which proves nothing.
///
/// Linear paths never move a canonical representative across the plane
/// `x = 0`, so the 42 predicate signs of [`wall_signs`] are constant along
/// any certified chain. Only relabelings of `b` whose signs equal those of
/// `a` are tried; when there is none the search returns `Ok(None)` without
/// spending budget.
pub fn find_q_path(a: &Configuration<BigInt>, b: &Configuration<BigInt>, cfg: SearchConfig) -> Result<Option<QPath>> {
    let (fa, fb) = (SevenAnalysis::new(a)?, SevenAnalysis::new(b)?);
    let (ca, pa) = canonical_form(&fa.features());
    let (cb, _) = canonical_form(&fb.features());
    if ca != cb {
        let name = |c: &SevenAnalysis, fp: &str| {
            c.class_in(crate::classifier::calibration_table()).map(|q| q.name().to_string()).unwrap_or(fp.to_string())
        };
        return Err(Error::ClassMismatch(name(&fa, &ca.0), name(&fb, &cb.0)));
    }
    let identity: Vec<usize> = (0..7).collect();
    if a == b {
        return Ok(Some(QPath { waypoints: vec![a.clone()], relabeling: identity, calls: 0 }));
    }
    let signs = wall_signs(a);
    let mut inv_pa = [0; 7];
    for (pos, &l) in pa.iter().enumerate() {
        inv_pa[l] = pos;
    }
    let mut candidates: Vec<Vec<usize>> = minimizing_perms(&fb.features())
        .into_iter()
        .map(|pb| (0..7).map(|l| pb[inv_pa[l]]).collect())
        .filter(|tau: &Vec<usize>| wall_signs(&b.relabel(tau)) == signs)
        .collect();
    candidates.sort();
    if let Some(i) = candidates.iter().position(|t| *t == identity) {
        candidates.swap(0, i);
    }
    let mut search = Search { cfg, rng: ChaCha8Rng::seed_from_u64(cfg.seed), calls: 0, signs: &signs };
    for tau in candidates {
        let target = b.relabel(&tau);
        if let Some(rest) = search.segment(a, &target, 0)? {
            let mut waypoints = vec![a.clone()];
            waypoints.extend(rest);
            return Ok(Some(QPath { waypoints, relabeling: tau, calls: search.calls }));
        }
        if search.calls >= cfg.budget {
            break;
        }
    }
    Ok(None)
}
