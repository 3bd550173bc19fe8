//! Wall events along linear paths, Q-isotopy certificates and path search.
//!
//! A linear path moves every point along `P(t) = a + t (b − a)` between the
//! canonical integer representatives `a`, `b` of its endpoints. Each of the 35
//! orientation determinants becomes a polynomial of degree at most 3 in `t`
//! and each of the 7 coconic determinants one of degree at most 12; walls are
//! their roots in `(0, 1)`, isolated exactly with Sturm sequences.

pub mod planted;
pub mod poly;
pub mod search;
pub mod sturm;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{class_fingerprint, q_class};
use crate::configuration::Configuration;
use crate::error::{Error, Result};
use crate::geometry::{coconic6, orient3, veronese, HomPoint};
use crate::io::format_rational;
use crate::linalg::{det, det3};
use crate::scalar::Scalar;
use poly::Poly;
use sturm::{dyadic, isolate_roots, refine, SturmSequence};

pub use search::{find_q_path, QPath, SearchConfig};

/// Isolating intervals are refined to this many bits.
pub const ISOLATION_BITS: u32 = 20;
/// Overlapping intervals of different walls are refined up to this many bits
/// before being reported as clustered.
pub const SEPARATION_BITS: u32 = 96;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPath {
    start: Configuration<BigInt>,
    end: Configuration<BigInt>,
}

impl LinearPath {
    /// Both endpoints must be typical 7-configurations; a point whose
    /// representative would vanish somewhere on the path is rejected.
    pub fn new(start: Configuration<BigInt>, end: Configuration<BigInt>) -> Result<Self> {
        for c in [&start, &end] {
            if c.len() != 7 {
                return Err(Error::WrongSize { expected: "7", got: c.len() });
            }
            c.require_typical()?;
        }
        for i in 0..7 {
            if vanishes_between(start.point(i).coords(), end.point(i).coords()) {
                return Err(Error::RepDegenerate(i));
            }
        }
        Ok(LinearPath { start, end })
    }

    pub fn start(&self) -> &Configuration<BigInt> {
        &self.start
    }

    pub fn end(&self) -> &Configuration<BigInt> {
        &self.end
    }

    /// Coordinate polynomials of every point.
    pub fn point_polys(&self) -> Vec<[Poly; 3]> {
        (0..7)
            .map(|i| {
                let (a, b) = (self.start.point(i).coords(), self.end.point(i).coords());
                std::array::from_fn(|k| Poly::linear(&a[k], &b[k]))
            })
            .collect()
    }

    /// The configuration at parameter `t`, if all points are distinct there.
    pub fn at(&self, t: &BigRational) -> Result<Configuration<BigInt>> {
        let pts = (0..7)
            .map(|i| {
                let (a, b) = (self.start.point(i).coords(), self.end.point(i).coords());
                let c: [BigRational; 3] = std::array::from_fn(|k| {
                    let a = BigRational::from_integer(a[k].clone());
                    let b = BigRational::from_integer(b[k].clone());
                    &a + (b - &a) * t
                });
                HomPoint::from_rationals(c)
            })
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(pts)
    }

    /// The 42 predicate polynomials: 35 orientations, then 7 coconic
    /// determinants (the sextuple omitting label `k` for `k = 0..7`).
    pub fn predicate_polys(&self) -> Vec<(WallKind, Poly)> {
        let pts = self.point_polys();
        let mut out: Vec<(WallKind, Poly)> = (0..7)
            .tuple_combinations()
            .map(|(i, j, k)| (WallKind::Collinear([i, j, k]), det3(&pts[i], &pts[j], &pts[k])))
            .collect();
        let ver: Vec<[Poly; 6]> = pts.iter().map(veronese).collect();
        for omit in (0..7).rev() {
            let labels: Vec<usize> = (0..7).filter(|&l| l != omit).collect();
            let rows: Vec<&[Poly]> = labels.iter().map(|&l| ver[l].as_slice()).collect();
            let sext: [usize; 6] = std::array::from_fn(|k| labels[k]);
            out.push((WallKind::Coconic(sext), det(&rows)));
        }
        out
    }
}

/// Signs of the 42 predicates of [`LinearPath::predicate_polys`] on the
/// canonical representatives of `c`. An event-free linear path has equal
/// signs at both ends.
pub fn wall_signs(c: &Configuration<BigInt>) -> Vec<i8> {
    let mut out: Vec<i8> = (0..7)
        .tuple_combinations()
        .map(|(i, j, k)| orient3(c.point(i), c.point(j), c.point(k)).as_i8())
        .collect();
    for omit in (0..7).rev() {
        let labels: Vec<usize> = (0..7).filter(|&l| l != omit).collect();
        out.push(coconic6(std::array::from_fn(|k| c.point(labels[k]))).as_i8());
    }
    out
}

/// `(1 − t) a + t b = 0` for some `t ∈ [0, 1]`: `b` is a non-positive
/// multiple of `a`.
fn vanishes_between(a: &[BigInt; 3], b: &[BigInt; 3]) -> bool {
    let cross_zero = (0..3).all(|i| (0..3).all(|j| &a[i] * &b[j] == &a[j] * &b[i]));
    cross_zero && (0..3).any(|k| (a[k].is_positive() && b[k].is_negative()) || (a[k].is_negative() && b[k].is_positive()))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "labels", rename_all = "lowercase")]
pub enum WallKind {
    Collinear([usize; 3]),
    Coconic([usize; 6]),
}

impl WallKind {
    pub fn is_collinear(&self) -> bool {
        matches!(self, WallKind::Collinear(_))
    }

    pub fn labels(&self) -> &[usize] {
        match self {
            WallKind::Collinear(l) => l,
            WallKind::Coconic(l) => l,
        }
    }
}

impl std::fmt::Display for WallKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let labels = self.labels().iter().join(",");
        match self {
            WallKind::Collinear(_) => write!(f, "collinear {{{labels}}}"),
            WallKind::Coconic(_) => write!(f, "coconic {{{labels}}}"),
        }
    }
}

/// One root of one predicate polynomial, isolated in `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallEvent {
    pub kind: WallKind,
    pub lo: BigRational,
    pub hi: BigRational,
    /// The interval still overlaps another event's after refinement.
    pub clustered: bool,
}

impl WallEvent {
    pub fn view(&self) -> WallEventView {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        WallEventView {
            wall: self.kind.clone(),
            interval: [format_rational(&self.lo), format_rational(&self.hi)],
            approx_t: Scalar::to_f64(&mid),
            clustered: self.clustered,
        }
    }
}

/// Serializable form of a [`WallEvent`] with rationals as strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WallEventView {
    #[serde(flatten)]
    pub wall: WallKind,
    pub interval: [String; 2],
    pub approx_t: f64,
    pub clustered: bool,
}

fn overlaps(a: &WallEvent, b: &WallEvent) -> bool {
    a.lo < b.hi && b.lo < a.hi
}

/// Every wall crossed in `(0, 1)`, sorted by position. Each event's interval
/// contains exactly one root of its predicate polynomial.
pub fn wall_events(path: &LinearPath) -> Result<Vec<WallEvent>> {
    let (zero, one) = (BigRational::zero(), BigRational::one());
    let width = dyadic(ISOLATION_BITS);
    let polys = path.predicate_polys();
    let found: Vec<(usize, SturmSequence, Vec<(BigRational, BigRational)>)> = polys
        .par_iter()
        .enumerate()
        .filter_map(|(i, (_, p))| {
            if p.is_zero() {
                return Some(Err(Error::InvariantViolated(format!("predicate {i} vanishes identically"))));
            }
            let s = SturmSequence::new(p);
            if s.count(&zero, &one) == 0 {
                return None;
            }
            let roots = isolate_roots(&s, &zero, &one, &width);
            Some(Ok((i, s, roots)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut events: Vec<(usize, WallEvent)> = Vec::new();
    for (i, _, roots) in &found {
        for (lo, hi) in roots {
            events.push((*i, WallEvent { kind: polys[*i].0.clone(), lo: lo.clone(), hi: hi.clone(), clustered: false }));
        }
    }
    separate(&mut events, &found);
    let mut events: Vec<WallEvent> = events.into_iter().map(|(_, e)| e).collect();
    events.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.kind.cmp(&b.kind)));
    Ok(events)
}

/// Refines overlapping intervals of different predicates; pairs that still
/// overlap at [`SEPARATION_BITS`] are flagged as clustered.
fn separate(events: &mut [(usize, WallEvent)], found: &[(usize, SturmSequence, Vec<(BigRational, BigRational)>)]) {
    let sturm = |i: usize| &found.iter().find(|(j, _, _)| *j == i).unwrap().1;
    let mut bits = ISOLATION_BITS;
    loop {
        let mut clash = vec![false; events.len()];
        for (x, y) in (0..events.len()).tuple_combinations() {
            if overlaps(&events[x].1, &events[y].1) {
                clash[x] = true;
                clash[y] = true;
            }
        }
        if !clash.contains(&true) {
            return;
        }
        if bits >= SEPARATION_BITS {
            for (e, c) in events.iter_mut().zip(clash) {
                e.1.clustered |= c;
            }
            return;
        }
        bits = (bits * 2).min(SEPARATION_BITS);
        let width = dyadic(bits);
        for (e, c) in events.iter_mut().zip(clash) {
            if c {
                let (lo, hi) = refine(sturm(e.0), &e.1.lo, &e.1.hi, &width);
                e.1.lo = lo;
                e.1.hi = hi;
            }
        }
    }
}

/// Result of [`is_q_isotopy`].
#[derive(Clone, Debug)]
pub struct IsotopyCheck {
    pub certified: bool,
    pub events: Vec<WallEvent>,
}

/// `true` when the path crosses no wall. A certified path must join
/// configurations with equal fingerprints; a mismatch is reported as an
/// invariant violation.
pub fn is_q_isotopy(path: &LinearPath) -> Result<IsotopyCheck> {
    let events = wall_events(path)?;
    let certified = events.is_empty();
    if certified {
        let (a, b) = (class_fingerprint(path.start())?, class_fingerprint(path.end())?);
        if a != b {
            return Err(Error::InvariantViolated(format!("certified path joins {a} and {b}")));
        }
    }
    Ok(IsotopyCheck { certified, events })
}

/// Classes of both endpoints, for reporting.
pub fn endpoint_classes(path: &LinearPath) -> Result<(String, String)> {
    Ok((q_class(path.start())?.name().to_string(), q_class(path.end())?.name().to_string()))
}
