//! Dominance data of typical 7-configurations: which points lie outside the
//! conics through five of the others, and everything derived from it.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::code::deltas;
use super::spectrum::{convexity_type, Arrangement, ConvexityType};
use crate::configuration::{adjacency_graph, AdjacencyGraph, Configuration};
use crate::error::{Error, Result};
use crate::geometry::{conic_through5, side_of_conic, Conic, Side};
use crate::scalar::Scalar;

/// `bits[i][j] = 1` when point `i` lies outside the conic through the five
/// points other than `i` and `j`. The diagonal is unused and zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominanceMatrix {
    pub bits: [[u8; 7]; 7],
}

impl DominanceMatrix {
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.bits[i][j]
    }

    pub fn relabel(&self, perm: &[usize]) -> DominanceMatrix {
        let mut bits = [[0u8; 7]; 7];
        for i in 0..7 {
            for j in 0..7 {
                bits[i][j] = self.bits[perm[i]][perm[j]];
            }
        }
        DominanceMatrix { bits }
    }
}

/// Dominance index of every label (row sums of the matrix).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominanceIndices(pub [usize; 7]);

impl DominanceIndices {
    pub fn label_with(&self, value: usize) -> Option<usize> {
        let mut it = self.0.iter().positions(|&d| d == value);
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }
}

/// The 21 conics `Q_{i,j}` through the points other than `i` and `j`,
/// indexed by `i < j`.
pub fn pair_conics<T: Scalar>(c: &Configuration<T>) -> Result<Vec<((usize, usize), Conic<T>)>> {
    if c.len() != 7 {
        return Err(Error::WrongSize { expected: "7", got: c.len() });
    }
    (0..7)
        .tuple_combinations()
        .map(|(i, j)| {
            let rest: Vec<usize> = (0..7).filter(|&k| k != i && k != j).collect();
            let q = conic_through5([0, 1, 2, 3, 4].map(|k| c.point(rest[k])))?;
            Ok(((i, j), q))
        })
        .collect()
}

pub fn dominance_matrix<T: Scalar>(c: &Configuration<T>) -> Result<DominanceMatrix> {
    c.require_typical()?;
    let mut bits = [[0u8; 7]; 7];
    for ((i, j), q) in pair_conics(c)? {
        for (a, b) in [(i, j), (j, i)] {
            bits[a][b] = match side_of_conic(&q, c.point(a)) {
                Side::Outside => 1,
                Side::Inside => 0,
                Side::On => {
                    return Err(Error::InvariantViolated(format!("point {a} on conic Q_{{{i},{j}}}")));
                }
            };
        }
    }
    Ok(DominanceMatrix { bits })
}

pub fn dominance_indices(m: &DominanceMatrix) -> DominanceIndices {
    let mut d = [0usize; 7];
    for (i, row) in m.bits.iter().enumerate() {
        d[i] = row.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, &b)| b as usize).sum();
    }
    DominanceIndices(d)
}

/// Index sequence read along the canonical numeration of a heptagon.
pub const CANONICAL_SEQUENCE: [usize; 7] = [6, 1, 4, 3, 2, 5, 0];

fn heptagon_cycle<T: Scalar>(c: &Configuration<T>) -> Result<(AdjacencyGraph, Vec<usize>)> {
    if c.len() != 7 {
        return Err(Error::WrongSize { expected: "7", got: c.len() });
    }
    let f = Arrangement::new(c)?.spectrum();
    if convexity_type(&f) != ConvexityType::Heptagonal {
        return Err(Error::NotHeptagonal);
    }
    let g = adjacency_graph(c)?;
    let cycle = g.hamiltonian_cycle().ok_or(Error::NotHeptagonal)?;
    Ok((g, cycle))
}

/// Labels in canonical cyclic order: the heptagon read from the point of
/// index 6 towards its neighbor of index 1, so that the indices read
/// `6, 1, 4, 3, 2, 5, 0`.
pub fn canonical_cyclic_numeration<T: Scalar>(c: &Configuration<T>) -> Result<Vec<usize>> {
    c.require_typical()?;
    let (_, cycle) = heptagon_cycle(c)?;
    let d = dominance_indices(&dominance_matrix(c)?);
    let mut found: Vec<Vec<usize>> = Vec::new();
    for start in 0..7 {
        for dir in [1usize, 6] {
            let seq: Vec<usize> = (0..7).map(|k| cycle[(start + dir * k) % 7]).collect();
            if seq.iter().map(|&l| d.0[l]).eq(CANONICAL_SEQUENCE) {
                found.push(seq);
            }
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::CanonicalizationFailed),
        _ => Err(Error::Ambiguous("several canonical numerations".into())),
    }
}

/// `(position of the index-6 point, position of the index-0 point)` for the
/// marked point in region `A_i`, with positions taken in
/// [`marked_heptagon_numeration`].
pub const REGION_TABLE: [(usize, usize); 7] = [(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (6, 5), (6, 0)];

/// Heptagonal numeration `p₀ = marked, p₁, …, p₆`. The regions `A_i` are
/// nested: `p₀` lies inside the conics `Q_{0,1}, …, Q_{0,i}` and outside the
/// rest, so `p₁` is the neighbor whose conic contains `p₀`. When both or
/// neither do (`A₀`, `A₆`), `p₁` is the neighbor of index 0 or the one not of
/// index 6 respectively.
pub fn marked_heptagon_numeration<T: Scalar>(c: &Configuration<T>, marked: usize) -> Result<Vec<usize>> {
    c.require_typical()?;
    if marked >= 7 {
        return Err(Error::NotApplicable(format!("label {marked} out of range")));
    }
    let (_, cycle) = heptagon_cycle(c)?;
    let m = dominance_matrix(c)?;
    let d = dominance_indices(&m);
    let pos = cycle.iter().position(|&l| l == marked).unwrap();
    let fwd = cycle[(pos + 1) % 7];
    let back = cycle[(pos + 6) % 7];
    let toward_fwd = match (m.get(marked, fwd), m.get(marked, back)) {
        (0, 1) => true,
        (1, 0) => false,
        (1, 1) => d.0[fwd] == 0,
        _ => d.0[back] == 6,
    };
    let dir = if toward_fwd { 1 } else { 6 };
    Ok((0..7).map(|k| cycle[(pos + dir * k) % 7]).collect())
}

/// Region `A_i` of the marked point: `i = 6 − d(marked)`, checked against
/// the positions of the points with extreme dominance indices.
pub fn heptagonal_region<T: Scalar>(c: &Configuration<T>, marked: usize) -> Result<usize> {
    let order = marked_heptagon_numeration(c, marked)?;
    let d = dominance_indices(&dominance_matrix(c)?);
    let top = d.label_with(6).ok_or_else(|| Error::NotApplicable("no unique index-6 point".into()))?;
    let bottom = d.label_with(0).ok_or_else(|| Error::NotApplicable("no unique index-0 point".into()))?;
    let key = (
        order.iter().position(|&l| l == top).unwrap(),
        order.iter().position(|&l| l == bottom).unwrap(),
    );
    let region = 6 - d.0[marked];
    if REGION_TABLE[region] != key {
        return Err(Error::InvariantViolated(format!("region A{region} with extreme points at positions {key:?}")));
    }
    Ok(region)
}

/// Decoration of an edge between two points of adjacency class 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeDecoration {
    /// Both endpoints inside their shared conic.
    Internal,
    /// Both outside.
    External,
    /// Directed from the endpoint inside to the endpoint outside.
    Special { from: usize, to: usize },
}

pub fn decoration_of(m: &DominanceMatrix, a: usize, b: usize) -> EdgeDecoration {
    match (m.get(a, b), m.get(b, a)) {
        (0, 0) => EdgeDecoration::Internal,
        (1, 1) => EdgeDecoration::External,
        (0, _) => EdgeDecoration::Special { from: a, to: b },
        _ => EdgeDecoration::Special { from: b, to: a },
    }
}

/// Decorations of every adjacency edge whose endpoints both have `δ = 1`.
pub fn edge_decorations<T: Scalar>(c: &Configuration<T>) -> Result<Vec<((usize, usize), EdgeDecoration)>> {
    c.require_typical()?;
    let delta = deltas(c)?;
    let g = adjacency_graph(c)?;
    let m = dominance_matrix(c)?;
    Ok(decorations_from(&g, &delta, &m))
}

pub(crate) fn decorations_from(
    g: &AdjacencyGraph,
    delta: &[usize],
    m: &DominanceMatrix,
) -> Vec<((usize, usize), EdgeDecoration)> {
    g.edges()
        .iter()
        .filter(|&&(a, b)| delta[a] == 1 && delta[b] == 1)
        .map(|&(a, b)| ((a, b), decoration_of(m, a, b)))
        .collect()
}

/// The distinguished point of a hexagonal or pentagonal (`σ₁ = 1`)
/// configuration: the unique point whose removal leaves a cyclic
/// 6-configuration and, in the hexagonal case, which lies inside the hexagon
/// formed by the others. `None` when no point has `δ = 1`.
pub fn marked_point<T: Scalar>(c: &Configuration<T>) -> Result<Option<usize>> {
    c.require_typical()?;
    let delta = deltas(c)?;
    marked_point_from(&Arrangement::new(c)?, &delta)
}

pub(crate) fn marked_point_from(arr: &Arrangement, delta: &[usize]) -> Result<Option<usize>> {
    let ones: Vec<usize> = delta.iter().positions(|&d| d == 1).collect();
    match convexity_type(&arr.spectrum()) {
        ConvexityType::Heptagonal => Err(Error::NotApplicable("heptagonal configuration".into())),
        ConvexityType::Hexagonal => {
            let hex: Vec<_> = arr.faces().iter().filter(|f| f.sides == 6).collect();
            if hex.len() != 1 {
                return Err(Error::Ambiguous(format!("{} hexagonal faces", hex.len())));
            }
            let missing = (0..delta.len()).find(|&k| hex[0].lines & (1 << k) == 0);
            match missing {
                Some(k) if delta[k] == 1 => Ok(Some(k)),
                Some(k) => Err(Error::Ambiguous(format!("interior point {k} has δ = {}", delta[k]))),
                None => Err(Error::Ambiguous("hexagonal face uses every line".into())),
            }
        }
        ConvexityType::Pentagonal => match ones.len() {
            0 => Ok(None),
            1 => Ok(Some(ones[0])),
            k => Err(Error::Ambiguous(format!("{k} points with δ = 1 in a pentagonal configuration"))),
        },
    }
}
