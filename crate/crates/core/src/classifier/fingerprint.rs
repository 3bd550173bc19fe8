//! Canonical class fingerprints.
//!
//! A fingerprint is the lexicographically smallest encoding of the decorated
//! adjacency data over all relabelings of the points. Every ingredient is
//! constant along Q-deformations, so equal configurations up to deformation
//! and relabeling get equal fingerprints.
//!
//! Encoding of a 7-configuration (label `k` of the relabeled copy):
//!
//! ```text
//! s<σ₁σ₂σ₃σ₆>|d<δ per label>|m<1 at the marked point>|c<color per label>|x<dominance index per label>|g<edge bits>|e<decorations>
//! ```
//!
//! Colors are the dominance of each point in the 6-configuration without the
//! marked point (`1` dominant, `0` subdominant, `*` for the marked point,
//! `-` everywhere when there is no marked point). Edge bits and decorations
//! run over pairs `k < l` in lexicographic order; decorations are `I`
//! (internal), `E` (external), `>` (special, from `k` to `l`), `<` (special,
//! from `l` to `k`) and `.` otherwise.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::code::DerivativeCode;
use super::dominance::{decoration_of, DominanceMatrix, EdgeDecoration};
use crate::configuration::AdjacencyGraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassFingerprint(pub String);

impl std::fmt::Display for ClassFingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Labeled invariants of a typical 7-configuration feeding the fingerprint.
#[derive(Clone, Debug)]
pub struct Features<'a> {
    pub code: DerivativeCode,
    pub delta: &'a [usize],
    pub graph: &'a AdjacencyGraph,
    pub marked: Option<usize>,
    pub dominance: &'a DominanceMatrix,
}

static PERMS7: LazyLock<Vec<Vec<usize>>> = LazyLock::new(|| (0..7).permutations(7).collect());
static PERMS6: LazyLock<Vec<Vec<usize>>> = LazyLock::new(|| (0..6).permutations(6).collect());

fn bit(b: bool) -> u8 {
    if b {
        b'1'
    } else {
        b'0'
    }
}

/// Encoding of the configuration relabeled by `perm` (new label `k` is old
/// label `perm[k]`).
pub fn encode(f: &Features<'_>, perm: &[usize]) -> Vec<u8> {
    let mut out = Vec::with_capacity(80);
    out.push(b's');
    out.extend(f.code.0.iter().map(|&s| b'0' + s as u8));
    out.extend_from_slice(b"|d");
    out.extend(perm.iter().map(|&v| b'0' + f.delta[v] as u8));
    out.extend_from_slice(b"|m");
    out.extend(perm.iter().map(|&v| bit(f.marked == Some(v))));
    out.extend_from_slice(b"|c");
    out.extend(perm.iter().map(|&v| match f.marked {
        None => b'-',
        Some(m) if m == v => b'*',
        Some(m) => bit(f.dominance.get(v, m) == 1),
    }));
    out.extend_from_slice(b"|x");
    out.extend(perm.iter().map(|&v| b'0' + row_sum(f.dominance, v)));
    out.extend_from_slice(b"|g");
    for (k, l) in (0..perm.len()).tuple_combinations() {
        out.push(bit(f.graph.has_edge(perm[k], perm[l])));
    }
    out.extend_from_slice(b"|e");
    for (k, l) in (0..perm.len()).tuple_combinations() {
        let (a, b) = (perm[k], perm[l]);
        let ch = if f.graph.has_edge(a, b) && f.delta[a] == 1 && f.delta[b] == 1 {
            match decoration_of(f.dominance, a, b) {
                EdgeDecoration::Internal => b'I',
                EdgeDecoration::External => b'E',
                EdgeDecoration::Special { from, .. } if from == a => b'>',
                EdgeDecoration::Special { .. } => b'<',
            }
        } else {
            b'.'
        };
        out.push(ch);
    }
    out
}

fn row_sum(m: &DominanceMatrix, v: usize) -> u8 {
    (0..7).filter(|&j| j != v).map(|j| m.get(v, j)).sum()
}

/// The per-label part of the encoding: `(δ, marked flag, color, index)`.
fn vertex_key(f: &Features<'_>, v: usize) -> [u8; 4] {
    let color = match f.marked {
        None => b'-',
        Some(m) if m == v => b'*',
        Some(m) => bit(f.dominance.get(v, m) == 1),
    };
    [f.delta[v] as u8, bit(f.marked == Some(v)), color, row_sum(f.dominance, v)]
}

/// Relabelings listing the labels in nondecreasing key order. Only these can
/// minimize the per-label prefix of the encoding.
fn key_sorted_perms(f: &Features<'_>) -> Vec<Vec<usize>> {
    let mut labels: Vec<usize> = (0..7).collect();
    labels.sort_by_key(|&v| vertex_key(f, v));
    let blocks: Vec<Vec<usize>> = labels
        .chunk_by(|&a, &b| vertex_key(f, a) == vertex_key(f, b))
        .map(|b| b.to_vec())
        .collect();
    blocks
        .iter()
        .map(|b| b.iter().copied().permutations(b.len()).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(|parts| parts.concat())
        .collect()
}

/// Smallest encoding over all relabelings, with one relabeling attaining it.
pub fn canonical_form(f: &Features<'_>) -> (ClassFingerprint, Vec<usize>) {
    let (bytes, perm) = key_sorted_perms(f)
        .into_iter()
        .map(|p| (encode(f, &p), p))
        .min()
        .expect("nonempty permutation set");
    (ClassFingerprint(String::from_utf8(bytes).expect("ascii")), perm)
}

/// Every relabeling attaining the canonical encoding.
pub fn minimizing_perms(f: &Features<'_>) -> Vec<Vec<usize>> {
    let encoded: Vec<(Vec<u8>, Vec<usize>)> = key_sorted_perms(f).into_iter().map(|p| (encode(f, &p), p)).collect();
    let best = encoded.iter().map(|(e, _)| e).min().expect("nonempty").clone();
    encoded.into_iter().filter(|(e, _)| *e == best).map(|(_, p)| p).collect()
}

/// Same as [`canonical_form`] but over all 5040 relabelings.
pub fn canonical_form_exhaustive(f: &Features<'_>) -> (ClassFingerprint, Vec<usize>) {
    let (bytes, perm) = PERMS7
        .iter()
        .map(|p| (encode(f, p), p.clone()))
        .min()
        .expect("nonempty permutation set");
    (ClassFingerprint(String::from_utf8(bytes).expect("ascii")), perm)
}

pub fn fingerprint(f: &Features<'_>) -> ClassFingerprint {
    canonical_form(f).0
}

/// Canonical encoding of a typical 6-configuration: class, dominance colors
/// and adjacency edges.
pub fn six_fingerprint(graph: &AdjacencyGraph, colors: &[u8]) -> ClassFingerprint {
    let k = graph.component_count();
    let best = PERMS6
        .iter()
        .map(|perm| {
            let mut out = format!("n6|k{k}|c").into_bytes();
            out.extend(perm.iter().map(|&v| b'0' + colors[v]));
            out.extend_from_slice(b"|g");
            for (a, b) in (0..6).tuple_combinations() {
                out.push(bit(graph.has_edge(perm[a], perm[b])));
            }
            out
        })
        .min()
        .expect("nonempty");
    ClassFingerprint(String::from_utf8(best).expect("ascii"))
}

/// The fourteen Q-deformation classes of typical 7-configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QClass {
    C7000,
    C3400_1,
    C3400_2,
    C2230_1,
    C2230_2,
    C2230_3,
    C1222,
    C1060,
    C1600,
    C1420,
    C1240,
    C0430,
    C0610,
    C0331,
}

impl QClass {
    pub const ALL: [QClass; 14] = [
        QClass::C7000,
        QClass::C3400_1,
        QClass::C3400_2,
        QClass::C2230_1,
        QClass::C2230_2,
        QClass::C2230_3,
        QClass::C1222,
        QClass::C1060,
        QClass::C1600,
        QClass::C1420,
        QClass::C1240,
        QClass::C0430,
        QClass::C0610,
        QClass::C0331,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QClass::C7000 => "(7,0,0,0)",
            QClass::C3400_1 => "(3,4,0,0)_1",
            QClass::C3400_2 => "(3,4,0,0)_2",
            QClass::C2230_1 => "(2,2,3,0)_1",
            QClass::C2230_2 => "(2,2,3,0)_2",
            QClass::C2230_3 => "(2,2,3,0)_3",
            QClass::C1222 => "(1,2,2,2)",
            QClass::C1060 => "(1,0,6,0)",
            QClass::C1600 => "(1,6,0,0)",
            QClass::C1420 => "(1,4,2,0)",
            QClass::C1240 => "(1,2,4,0)",
            QClass::C0430 => "(0,4,3,0)",
            QClass::C0610 => "(0,6,1,0)",
            QClass::C0331 => "(0,3,3,1)",
        }
    }

    pub fn from_name(name: &str) -> Option<QClass> {
        QClass::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn code(self) -> DerivativeCode {
        let n = self.name();
        let inner = &n[1..n.find(')').unwrap()];
        let v: Vec<usize> = inner.split(',').map(|s| s.parse().unwrap()).collect();
        DerivativeCode([v[0], v[1], v[2], v[3]])
    }

    /// Position within the derivative code (1-based) for split codes.
    pub fn subscript(self) -> Option<usize> {
        self.name().split_once('_').map(|(_, s)| s.parse().unwrap())
    }

    /// Classes sharing a derivative code, in subscript order.
    pub fn with_code(code: DerivativeCode) -> Vec<QClass> {
        QClass::ALL.into_iter().filter(|c| c.code() == code).collect()
    }
}

impl std::fmt::Display for QClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

const TABLE_HEADER: &str = "# heptad class fingerprint table v1";

/// Fingerprint → class map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CalibrationTable {
    entries: BTreeMap<ClassFingerprint, QClass>,
}

impl CalibrationTable {
    /// Names fingerprints by sorting them within each derivative code; the
    /// `k`-th smallest gets subscript `k`.
    pub fn from_fingerprints<I: IntoIterator<Item = ClassFingerprint>>(fps: I) -> Result<Self> {
        let mut by_code: BTreeMap<String, Vec<ClassFingerprint>> = BTreeMap::new();
        for fp in fps {
            let code = fp.0.split('|').next().unwrap_or_default().to_string();
            let v = by_code.entry(code).or_default();
            if !v.contains(&fp) {
                v.push(fp);
            }
        }
        let mut entries = BTreeMap::new();
        for (code, mut fps) in by_code {
            fps.sort();
            let digits: Vec<usize> = code.chars().skip(1).map(|c| c as usize - '0' as usize).collect();
            if digits.len() != 4 {
                return Err(Error::Parse(format!("bad code prefix {code}")));
            }
            let classes = QClass::with_code(DerivativeCode([digits[0], digits[1], digits[2], digits[3]]));
            if fps.len() > classes.len() {
                return Err(Error::InvariantViolated(format!(
                    "{} fingerprints for code {code}, expected at most {}",
                    fps.len(),
                    classes.len()
                )));
            }
            for (fp, class) in fps.into_iter().zip(classes) {
                entries.insert(fp, class);
            }
        }
        Ok(CalibrationTable { entries })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (fp, name) = line
                .split_once('\t')
                .ok_or_else(|| Error::Parse(format!("line {}: missing tab", no + 1)))?;
            let class = QClass::from_name(name)
                .ok_or_else(|| Error::Parse(format!("line {}: unknown class {name}", no + 1)))?;
            entries.insert(ClassFingerprint(fp.to_string()), class);
        }
        Ok(CalibrationTable { entries })
    }

    /// One `fingerprint<TAB>class` line per entry, sorted by fingerprint.
    pub fn to_text(&self) -> String {
        let mut s = String::from(TABLE_HEADER);
        s.push('\n');
        for (fp, class) in &self.entries {
            s.push_str(&fp.0);
            s.push('\t');
            s.push_str(class.name());
            s.push('\n');
        }
        s
    }

    pub fn lookup(&self, fp: &ClassFingerprint) -> Option<QClass> {
        self.entries.get(fp).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&ClassFingerprint, &QClass)> {
        self.entries.iter()
    }
}

static SHIPPED: LazyLock<CalibrationTable> = LazyLock::new(|| {
    CalibrationTable::parse(include_str!("../../data/fingerprints.txt")).expect("shipped calibration table parses")
});

/// The calibration table shipped with the crate.
pub fn calibration_table() -> &'static CalibrationTable {
    &SHIPPED
}
