//! Configuration files and class reports.
//!
//! A configuration file is a JSON object
//!
//! ```json
//! { "points": [["1/2", "3", "1"], ["0.125", "-4", "1"], ...], "labels": ["a", "b", ...] }
//! ```
//!
//! Each point is a homogeneous triple of exact rationals written as strings:
//! integers, fractions `num/den`, or finite decimals (optionally with an
//! exponent), all converted exactly. `labels` is optional display metadata.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::classifier::{
    canonical_cyclic_numeration, pair_conics, polygonal_spectrum, ConvexityType, DerivativeCode, EdgeDecoration,
    SevenAnalysis,
};
use crate::configuration::{check_typicality, Chirotope, Configuration, TypicalityReport};
use crate::error::{Error, Result};
use crate::geometry::HomPoint;

/// Parses `"-3"`, `"22/7"`, `"0.125"` or `"1.5e-3"` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = parse_integer(n).ok_or_else(bad)?;
        let d: BigInt = parse_integer(d).ok_or_else(bad)?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i32;
    if scale.unsigned_abs() > 10_000 {
        return Err(Error::Parse(format!("exponent out of range in {s:?}")));
    }
    let pow = num_traits::pow(BigInt::from(10), scale.unsigned_abs() as usize);
    let mut r = if scale >= 0 {
        BigRational::from_integer(digits * pow)
    } else {
        BigRational::new(digits, pow)
    };
    if neg {
        r = -r;
    }
    Ok(r)
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Affine form `[x/z, y/z, "1"]` when `z ≠ 0`, otherwise the integer triple.
pub fn point_strings(p: &HomPoint<BigInt>) -> [String; 3] {
    let [x, y, z] = p.coords();
    if z.is_zero() {
        return [x.to_string(), y.to_string(), z.to_string()];
    }
    let f = |v: &BigInt| format_rational(&BigRational::new(v.clone(), z.clone()));
    [f(x), f(y), "1".to_string()]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFile {
    pub points: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let f: ConfigFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(labels) = &f.labels {
            if labels.len() != f.points.len() {
                return Err(Error::Parse(format!(
                    "{} labels for {} points",
                    labels.len(),
                    f.points.len()
                )));
            }
        }
        Ok(f)
    }

    pub fn from_configuration(c: &Configuration<BigInt>) -> Self {
        ConfigFile { points: c.points().iter().map(point_strings).collect(), labels: None }
    }

    pub fn to_configuration(&self) -> Result<Configuration<BigInt>> {
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(i, [x, y, z])| {
                let coords = [parse_rational(x)?, parse_rational(y)?, parse_rational(z)?];
                HomPoint::from_rationals(coords).map_err(|_| Error::Parse(format!("point {i} is the zero vector")))
            })
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(points).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// Parses configuration-file text straight into a configuration.
pub fn read_configuration(text: &str) -> Result<Configuration<BigInt>> {
    ConfigFile::parse(text)?.to_configuration()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecorationEntry {
    pub edge: [usize; 2],
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to: Option<usize>,
}

impl DecorationEntry {
    fn new((a, b): (usize, usize), d: EdgeDecoration) -> Self {
        let (kind, from, to) = match d {
            EdgeDecoration::Internal => ("internal", None, None),
            EdgeDecoration::External => ("external", None, None),
            EdgeDecoration::Special { from, to } => ("special", Some(from), Some(to)),
        };
        DecorationEntry { edge: [a, b], kind: kind.to_string(), from, to }
    }
}

/// The conic through the points other than `omit`, as coefficients of
/// `(x², xy, y², xz, yz, z²)`, negative inside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicEntry {
    pub omit: [usize; 2],
    pub coefficients: [String; 6],
}

/// Everything the classifier computes about a configuration. Fields that do
/// not apply (for instance the class of a non-typical input) are `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub points: Vec<[String; 3]>,
    pub typicality: TypicalityReport,
    pub sigma: Option<[usize; 4]>,
    pub spectrum: Option<Vec<usize>>,
    pub convexity: Option<ConvexityType>,
    pub deltas: Option<Vec<usize>>,
    pub adjacency_edges: Option<Vec<[usize; 2]>>,
    pub dominance_matrix: Option<[[u8; 7]; 7]>,
    pub dominance_indices: Option<[usize; 7]>,
    pub canonical_numeration: Option<Vec<usize>>,
    pub marked_point: Option<usize>,
    pub edge_decorations: Option<Vec<DecorationEntry>>,
    pub conics: Option<Vec<ConicEntry>>,
    pub fingerprint: Option<String>,
    pub class: Option<String>,
}

impl ClassReport {
    /// Report for a 7-configuration. Non-simple inputs only get the
    /// typicality section; simple non-typical ones also get the
    /// L-invariants (σ, δ, spectrum, graph).
    pub fn build(c: &Configuration<BigInt>) -> Result<Self> {
        if c.len() != 7 {
            return Err(Error::WrongSize { expected: "7", got: c.len() });
        }
        let typicality = check_typicality(c);
        let mut r = ClassReport {
            points: c.points().iter().map(point_strings).collect(),
            typicality: typicality.clone(),
            sigma: None,
            spectrum: None,
            convexity: None,
            deltas: None,
            adjacency_edges: None,
            dominance_matrix: None,
            dominance_indices: None,
            canonical_numeration: None,
            marked_point: None,
            edge_decorations: None,
            conics: None,
            fingerprint: None,
            class: None,
        };
        if !typicality.simple {
            return Ok(r);
        }
        if !typicality.typical {
            let delta = crate::classifier::deltas(c)?;
            let spectrum = polygonal_spectrum(c)?;
            r.sigma = Some(DerivativeCode::from_deltas(&delta).0);
            r.convexity = Some(crate::classifier::convexity_type(&spectrum));
            r.spectrum = Some(spectrum.0);
            r.deltas = Some(delta);
            let g = Chirotope::new(c).adjacency_graph(&[0, 1, 2, 3, 4, 5, 6]);
            r.adjacency_edges = Some(g.edges().iter().map(|&(a, b)| [a, b]).collect());
            return Ok(r);
        }
        let a = SevenAnalysis::new(c)?;
        let fp = a.fingerprint();
        let class = a.class_in(crate::classifier::calibration_table())?;
        r.sigma = Some(a.code.0);
        r.spectrum = Some(a.spectrum.0.clone());
        r.convexity = Some(a.convexity);
        r.deltas = Some(a.delta.clone());
        r.adjacency_edges = Some(a.graph.edges().iter().map(|&(a, b)| [a, b]).collect());
        r.dominance_matrix = Some(a.dominance.bits);
        r.dominance_indices = Some(a.indices.0);
        if a.convexity == ConvexityType::Heptagonal {
            r.canonical_numeration = Some(canonical_cyclic_numeration(c)?);
        }
        r.marked_point = a.marked;
        r.edge_decorations = Some(a.decorations.iter().map(|&(e, d)| DecorationEntry::new(e, d)).collect());
        r.conics = Some(
            pair_conics(c)?
                .into_iter()
                .map(|((i, j), q)| ConicEntry { omit: [i, j], coefficients: q.coefficients().map(|v| v.to_string()) })
                .collect(),
        );
        r.fingerprint = Some(fp.0);
        r.class = Some(class.name().to_string());
        Ok(r)
    }

    pub fn is_typical(&self) -> bool {
        self.typicality.typical
    }

    /// Pretty JSON with a trailing newline; the single serializer shared by
    /// every front end.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// Short human-readable summary used by the command line.
pub fn summary_lines(r: &ClassReport) -> Vec<String> {
    let mut out = Vec::new();
    match (&r.class, &r.fingerprint) {
        (Some(class), Some(fp)) => {
            out.push(class.clone());
            out.push(format!("fingerprint {fp}"));
        }
        _ => {
            out.push("not typical".to_string());
            for t in &r.typicality.collinear_triples {
                out.push(format!("collinear triple {t:?}"));
            }
            for s in &r.typicality.coconic_sextuples {
                out.push(format!("coconic sextuple {s:?}"));
            }
        }
    }
    out
}
