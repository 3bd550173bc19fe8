//! Seed library (one representative per class) and the random census.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{
    six_class, six_class_fingerprint, CalibrationTable, ClassFingerprint, QClass, SevenAnalysis,
};
use crate::configuration::{check_typicality, Configuration};
use crate::error::{Error, Result};
use crate::geometry::HomPoint;
use crate::io::ConfigFile;

/// Names of the four 6-point classes by component count.
pub const SIX_CLASS_NAMES: [(usize, &str); 4] = [(1, "cyclic"), (2, "bicomponent"), (3, "tricomponent"), (6, "icosahedral")];

/// Seed name for a 7-point class, e.g. `c2230-1` for `(2,2,3,0)_1`.
pub fn seed_name(class: QClass) -> String {
    let digits: String = class.code().0.iter().map(|d| d.to_string()).collect();
    match (class, class.subscript()) {
        (QClass::C7000, _) => "hept7".to_string(),
        (_, Some(k)) => format!("c{digits}-{k}"),
        (_, None) => format!("c{digits}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedRecord {
    pub name: String,
    pub class: String,
    pub points: Vec<[String; 3]>,
    pub provenance: String,
    pub fingerprint: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedFile {
    pub version: u32,
    pub seeds: Vec<SeedRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub name: String,
    /// A [`QClass`] name for 7-point seeds, a 6-point class name otherwise.
    pub class: String,
    pub configuration: Configuration<BigInt>,
    pub provenance: String,
    pub fingerprint: ClassFingerprint,
}

impl Seed {
    pub fn q_class(&self) -> Option<QClass> {
        QClass::from_name(&self.class)
    }

    pub fn config_file(&self) -> ConfigFile {
        ConfigFile::from_configuration(&self.configuration)
    }

    pub fn record(&self) -> SeedRecord {
        SeedRecord {
            name: self.name.clone(),
            class: self.class.clone(),
            points: self.config_file().points,
            provenance: self.provenance.clone(),
            fingerprint: self.fingerprint.0.clone(),
        }
    }

    /// Recomputes class and fingerprint with `table`.
    pub fn verify_with(&self, table: &CalibrationTable) -> Result<()> {
        let corrupt = |why: String| Error::SeedCorrupt(self.name.clone(), why);
        if !check_typicality(&self.configuration).typical {
            return Err(corrupt("not typical".into()));
        }
        let (class, fp) = match self.configuration.len() {
            7 => {
                let a = SevenAnalysis::new(&self.configuration).map_err(|e| corrupt(e.to_string()))?;
                let class = a.class_in(table).map_err(|e| corrupt(e.to_string()))?;
                (class.name().to_string(), a.fingerprint())
            }
            6 => {
                let k = six_class(&self.configuration).map_err(|e| corrupt(e.to_string()))?;
                let fp = six_class_fingerprint(&self.configuration).map_err(|e| corrupt(e.to_string()))?;
                (k.name().to_string(), fp)
            }
            n => return Err(corrupt(format!("{n} points"))),
        };
        if class != self.class {
            return Err(corrupt(format!("class {class}, recorded {}", self.class)));
        }
        if fp != self.fingerprint {
            return Err(corrupt(format!("fingerprint {fp}, recorded {}", self.fingerprint)));
        }
        Ok(())
    }

    pub fn verify(&self) -> Result<()> {
        self.verify_with(crate::classifier::calibration_table())
    }
}

impl TryFrom<SeedRecord> for Seed {
    type Error = Error;

    fn try_from(r: SeedRecord) -> Result<Self> {
        let configuration = ConfigFile { points: r.points, labels: None }
            .to_configuration()
            .map_err(|e| Error::SeedCorrupt(r.name.clone(), e.to_string()))?;
        Ok(Seed {
            name: r.name,
            class: r.class,
            configuration,
            provenance: r.provenance,
            fingerprint: ClassFingerprint(r.fingerprint),
        })
    }
}

pub fn parse_seed_file(text: &str) -> Result<Vec<Seed>> {
    let f: SeedFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    f.seeds.into_iter().map(Seed::try_from).collect()
}

pub fn seed_file_json(seeds: &[Seed]) -> String {
    let f = SeedFile { version: 1, seeds: seeds.iter().map(Seed::record).collect() };
    let mut s = serde_json::to_string_pretty(&f).expect("serializable");
    s.push('\n');
    s
}

static BUILTIN: LazyLock<Result<Vec<Seed>>> = LazyLock::new(|| {
    let seeds = parse_seed_file(include_str!("../data/seeds.json"))?;
    for s in &seeds {
        s.verify()?;
    }
    Ok(seeds)
});

/// The 18 shipped seeds (4 six-point, then 14 seven-point), re-verified on
/// first use.
pub fn builtin_seeds() -> Result<&'static [Seed]> {
    BUILTIN.as_ref().map(|v| v.as_slice()).map_err(Clone::clone)
}

pub fn seed(name: &str) -> Result<&'static Seed> {
    builtin_seeds()?
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSeed(name.to_string()))
}

/// The seed representing `class`.
pub fn class_seed(class: QClass) -> Result<&'static Seed> {
    seed(&seed_name(class))
}

/// Calibration table naming the fingerprints of the given 7-point
/// configurations.
pub fn calibration_from<'a, I>(configs: I) -> Result<CalibrationTable>
where
    I: IntoIterator<Item = &'a Configuration<BigInt>>,
{
    let fps = configs
        .into_iter()
        .map(|c| Ok(SevenAnalysis::new(c)?.fingerprint()))
        .collect::<Result<Vec<_>>>()?;
    CalibrationTable::from_fingerprints(fps)
}

/// Deterministic stream of random configurations: `n` integer points with
/// coordinates in `[-bound, bound]` in the chart `z = 1`.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    n: usize,
    bound: i64,
}

impl Sampler {
    pub fn new(n: usize, bound: i64, seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), n, bound }
    }

    /// Next sample, or `None` when two points coincide.
    pub fn draw(&mut self) -> Option<Configuration<BigInt>> {
        let pts: Vec<HomPoint<BigInt>> = (0..self.n)
            .map(|_| {
                let x = self.rng.random_range(-self.bound..=self.bound);
                let y = self.rng.random_range(-self.bound..=self.bound);
                HomPoint::from_i64(x, y, 1).expect("z = 1")
            })
            .collect();
        Configuration::new(pts).ok()
    }
}

impl Iterator for Sampler {
    type Item = Option<Configuration<BigInt>>;

    fn next(&mut self) -> Option<Self::Item> {
        Some(self.draw())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub samples: usize,
    pub typical: usize,
    /// Samples with coincident points, a collinear triple or a coconic sextuple.
    pub degenerate: usize,
    pub classes: BTreeMap<String, usize>,
    pub fingerprints: BTreeMap<String, usize>,
    /// Fingerprints missing from the calibration table.
    pub unknown: Vec<String>,
    pub unseen: Vec<String>,
}

impl CensusReport {
    fn merge(mut self, other: CensusReport) -> CensusReport {
        self.samples += other.samples;
        self.typical += other.typical;
        self.degenerate += other.degenerate;
        for (k, v) in other.classes {
            *self.classes.entry(k).or_default() += v;
        }
        for (k, v) in other.fingerprints {
            *self.fingerprints.entry(k).or_default() += v;
        }
        self.unknown.extend(other.unknown);
        self
    }

    fn finish(mut self) -> CensusReport {
        self.unknown.sort();
        self.unknown.dedup();
        self.unseen = QClass::ALL
            .iter()
            .map(|c| c.name().to_string())
            .filter(|c| !self.classes.contains_key(c))
            .collect();
        self
    }

    /// Number of distinct fingerprints seen under the derivative code `code`.
    pub fn fingerprints_with_code(&self, code: [usize; 4]) -> usize {
        let prefix = format!("s{}{}{}{}|", code[0], code[1], code[2], code[3]);
        self.fingerprints.keys().filter(|f| f.starts_with(&prefix)).count()
    }
}

fn census_one(c: Option<Configuration<BigInt>>, table: &CalibrationTable) -> Result<CensusReport> {
    let mut r = CensusReport { samples: 1, ..Default::default() };
    let Some(c) = c.filter(|c| c.is_typical()) else {
        r.degenerate = 1;
        return Ok(r);
    };
    let a = SevenAnalysis::new(&c)?;
    let fp = a.fingerprint();
    r.typical = 1;
    let class = match table.lookup(&fp) {
        Some(class) => class.name().to_string(),
        None => {
            r.unknown.push(fp.0.clone());
            "unknown".to_string()
        }
    };
    r.classes.insert(class, 1);
    r.fingerprints.insert(fp.0, 1);
    Ok(r)
}

/// Classifies `samples` random 7-configurations. Deterministic for a fixed
/// `random_seed`; the classification itself runs in parallel.
pub fn census(samples: usize, bound: i64, random_seed: u64) -> Result<CensusReport> {
    census_with(samples, bound, random_seed, crate::classifier::calibration_table())
}

pub fn census_with(samples: usize, bound: i64, random_seed: u64, table: &CalibrationTable) -> Result<CensusReport> {
    if bound <= 0 {
        return Err(Error::NotApplicable("coordinate bound must be positive".into()));
    }
    let draws: Vec<_> = Sampler::new(7, bound, random_seed).take(samples).collect();
    let report = draws
        .into_par_iter()
        .map(|c| census_one(c, table))
        .try_reduce(CensusReport::default, |a, b| Ok(a.merge(b)))?;
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_names() {
        assert_eq!(seed_name(QClass::C7000), "hept7");
        assert_eq!(seed_name(QClass::C2230_2), "c2230-2");
        assert_eq!(seed_name(QClass::C0331), "c0331");
    }

    #[test]
    fn empty_census() {
        let r = census(0, 100, 1).unwrap();
        assert_eq!(r.samples, 0);
        assert!(r.classes.is_empty());
        assert_eq!(r.unseen.len(), 14);
    }

    #[test]
    fn sampler_is_deterministic() {
        let a: Vec<_> = Sampler::new(7, 50, 9).take(5).collect();
        let b: Vec<_> = Sampler::new(7, 50, 9).take(5).collect();
        assert_eq!(a, b);
    }
}
