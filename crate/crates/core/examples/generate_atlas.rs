//! Regenerates `data/seeds.json`, `data/fingerprints.txt` and the per-seed
//! configuration files under `seeds/` at the workspace root.
//!
//! Run with `cargo run -p heptad --example generate_atlas`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use heptad::atlas::{seed_file_json, seed_name, Sampler, Seed};
use heptad::classifier::{
    canonical_cyclic_numeration, six_class, six_class_fingerprint, CalibrationTable, ClassFingerprint, QClass,
    SevenAnalysis,
};
use heptad::configuration::Configuration;
use heptad::cremona::{cremona, CremonaBase};
use heptad::geometry::HomPoint;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CENSUS_SEED: u64 = 2024;
const BOUND: i64 = 100;
const ORBIT_BASES: [&str; 13] = ["012", "056", "234", "046", "126", "136", "236", "023", "025", "024", "245", "125", "135"];

fn polygon(n: usize, radius: f64, jitter: f64, rng: &mut ChaCha8Rng) -> Vec<HomPoint<BigInt>> {
    (0..n)
        .map(|k| {
            let a = std::f64::consts::TAU * k as f64 / n as f64;
            let r = radius + rng.random_range(-jitter..jitter);
            HomPoint::from_i64((r * a.cos()).round() as i64, (r * a.sin()).round() as i64, 1).unwrap()
        })
        .collect()
}

fn hept7() -> Configuration<BigInt> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    loop {
        let c = Configuration::new(polygon(7, 1000.0, 30.0, &mut rng)).unwrap();
        if let Ok(order) = canonical_cyclic_numeration(&c) {
            return c.relabel(&order);
        }
    }
}

fn six_seed(name: &str, class: usize, c: Configuration<BigInt>, provenance: String) -> Seed {
    assert!(c.is_typical(), "{name} not typical");
    assert_eq!(six_class(&c).unwrap().0, class, "{name}");
    Seed {
        name: name.to_string(),
        class: six_class(&c).unwrap().name().to_string(),
        fingerprint: six_class_fingerprint(&c).unwrap(),
        configuration: c,
        provenance,
    }
}

fn six_seeds() -> Vec<Seed> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let hex = loop {
        let c = Configuration::new(polygon(6, 100.0, 8.0, &mut rng)).unwrap();
        if c.is_typical() && six_class(&c).unwrap().0 == 1 {
            break c;
        }
    };
    let mut ico = polygon(5, 100.0, 0.5, &mut rng);
    ico.push(HomPoint::from_i64(0, 0, 1).unwrap());
    let ico = Configuration::new(ico).unwrap();
    let mut found: BTreeMap<usize, (usize, Configuration<BigInt>)> = BTreeMap::new();
    for (i, c) in Sampler::new(6, BOUND, CENSUS_SEED).enumerate() {
        let Some(c) = c.filter(|c| c.is_typical()) else { continue };
        let k = six_class(&c).unwrap().0;
        found.entry(k).or_insert((i, c));
        if found.contains_key(&2) && found.contains_key(&3) {
            break;
        }
    }
    let census_note = |i: usize| format!("census sample {i} (6 points, bound {BOUND}, random seed {CENSUS_SEED})");
    let (bi_i, bi) = found.remove(&2).unwrap();
    let (tri_i, tri) = found.remove(&3).unwrap();
    vec![
        six_seed("hex6", 1, hex, "regular hexagon of radius 100, radii perturbed and rounded to integers".into()),
        six_seed("bi6", 2, bi, census_note(bi_i)),
        six_seed("tri6", 3, tri, census_note(tri_i)),
        six_seed("ico6", 6, ico, "regular pentagon of radius 100 rounded to integers, plus its center".into()),
    ]
}

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let hept = hept7();
    let hept_fp = SevenAnalysis::new(&hept).unwrap().fingerprint();

    let mut images: BTreeMap<ClassFingerprint, CremonaBase> = BTreeMap::new();
    for b in ORBIT_BASES {
        let b: CremonaBase = b.parse().unwrap();
        let img = cremona(&hept, b).expect("typical image");
        let fp = SevenAnalysis::new(&img).unwrap().fingerprint();
        assert!(images.insert(fp, b).is_none(), "base {b} repeats a class");
    }
    assert_eq!(images.len(), 13);

    let mut found: BTreeMap<ClassFingerprint, (usize, Configuration<BigInt>)> = BTreeMap::new();
    for (i, c) in Sampler::new(7, BOUND, CENSUS_SEED).enumerate() {
        let Some(c) = c.filter(|c| c.is_typical()) else { continue };
        let fp = SevenAnalysis::new(&c).unwrap().fingerprint();
        if images.contains_key(&fp) {
            found.entry(fp).or_insert((i, c));
        }
        if found.len() == images.len() {
            break;
        }
    }

    let mut all_fps: Vec<ClassFingerprint> = images.keys().cloned().collect();
    all_fps.push(hept_fp.clone());
    let table = CalibrationTable::from_fingerprints(all_fps).unwrap();
    assert_eq!(table.len(), 14);

    let mut seven: BTreeMap<QClass, Seed> = BTreeMap::new();
    seven.insert(
        QClass::C7000,
        Seed {
            name: seed_name(QClass::C7000),
            class: QClass::C7000.name().into(),
            configuration: hept.clone(),
            provenance: "regular heptagon of radius 1000, radii perturbed and rounded to integers, \
                         labeled in canonical cyclic numeration"
                .into(),
            fingerprint: hept_fp,
        },
    );
    for (fp, (i, c)) in found {
        let class = table.lookup(&fp).unwrap();
        let provenance = format!(
            "census sample {i} (bound {BOUND}, random seed {CENSUS_SEED}); same class as the Cremona image Cr_{} of hept7",
            images[&fp]
        );
        seven.insert(class, Seed { name: seed_name(class), class: class.name().into(), configuration: c, provenance, fingerprint: fp });
    }
    assert_eq!(seven.len(), 14);

    let mut seeds = six_seeds();
    seeds.extend(seven.into_values());
    for s in &seeds {
        s.verify_with(&table).unwrap();
    }

    fs::write(root.join("data/fingerprints.txt"), table.to_text()).unwrap();
    fs::write(root.join("data/seeds.json"), seed_file_json(&seeds)).unwrap();
    let dir = root.join("../../seeds");
    fs::create_dir_all(&dir).unwrap();
    for s in &seeds {
        fs::write(dir.join(format!("{}.json", s.name)), s.config_file().to_json()).unwrap();
    }
    for s in &seeds {
        println!("{:8} {:14} {}", s.name, s.class, s.provenance);
    }
    for (b, fp) in ORBIT_BASES.iter().map(|b| (b, images.iter().find(|(_, v)| v.to_string() == *b).unwrap().0)) {
        println!("Cr_{b} -> {}", table.lookup(fp).unwrap());
    }
}
