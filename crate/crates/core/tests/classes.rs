mod common;

use std::collections::BTreeSet;

use common::*;
use heptad::atlas::{builtin_seeds, census, class_seed, parse_seed_file, seed, seed_file_json, Sampler};
use heptad::classifier::{
    calibration_table, class_fingerprint, convexity_type, derivative_code, edge_decorations, marked_point,
    polygonal_spectrum, q_class, six_class, ConvexityType, EdgeDecoration, QClass, SevenAnalysis, CODE_TABLE,
};
use heptad::configuration::check_typicality;
use heptad::cremona::{cremona, cremona_orbit, CremonaBase};
use heptad::Error;

const CREMONA_IMAGES: [(&str, &str); 13] = [
    ("012", "(3,4,0,0)_1"),
    ("056", "(3,4,0,0)_2"),
    ("234", "(2,2,3,0)_3"),
    ("046", "(2,2,3,0)_2"),
    ("126", "(2,2,3,0)_1"),
    ("136", "(1,2,2,2)"),
    ("236", "(1,0,6,0)"),
    ("023", "(1,6,0,0)"),
    ("025", "(1,4,2,0)"),
    ("024", "(1,2,4,0)"),
    ("245", "(0,4,3,0)"),
    ("125", "(0,6,1,0)"),
    ("135", "(0,3,3,1)"),
];

#[test]
fn seeds_verify_and_cover_every_class() {
    let seeds = builtin_seeds().unwrap();
    assert_eq!(seeds.len(), 18);
    for s in seeds {
        s.verify().unwrap();
    }
    let classes: BTreeSet<QClass> = seeds.iter().filter_map(|s| s.q_class()).collect();
    assert_eq!(classes.len(), 14);
    let six: Vec<usize> = ["hex6", "bi6", "tri6", "ico6"].iter().map(|n| six_class(&seed(n).unwrap().configuration).unwrap().0).collect();
    assert_eq!(six, [1, 2, 3, 6]);
}

#[test]
fn seeds_match_the_code_table() {
    for class in QClass::ALL {
        let c = &class_seed(class).unwrap().configuration;
        let code = derivative_code(c).unwrap();
        assert_eq!(code, class.code());
        let row = CODE_TABLE.iter().find(|r| r.sigma == code.0).unwrap();
        assert_eq!(polygonal_spectrum(c).unwrap().0, row.spectrum);
    }
    let h = &seed("hept7").unwrap().configuration;
    assert_eq!(polygonal_spectrum(h).unwrap().0, [7, 14, 0, 0, 1]);
    assert_eq!(convexity_type(&polygonal_spectrum(h).unwrap()), ConvexityType::Heptagonal);
}

#[test]
fn seed_file_round_trips() {
    let seeds = builtin_seeds().unwrap();
    let again = parse_seed_file(&seed_file_json(seeds)).unwrap();
    assert_eq!(again.as_slice(), seeds);
    for s in &again {
        let c = heptad::io::read_configuration(&s.config_file().to_json()).unwrap();
        if c.len() == 7 {
            assert_eq!(class_fingerprint(&c).unwrap(), s.fingerprint);
        }
    }
}

#[test]
fn calibration_table_has_fourteen_rows() {
    let t = calibration_table();
    assert_eq!(t.len(), 14);
    let names: BTreeSet<QClass> = t.entries().map(|(_, c)| *c).collect();
    assert_eq!(names.len(), 14);
}

#[test]
fn heptagon_decorations_and_marked_points() {
    let h = &seed("hept7").unwrap().configuration;
    let d = edge_decorations(h).unwrap();
    let count = |f: fn(&EdgeDecoration) -> bool| d.iter().filter(|(_, e)| f(e)).count();
    assert_eq!(count(|e| *e == EdgeDecoration::Internal), 3);
    assert_eq!(count(|e| *e == EdgeDecoration::External), 3);
    assert_eq!(count(|e| matches!(e, EdgeDecoration::Special { .. })), 1);
    assert!(heptagonal_violations(h).is_empty());
    assert!(matches!(marked_point(h), Err(Error::NotApplicable(_))));
    let sigma0 = &class_seed(QClass::C0331).unwrap().configuration;
    assert_eq!(marked_point(sigma0).unwrap(), None);
    assert!(edge_decorations(sigma0).unwrap().is_empty());
    let c1600 = &class_seed(QClass::C1600).unwrap().configuration;
    let m = marked_point(c1600).unwrap().unwrap();
    assert_eq!(SevenAnalysis::new(c1600).unwrap().delta[m], 1);
}

#[test]
fn reference_bases_give_thirteen_distinct_classes() {
    let h = &seed("hept7").unwrap().configuration;
    let mut seen = BTreeSet::new();
    for (b, name) in CREMONA_IMAGES {
        let base: CremonaBase = b.parse().unwrap();
        let img = cremona(h, base).unwrap();
        let class = q_class(&img).unwrap();
        assert_eq!(class.name(), name, "base {b}");
        seen.insert(class);
        let back = cremona(&img, base).unwrap();
        assert_eq!(class_fingerprint(&back).unwrap(), class_fingerprint(h).unwrap(), "base {b}");
    }
    assert_eq!(seen.len(), 13);
    assert!(!seen.contains(&QClass::C7000));
}

#[test]
fn orbit_of_hept7_reaches_every_other_class() {
    let h = &seed("hept7").unwrap().configuration;
    let orbit = cremona_orbit(h).unwrap();
    assert_eq!(orbit.len(), 35);
    let classes: BTreeSet<QClass> = orbit.values().copied().collect();
    for c in QClass::ALL.iter().filter(|&&c| c != QClass::C7000) {
        assert!(classes.contains(c), "{c} missing");
    }
}

#[test]
fn orbit_is_relabeling_equivariant() {
    let h = &seed("hept7").unwrap().configuration;
    let perm = [3, 0, 6, 1, 5, 2, 4];
    let r = h.relabel(&perm);
    let (a, b) = (cremona_orbit(h).unwrap(), cremona_orbit(&r).unwrap());
    for (base, class) in &b {
        let [i, j, k] = base.0;
        let orig = CremonaBase::new(perm[i], perm[j], perm[k]).unwrap();
        assert_eq!(a[&orig], *class);
    }
}

#[test]
fn cremona_sends_base_to_unit_points() {
    let h = &seed("c1222").unwrap().configuration;
    let img = cremona(h, CremonaBase::new(1, 4, 5).unwrap()).unwrap();
    let unit = |p: &heptad::Point| p.coords().iter().filter(|x| **x != 0.into()).count() == 1;
    assert!(unit(img.point(1)) && unit(img.point(4)) && unit(img.point(5)));
}

#[test]
fn census_is_deterministic_and_within_fourteen() {
    let a = census(600, 100, 9).unwrap();
    let b = census(600, 100, 9).unwrap();
    assert_eq!(a, b);
    assert!(a.unknown.is_empty());
    assert!(a.fingerprints.len() <= 14);
    assert_eq!(a.typical + a.degenerate, a.samples);
    assert_eq!(a.classes.values().sum::<usize>(), a.typical);
    assert_eq!(census(0, 100, 9).unwrap().samples, 0);
    assert!(census(10, 0, 9).is_err());
}

#[test]
fn census_samples_satisfy_structure_checks() {
    let mut sampler = Sampler::new(7, 100, 77);
    let mut heptagonal = 0;
    for c in sampler.by_ref().take(800).flatten() {
        let report = check_typicality(&c);
        if !report.simple {
            continue;
        }
        let a = SevenAnalysis::new(&c);
        let spectrum = polygonal_spectrum(&c).unwrap();
        assert_eq!(spectrum.euler_sum(), -4);
        let code = derivative_code(&c).unwrap();
        if code.sigma1() == 0 {
            assert!(report.typical, "{c:?}");
        }
        if !report.typical {
            continue;
        }
        let a = a.unwrap();
        if a.code.0 == [7, 0, 0, 0] {
            heptagonal += 1;
            assert_eq!(heptagonal_violations(&c), Vec::<String>::new(), "{c:?}");
        }
    }
    assert!(heptagonal > 5);
    let mut six = Sampler::new(6, 100, 78);
    let mut cyclic = 0;
    for c in six.by_ref().take(1500).flatten() {
        if !c.is_simple() {
            continue;
        }
        assert_eq!(polygonal_spectrum(&c).unwrap().euler_sum(), -4);
        let k = six_class(&c).unwrap().0;
        if k != 1 {
            assert!(c.is_typical(), "{c:?}");
        } else if c.is_typical() {
            cyclic += 1;
            assert_eq!(cyclic_edge_violations(&c), 0, "{c:?}");
        }
    }
    assert!(cyclic > 100);
}
