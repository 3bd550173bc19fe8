mod common;

use common::*;
use heptad::classifier::fingerprint::{canonical_form, canonical_form_exhaustive};
use heptad::classifier::{class_fingerprint, derivative_code, polygonal_spectrum, q_class, SevenAnalysis};
use heptad::configuration::{adjacency_graph, Chirotope};
use heptad::geometry::{conic_through5, side_of_conic, Side};
use proptest::prelude::*;

#[test]
fn side_of_conic_matches_diagonalization_oracle() {
    let mut rng = rng(101);
    let mut checked = 0;
    while checked < 300 {
        let Some(c) = random_config(&mut rng, 6, 50) else { continue };
        let five = [0, 1, 2, 3, 4].map(|i| c.point(i));
        let Ok(conic) = conic_through5(five) else { continue };
        let got = side_of_conic(&conic, c.point(5));
        let want = match oracle_inside(five, c.point(5)) {
            Some(true) => Side::Inside,
            Some(false) => Side::Outside,
            None => Side::On,
        };
        assert_eq!(got, want, "{c:?}");
        checked += 1;
    }
}

#[test]
fn points_on_their_conic_are_on() {
    let c = affine(&[(0, 0), (4, 0), (0, 4), (4, 4), (2, 5), (2, -2)]);
    let five = [0, 1, 2, 3, 4].map(|i| c.point(i));
    let conic = conic_through5(five).unwrap();
    for i in 0..5 {
        assert_eq!(side_of_conic(&conic, c.point(i)), Side::On);
    }
    // 5(x − 2)²/4 + y² − 4y − 5 = 0 is positive at (2, −2)
    assert_eq!(side_of_conic(&conic, c.point(5)), Side::Outside);
    assert_eq!(oracle_inside(five, c.point(5)), Some(false));
}

#[test]
fn adjacency_matches_affine_oracle_in_random_charts() {
    let mut rng = rng(202);
    for n in [6, 7] {
        for _ in 0..40 {
            let c = random_typical(&mut rng, n, 60);
            let g = adjacency_graph(&c).unwrap();
            for _ in 0..3 {
                let t = random_chart(&mut rng, &c);
                assert_eq!(oracle_edges(&t), g.edges(), "{c:?}");
            }
        }
    }
}

#[test]
fn heptagon_graph_is_a_cycle() {
    let c = affine(&[(1000, 30), (610, 790), (-230, 960), (-910, 410), (-880, -450), (-200, -980), (640, -770)]);
    let g = adjacency_graph(&c).unwrap();
    assert_eq!(g.edges().len(), 7);
    assert!(g.hamiltonian_cycle().is_some());
    assert_eq!(oracle_edges(&c), g.edges());
}

fn arb_seven() -> impl Strategy<Value = heptad::Config> {
    any::<u64>().prop_map(|s| random_typical(&mut rng(s), 7, 80))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chirotope_graph_equals_arc_test(c in arb_seven()) {
        let labels: Vec<usize> = (0..7).collect();
        prop_assert_eq!(Chirotope::new(&c).adjacency_graph(&labels), adjacency_graph(&c).unwrap());
    }

    #[test]
    fn fast_canonical_form_equals_exhaustive(c in arb_seven()) {
        let a = SevenAnalysis::new(&c).unwrap();
        prop_assert_eq!(canonical_form(&a.features()).0, canonical_form_exhaustive(&a.features()).0);
    }

    #[test]
    fn class_is_relabeling_invariant(c in arb_seven(), s in any::<u64>()) {
        let perm = random_perm(&mut rng(s), 7);
        let r = c.relabel(&perm);
        prop_assert_eq!(class_fingerprint(&c).unwrap(), class_fingerprint(&r).unwrap());
        prop_assert_eq!(q_class(&c).unwrap(), q_class(&r).unwrap());
    }

    #[test]
    fn class_is_projectively_invariant(c in arb_seven(), s in any::<u64>()) {
        let m = random_matrix(&mut rng(s));
        let t = c.transform(&m).unwrap();
        prop_assert_eq!(derivative_code(&c).unwrap(), derivative_code(&t).unwrap());
        prop_assert_eq!(polygonal_spectrum(&c).unwrap(), polygonal_spectrum(&t).unwrap());
        prop_assert_eq!(class_fingerprint(&c).unwrap(), class_fingerprint(&t).unwrap());
    }

    #[test]
    fn sigma_is_recomputable_from_deltas(c in arb_seven()) {
        let a = SevenAnalysis::new(&c).unwrap();
        prop_assert_eq!(heptad::classifier::DerivativeCode::from_deltas(&a.delta), a.code);
        prop_assert_eq!(a.spectrum.euler_sum(), -4);
    }
}
