use std::sync::Arc;

use supervogan::double::{double_classes, enumerate_double, DoubleOptions};
use supervogan::dynkin::affine_of;
use supervogan::oracle::{brute_involution_pairs, realize_double, PairCensus};
use supervogan::FamilyId;

fn frozen() -> PairCensus {
    serde_json::from_str(include_str!("data/oracle_gl_2_1.json")).unwrap()
}

#[test]
fn census_matches_frozen_data() {
    let now = brute_involution_pairs(2, 1).unwrap();
    assert_eq!(now, frozen());
}

#[test]
fn sl_2_1_classes_fit_inside_the_census() {
    let census = frozen();
    let prints = census.fingerprint_set();
    let ad = Arc::new(affine_of(&FamilyId::a(1, 0).unwrap()).unwrap());
    let classes = double_classes(&enumerate_double(&ad, DoubleOptions::default()));
    assert_eq!(classes.len(), 8);
    assert!(classes.len() <= census.classes);
    for c in &classes {
        let r = realize_double(&c.representative)
            .unwrap()
            .expect("realized");
        assert!(prints.contains(&r.fingerprint), "{:?}", r.fingerprint);
    }
}

#[test]
fn census_is_limited_to_small_models() {
    assert!(brute_involution_pairs(2, 2).is_err());
}
