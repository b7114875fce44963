use sostar_core::clifford::verify_sostar8;
use sostar_core::isogeny::{verify_sostar2, verify_sostar4, verify_sostar6, verify_tables};
use sostar_core::report::SuiteReport;
use sostar_core::triality::verify_triality;
use sostar_core::DEFAULT_TOL;

fn all() -> Vec<SuiteReport> {
    vec![
        verify_sostar2(DEFAULT_TOL),
        verify_sostar4(DEFAULT_TOL),
        verify_sostar6(DEFAULT_TOL),
        verify_sostar8(),
        verify_tables(),
        verify_triality(),
    ]
}

#[test]
fn every_suite_passes() {
    for s in all() {
        for c in &s.claims {
            assert!(c.passed, "{} failed: {:#?}", c.claim_id, c.witnesses);
        }
    }
}

#[test]
fn claim_ids_are_unique_and_prefixed() {
    let mut ids = Vec::new();
    for s in all() {
        for c in &s.claims {
            assert!(c.claim_id.starts_with(&s.name), "{} in {}", c.claim_id, s.name);
            ids.push(c.claim_id.clone());
        }
    }
    let n = ids.len();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), n);
}

#[test]
fn reports_round_trip_through_json() {
    for s in all() {
        let text = serde_json::to_string(&s).unwrap();
        let back: SuiteReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}

#[test]
fn tight_tolerance_fails_float_claims_only() {
    let r = verify_sostar6(1e-30);
    assert!(r.claim("sostar6.structure_constants").unwrap().passed);
    assert!(!r.claim("sostar6.center_su31").unwrap().passed);
}

#[test]
fn alternative_g5_is_reported() {
    let r = verify_sostar8();
    let dict = r.claim("sostar8.dictionary").unwrap();
    let w = dict
        .witnesses
        .iter()
        .find(|w| w.description.starts_with("dictionary mismatches with g5"))
        .unwrap();
    assert_eq!(w.value.as_array().unwrap().len(), 7);
}
