//! Acceptance suite: every verification suite must pass in full, one
//! printed line per check. All thresholds are exact; there is no
//! floating point anywhere in the crate.

use latticeforge::suites::{run_suite, SUITES};

fn run(name: &str) {
    let checks = run_suite(name, None).expect("known suite");
    let mut failed = Vec::new();
    for c in &checks {
        println!(
            "{} {} :: {} ({})",
            if c.pass { "PASS" } else { "FAIL" },
            name,
            c.name,
            c.detail
        );
        if !c.pass {
            failed.push(c.name.clone());
        }
    }
    assert!(failed.is_empty(), "failed checks in {name}: {failed:?}");
}

#[test]
fn criterion_1_tamari_interval_counts() {
    run("tamari-intervals");
}

#[test]
fn criterion_2_rise_contact_involution() {
    run("rise-contact");
}

#[test]
fn criterion_3_m_tamari() {
    run("m-tamari");
}

#[test]
fn criterion_4_zeta_bijection() {
    run("zeta");
}

#[test]
fn criterion_5_integer_posets() {
    run("integer-posets");
}

#[test]
fn criterion_6_permutrees() {
    run("permutrees");
}

#[test]
fn criterion_7_s_weak_order() {
    run("s-weak");
}

#[test]
fn criterion_8_qt_statistics() {
    run("qt");
}

#[test]
fn criterion_9_cross_module_coherence() {
    run("coherence");
}

#[test]
fn suite_names_cover_criteria() {
    assert_eq!(SUITES.len(), 9);
    for name in SUITES {
        assert!(run_suite(name, Some(2)).is_some());
    }
    assert!(run_suite("unknown", None).is_none());
}
