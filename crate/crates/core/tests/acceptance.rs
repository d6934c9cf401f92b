//! The verification gate. Each criterion prints one pass/fail line; the
//! test fails if any criterion does.

use xcoh_core::acceptance::{run_all_with, run_gate};
use xcoh_core::instances::built_ins;
use xcoh_core::Budget;

#[test]
fn acceptance_gate() {
    let outcome = run_gate(Budget::default());
    let mut all_ok = true;
    for r in &outcome.results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {:02} {} - {} ({})",
            r.id, status, r.name, r.detail
        );
        all_ok &= r.passed;
    }
    assert!(all_ok, "at least one criterion failed");
}

#[test]
fn corrupted_fixture_fails_with_its_name() {
    // flip one bracket entry of the multiplicative braiding; the suite must
    // fail, and the failing details must name the corrupted instance
    let mut instances = built_ins();
    let target = instances.iter_mut().find(|i| i.name == "z2-mul").unwrap();
    let br = target.braiding.as_mut().unwrap();
    br.bracket[1] = 1 - br.bracket[1]; // {1, g} = 1 breaks the boundary axioms
    let outcome = run_all_with(instances, Budget::default());
    assert!(!outcome.all_passed());
    for r in outcome.results.iter().filter(|r| !r.passed) {
        assert!(
            r.detail.contains("z2-mul"),
            "criterion {} failed without naming the corrupted instance: {}",
            r.id,
            r.detail
        );
    }
    // untouched instances keep passing the purely classical criteria
    assert!(outcome.results.iter().any(|r| r.id == 1 && r.passed));
    assert!(outcome.results.iter().any(|r| r.id == 2 && r.passed));
}
