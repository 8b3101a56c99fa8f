//! Runs every acceptance criterion, prints one line each, then asserts.

use qcones::acceptance::{all_criteria, CriterionOutcome};

#[test]
fn acceptance_criteria() {
    let outcomes: Vec<CriterionOutcome> = all_criteria().into_iter().map(|f| f()).collect();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<u8> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    let passed = outcomes.len() - failed.len();
    println!("acceptance: {passed}/{} criteria passed", outcomes.len());
    for o in &outcomes {
        if let Some(b) = o.bound_ms {
            assert!(
                o.elapsed_ms <= b,
                "criterion {} took {:.1} ms, bound {:.0} ms",
                o.id,
                o.elapsed_ms,
                b
            );
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
