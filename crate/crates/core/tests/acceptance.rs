//! Runs every acceptance suite and prints one PASS/FAIL line per criterion.
//! All comparisons are exact.

use tuttekit::selfcheck::suites;

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (id, _, suite) in suites() {
        let report = suite();
        println!("{}", report.line());
        if !report.passed() {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
