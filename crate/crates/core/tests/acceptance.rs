//! Runs every acceptance criterion with exact comparison and prints one
//! line per criterion. Failures are reported, and the test fails if any
//! criterion does.

use wittext::reproduce::run;

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for id in 1..=10 {
        let r = run(id);
        println!("criterion {:>2} {:<24} {} ({} ms)", r.id, r.name, if r.pass { "PASS" } else { "FAIL" }, r.millis);
        for c in r.clauses.iter().filter(|c| !c.pass) {
            println!("    failed: {} {}", c.name, c.detail);
        }
        if !r.pass {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
