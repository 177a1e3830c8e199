//! Run every cross-method verification suite and the real-rootedness
//! certificate in one go, printing a summary line per suite.
//!
//! Run with: cargo run --example verify_all

use jstirling::verify::{check_conjecture, run_suite, Suite};

fn main() {
    let seed = 20260823;
    let mut all_ok = true;
    for suite in [Suite::Identities, Suite::Diagonal, Suite::Posets, Suite::Bijections, Suite::Egge] {
        let r = run_suite(suite, seed);
        println!(
            "{:<11} {:>5} cases  {}",
            r.suite,
            r.cases,
            if r.passed() { "PASS" } else { "FAIL" }
        );
        for f in &r.failures {
            println!("    {}: expected {}, got {}", f.id, f.expected, f.actual);
        }
        all_ok &= r.passed();
    }
    let c = check_conjecture(9);
    println!(
        "{:<11} {:>5} cases  {}",
        c.suite,
        c.cases,
        if c.passed() { "PASS" } else { "FAIL" }
    );
    all_ok &= c.passed();
    std::process::exit(if all_ok { 0 } else { 1 });
}
