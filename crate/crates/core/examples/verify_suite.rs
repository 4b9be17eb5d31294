//! The verification registry behind `mzv verify`, as a library call.

use mzv_motive::suite::{verify_suite, SuiteConfig};

fn main() {
    let reports = verify_suite(SuiteConfig {
        max_weight: 12,
        digits: 30,
        seed: 0,
    })
    .unwrap();
    for r in reports {
        println!(
            "{:<28} {:<4} {:>5} cases  {}",
            r.check,
            if r.passed { "ok" } else { "FAIL" },
            r.cases,
            r.detail
        );
    }
}
