//! Running the verification suites from code: every closed form and
//! identity re-derived against its independent oracle, PASS/FAIL per check.
//!
//! Run with `cargo run --example verify` (a few seconds at this scale; the
//! CLI equivalent is `spgr verify --suite all --two-n-max 6`).

use spgr::verify::{run_suite, VerifyOptions, SUITES};

fn main() -> spgr::Result<()> {
    let opts = VerifyOptions {
        two_n_max: 6,
        seed: 0,
        samples: 40,
        trials: 30,
    };
    let mut total = 0;
    let mut failed = 0;
    for suite in SUITES {
        for check in run_suite(suite, &opts)? {
            let tag = if check.passed { "PASS" } else { "FAIL" };
            println!("{tag} {} — {}", check.name, check.detail);
            total += 1;
            failed += usize::from(!check.passed);
        }
    }
    println!("\n{total} checks, {failed} failed");
    Ok(())
}
