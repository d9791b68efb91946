//! One line per acceptance criterion; exits nonzero if any fails.
//! Runs without the libtest harness so the lines always reach the output.

use thompson_nv::checks::run_all;

const SEED: u64 = 20_240_601;

fn main() {
    let checks = run_all(SEED);
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
