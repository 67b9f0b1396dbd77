//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::io::Write;

use charbound_validation::run_all;

fn main() {
    println!();
    let verdicts = run_all(|v| {
        println!(
            "{} criterion {:>2} ({}) [{:.1}s]: {}",
            if v.pass { "PASS" } else { "FAIL" },
            v.id,
            v.name,
            v.elapsed.as_secs_f64(),
            v.detail
        );
        std::io::stdout().flush().ok();
    });
    let passed = verdicts.iter().filter(|v| v.pass).count();
    println!("acceptance: {passed}/{} criteria passed", verdicts.len());
    if passed != verdicts.len() {
        std::process::exit(1);
    }
}
