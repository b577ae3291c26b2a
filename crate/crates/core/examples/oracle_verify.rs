//! Cross-check the crossing count against a brute-force Newton search.
//!
//!     cargo run --example oracle_verify -- 25

use harmonic_trinomial::cli::random_instance;
use harmonic_trinomial::{find_all_roots, verify, CountConfig, OracleParams};

fn main() -> harmonic_trinomial::Result<()> {
    let runs: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let cfg = CountConfig::default();
    let mut agree = 0;
    for seed in 0..runs {
        let t = random_instance(seed, None, None)?;
        let report = verify(&t, &cfg);
        agree += usize::from(report.passed);
        println!(
            "seed {seed:>3} n={} m={}  formula {:?} oracle {:?}  tally {}-{}  {}",
            t.n(),
            t.m(),
            report.formula_total,
            report.oracle_total,
            report.preserving,
            report.reversing,
            if report.passed { "ok" } else { "MISMATCH" }
        );
    }
    println!("{agree}/{runs} agree");

    let t = random_instance(0, None, None)?;
    let set = find_all_roots(&t, &OracleParams::default())?;
    println!("\nroots of seed 0:\n{}", serde_json::to_string_pretty(&set.to_json()).unwrap());
    Ok(())
}
