//! Exponents with a common factor d: zeros come in groups of d related by
//! z -> z^d, so counts are d times those of the reduced instance.

use harmonic_trinomial::{count_profile, CountConfig, HarmonicTrinomial};
use num_complex::Complex64;

fn main() -> harmonic_trinomial::Result<()> {
    let one = Complex64::new(1.0, 0.0);
    let cfg = CountConfig::default();
    for (n, m) in [(2, 1), (4, 2), (6, 3)] {
        let t = HarmonicTrinomial::new(one, one, one, n, m)?;
        let (reduced, d) = t.coprime_reduce();
        print!("n={n} m={m}: reduces to n={} m={} with d={d}; steps", reduced.n(), reduced.m());
        for s in count_profile(&t, &cfg)? {
            print!("  r={:.6} -> {}", s.radius, s.count_after);
        }
        println!();
    }
    Ok(())
}
