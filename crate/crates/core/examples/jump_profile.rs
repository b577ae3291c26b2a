//! The zero count as a step function of the radius, with the root circle
//! behind each step.

use harmonic_trinomial::{count_profile, CountConfig, HarmonicTrinomial, JumpSet};
use num_complex::Complex64;

fn main() -> harmonic_trinomial::Result<()> {
    let t = HarmonicTrinomial::new(
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 10.0),
        Complex64::new(1.0, 0.0),
        3,
        1,
    )?;
    let cfg = CountConfig::default();
    let set = JumpSet::compute(&t, &cfg)?;
    println!("pivot {:+.6}, generic: {}", set.pivot.p_star, set.pivot.generic);
    for e in &set.events {
        println!("radius {:.9}  path {}  crosses {:+}  {:?}", e.radius, e.path.symbol(), e.k, e.piece);
    }

    println!("\n  r            count");
    for step in count_profile(&t, &cfg)? {
        println!("  {:<12.9} {}", step.radius, step.count_after);
    }
    Ok(())
}
