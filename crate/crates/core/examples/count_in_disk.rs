//! Count zeros of a z^n + b conj(z)^m + c inside a few disks.
//!
//!     cargo run --example count_in_disk

use harmonic_trinomial::{count_profile, count_roots_in_disk, total_root_count, CountConfig, HarmonicTrinomial};
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
    println!("f(z) = {t}");
    println!("zeros in the plane: {}", total_root_count(&t, &cfg)?);

    for r in [0.5, 1.0, 2.0, 3.0, 3.2, 10.0] {
        let res = count_roots_in_disk(&t, r, &cfg)?;
        println!("|z| < {r:<4} -> {} ({:?})", res.count, res.regime);
    }

    // on a root circle the open count excludes the circle and gets flagged
    let edge = count_profile(&t, &cfg)?[0].radius;
    let open = count_roots_in_disk(&t, edge, &cfg)?;
    let closed = count_roots_in_disk(&t, edge, &CountConfig { closed_disk: true, ..cfg })?;
    println!("r = {edge}: open {} closed {} flags={:?}", open.count, closed.count, open.flags);
    Ok(())
}
