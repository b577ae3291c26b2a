//! Reconstruct every zero from its circle and check it against f.

use harmonic_trinomial::{circle_roots, CountConfig, HarmonicTrinomial};
use num_complex::Complex64;

fn main() -> harmonic_trinomial::Result<()> {
    let one = Complex64::new(1.0, 0.0);
    for (b, n, m) in [(one, 2, 1), (Complex64::new(0.0, 10.0), 3, 1), (Complex64::from_polar(2.0, 0.4), 5, 3)] {
        let t = HarmonicTrinomial::new(one, b, Complex64::new(0.7, -0.2), n, m)?;
        println!("{t}");
        for root in circle_roots(&t, &CountConfig::default())? {
            let z = root.zeta;
            println!(
                "  z = {:+.12} {:+.12}i  |f(z)| = {:.1e}  jacobian {:+.3}",
                z.re,
                z.im,
                t.evaluate(z).norm(),
                t.jacobian(z)
            );
        }
    }
    Ok(())
}
