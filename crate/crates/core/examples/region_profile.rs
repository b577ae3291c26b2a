//! Where can zeros live? Prints the radii bounding the annuli that carry
//! zeros, and the value of the angle combination omega* across them.

use harmonic_trinomial::region::zero_free_classification;
use harmonic_trinomial::{breakpoints, omega_star, HarmonicTrinomial, Tolerances};
use num_complex::Complex64;

fn main() -> harmonic_trinomial::Result<()> {
    let tol = Tolerances::default();
    for b in [1.0, 3.0] {
        let t = HarmonicTrinomial::new(Complex64::new(1.0, 0.0), Complex64::new(b, 0.0), Complex64::new(1.0, 0.0), 2, 1)?
            .normalize();
        let p = breakpoints(&t, &tol)?;
        println!("b = {b}: case {:?}", p.case);
        println!("  inner edge {:.6}, outer edge {:.6}, r0 {:.6}", p.c_break, p.a_break, p.r0);
        if let Some((lo, hi)) = p.gap() {
            println!("  zero-free gap ({lo:.6}, {hi:.6})");
        }
        println!("  omega* dips to {} on {:?}", p.omega_min, p.plateau);

        let (lo, hi) = (0.5 * p.c_break, 1.5 * p.a_break);
        for k in 0..=8 {
            let r = lo + (hi - lo) * f64::from(k) / 8.0;
            let tag = zero_free_classification(&t, r, &tol)?;
            println!("  r={r:.4}  omega*={:+.6}  {tag:?}", omega_star(&t, r, &tol));
        }
    }
    Ok(())
}
