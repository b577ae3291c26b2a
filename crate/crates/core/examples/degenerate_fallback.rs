//! A non-generic instance: the pivot path runs along an integer level, so the
//! crossing count alone is ambiguous. The pivot is nudged both ways and the
//! two answers compared.

use harmonic_trinomial::{degenerate_diagnostics, perturbation_fallback, HarmonicTrinomial, Tolerances};
use num_complex::Complex64;

fn main() -> harmonic_trinomial::Result<()> {
    let tol = Tolerances::default();
    let t = HarmonicTrinomial::new(Complex64::new(1.0, 0.0), Complex64::new(3.0, 0.0), Complex64::new(1.0, 0.0), 2, 1)?
        .normalize();

    let diag = degenerate_diagnostics(&t, &tol)?;
    println!("pivot {} generic={} fallback needed={}", diag.p_star, diag.generic, diag.fallback_required);
    for hit in &diag.hits {
        println!("  endpoint hit at r={:.9} ({:?}, path {})", hit.radius, hit.kind, hit.path.symbol());
    }

    let out = perturbation_fallback(&t, &tol, None)?;
    for res in &out.resolutions {
        println!(
            "  r={:.9}: +shift {} events, -shift {} events, accepted {}",
            res.radius, res.plus_events, res.minus_events, res.accepted
        );
    }
    let radii: Vec<String> = out.events.iter().map(|e| format!("{:.9}", e.radius)).collect();
    println!("resolved circles: {}", radii.join(", "));
    Ok(())
}
