use std::f64::consts::{PI, TAU};

use harmonic_trinomial::bisect::{solve_signomial_root, Signomial};
use harmonic_trinomial::oracle::{count_in, JacobianSign};
use harmonic_trinomial::region::zero_free_classification;
use harmonic_trinomial::triangle::{angles, omega_star_derivative_sign, triangle_state, DerivativeSign};
use harmonic_trinomial::{
    breakpoints, circle_roots, count_profile, count_roots_in_disk, find_all_roots, jump_radii, oracle_count, p_star,
    perturbation_fallback, total_root_count, verify, CountConfig, Error, HarmonicTrinomial, JumpSet, OracleParams,
    Path, RegionCase, RegionTag, Tolerances, TriangleState,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};

fn z(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn inst(a: Complex64, b: Complex64, c: Complex64, n: u32, m: u32) -> HarmonicTrinomial {
    HarmonicTrinomial::new(a, b, c, n, m).unwrap()
}

fn e1() -> HarmonicTrinomial {
    inst(z(1.0, 0.0), z(1.0, 0.0), z(1.0, 0.0), 2, 1)
}

fn e3() -> HarmonicTrinomial {
    inst(z(1.0, 0.0), z(3.0, 0.0), z(1.0, 0.0), 2, 1)
}

fn generic() -> HarmonicTrinomial {
    inst(z(1.0, 0.0), z(0.0, 10.0), z(1.0, 0.0), 3, 1)
}

fn tol() -> Tolerances {
    Tolerances::default()
}

#[test]
fn trinomial_basics() {
    let t = generic();
    assert!((t.beta() - PI / 2.0).abs() < 1e-15);
    assert_eq!(
        HarmonicTrinomial::new(z(0.0, 0.0), z(1.0, 0.0), z(1.0, 0.0), 2, 1),
        Err(Error::ZeroCoefficient("a"))
    );
    let root = z(0.5, 7f64.sqrt() / 2.0);
    assert!(e1().evaluate(root).norm() < 1e-12);
    assert_eq!(e1().evaluate(z(1.0, 0.0)), z(3.0, 0.0));
    assert!((e1().jacobian(root) - 7.0).abs() < 1e-12);
    assert!(e3().jacobian(z((-3.0 + 5f64.sqrt()) / 2.0, 0.0)) < 0.0);

    let n = inst(z(0.0, 1.0), z(2.0, 0.0), z(0.0, 2.0), 3, 2).normalize_phase();
    let t = n.trinomial();
    assert!((t.a() - z(1.0, 0.0)).norm() < 1e-15);
    assert!((t.b() - z(0.0, -2.0)).norm() < 1e-15);
    assert!((t.c() - z(2.0, 0.0)).norm() < 1e-15);

    let (h, d) = inst(z(1.0, 0.0), z(1.0, 0.0), z(1.0, 0.0), 4, 2).coprime_reduce();
    assert_eq!((h.n(), h.m(), d), (2, 1, 2));
}

#[test]
fn triangle_examples() {
    let t = e1().normalize();
    assert_eq!(triangle_state(&t, 2f64.sqrt(), &tol()), TriangleState::Strict);
    assert_eq!(triangle_state(&t, (1.0 + 5f64.sqrt()) / 2.0, &tol()), TriangleState::DegenerateA);
    assert_eq!(triangle_state(&t, 0.1, &tol()), TriangleState::InfeasibleC);

    let ang = angles(&t, 2f64.sqrt(), &tol()).unwrap();
    assert!((ang.omega1 - (-1.0 / (2.0 * 2f64.sqrt())).acos()).abs() < 1e-12);
    assert!((ang.omega2 - 0.75f64.acos()).abs() < 1e-12);

    let pivot = p_star(&generic().normalize(), &tol());
    assert!((pivot.p_star + 1.25).abs() < 1e-15 && pivot.generic);
    let flipped = p_star(&inst(z(-1.0, 0.0), z(1.0, 0.0), z(1.0, 0.0), 2, 1).normalize(), &tol());
    assert!((flipped.p_star + 1.0).abs() < 1e-12 && !flipped.generic);

    assert_eq!(omega_star_derivative_sign(&t, 1.0, &tol()), Ok(DerivativeSign::Positive));
    assert_eq!(omega_star_derivative_sign(&e3().normalize(), 0.35, &tol()), Ok(DerivativeSign::Negative));
}

#[test]
fn region_examples() {
    let s5 = 5f64.sqrt();
    let s13 = 13f64.sqrt();
    let p = breakpoints(&e1().normalize(), &tol()).unwrap();
    assert_eq!(p.case, RegionCase::I);
    assert!((p.c_break - (s5 - 1.0) / 2.0).abs() < 1e-12);
    assert!((p.a_break - (s5 + 1.0) / 2.0).abs() < 1e-12);

    let p = breakpoints(&e3().normalize(), &tol()).unwrap();
    assert_eq!(p.case, RegionCase::III);
    let (b1, b2) = p.gap().unwrap();
    assert!((b1 - (3.0 - s5) / 2.0).abs() < 1e-12 && (b2 - (3.0 + s5) / 2.0).abs() < 1e-12);
    assert!((p.c_break - (s13 - 3.0) / 2.0).abs() < 1e-12 && (p.a_break - (s13 + 3.0) / 2.0).abs() < 1e-12);
    assert_eq!(p.omega_min, -0.5);

    let p = breakpoints(&generic().normalize(), &tol()).unwrap();
    assert_eq!(p.case, RegionCase::III);
    assert!((p.b_max - 11.17).abs() < 0.01);

    assert_eq!(zero_free_classification(&e1().normalize(), 0.3, &tol()).unwrap(), RegionTag::BelowC);
    assert_eq!(zero_free_classification(&e3().normalize(), 1.5, &tol()).unwrap(), RegionTag::Gap);
    assert_eq!(zero_free_classification(&e1().normalize(), 2.0, &tol()).unwrap(), RegionTag::AboveA);

    let golden = solve_signomial_root(&Signomial::new([(1.0, 2), (-1.0, 1), (-1.0, 0)]), (1.0, 2.0)).unwrap();
    assert!((golden.root - 1.6180339887).abs() < 1e-10);
}

#[test]
fn counter_examples() {
    let cfg = CountConfig::default();
    let ev = jump_radii(&e1().normalize(), &tol()).unwrap();
    assert_eq!(ev.len(), 2);
    assert!(ev.iter().all(|e| (e.radius - 2f64.sqrt()).abs() < 1e-10));

    assert_eq!(jump_radii(&generic().normalize(), &tol()).unwrap().len(), 5);
    assert_eq!(total_root_count(&e3(), &cfg).unwrap(), 4);
    assert_eq!(count_roots_in_disk(&e1(), 1.5, &cfg).unwrap().count, 2);

    let steps = count_profile(&inst(z(1.0, 0.0), z(1.0, 0.0), z(1.0, 0.0), 4, 2), &cfg).unwrap();
    assert_eq!(steps.len(), 1);
    assert!((steps[0].radius - 2f64.powf(0.25)).abs() < 1e-10);

    let fb = perturbation_fallback(&e3().normalize(), &tol(), None).unwrap();
    assert!(fb.engaged);
    assert_eq!(fb.events.len(), 4);
}

#[test]
fn oracle_examples() {
    let p = OracleParams::default();
    let set = find_all_roots(&e3(), &p).unwrap();
    assert_eq!(set.len(), 4);
    assert_eq!(set.tally(), (3, 1));
    let reversing: Vec<Complex64> =
        set.roots.iter().filter(|r| r.jac_sign == JacobianSign::Reversing).map(|r| r.zeta).collect();
    assert!((reversing[0] - z((-3.0 + 5f64.sqrt()) / 2.0, 0.0)).norm() < 1e-9);
    assert!(set.roots.iter().any(|r| (r.zeta - z(1.5, 7.75f64.sqrt())).norm() < 1e-9));

    assert_eq!(oracle_count(&e1(), 1.5, &p).unwrap().count, 2);
    assert_eq!(oracle_count(&e1(), 1.0, &p).unwrap().count, 0);
    assert_eq!(count_in(&set, 1.0).count, 1);

    for (t, pres, rev) in [(e1(), 2, 0), (e3(), 3, 1), (generic(), 4, 1)] {
        let report = verify(&t, &CountConfig::default());
        assert!(report.passed, "{t}: {:?}", report.checks);
        assert_eq!((report.preserving, report.reversing), (pres, rev));
    }
}

#[test]
fn circle_roots_match_the_oracle() {
    let cfg = CountConfig::default();
    for t in [e1(), e3(), generic()] {
        let oracle = find_all_roots(&t, &OracleParams::default()).unwrap();
        let circle = circle_roots(&t, &cfg).unwrap();
        assert_eq!(circle.len(), oracle.len());
        for c in &circle {
            assert!(oracle.roots.iter().any(|o| (o.zeta - c.zeta).norm() < 1e-8), "{t}: {:?}", c);
        }
    }
    // each path reconstructs its own member of the conjugate pair
    let y = 7f64.sqrt() / 2.0;
    for c in circle_roots(&e1(), &cfg).unwrap() {
        let want = if c.path == Path::Minus { z(0.5, y) } else { z(0.5, -y) };
        assert!((c.zeta - want).norm() < 1e-12);
    }
}

/// Non-generic instances built on purpose: `arg(b)` is chosen so that
/// `2 P*` is an integer. The fallback result must agree with the oracle.
#[test]
fn fallback_agrees_with_oracle_on_non_generic_instances() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let cfg = CountConfig::default();
    let mut engaged = 0;
    for _ in 0..24 {
        let n = rng.gen_range(2..=5u32);
        let m = loop {
            let m = rng.gen_range(1..n);
            if (1..=m).rev().find(|d| n % d == 0 && m % d == 0) == Some(1) {
                break m;
            }
        };
        let modulus = |rng: &mut rand::rngs::StdRng| 10f64.powf(rng.gen_range(-1.0..1.0));
        let alpha = rng.gen_range(0.0..TAU);
        let half: i32 = rng.gen_range(-8..8);
        // n (beta - pi) + m (alpha - pi) = pi * half
        let beta = (PI * f64::from(half) - f64::from(m) * (alpha - PI)) / f64::from(n) + PI;
        let t = inst(
            Complex64::from_polar(modulus(&mut rng), alpha),
            Complex64::from_polar(modulus(&mut rng), beta),
            z(modulus(&mut rng), 0.0),
            n,
            m,
        );
        let set = JumpSet::compute(&t, &cfg).unwrap();
        assert!(!set.pivot.generic);
        engaged += usize::from(set.fallback.is_some());
        let report = verify(&t, &cfg);
        assert!(report.passed, "{t}: {:?} {:?}", report.checks, report.oracle_error);
    }
    assert!(engaged > 0, "no instance needed the fallback");
}
