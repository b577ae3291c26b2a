//! Bisection kernel used for breakpoints and crossing radii.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracketed {
    pub root: f64,
    /// Final bracket width relative to `|root|`.
    pub achieved_rtol: f64,
    pub iterations: usize,
}

/// Bisects `f` on `[lo, hi]` until the bracket is narrower than
/// `rtol * max(|lo|, |hi|)`, it can no longer be split, or `max_iter` steps
/// have been taken. An exact zero at either end is returned immediately.
pub fn bisect<F>(mut f: F, lo: f64, hi: f64, rtol: f64, max_iter: usize) -> Result<Bracketed>
where
    F: FnMut(f64) -> f64,
{
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(Bracketed { root: lo, achieved_rtol: 0.0, iterations: 0 });
    }
    if f_hi == 0.0 {
        return Ok(Bracketed { root: hi, achieved_rtol: 0.0, iterations: 0 });
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::BracketFailure { what: "bisection" });
    }
    let mut iterations = 0;
    while iterations < max_iter {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi || hi - lo <= rtol * lo.abs().max(hi.abs()) {
            break;
        }
        iterations += 1;
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(Bracketed { root: mid, achieved_rtol: 0.0, iterations });
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let root = lo + 0.5 * (hi - lo);
    let achieved_rtol = if root == 0.0 { hi - lo } else { (hi - lo) / root.abs() };
    Ok(Bracketed { root, achieved_rtol, iterations })
}

/// A finite sum `sum_i coeff_i * r^exp_i` with non-negative integer exponents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Signomial {
    pub terms: Vec<(f64, u32)>,
}

impl Signomial {
    pub fn new(terms: impl IntoIterator<Item = (f64, u32)>) -> Self {
        Self { terms: terms.into_iter().collect() }
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.terms.iter().map(|&(c, e)| c * r.powi(e as i32)).sum()
    }

    /// Sum of the term magnitudes; the scale against which residuals are judged.
    pub fn magnitude(&self, r: f64) -> f64 {
        self.terms.iter().map(|&(c, e)| (c * r.powi(e as i32)).abs()).sum()
    }
}

/// Root of a signomial inside a sign-changing bracket, to relative `1e-13`
/// or 200 iterations.
pub fn solve_signomial_root(s: &Signomial, bracket: (f64, f64)) -> Result<Bracketed> {
    bisect(|r| s.eval(r), bracket.0, bracket.1, 1e-13, 200)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio() {
        let s = Signomial::new([(1.0, 2), (-1.0, 1), (-1.0, 0)]);
        let got = solve_signomial_root(&s, (1.0, 2.0)).unwrap();
        assert!((got.root - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((got.root - 1.6180339887).abs() < 1e-10);
        assert!(got.achieved_rtol <= 1e-13);
    }

    #[test]
    fn linear_and_quadratic() {
        let s = Signomial::new([(1.0, 1), (-1.0, 0)]);
        assert!((solve_signomial_root(&s, (0.0, 2.0)).unwrap().root - 1.0).abs() < 1e-15);
        let s = Signomial::new([(-1.0, 2), (3.0, 1), (-1.0, 0)]);
        let got = solve_signomial_root(&s, (0.0, 1.5)).unwrap();
        assert!((got.root - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-13);
        assert!((got.root - 0.3819660113).abs() < 1e-10);
    }

    #[test]
    fn same_sign_is_rejected() {
        let s = Signomial::new([(1.0, 2), (1.0, 0)]);
        assert_eq!(
            solve_signomial_root(&s, (0.0, 3.0)),
            Err(Error::BracketFailure { what: "bisection" })
        );
    }

    #[test]
    fn iteration_cap() {
        let got = bisect(|x| x - 0.3, 0.0, 1.0, 0.0, 5).unwrap();
        assert_eq!(got.iterations, 5);
        assert!(got.achieved_rtol > 0.05);
    }
}
