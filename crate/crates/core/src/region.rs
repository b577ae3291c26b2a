//! The region of radii where `(|a| r^n, |b| r^m, c)` is a strict triangle,
//! its breakpoints, and the monotone profile of `omega*` over it.
//!
//! With `A(r) = |a|r^n - |b|r^m - c`, `B(r) = |b|r^m - |a|r^n - c` and
//! `C(r) = c - |a|r^n - |b|r^m`, each of `A` and `C` has exactly one positive
//! root (`a_break` and `c_break`) and `B` peaks at `r0`. The sign of
//! `B(r0)` selects one of three shapes:
//!
//! * Case I, `B(r0) < 0`: the region is `(c_break, a_break)`.
//! * Case II, `B(r0) = 0`: the region is `(c_break, r0) U (r0, a_break)`.
//! * Case III, `B(r0) > 0`: the region is `(c_break, b1) U (b2, a_break)`.

use serde::{Deserialize, Serialize, Serializer};

use crate::bisect::{bisect, Bracketed, Signomial};
use crate::error::{Error, Result};
use crate::tolerances::{rel_close, Tolerances};
use crate::triangle::{critical_radius, omega_star};
use crate::trinomial::NormalizedTrinomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionCase {
    I,
    II,
    III,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BBreaks {
    None,
    /// Case II: `B` touches zero only at `r0`.
    Single(f64),
    Pair(f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionProfile {
    pub case: RegionCase,
    pub c_break: f64,
    pub a_break: f64,
    pub r0: f64,
    /// `B(r0)`, the maximum of `B`.
    pub b_max: f64,
    pub b_breaks: BBreaks,
    /// Interval on which `omega*` sits at its minimum.
    pub plateau: (f64, f64),
    pub omega_min: f64,
    /// Radius above the dip where `omega*` returns to zero, when the dip is
    /// strictly negative.
    pub r1: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionTag {
    BelowC,
    Gap,
    AboveA,
    InsideT,
    Boundary,
}

impl RegionProfile {
    /// Outer ends `(b1, b2)` of the gap, if any. Case II reports `(r0, r0)`.
    pub fn gap(&self) -> Option<(f64, f64)> {
        match self.b_breaks {
            BBreaks::None => None,
            BBreaks::Single(b) => Some((b, b)),
            BBreaks::Pair(b1, b2) => Some((b1, b2)),
        }
    }

    /// Every radius where the triangle degenerates, in increasing order.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut out = vec![self.c_break];
        match self.b_breaks {
            BBreaks::None => {}
            BBreaks::Single(b) => out.push(b),
            BBreaks::Pair(b1, b2) => out.extend([b1, b2]),
        }
        out.push(self.a_break);
        out
    }

    pub fn classify(&self, r: f64) -> RegionTag {
        const EDGE: f64 = 1e-12;
        if self.breakpoints().iter().any(|&bp| rel_close(r, bp, EDGE)) {
            return RegionTag::Boundary;
        }
        if r < self.c_break {
            RegionTag::BelowC
        } else if r > self.a_break {
            RegionTag::AboveA
        } else if matches!(self.gap(), Some((b1, b2)) if r > b1 && r < b2) {
            RegionTag::Gap
        } else {
            RegionTag::InsideT
        }
    }

    pub fn contains(&self, r: f64) -> bool {
        self.classify(r) == RegionTag::InsideT
    }
}

#[derive(Serialize)]
struct RegionProfileJson {
    case: &'static str,
    c: f64,
    a: f64,
    r0: f64,
    b1: Option<f64>,
    b2: Option<f64>,
    omega_min: f64,
}

impl Serialize for RegionProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (b1, b2) = match self.gap() {
            Some((b1, b2)) => (Some(b1), Some(b2)),
            None => (None, None),
        };
        let case = match self.case {
            RegionCase::I => "I",
            RegionCase::II => "II",
            RegionCase::III => "III",
        };
        RegionProfileJson {
            case,
            c: self.c_break,
            a: self.a_break,
            r0: self.r0,
            b1,
            b2,
            omega_min: self.omega_min,
        }
        .serialize(serializer)
    }
}

/// The signed combinations `(A(r), B(r), C(r))`.
pub fn abc_values(t: &NormalizedTrinomial, r: f64) -> (f64, f64, f64) {
    let [la, lb, lc] = t.sides(r);
    (la - lb - lc, lb - la - lc, lc - la - lb)
}

fn a_poly(t: &NormalizedTrinomial) -> Signomial {
    Signomial::new([(t.abs_a(), t.n()), (-t.abs_b(), t.m()), (-t.c(), 0)])
}

fn b_poly(t: &NormalizedTrinomial) -> Signomial {
    Signomial::new([(t.abs_b(), t.m()), (-t.abs_a(), t.n()), (-t.c(), 0)])
}

fn c_poly(t: &NormalizedTrinomial) -> Signomial {
    Signomial::new([(t.c(), 0), (-t.abs_a(), t.n()), (-t.abs_b(), t.m())])
}

/// Grows `hi` geometrically from `start` until `s(hi)` has the sign `want`.
fn grow_upper(s: &Signomial, start: f64, want_positive: bool, what: &'static str) -> Result<f64> {
    let mut hi = start.max(f64::MIN_POSITIVE);
    for _ in 0..400 {
        let v = s.eval(hi);
        if (v > 0.0) == want_positive && v != 0.0 {
            return Ok(hi);
        }
        hi *= 2.0;
        if !hi.is_finite() {
            break;
        }
    }
    Err(Error::BracketFailure { what })
}

fn root_in(s: &Signomial, lo: f64, hi: f64, tol: &Tolerances) -> Result<Bracketed> {
    bisect(|r| s.eval(r), lo, hi, tol.bisection_rtol, tol.bisection_max_iter)
}

/// Breakpoints, case label and `omega*` dip for a normalized instance.
pub fn breakpoints(t: &NormalizedTrinomial, tol: &Tolerances) -> Result<RegionProfile> {
    let n = f64::from(t.n());
    let (abs_a, c) = (t.abs_a(), t.c());

    let a_s = a_poly(t);
    let a_hi = grow_upper(&a_s, (c / abs_a).powf(1.0 / n), true, "a_break")?;
    let a_break = root_in(&a_s, 0.0, a_hi, tol)
        .map_err(|_| Error::BracketFailure { what: "a_break" })?
        .root;

    let c_s = c_poly(t);
    let c_hi = grow_upper(&c_s, (c / abs_a).powf(1.0 / n), false, "c_break")?;
    let c_break = root_in(&c_s, 0.0, c_hi, tol)
        .map_err(|_| Error::BracketFailure { what: "c_break" })?
        .root;

    let r0 = critical_radius(t);
    let b_s = b_poly(t);
    let b_max = b_s.eval(r0);
    let case_two = b_max.abs() <= tol.case_two * b_s.magnitude(r0);
    let m_half = f64::from(t.m()) / 2.0;

    let (case, b_breaks, plateau, omega_min) = if case_two {
        (RegionCase::II, BBreaks::Single(r0), (r0, r0), -m_half)
    } else if b_max > 0.0 {
        let b1 = root_in(&b_s, 0.0, r0, tol)
            .map_err(|_| Error::BracketFailure { what: "b1" })?
            .root;
        let b_hi = grow_upper(&b_s, 2.0 * r0, false, "b2")?;
        let b2 = root_in(&b_s, r0, b_hi, tol)
            .map_err(|_| Error::BracketFailure { what: "b2" })?
            .root;
        (RegionCase::III, BBreaks::Pair(b1, b2), (b1, b2), -m_half)
    } else if r0 <= c_break {
        (RegionCase::I, BBreaks::None, (c_break, c_break), 0.0)
    } else {
        (RegionCase::I, BBreaks::None, (r0, r0), omega_star(t, r0, tol))
    };

    let r1 = if omega_min < 0.0 {
        bisect(
            |r| omega_star(t, r, tol),
            plateau.1,
            a_break,
            tol.bisection_rtol,
            tol.bisection_max_iter,
        )
        .ok()
        .map(|b| b.root)
    } else {
        None
    };

    Ok(RegionProfile { case, c_break, a_break, r0, b_max, b_breaks, plateau, omega_min, r1 })
}

/// Where `r` sits relative to the region; radii outside its closure carry
/// no roots.
pub fn zero_free_classification(t: &NormalizedTrinomial, r: f64, tol: &Tolerances) -> Result<RegionTag> {
    Ok(breakpoints(t, tol)?.classify(r))
}
