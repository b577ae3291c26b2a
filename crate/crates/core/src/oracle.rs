//! Independent numerical ground truth: Newton's method on the planar system
//! `(Re f, Im f) = 0`, seeded from a polar grid over the annulus that must
//! contain every zero.
//!
//! Nothing here uses pivots, angles or crossings; the only shared input is
//! the pair of breakpoints bounding the search annulus.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::counter::{count_profile, CountConfig, JumpSet};
use crate::error::{Error, Result};
use crate::region::breakpoints;
use crate::tolerances::Tolerances;
use crate::trinomial::HarmonicTrinomial;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OracleParams {
    /// Angular nodes per `n^2`; at least 32 nodes are always used.
    pub angular_per_n2: usize,
    pub radial: usize,
    /// Multiplies both grid dimensions.
    pub density: usize,
    /// Newton stops once `|f| < newton_tol * scale`.
    pub newton_tol: f64,
    pub max_newton: usize,
    /// Residual accepted for a root when Newton exhausts its steps.
    pub accept_residual: f64,
    /// Roots closer than `dedup * a_break` are merged.
    pub dedup: f64,
    /// `|J| < singular * (|f_z| + |f_zbar|)^2` marks a singular root.
    pub singular: f64,
    /// When densification fails, a root with relative Jacobian below this is
    /// reported as singular instead of as an exhausted grid.
    pub near_singular: f64,
    /// Number of 4x densifications before giving up.
    pub refinements: usize,
}

impl Default for OracleParams {
    fn default() -> Self {
        Self {
            angular_per_n2: 8,
            radial: 64,
            density: 1,
            newton_tol: 1e-12,
            max_newton: 50,
            accept_residual: 1e-9,
            dedup: 1e-7,
            singular: 1e-10,
            near_singular: 1e-4,
            refinements: 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JacobianSign {
    #[serde(rename = "+")]
    Preserving,
    #[serde(rename = "-")]
    Reversing,
    #[serde(rename = "0")]
    Singular,
}

/// Serialized as `{"re","im","residual","jac_sign"}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(into = "OracleRootJson")]
pub struct OracleRoot {
    pub zeta: Complex64,
    pub residual: f64,
    pub jac_sign: JacobianSign,
}

#[derive(Serialize)]
struct OracleRootJson {
    re: f64,
    im: f64,
    residual: f64,
    jac_sign: JacobianSign,
}

impl From<OracleRoot> for OracleRootJson {
    fn from(r: OracleRoot) -> Self {
        Self { re: r.zeta.re, im: r.zeta.im, residual: r.residual, jac_sign: r.jac_sign }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchParams {
    pub angular: usize,
    pub radial: usize,
    pub inner: f64,
    pub outer: f64,
    pub newton_tol: f64,
    pub dedup_radius: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    /// Sorted by `(|z|, arg z)`.
    pub roots: Vec<OracleRoot>,
    pub search: SearchParams,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `(sense-preserving, sense-reversing)` counts.
    pub fn tally(&self) -> (usize, usize) {
        let pres = self.roots.iter().filter(|r| r.jac_sign == JacobianSign::Preserving).count();
        let rev = self.roots.iter().filter(|r| r.jac_sign == JacobianSign::Reversing).count();
        (pres, rev)
    }

    pub fn count_below(&self, r: f64) -> usize {
        self.roots.iter().filter(|x| x.zeta.norm() < r).count()
    }

    pub fn moduli(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.zeta.norm()).collect()
    }

    /// JSON array of `{"re","im","residual","jac_sign"}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.roots).expect("plain numbers serialize")
    }
}

/// One damped Newton run for the planar system.
///
/// With `p = f_z` and `q = f_zbar`, the real 2x2 Newton step solving
/// `p d + q conj(d) = -f` is `d = (conj(p) w - q conj(w)) / (|p|^2 - |q|^2)`
/// where `w = -f`.
fn newton(t: &HarmonicTrinomial, seed: Complex64, params: &OracleParams, outer: f64) -> Option<Complex64> {
    let mut z = seed;
    let mut fz = t.evaluate(z);
    for _ in 0..params.max_newton {
        let scale = t.scale(z.norm());
        if fz.norm() < params.newton_tol * scale {
            return Some(z);
        }
        let (p, q) = t.wirtinger(z);
        let det = p.norm_sqr() - q.norm_sqr();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let w = -fz;
        let step = (p.conj() * w - q * w.conj()) / det;
        let mut lambda = 1.0;
        let mut next = z + step;
        let mut f_next = t.evaluate(next);
        for _ in 0..10 {
            if f_next.norm() < fz.norm() {
                break;
            }
            lambda *= 0.5;
            next = z + step * lambda;
            f_next = t.evaluate(next);
        }
        z = next;
        fz = f_next;
        if !(z.norm() <= 4.0 * outer) {
            return None;
        }
    }
    (fz.norm() < params.accept_residual * t.scale(z.norm())).then_some(z)
}

/// `(J, J / (|f_z| + |f_zbar|)^2)` at `z`.
fn jacobian_at(t: &HarmonicTrinomial, z: Complex64) -> (f64, f64) {
    let (p, q) = t.wirtinger(z);
    let jac = p.norm_sqr() - q.norm_sqr();
    (jac, jac / (p.norm() + q.norm()).powi(2))
}

fn classify(t: &HarmonicTrinomial, z: Complex64, params: &OracleParams) -> Result<OracleRoot> {
    let (jac, rel) = jacobian_at(t, z);
    if rel.abs() < params.singular {
        return Err(Error::SingularRoot { re: z.re, im: z.im, jacobian: jac });
    }
    let jac_sign = if jac > 0.0 { JacobianSign::Preserving } else { JacobianSign::Reversing };
    Ok(OracleRoot { zeta: z, residual: t.evaluate(z).norm(), jac_sign })
}

fn search(t: &HarmonicTrinomial, params: &OracleParams, density: usize) -> Result<RootSet> {
    let profile = breakpoints(&t.normalize_phase(), &Tolerances::default())?;
    let inner = 0.9 * profile.c_break;
    let outer = 1.1 * profile.a_break;
    let n = t.n() as usize;
    let angular = (params.angular_per_n2 * n * n).max(32) * density;
    let radial = params.radial * density;
    let dedup_radius = params.dedup * profile.a_break;

    let mut found: Vec<Complex64> = Vec::new();
    for i in 0..radial {
        let r = inner + (outer - inner) * (i as f64 + 0.5) / radial as f64;
        for j in 0..angular {
            let theta = TAU * (j as f64 + 0.5) / angular as f64;
            let Some(z) = newton(t, Complex64::from_polar(r, theta), params, outer) else {
                continue;
            };
            if !found.iter().any(|w| (w - z).norm() <= dedup_radius) {
                found.push(z);
            }
        }
    }
    found.sort_by(|x, y| crate::trinomial::modulus_arg_order(*x, *y));
    let roots = found.into_iter().map(|z| classify(t, z, params)).collect::<Result<Vec<_>>>()?;
    Ok(RootSet {
        roots,
        search: SearchParams { angular, radial, inner, outer, newton_tol: params.newton_tol, dedup_radius },
    })
}

fn plausible(t: &HarmonicTrinomial, set: &RootSet) -> bool {
    let (n, m) = (t.n() as usize, t.m() as usize);
    let (pres, rev) = set.tally();
    set.len() <= n + 2 * m && set.len() % 2 == n % 2 && pres == rev + n
}

/// All zeros of `t`, found by grid-seeded Newton iteration. The grid is
/// densified 4x (up to `params.refinements` times) when the result violates
/// the parity, bound or orientation checks.
pub fn find_all_roots(t: &HarmonicTrinomial, params: &OracleParams) -> Result<RootSet> {
    let mut density = params.density.max(1);
    let mut last = search(t, params, density)?;
    for _ in 0..params.refinements {
        if plausible(t, &last) {
            return Ok(last);
        }
        density *= 4;
        last = search(t, params, density)?;
    }
    if plausible(t, &last) {
        return Ok(last);
    }
    // A double root only converges to about sqrt(eps), so a fold shows up as
    // an unstable cluster with a small but non-negligible Jacobian.
    let worst = last
        .roots
        .iter()
        .map(|r| (r.zeta, jacobian_at(t, r.zeta)))
        .min_by(|x, y| x.1 .1.abs().total_cmp(&y.1 .1.abs()));
    match worst {
        Some((z, (jac, rel))) if rel.abs() < params.near_singular => {
            Err(Error::SingularRoot { re: z.re, im: z.im, jacobian: jac })
        }
        _ => Err(Error::GridExhausted { found: last.len() }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCount {
    pub count: usize,
    /// Some root modulus is within `1e-6 r` of `r`.
    pub near_boundary: bool,
}

pub fn oracle_count(t: &HarmonicTrinomial, r: f64, params: &OracleParams) -> Result<OracleCount> {
    let set = find_all_roots(t, params)?;
    Ok(count_in(&set, r))
}

pub fn count_in(set: &RootSet, r: f64) -> OracleCount {
    OracleCount {
        count: set.count_below(r),
        near_boundary: set.roots.iter().any(|x| (x.zeta.norm() - r).abs() <= 1e-6 * r),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance: HarmonicTrinomial,
    pub formula_total: Option<usize>,
    pub oracle_total: Option<usize>,
    pub preserving: usize,
    pub reversing: usize,
    pub checks: Vec<Check>,
    pub formula_error: Option<String>,
    pub oracle_error: Option<String>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check { name: name.to_string(), passed, detail }
}

/// Cross-checks the crossing count against the oracle: totals, per-root
/// moduli against jump radii, counts between consecutive jump radii,
/// the orientation tally, and the reconstructed circle roots.
pub fn verify(t: &HarmonicTrinomial, cfg: &CountConfig) -> VerificationReport {
    let params = cfg.oracle.unwrap_or_default();
    let cfg = CountConfig { oracle: Some(params), ..cfg.clone() };
    let n = t.n() as usize;
    let m = t.m() as usize;
    let mut report = VerificationReport {
        instance: *t,
        formula_total: None,
        oracle_total: None,
        preserving: 0,
        reversing: 0,
        checks: Vec::new(),
        formula_error: None,
        oracle_error: None,
        passed: false,
    };

    let roots = match find_all_roots(t, &params) {
        Ok(r) => r,
        Err(e) => {
            report.oracle_error = Some(format!("{}: {e}", e.kind()));
            return report;
        }
    };
    let set = match JumpSet::compute(t, &cfg) {
        Ok(s) => s,
        Err(e) => {
            report.formula_error = Some(format!("{}: {e}", e.kind()));
            return report;
        }
    };
    let (pres, rev) = roots.tally();
    report.preserving = pres;
    report.reversing = rev;
    report.oracle_total = Some(roots.len());
    report.formula_total = Some(set.total());

    report.checks.push(check(
        "total",
        set.total() == roots.len(),
        format!("formula {} vs oracle {}", set.total(), roots.len()),
    ));

    let radii: Vec<f64> = set.events.iter().map(|e| e.radius).collect();
    let moduli = roots.moduli();
    let worst = if radii.len() == moduli.len() {
        radii.iter().zip(&moduli).map(|(r, q)| (r - q).abs() / r).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    report.checks.push(check("moduli", worst <= 1e-6, format!("max relative gap {worst:.3e}")));

    let steps = count_profile(t, &cfg).unwrap_or_default();
    let mut probes = Vec::new();
    if let Some(first) = steps.first() {
        probes.push(first.radius / 2.0);
    }
    probes.extend(steps.windows(2).map(|w| 0.5 * (w[0].radius + w[1].radius)));
    if let Some(last) = steps.last() {
        probes.push(last.radius * 1.5);
    }
    let mismatches: Vec<f64> = probes
        .iter()
        .copied()
        .filter(|&r| set.count(r, false) != roots.count_below(r))
        .collect();
    report.checks.push(check(
        "midpoint_counts",
        mismatches.is_empty(),
        format!("{} probes, {} mismatches", probes.len(), mismatches.len()),
    ));

    report.checks.push(check(
        "jacobian_tally",
        pres == rev + n,
        format!("{pres} - {rev} = {} (n = {n})", pres as i64 - rev as i64),
    ));

    report.checks.push(check(
        "bounds",
        set.total() <= n + 2 * m && set.total() % 2 == n % 2,
        format!("total {} <= n + 2m = {}", set.total(), n + 2 * m),
    ));

    let circle = crate::counter::circle_roots(t, &cfg);
    let (ok, detail) = match &circle {
        Ok(cr) => {
            let tol = 1e-6 * roots.search.outer;
            let unmatched = cr
                .iter()
                .filter(|c| !roots.roots.iter().any(|o| (o.zeta - c.zeta).norm() <= tol))
                .count();
            (
                unmatched == 0 && cr.len() == roots.len(),
                format!("{} circle roots, {} unmatched", cr.len(), unmatched),
            )
        }
        Err(e) => (false, e.to_string()),
    };
    report.checks.push(check("circle_roots", ok, detail));

    report.passed = report.checks.iter().all(|c| c.passed);
    report
}
