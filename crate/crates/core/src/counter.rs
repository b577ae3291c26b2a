//! Zero counting by pivot crossings.
//!
//! On the triangle region every zero `z = r e^{i theta}` of a normalized,
//! coprime instance satisfies `P* - omega*(r) in Z` or `P* + omega*(r) in Z`,
//! and each such integer hit carries exactly one zero on the circle `|z| = r`.
//! Since `omega*` is strictly monotone on at most two pieces (a descending
//! one ending at the dip and an ascending one starting there), the zeros are
//! enumerated by walking both pieces along both paths and bisecting for the
//! radius of every integer crossed.
//!
//! Integers attained exactly at a piece end (a degenerate radius or the dip)
//! are non-transversal hits. They are resolved by [`perturbation_fallback`],
//! which nudges `arg b` in both directions and keeps what the two generic
//! neighbours agree on.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bisect::bisect;
use crate::error::{Error, Result};
use crate::oracle::{find_all_roots, OracleParams};
use crate::region::{breakpoints, RegionCase, RegionProfile, RegionTag};
use crate::tolerances::{nearest_integer, rel_close, Tolerances};
use crate::triangle::{angles, omega_star, p_star, Path, PivotData};
use crate::trinomial::{HarmonicTrinomial, NormalizedTrinomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Piece {
    Descending,
    Ascending,
}

/// One unit of root count: the path `P* + sign * omega*` equals `k` at `radius`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JumpEvent {
    pub radius: f64,
    pub path: Path,
    pub k: i64,
    pub piece: Piece,
    /// `false` for hits at a piece end, which need the fallback.
    pub transversal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct MonotonePiece {
    kind: Piece,
    lo: f64,
    hi: f64,
    omega_lo: f64,
    omega_hi: f64,
}

fn pieces(t: &NormalizedTrinomial, profile: &RegionProfile) -> Vec<MonotonePiece> {
    let n_half = f64::from(t.n()) / 2.0;
    let mut out = Vec::with_capacity(2);
    let (d1, d2) = profile.plateau;
    if d1 > profile.c_break {
        out.push(MonotonePiece {
            kind: Piece::Descending,
            lo: profile.c_break,
            hi: d1,
            omega_lo: 0.0,
            omega_hi: profile.omega_min,
        });
    }
    if profile.a_break > d2 {
        out.push(MonotonePiece {
            kind: Piece::Ascending,
            lo: d2,
            hi: profile.a_break,
            omega_lo: profile.omega_min,
            omega_hi: n_half,
        });
    }
    out
}

/// Where a non-transversal hit can occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialKind {
    /// `c = |a| r^n + |b| r^m`.
    InnerEdge,
    /// `|b| r^m = |a| r^n + c` (gap edge or tangency).
    GapEdge,
    /// Interior minimum of `omega*` (Case I); the triangle is strict there.
    Dip,
    /// `|a| r^n = |b| r^m + c`.
    OuterEdge,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct SpecialRadius {
    radius: f64,
    omega: f64,
    kind: SpecialKind,
    piece: Piece,
}

fn special_radii(t: &NormalizedTrinomial, profile: &RegionProfile) -> Vec<SpecialRadius> {
    let first_piece = if profile.plateau.0 > profile.c_break { Piece::Descending } else { Piece::Ascending };
    let mut out = vec![SpecialRadius {
        radius: profile.c_break,
        omega: 0.0,
        kind: SpecialKind::InnerEdge,
        piece: first_piece,
    }];
    let gap_edge = |radius, piece| SpecialRadius { radius, omega: profile.omega_min, kind: SpecialKind::GapEdge, piece };
    match profile.case {
        RegionCase::I if profile.plateau.0 > profile.c_break => out.push(SpecialRadius {
            radius: profile.r0,
            omega: profile.omega_min,
            kind: SpecialKind::Dip,
            piece: Piece::Descending,
        }),
        RegionCase::I => {}
        RegionCase::II => out.push(gap_edge(profile.r0, Piece::Descending)),
        RegionCase::III => {
            out.push(gap_edge(profile.plateau.0, Piece::Descending));
            out.push(gap_edge(profile.plateau.1, Piece::Ascending));
        }
    }
    out.push(SpecialRadius {
        radius: profile.a_break,
        omega: f64::from(t.n()) / 2.0,
        kind: SpecialKind::OuterEdge,
        piece: Piece::Ascending,
    });
    out
}

fn ensure_coprime(t: &NormalizedTrinomial) -> Result<()> {
    if t.is_coprime() {
        Ok(())
    } else {
        Err(Error::NonCoprime { n: t.n(), m: t.m() })
    }
}

/// Every integer crossing of both pivot paths, transversal ones with their
/// bisected radius and non-transversal ones at the piece end where they occur.
pub fn jump_radii(t: &NormalizedTrinomial, tol: &Tolerances) -> Result<Vec<JumpEvent>> {
    ensure_coprime(t)?;
    let profile = breakpoints(t, tol)?;
    let pivot = p_star(t, tol);
    Ok(jump_radii_with(t, &profile, &pivot, tol))
}

fn jump_radii_with(
    t: &NormalizedTrinomial,
    profile: &RegionProfile,
    pivot: &PivotData,
    tol: &Tolerances,
) -> Vec<JumpEvent> {
    let mut events = Vec::new();
    for piece in pieces(t, profile) {
        for path in Path::BOTH {
            let g_lo = pivot.path_value(path, piece.omega_lo);
            let g_hi = pivot.path_value(path, piece.omega_hi);
            let (lo_v, hi_v) = (g_lo.min(g_hi), g_lo.max(g_hi));
            let first = (lo_v + tol.int_hit).floor() as i64 + 1;
            let last = (hi_v - tol.int_hit).ceil() as i64 - 1;
            for k in first..=last {
                let target = k as f64;
                let crossing = bisect(
                    |r| pivot.eval(t, path, r, tol) - target,
                    piece.lo,
                    piece.hi,
                    tol.bisection_rtol,
                    tol.bisection_max_iter,
                );
                // the path is continuous and strictly monotone on the piece,
                // so a bracket always exists
                let radius = crossing.map(|b| b.root).unwrap_or(f64::NAN);
                events.push(JumpEvent { radius, path, k, piece: piece.kind, transversal: true });
            }
        }
    }
    for sp in special_radii(t, profile) {
        for path in Path::BOTH {
            let (k, dist) = nearest_integer(pivot.path_value(path, sp.omega));
            if dist <= tol.int_hit {
                events.push(JumpEvent { radius: sp.radius, path, k, piece: sp.piece, transversal: false });
            }
        }
    }
    sort_events(&mut events);
    events
}

fn sort_events(events: &mut [JumpEvent]) {
    events.sort_by(|x, y| {
        x.radius
            .total_cmp(&y.radius)
            .then(x.path.cmp(&y.path))
            .then(x.k.cmp(&y.k))
    });
}

/// An integer hit at a piece end.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EndpointHit {
    pub radius: f64,
    pub kind: SpecialKind,
    pub path: Path,
    pub k: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegenerateReport {
    pub p_star: f64,
    /// `2 P*` is not an integer.
    pub generic: bool,
    /// Degenerate radii (`c_break`, gap edges, `a_break`) that carry no root.
    pub root_free_radii: Vec<f64>,
    pub hits: Vec<EndpointHit>,
    pub fallback_required: bool,
}

/// Genericity of the pivot and the list of non-transversal hits.
///
/// On a degenerate radius both paths differ by an integer, so they hit
/// together or not at all; without a hit the circle carries no root.
pub fn degenerate_diagnostics(t: &NormalizedTrinomial, tol: &Tolerances) -> Result<DegenerateReport> {
    let profile = breakpoints(t, tol)?;
    let pivot = p_star(t, tol);
    let mut hits = Vec::new();
    let mut root_free_radii = Vec::new();
    for sp in special_radii(t, &profile) {
        let mut any = false;
        for path in Path::BOTH {
            let (k, dist) = nearest_integer(pivot.path_value(path, sp.omega));
            if dist <= tol.int_hit {
                any = true;
                hits.push(EndpointHit { radius: sp.radius, kind: sp.kind, path, k });
            }
        }
        if !any && sp.kind != SpecialKind::Dip {
            root_free_radii.push(sp.radius);
        }
    }
    Ok(DegenerateReport {
        p_star: pivot.p_star,
        generic: pivot.generic,
        root_free_radii,
        fallback_required: !hits.is_empty(),
        hits,
    })
}

/// Per-radius bookkeeping of how the fallback resolved a hit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FallbackResolution {
    pub radius: f64,
    pub plus_events: usize,
    pub minus_events: usize,
    pub accepted: usize,
    pub oracle_resolved: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FallbackOutcome {
    pub events: Vec<JumpEvent>,
    pub engaged: bool,
    pub resolutions: Vec<FallbackResolution>,
}

/// Resolves non-transversal hits by comparing the jump lists of the two
/// instances whose pivot is shifted by `+-tol.pivot_shift` (through `arg b`).
///
/// Near each hit radius the number of perturbed events (beyond the
/// transversal ones already present) must agree between both shifts; that
/// number of events is then placed exactly on the hit radius. Disagreements
/// are settled by counting oracle roots on the circle when `oracle` is
/// given, and are an error otherwise.
pub fn perturbation_fallback(
    t: &NormalizedTrinomial,
    tol: &Tolerances,
    oracle: Option<&OracleParams>,
) -> Result<FallbackOutcome> {
    ensure_coprime(t)?;
    let profile = breakpoints(t, tol)?;
    let pivot = p_star(t, tol);
    fallback_with(t, &profile, &pivot, tol, oracle)
}

fn fallback_with(
    t: &NormalizedTrinomial,
    profile: &RegionProfile,
    pivot: &PivotData,
    tol: &Tolerances,
    oracle: Option<&OracleParams>,
) -> Result<FallbackOutcome> {
    let raw = jump_radii_with(t, profile, pivot, tol);
    let (mut events, hits): (Vec<_>, Vec<_>) = raw.into_iter().partition(|e| e.transversal);
    if hits.is_empty() {
        return Ok(FallbackOutcome { events, engaged: false, resolutions: Vec::new() });
    }

    // P* moves by n * delta / 2pi when arg b moves by delta
    let delta = TAU * tol.pivot_shift / f64::from(t.n());
    let perturbed = |sign: f64| {
        let shifted = t.with_beta_shift(sign * delta);
        let pv = p_star(&shifted, tol);
        jump_radii_with(&shifted, profile, &pv, tol)
    };
    let plus = perturbed(1.0);
    let minus = perturbed(-1.0);

    let mut hit_radii: Vec<f64> = hits.iter().map(|h| h.radius).collect();
    hit_radii.dedup_by(|x, y| rel_close(*x, *y, 1e-12));

    let mut oracle_roots = None;
    let mut resolutions = Vec::new();
    let mut accepted_events = Vec::new();
    for &rho in &hit_radii {
        let near = |e: &&JumpEvent| (e.radius - rho).abs() <= tol.fallback_match * rho;
        let base = events.iter().filter(near).count();
        let plus_near: Vec<&JumpEvent> = plus.iter().filter(near).collect();
        let minus_near = minus.iter().filter(near).count();
        let cp = plus_near.len().saturating_sub(base);
        let cm = minus_near.saturating_sub(base);
        let stray = plus.iter().chain(minus.iter()).filter(near).any(|e| !e.transversal);

        let (accepted, oracle_resolved) = if cp == cm && !stray {
            (cp, false)
        } else if let Some(params) = oracle {
            if oracle_roots.is_none() {
                oracle_roots = Some(find_all_roots(t.trinomial(), params)?);
            }
            let roots = oracle_roots.as_ref().expect("oracle roots computed above");
            let on_circle = roots.roots.iter().filter(|r| rel_close(r.zeta.norm(), rho, 1e-6)).count();
            (on_circle.saturating_sub(base), true)
        } else {
            return Err(Error::FallbackDisagreement { radius: rho, plus: cp, minus: cm });
        };

        let template: Vec<(Path, i64)> = {
            let mut v: Vec<(Path, i64)> = plus_near
                .iter()
                .filter(|p| !events.iter().any(|e| near(&e) && e.path == p.path && e.k == p.k))
                .map(|p| (p.path, p.k))
                .collect();
            v.extend(hits.iter().filter(|h| rel_close(h.radius, rho, 1e-12)).map(|h| (h.path, h.k)));
            v
        };
        let piece = hits
            .iter()
            .find(|h| rel_close(h.radius, rho, 1e-12))
            .map(|h| h.piece)
            .unwrap_or(Piece::Ascending);
        for i in 0..accepted {
            let (path, k) = template[i % template.len()];
            accepted_events.push(JumpEvent { radius: rho, path, k, piece, transversal: false });
        }
        resolutions.push(FallbackResolution {
            radius: rho,
            plus_events: cp,
            minus_events: cm,
            accepted,
            oracle_resolved,
        });
    }
    events.extend(accepted_events);
    sort_events(&mut events);
    Ok(FallbackOutcome { events, engaged: true, resolutions })
}

/// Options shared by the counting entry points.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CountConfig {
    pub tol: Tolerances,
    /// Count roots with `|z| <= r` instead of `|z| < r`.
    pub closed_disk: bool,
    /// When set, fallback disagreements are settled by the numeric oracle.
    pub oracle: Option<OracleParams>,
}

/// The complete, resolved jump list of an instance.
#[derive(Debug, Clone, PartialEq)]
pub struct JumpSet {
    pub trinomial: HarmonicTrinomial,
    /// Phase-rotated, gcd-reduced instance the crossings were computed on.
    pub reduced: NormalizedTrinomial,
    pub pivot: PivotData,
    /// Region of the reduced instance.
    pub region: RegionProfile,
    /// Events of the reduced instance.
    pub reduced_events: Vec<JumpEvent>,
    /// Events of the original instance: reduced events pulled back to
    /// radius `rho^(1/d)`, each repeated `d` times with `k` scaled by `d`.
    pub events: Vec<JumpEvent>,
    pub fallback: Option<FallbackOutcome>,
}

impl JumpSet {
    pub fn compute(t: &HarmonicTrinomial, cfg: &CountConfig) -> Result<Self> {
        let tol = &cfg.tol;
        let reduced = t.normalize();
        let region = breakpoints(&reduced, tol)?;
        let pivot = p_star(&reduced, tol);
        let outcome = fallback_with(&reduced, &region, &pivot, tol, cfg.oracle.as_ref())?;
        let reduced_events = outcome.events.clone();
        let d = reduced.gcd();
        let inv = 1.0 / f64::from(d);
        let mut events = Vec::with_capacity(reduced_events.len() * d as usize);
        for e in &reduced_events {
            let pulled = JumpEvent { radius: e.radius.powf(inv), k: e.k * i64::from(d), ..*e };
            events.extend(std::iter::repeat(pulled).take(d as usize));
        }
        sort_events(&mut events);
        Ok(Self {
            trinomial: *t,
            reduced,
            pivot,
            region,
            reduced_events,
            events,
            fallback: outcome.engaged.then_some(outcome),
        })
    }

    pub fn gcd(&self) -> u32 {
        self.reduced.gcd()
    }

    pub fn total(&self) -> usize {
        self.events.len()
    }

    /// Breakpoint of the original instance (`c_break^(1/d)` and so on).
    fn pulled(&self, r: f64) -> f64 {
        r.powf(1.0 / f64::from(self.gcd()))
    }

    pub fn count(&self, r: f64, closed_disk: bool) -> usize {
        if closed_disk {
            let limit = r * (1.0 + 1e-12);
            self.events.iter().filter(|e| e.radius <= limit).count()
        } else {
            if r <= self.pulled(self.region.c_break) {
                return 0;
            }
            self.events.iter().filter(|e| e.radius < r).count()
        }
    }

    /// Where `r` lies relative to the (pulled back) triangle region.
    pub fn regime(&self, r: f64) -> RegionTag {
        let d = self.gcd() as i32;
        self.region.classify(r.powi(d))
    }

    pub fn count_result(&self, r: f64, cfg: &CountConfig) -> Result<CountResult> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::BadRadius(r));
        }
        let count = self.count(r, cfg.closed_disk);
        let boundary_warnings: Vec<BoundaryWarning> = self
            .events
            .iter()
            .filter(|e| (e.radius - r).abs() <= cfg.tol.boundary * r)
            .map(|e| BoundaryWarning { radius: e.radius, distance: (e.radius - r).abs() })
            .fold(Vec::new(), |mut acc, w| {
                if acc.last().map_or(true, |l: &BoundaryWarning| l.radius != w.radius) {
                    acc.push(w);
                }
                acc
            });
        let jumps_used: Vec<JumpEvent> = self
            .events
            .iter()
            .take(count)
            .copied()
            .collect();
        let regime = self.regime(r);
        let (n, m) = (self.trinomial.n() as usize, self.trinomial.m() as usize);
        let outer_regime = (regime == RegionTag::AboveA).then(|| OuterRegimeCheck {
            closed_form: n + 2 * m,
            crossing_count: count,
            mismatch: count != n + 2 * m,
        });
        let mut flags = Vec::new();
        if !boundary_warnings.is_empty() {
            flags.push(CountFlag::AmbiguousBoundary);
        }
        if outer_regime.map_or(false, |o| o.mismatch) {
            flags.push(CountFlag::OuterRegimeMismatch);
        }
        Ok(CountResult {
            radius: r,
            count,
            jumps_used,
            boundary_warnings,
            generic: self.pivot.generic,
            closed_disk: cfg.closed_disk,
            regime,
            outer_regime,
            flags,
        })
    }

    /// `(radius, count just outside radius)` for every distinct jump radius.
    pub fn profile(&self) -> Vec<ProfileStep> {
        let mut steps: Vec<ProfileStep> = Vec::new();
        for (i, e) in self.events.iter().enumerate() {
            match steps.last_mut() {
                Some(last) if rel_close(last.radius, e.radius, 1e-12) => last.count_after = i + 1,
                _ => steps.push(ProfileStep { radius: e.radius, count_after: i + 1 }),
            }
        }
        steps
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryWarning {
    pub radius: f64,
    pub distance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountFlag {
    /// The query radius is within tolerance of a jump radius.
    AmbiguousBoundary,
    /// Above `a_break` the crossing count differs from `n + 2m`.
    OuterRegimeMismatch,
}

/// Comparison, for radii where `|a| r^n > |b| r^m + c`, between the crossing
/// count and the closed-form value `n + 2m` that holds only for maximal
/// configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterRegimeCheck {
    pub closed_form: usize,
    pub crossing_count: usize,
    pub mismatch: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountResult {
    pub radius: f64,
    pub count: usize,
    pub jumps_used: Vec<JumpEvent>,
    pub boundary_warnings: Vec<BoundaryWarning>,
    pub generic: bool,
    pub closed_disk: bool,
    pub regime: RegionTag,
    pub outer_regime: Option<OuterRegimeCheck>,
    pub flags: Vec<CountFlag>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileStep {
    pub radius: f64,
    pub count_after: usize,
}

/// Number of zeros with `|z| < r` (or `<= r` with `closed_disk`).
pub fn count_roots_in_disk(t: &HarmonicTrinomial, r: f64, cfg: &CountConfig) -> Result<CountResult> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::BadRadius(r));
    }
    JumpSet::compute(t, cfg)?.count_result(r, cfg)
}

/// Number of zeros in the whole plane.
pub fn total_root_count(t: &HarmonicTrinomial, cfg: &CountConfig) -> Result<usize> {
    Ok(JumpSet::compute(t, cfg)?.total())
}

/// Step function `r -> #zeros with |z| < r`, as sorted `(radius, count after)`.
pub fn count_profile(t: &HarmonicTrinomial, cfg: &CountConfig) -> Result<Vec<ProfileStep>> {
    Ok(JumpSet::compute(t, cfg)?.profile())
}

/// Reconstructs the zero carried by `event` on its circle.
///
/// With `phi = alpha + n theta` and `psi = beta - m theta`, a zero needs
/// `(phi, psi) = (pi - w2, pi + w1)` (hits of `P* - omega*`) or
/// `(phi, psi) = (-pi + w2, -pi - w1)` (hits of `P* + omega*`) modulo 2pi.
/// The first congruence leaves `n` candidate angles; coprimality makes the
/// second pick out exactly one. Near the region edges the angles are only
/// known to about the square root of the radius error, so the chosen point
/// gets a few Newton steps before the residual test.
pub fn roots_on_circle(t: &NormalizedTrinomial, event: &JumpEvent, tol: &Tolerances) -> Result<Vec<Complex64>> {
    ensure_coprime(t)?;
    let rho = event.radius;
    let ang = angles(t, rho, tol).map_err(|_| Error::NoCandidate { radius: rho })?;
    let (phi, psi) = match event.path {
        Path::Minus => (PI - ang.omega2, PI + ang.omega1),
        Path::Plus => (-PI + ang.omega2, -PI - ang.omega1),
    };
    let (n, m) = (f64::from(t.n()), f64::from(t.m()));
    let best = (0..t.n())
        .map(|j| {
            let theta = (phi - t.alpha() + TAU * f64::from(j)) / n;
            (wrapped_distance(t.beta() - m * theta, psi), theta)
        })
        .min_by(|x, y| x.0.total_cmp(&y.0));
    let Some((miss, theta)) = best else {
        return Err(Error::NoCandidate { radius: rho });
    };
    // the other candidates miss by at least 2pi/n
    if miss > PI / n {
        return Err(Error::NoCandidate { radius: rho });
    }
    let mut z = Complex64::from_polar(rho, theta);
    if miss > tol.congruence {
        z = polish(t.trinomial(), z);
    }
    if t.evaluate(z).norm() < tol.circle_residual * t.trinomial().scale(z.norm()) {
        Ok(vec![z])
    } else {
        Err(Error::NoCandidate { radius: rho })
    }
}

/// A few undamped Newton steps on `(Re f, Im f)`, each kept only if it
/// lowers `|f|`.
fn polish(t: &HarmonicTrinomial, mut z: Complex64) -> Complex64 {
    let mut fz = t.evaluate(z);
    for _ in 0..6 {
        let (p, q) = t.wirtinger(z);
        let det = p.norm_sqr() - q.norm_sqr();
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let w = -fz;
        let next = z + (p.conj() * w - q * w.conj()) / det;
        let f_next = t.evaluate(next);
        if !(f_next.norm() < fz.norm()) {
            break;
        }
        z = next;
        fz = f_next;
    }
    z
}

fn wrapped_distance(x: f64, y: f64) -> f64 {
    let d = (x - y).rem_euclid(TAU);
    d.min(TAU - d)
}

/// A zero reconstructed from a jump event.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircleRoot {
    #[serde(with = "complex_pair")]
    pub zeta: Complex64,
    pub residual: f64,
    pub path: Path,
    pub transversal: bool,
}

/// All zeros of `t`, reconstructed on the jump circles of the reduced
/// instance and lifted through `z -> z^(1/d)`.
pub fn circle_roots(t: &HarmonicTrinomial, cfg: &CountConfig) -> Result<Vec<CircleRoot>> {
    let set = JumpSet::compute(t, cfg)?;
    let d = set.gcd();
    let mut out = Vec::new();
    let mut last: Option<(f64, Vec<Complex64>)> = None;
    for e in &set.reduced_events {
        // events sharing a circle and path map to the same candidates
        let candidates = roots_on_circle(&set.reduced, e, &cfg.tol)?;
        let fresh: Vec<Complex64> = match &last {
            Some((rad, seen)) if *rad == e.radius => {
                candidates.into_iter().filter(|z| !seen.iter().any(|w| (w - z).norm() <= 1e-9 * e.radius)).collect()
            }
            _ => candidates,
        };
        let Some(&w) = fresh.first() else {
            return Err(Error::NoCandidate { radius: e.radius });
        };
        match &mut last {
            Some((rad, seen)) if *rad == e.radius => seen.push(w),
            _ => last = Some((e.radius, vec![w])),
        }
        let (rw, tw) = w.to_polar();
        let inv = 1.0 / f64::from(d);
        for j in 0..d {
            let z = Complex64::from_polar(rw.powf(inv), (tw + TAU * f64::from(j)) * inv);
            out.push(CircleRoot { zeta: z, residual: t.evaluate(z).norm(), path: e.path, transversal: e.transversal });
        }
    }
    out.sort_by(|x, y| crate::trinomial::modulus_arg_order(x.zeta, y.zeta));
    Ok(out)
}

/// `[re, im]` serde form for a complex number.
pub(crate) mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// Value of a pivot path at radius `r` of the reduced instance.
pub fn pivot_path(set: &JumpSet, path: Path, r: f64, tol: &Tolerances) -> f64 {
    set.pivot.path_value(path, omega_star(&set.reduced, r, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(a: Complex64, b: Complex64, c: Complex64, n: u32, m: u32) -> HarmonicTrinomial {
        HarmonicTrinomial::new(a, b, c, n, m).unwrap()
    }

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn e1() -> HarmonicTrinomial {
        inst(re(1.0), re(1.0), re(1.0), 2, 1)
    }

    fn e3() -> HarmonicTrinomial {
        inst(re(1.0), re(3.0), re(1.0), 2, 1)
    }

    fn generic() -> HarmonicTrinomial {
        inst(re(1.0), Complex64::new(0.0, 10.0), re(1.0), 3, 1)
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn e1_events() {
        let ev = jump_radii(&e1().normalize(), &tol()).unwrap();
        assert_eq!(ev.len(), 2);
        for e in &ev {
            assert!((e.radius - 2f64.sqrt()).abs() < 1e-12);
            assert!(e.transversal);
            assert_eq!(e.piece, Piece::Ascending);
        }
        let mut tags: Vec<(Path, i64)> = ev.iter().map(|e| (e.path, e.k)).collect();
        tags.sort_by_key(|&(p, k)| (p.symbol(), k));
        assert_eq!(tags, [(Path::Plus, -1), (Path::Minus, -2)]);
    }

    #[test]
    fn generic_case_three_events() {
        let ev = jump_radii(&generic().normalize(), &tol()).unwrap();
        assert_eq!(ev.len(), 5);
        assert!(ev.iter().all(|e| e.transversal));
        let mut tags: Vec<(char, Piece, i64)> = ev.iter().map(|e| (e.path.symbol(), e.piece, e.k)).collect();
        tags.sort_by_key(|&(p, piece, k)| (p, piece == Piece::Ascending, k));
        assert_eq!(
            tags,
            [
                ('+', Piece::Ascending, -1),
                ('+', Piece::Ascending, 0),
                ('-', Piece::Descending, -1),
                ('-', Piece::Ascending, -2),
                ('-', Piece::Ascending, -1),
            ]
        );
        for w in ev.windows(2) {
            assert!(w[0].radius < w[1].radius);
        }
    }

    #[test]
    fn non_coprime_is_rejected_by_the_raw_api() {
        let t = inst(re(1.0), re(1.0), re(1.0), 4, 2).normalize_phase();
        assert_eq!(jump_radii(&t, &tol()), Err(Error::NonCoprime { n: 4, m: 2 }));
    }

    #[test]
    fn diagnostics() {
        let d = degenerate_diagnostics(&generic().normalize(), &tol()).unwrap();
        assert!(d.generic && !d.fallback_required && d.hits.is_empty());

        let d = degenerate_diagnostics(&e1().normalize(), &tol()).unwrap();
        assert!(!d.generic);
        assert!(!d.fallback_required);
        assert_eq!(d.root_free_radii.len(), 2);

        let d = degenerate_diagnostics(&e3().normalize(), &tol()).unwrap();
        assert!(d.fallback_required);
        let kinds: Vec<SpecialKind> = d.hits.iter().map(|h| h.kind).collect();
        assert!(kinds.contains(&SpecialKind::GapEdge));
    }

    #[test]
    fn e3_fallback_places_one_root_per_gap_edge() {
        let out = perturbation_fallback(&e3().normalize(), &tol(), None).unwrap();
        assert!(out.engaged);
        let radii: Vec<f64> = out.events.iter().map(|e| e.radius).collect();
        let s5 = 5f64.sqrt();
        let want = [(3.0 - s5) / 2.0, (3.0 + s5) / 2.0, 10f64.sqrt(), 10f64.sqrt()];
        assert_eq!(radii.len(), 4);
        for (r, w) in radii.iter().zip(want) {
            assert!((r - w).abs() < 1e-6 * w, "{r} vs {w}");
        }
        assert_eq!(out.resolutions.len(), 2);
        assert!(out.resolutions.iter().all(|r| r.plus_events == r.minus_events && r.accepted == 1));
    }

    #[test]
    fn fallback_is_identity_when_not_needed() {
        let t = e1().normalize();
        let out = perturbation_fallback(&t, &tol(), None).unwrap();
        assert!(!out.engaged);
        assert_eq!(out.events, jump_radii(&t, &tol()).unwrap());
    }

    #[test]
    fn both_perturbation_signs_agree() {
        let t = inst(re(1.0), re(1.0), re(-1.0), 3, 2);
        let out = perturbation_fallback(&t.normalize(), &tol(), None).unwrap();
        assert!(out.engaged);
        assert!(out.resolutions.iter().all(|r| r.plus_events == r.minus_events && !r.oracle_resolved));
        assert_eq!(out.events.len(), 3);
    }

    #[test]
    fn inner_edge_can_carry_a_root() {
        // -z^2 + conj(z) + 1 vanishes at z = -c_break
        let t = inst(re(-1.0), re(1.0), re(1.0), 2, 1);
        let set = JumpSet::compute(&t, &CountConfig::default()).unwrap();
        let c_break = (5f64.sqrt() - 1.0) / 2.0;
        assert!(t.evaluate(re(-c_break)).norm() < 1e-15);
        assert!(set.events.iter().any(|e| (e.radius - c_break).abs() < 1e-12));
        assert_eq!(set.total(), 2);
    }

    #[test]
    fn counts_and_totals() {
        let cfg = CountConfig::default();
        assert_eq!(count_roots_in_disk(&e1(), 1.0, &cfg).unwrap().count, 0);
        assert_eq!(count_roots_in_disk(&e1(), 1.5, &cfg).unwrap().count, 2);
        assert_eq!(count_roots_in_disk(&e1(), 0.1, &cfg).unwrap().count, 0);
        assert_eq!(count_roots_in_disk(&e3(), 1.0, &cfg).unwrap().count, 1);
        assert_eq!(total_root_count(&e1(), &cfg).unwrap(), 2);
        assert_eq!(total_root_count(&e3(), &cfg).unwrap(), 4);
        assert_eq!(total_root_count(&generic(), &cfg).unwrap(), 5);
        assert_eq!(count_roots_in_disk(&e1(), 0.0, &cfg), Err(Error::BadRadius(0.0)));
    }

    #[test]
    fn boundary_warning_and_closed_disk() {
        let r = 2f64.sqrt();
        let open = count_roots_in_disk(&e1(), r, &CountConfig::default()).unwrap();
        assert_eq!(open.flags, [CountFlag::AmbiguousBoundary]);
        let closed = count_roots_in_disk(&e1(), r, &CountConfig { closed_disk: true, ..Default::default() }).unwrap();
        assert_eq!(closed.count, 2);
    }

    #[test]
    fn outer_regime_check() {
        let res = count_roots_in_disk(&e1(), 2.0, &CountConfig::default()).unwrap();
        assert_eq!(res.count, 2);
        assert_eq!(res.regime, RegionTag::AboveA);
        assert_eq!(res.outer_regime, Some(OuterRegimeCheck { closed_form: 4, crossing_count: 2, mismatch: true }));
        assert!(res.flags.contains(&CountFlag::OuterRegimeMismatch));

        let res = count_roots_in_disk(&generic(), 5.0, &CountConfig::default()).unwrap();
        assert_eq!(res.outer_regime.map(|o| o.mismatch), Some(false));
        assert!(res.flags.is_empty());
    }

    #[test]
    fn profiles() {
        let cfg = CountConfig::default();
        let p = count_profile(&e1(), &cfg).unwrap();
        assert_eq!(p.len(), 1);
        assert!((p[0].radius - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(p[0].count_after, 2);

        let p = count_profile(&generic(), &cfg).unwrap();
        assert_eq!(p.iter().map(|s| s.count_after).collect::<Vec<_>>(), [1, 2, 3, 4, 5]);

        // gcd 2: the reduced step at sqrt(2) lands at 2^(1/4) and counts d times per event
        let p = count_profile(&inst(re(1.0), re(1.0), re(1.0), 4, 2), &cfg).unwrap();
        assert_eq!(p.len(), 1);
        assert!((p[0].radius - 2f64.powf(0.25)).abs() < 1e-12);
        assert_eq!(p[0].count_after, 4);
    }

    #[test]
    fn circle_roots_of_e1() {
        let t = e1().normalize();
        let y = 7f64.sqrt() / 2.0;
        for e in jump_radii(&t, &tol()).unwrap() {
            let roots = roots_on_circle(&t, &e, &tol()).unwrap();
            assert_eq!(roots.len(), 1);
            let want = match e.path {
                Path::Plus => Complex64::new(0.5, -y),
                Path::Minus => Complex64::new(0.5, y),
            };
            assert!((roots[0] - want).norm() < 1e-12, "{:?}: {}", e.path, roots[0]);
        }
    }

    #[test]
    fn circle_roots_everywhere() {
        let cfg = CountConfig::default();
        for t in [e1(), e3(), generic(), inst(re(1.0), re(1.0), re(1.0), 4, 2)] {
            let roots = circle_roots(&t, &cfg).unwrap();
            assert_eq!(roots.len(), total_root_count(&t, &cfg).unwrap());
            for r in &roots {
                assert!(r.residual < 1e-8 * t.scale(r.zeta.norm()), "{t}: {r:?}");
            }
        }
    }

    #[test]
    fn event_json() {
        let ev = jump_radii(&e1().normalize(), &tol()).unwrap();
        let v = serde_json::to_value(ev[0]).unwrap();
        assert_eq!(v["path"], "+");
        assert_eq!(v["piece"], "ascending");
        assert_eq!(v["transversal"], true);
        let back: JumpEvent = serde_json::from_value(v).unwrap();
        assert_eq!(back, ev[0]);
    }
}
