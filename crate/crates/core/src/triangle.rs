//! Triangle geometry at a radius `r`: the sides `(|a| r^n, |b| r^m, c)`,
//! their interior angles, the pivot `P*` and the continuously extended angle
//! combination `omega*(r) = (n w1 - m w2) / 2pi`.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerances::{nearest_integer, Tolerances};
use crate::trinomial::NormalizedTrinomial;

/// Shape of the side triple. The suffix names the side that is dominant
/// (`Infeasible*`) or equal to the sum of the other two (`Degenerate*`):
/// `A` is `|a| r^n`, `B` is `|b| r^m`, `C` is `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriangleState {
    Strict,
    DegenerateA,
    DegenerateB,
    DegenerateC,
    InfeasibleA,
    InfeasibleB,
    InfeasibleC,
}

impl TriangleState {
    pub fn is_feasible(self) -> bool {
        !matches!(self, Self::InfeasibleA | Self::InfeasibleB | Self::InfeasibleC)
    }

    pub fn is_degenerate(self) -> bool {
        matches!(self, Self::DegenerateA | Self::DegenerateB | Self::DegenerateC)
    }
}

/// Interior angles; `omega1` is opposite `|a| r^n`, `omega2` opposite `|b| r^m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleAngles {
    pub omega1: f64,
    pub omega2: f64,
    pub omega3: f64,
    pub state: TriangleState,
}

/// Classify side lengths `(l1, l2, l3)` with a perimeter-relative tolerance.
pub fn classify_sides(sides: [f64; 3], degeneracy: f64) -> TriangleState {
    let [l1, l2, l3] = sides;
    let tol = degeneracy * (l1 + l2 + l3);
    let defects = [l1 - l2 - l3, l2 - l1 - l3, l3 - l1 - l2];
    // at most one defect can be non-negative
    let (idx, worst) = defects
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (i, d)| if d > acc.1 { (i, d) } else { acc });
    if worst > tol {
        [TriangleState::InfeasibleA, TriangleState::InfeasibleB, TriangleState::InfeasibleC][idx]
    } else if worst >= -tol {
        [TriangleState::DegenerateA, TriangleState::DegenerateB, TriangleState::DegenerateC][idx]
    } else {
        TriangleState::Strict
    }
}

pub fn triangle_state(t: &NormalizedTrinomial, r: f64, tol: &Tolerances) -> TriangleState {
    classify_sides(t.sides(r), tol.degeneracy)
}

/// Angle opposite `x` in the triangle `(x, y, z)`, from the law of cosines
/// written as `atan2(4K, y^2 + z^2 - x^2)` with Kahan's area formula so that
/// thin triangles keep full precision.
fn opposite_angle(x: f64, y: f64, z: f64) -> f64 {
    let cos_num = y * y + z * z - x * x;
    atan2_nonneg(kahan_area(x, y, z), cos_num)
}

fn atan2_nonneg(sin_part: f64, cos_part: f64) -> f64 {
    sin_part.max(0.0).atan2(cos_part)
}

/// Four times the area of a triangle, in the cancellation-free ordering.
fn kahan_area(x: f64, y: f64, z: f64) -> f64 {
    let mut s = [x, y, z];
    s.sort_by(|p, q| q.total_cmp(p));
    let [p, q, r] = s;
    let prod = (p + (q + r)) * (r - (p - q)) * (r + (p - q)) * (p + (q - r));
    prod.max(0.0).sqrt()
}

/// Angles of the triangle with sides `(l1, l2, l3)`, snapped to the flat
/// configuration when `state` is degenerate.
pub fn angles_from_sides(sides: [f64; 3], state: TriangleState) -> Result<TriangleAngles> {
    let [l1, l2, l3] = sides;
    let (omega1, omega2) = match state {
        TriangleState::Strict => (opposite_angle(l1, l2, l3), opposite_angle(l2, l1, l3)),
        TriangleState::DegenerateA => (PI, 0.0),
        TriangleState::DegenerateB => (0.0, PI),
        TriangleState::DegenerateC => (0.0, 0.0),
        _ => return Err(Error::NotATriangle { radius: f64::NAN }),
    };
    Ok(TriangleAngles { omega1, omega2, omega3: PI - omega1 - omega2, state })
}

pub fn angles(t: &NormalizedTrinomial, r: f64, tol: &Tolerances) -> Result<TriangleAngles> {
    let sides = t.sides(r);
    let state = classify_sides(sides, tol.degeneracy);
    angles_from_sides(sides, state).map_err(|_| Error::NotATriangle { radius: r })
}

/// `omega*(r)`, extended by the constants `0`, `n/2`, `-m/2` wherever `c`,
/// `|a| r^n` or `|b| r^m` respectively is at least the sum of the others.
pub fn omega_star(t: &NormalizedTrinomial, r: f64, tol: &Tolerances) -> f64 {
    let sides = t.sides(r);
    let state = classify_sides(sides, tol.degeneracy);
    let (n, m) = (f64::from(t.n()), f64::from(t.m()));
    match state {
        TriangleState::InfeasibleC | TriangleState::DegenerateC => 0.0,
        TriangleState::InfeasibleA | TriangleState::DegenerateA => n / 2.0,
        TriangleState::InfeasibleB | TriangleState::DegenerateB => -m / 2.0,
        TriangleState::Strict => {
            let w1 = opposite_angle(sides[0], sides[1], sides[2]);
            let w2 = opposite_angle(sides[1], sides[0], sides[2]);
            (n * w1 - m * w2) / TAU
        }
    }
}

/// The two pivot paths `P* + omega*` and `P* - omega*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Path {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Path {
    pub const BOTH: [Path; 2] = [Path::Plus, Path::Minus];

    pub fn sign(self) -> f64 {
        match self {
            Path::Plus => 1.0,
            Path::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Path::Plus => '+',
            Path::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PivotData {
    pub p_star: f64,
    /// `false` when `2 P*` is an integer (equivalently `n beta + m alpha` is a
    /// multiple of pi).
    pub generic: bool,
}

impl PivotData {
    /// Value of the chosen path at a given `omega*`.
    pub fn path_value(&self, path: Path, omega: f64) -> f64 {
        self.p_star + path.sign() * omega
    }

    pub fn eval(&self, t: &NormalizedTrinomial, path: Path, u: f64, tol: &Tolerances) -> f64 {
        self.path_value(path, omega_star(t, u, tol))
    }
}

/// `P* = (n (beta - pi) + m (alpha - pi)) / 2pi` for an instance with `c > 0`.
pub fn p_star(t: &NormalizedTrinomial, tol: &Tolerances) -> PivotData {
    let (n, m) = (f64::from(t.n()), f64::from(t.m()));
    let p_star = (n * (t.beta() - PI) + m * (t.alpha() - PI)) / TAU;
    let (_, dist) = nearest_integer(2.0 * p_star);
    PivotData { p_star, generic: dist > tol.int_hit }
}

/// The unique critical radius `r0 = (m|b| / n|a|)^(1/(n-m))` of both `B(r)`
/// and `omega*` on the triangle region.
pub fn critical_radius(t: &NormalizedTrinomial) -> f64 {
    let (n, m) = (f64::from(t.n()), f64::from(t.m()));
    ((m * t.abs_b()) / (n * t.abs_a())).powf(1.0 / (n - m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DerivativeSign {
    Negative,
    Zero,
    Positive,
}

/// `d omega*/dr` inside the region, from differentiating both cosine laws:
/// `2pi w' = (n|a|r^n - m|b|r^m)(n|a|r^n + m|b|r^m) / (2 r delta)` with
/// `delta = |b| c r^m sin w1`.
pub fn omega_star_derivative(t: &NormalizedTrinomial, r: f64, tol: &Tolerances) -> Result<f64> {
    let ang = angles(t, r, tol).map_err(|_| Error::OutsideRegion { radius: r })?;
    if ang.state != TriangleState::Strict {
        return Err(Error::OutsideRegion { radius: r });
    }
    let [la, lb, lc] = t.sides(r);
    let (n, m) = (f64::from(t.n()), f64::from(t.m()));
    let delta = lb * lc * ang.omega1.sin();
    Ok((n * la - m * lb) * (n * la + m * lb) / (2.0 * r * delta) / TAU)
}

/// Sign of `d omega*/dr`: negative below `r0`, positive above it.
pub fn omega_star_derivative_sign(
    t: &NormalizedTrinomial,
    r: f64,
    tol: &Tolerances,
) -> Result<DerivativeSign> {
    if triangle_state(t, r, tol) != TriangleState::Strict {
        return Err(Error::OutsideRegion { radius: r });
    }
    let [la, lb, _] = t.sides(r);
    let (n, m) = (f64::from(t.n()), f64::from(t.m()));
    let (diff, sum) = (n * la - m * lb, n * la + m * lb);
    Ok(if diff.abs() <= 1e-12 * sum {
        DerivativeSign::Zero
    } else if diff < 0.0 {
        DerivativeSign::Negative
    } else {
        DerivativeSign::Positive
    })
}
