//! Numerical thresholds shared by every stage of the pipeline.
//!
//! Every tolerance used by the counter lives here so that a single record can
//! be overridden from the command line or a config file.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Distance (in pivot units) at which a path value counts as an integer.
    pub int_hit: f64,
    /// Relative width at which crossing-radius and breakpoint bisection stop.
    pub bisection_rtol: f64,
    pub bisection_max_iter: usize,
    /// A side "equals the sum of the others" when the defect is below this
    /// fraction of the perimeter.
    pub degeneracy: f64,
    /// Relative threshold for detecting `B(r0) = 0`.
    pub case_two: f64,
    /// Events this close (relative) to a query radius raise a boundary warning.
    pub boundary: f64,
    /// Pivot shift applied by the perturbation fallback.
    pub pivot_shift: f64,
    /// Relative radius window used to pair perturbed events with hit radii.
    pub fallback_match: f64,
    /// Congruence slack when reconstructing roots on a circle.
    pub congruence: f64,
    /// Relative residual accepted for an analytically constructed root.
    pub circle_residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            int_hit: 1e-10,
            bisection_rtol: 1e-13,
            bisection_max_iter: 200,
            degeneracy: 1e-12,
            case_two: 1e-12,
            boundary: 1e-9,
            pivot_shift: 1e-6,
            fallback_match: 1e-4,
            congruence: 1e-8,
            circle_residual: 1e-8,
        }
    }
}

/// Distance from `x` to the nearest integer, together with that integer.
pub(crate) fn nearest_integer(x: f64) -> (i64, f64) {
    let k = x.round();
    (k as i64, (x - k).abs())
}

/// Relative closeness test scaled by the larger magnitude.
pub(crate) fn rel_close(x: f64, y: f64, rel: f64) -> bool {
    (x - y).abs() <= rel * x.abs().max(y.abs())
}
