//! Exact zero counting and localization for harmonic trinomials
//! `f(z) = a z^n + b conj(z)^m + c` with `n > m >= 1`.
//!
//! For every radius the side lengths `|a| r^n`, `|b| r^m`, `|c|` either form a
//! triangle or one of them dominates. Inside the triangle region the zeros of
//! `f` sit exactly on the circles where one of the two pivot paths
//! `P* +- omega*(r)` crosses an integer, so the count in a disk reduces to
//! counting integer crossings of two piecewise-monotone functions.
//!
//! ```
//! use harmonic_trinomial::{count_roots_in_disk, CountConfig, HarmonicTrinomial};
//! use num_complex::Complex64;
//!
//! let one = Complex64::new(1.0, 0.0);
//! let f = HarmonicTrinomial::new(one, one, one, 2, 1)?;
//! let cfg = CountConfig::default();
//! assert_eq!(count_roots_in_disk(&f, 1.0, &cfg)?.count, 0);
//! assert_eq!(count_roots_in_disk(&f, 1.5, &cfg)?.count, 2);
//! # Ok::<(), harmonic_trinomial::Error>(())
//! ```
//!
//! Every count can be checked against [`oracle::find_all_roots`], a grid-seeded
//! Newton solver that shares nothing with the crossing machinery beyond the
//! annulus it searches.

pub mod bisect;
pub mod cli;
pub mod counter;
pub mod error;
pub mod oracle;
pub mod region;
pub mod tolerances;
pub mod triangle;
pub mod trinomial;

pub use counter::{
    circle_roots, count_profile, count_roots_in_disk, degenerate_diagnostics, jump_radii,
    perturbation_fallback, roots_on_circle, total_root_count, CountConfig, CountResult, JumpEvent,
    JumpSet, Piece, ProfileStep,
};
pub use error::{Error, Result};
pub use oracle::{find_all_roots, oracle_count, verify, OracleParams, RootSet, VerificationReport};
pub use region::{breakpoints, RegionCase, RegionProfile, RegionTag};
pub use tolerances::Tolerances;
pub use triangle::{omega_star, p_star, Path, PivotData, TriangleAngles, TriangleState};
pub use trinomial::{HarmonicTrinomial, NormalizedTrinomial};
