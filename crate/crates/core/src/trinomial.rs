//! The harmonic trinomial `f(z) = a z^n + b conj(z)^m + c` and its two
//! normalizations: rotating `c` onto the positive real axis and dividing the
//! exponents by their gcd.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const MIN_MODULUS: f64 = 1e-8;
const MAX_MODULUS: f64 = 1e8;
/// Above this degree, powers are formed in polar coordinates.
const POLAR_POWER_THRESHOLD: u32 = 8;

/// A validated instance `a z^n + b conj(z)^m + c` with `n > m >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTrinomial", into = "RawTrinomial")]
pub struct HarmonicTrinomial {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    n: u32,
    m: u32,
}

/// Wire form: `{"a":[re,im],"b":[re,im],"c":[re,im],"n":int,"m":int}`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct RawTrinomial {
    a: [f64; 2],
    b: [f64; 2],
    c: [f64; 2],
    n: u32,
    m: u32,
}

impl TryFrom<RawTrinomial> for HarmonicTrinomial {
    type Error = Error;

    fn try_from(raw: RawTrinomial) -> Result<Self> {
        let z = |p: [f64; 2]| Complex64::new(p[0], p[1]);
        HarmonicTrinomial::new(z(raw.a), z(raw.b), z(raw.c), raw.n, raw.m)
    }
}

impl From<HarmonicTrinomial> for RawTrinomial {
    fn from(t: HarmonicTrinomial) -> Self {
        let p = |z: Complex64| [z.re, z.im];
        RawTrinomial { a: p(t.a), b: p(t.b), c: p(t.c), n: t.n, m: t.m }
    }
}

impl HarmonicTrinomial {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, n: u32, m: u32) -> Result<Self> {
        for (name, z) in [("a", a), ("b", b), ("c", c)] {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::NonFinite(name));
            }
            let modulus = z.norm();
            if modulus == 0.0 {
                return Err(Error::ZeroCoefficient(name));
            }
            if !(MIN_MODULUS..=MAX_MODULUS).contains(&modulus) {
                return Err(Error::CoefficientOutOfRange { name, modulus });
            }
        }
        if m < 1 || n <= m {
            return Err(Error::BadExponents { n, m });
        }
        Ok(Self { a, b, c, n, m })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `arg(a)` in `[0, 2pi)`.
    pub fn alpha(&self) -> f64 {
        canonical_arg(self.a)
    }

    /// `arg(b)` in `[0, 2pi)`.
    pub fn beta(&self) -> f64 {
        canonical_arg(self.b)
    }

    /// `arg(c)` in `[0, 2pi)`.
    pub fn gamma(&self) -> f64 {
        canonical_arg(self.c)
    }

    /// `a z^n + b conj(z)^m + c`.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.a * power(z, self.n) + self.b * power(z.conj(), self.m) + self.c
    }

    /// Jacobian determinant of `(Re f, Im f)` as a map of the plane:
    /// `|n a z^(n-1)|^2 - |m b conj(z)^(m-1)|^2`.
    pub fn jacobian(&self, z: Complex64) -> f64 {
        let (dz, dzbar) = self.wirtinger(z);
        dz.norm_sqr() - dzbar.norm_sqr()
    }

    /// The Wirtinger derivatives `(df/dz, df/dconj(z))`.
    pub fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        let dz = self.a * f64::from(self.n) * power(z, self.n - 1);
        let dzbar = self.b * f64::from(self.m) * power(z.conj(), self.m - 1);
        (dz, dzbar)
    }

    /// Sum of the three term moduli at `|z| = r`; the natural scale of `f` there.
    pub fn scale(&self, r: f64) -> f64 {
        self.a.norm() * r.powi(self.n as i32) + self.b.norm() * r.powi(self.m as i32) + self.c.norm()
    }

    /// Multiplies every coefficient by `e^{-i arg c}` so that `c > 0`.
    /// The zero set is unchanged.
    pub fn normalize_phase(&self) -> NormalizedTrinomial {
        let gamma = self.gamma();
        let rot = Complex64::from_polar(1.0, -gamma);
        let inner = Self {
            a: self.a * rot,
            b: self.b * rot,
            c: Complex64::new(self.c.norm(), 0.0),
            n: self.n,
            m: self.m,
        };
        NormalizedTrinomial { inner, phase: gamma, gcd: 1 }
    }

    /// Divides both exponents by `d = gcd(n, m)`. Zeros of `self` are the
    /// `d`-th roots of zeros of the reduced instance, so
    /// `count_self(r) = d * count_reduced(r^d)`.
    pub fn coprime_reduce(&self) -> (HarmonicTrinomial, u32) {
        let d = gcd(self.n, self.m);
        (Self { n: self.n / d, m: self.m / d, ..*self }, d)
    }

    /// Phase rotation followed by gcd reduction.
    pub fn normalize(&self) -> NormalizedTrinomial {
        let (reduced, d) = self.coprime_reduce();
        let mut out = reduced.normalize_phase();
        out.gcd = d;
        out
    }

    /// Same instance with every coefficient multiplied by `factor`.
    pub fn scaled(&self, factor: Complex64) -> Result<Self> {
        Self::new(self.a * factor, self.b * factor, self.c * factor, self.n, self.m)
    }
}

impl fmt::Display for HarmonicTrinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) z^{} + ({}) conj(z)^{} + ({})",
            self.a, self.n, self.b, self.m, self.c
        )
    }
}

/// An instance with `c` rotated onto the positive real axis.
///
/// `phase` records the rotation `gamma` that was removed and `gcd` the factor
/// the exponents were divided by (1 when no reduction was applied).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedTrinomial {
    inner: HarmonicTrinomial,
    phase: f64,
    gcd: u32,
}

impl NormalizedTrinomial {
    pub fn trinomial(&self) -> &HarmonicTrinomial {
        &self.inner
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn gcd(&self) -> u32 {
        self.gcd
    }

    pub fn is_coprime(&self) -> bool {
        gcd(self.inner.n, self.inner.m) == 1
    }

    pub fn n(&self) -> u32 {
        self.inner.n
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn abs_a(&self) -> f64 {
        self.inner.a.norm()
    }

    pub fn abs_b(&self) -> f64 {
        self.inner.b.norm()
    }

    /// The positive constant term.
    pub fn c(&self) -> f64 {
        self.inner.c.re
    }

    pub fn alpha(&self) -> f64 {
        self.inner.alpha()
    }

    pub fn beta(&self) -> f64 {
        self.inner.beta()
    }

    /// Triangle side lengths `(|a| r^n, |b| r^m, c)` at radius `r`.
    pub fn sides(&self, r: f64) -> [f64; 3] {
        [
            self.abs_a() * r.powi(self.n() as i32),
            self.abs_b() * r.powi(self.m() as i32),
            self.c(),
        ]
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.inner.evaluate(z)
    }

    /// Copy with `arg b` shifted by `delta`; moduli (and hence the triangle
    /// geometry) are untouched.
    pub fn with_beta_shift(&self, delta: f64) -> NormalizedTrinomial {
        let inner = HarmonicTrinomial {
            b: self.inner.b * Complex64::from_polar(1.0, delta),
            ..self.inner
        };
        NormalizedTrinomial { inner, ..*self }
    }
}

/// `z^k`, by repeated squaring for small `k` and in polar form above
/// [`POLAR_POWER_THRESHOLD`].
pub fn power(z: Complex64, k: u32) -> Complex64 {
    if k > POLAR_POWER_THRESHOLD {
        if z == Complex64::new(0.0, 0.0) {
            return z;
        }
        let (r, theta) = z.to_polar();
        Complex64::from_polar(r.powi(k as i32), theta * f64::from(k))
    } else {
        z.powu(k)
    }
}

fn canonical_arg(z: Complex64) -> f64 {
    let t = z.arg().rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Orders points by modulus, then by argument in `[0, 2pi)`. Moduli within
/// `1e-10` relative count as equal so conjugate pairs sort predictably.
pub(crate) fn modulus_arg_order(x: Complex64, y: Complex64) -> std::cmp::Ordering {
    let (rx, ry) = (x.norm(), y.norm());
    if (rx - ry).abs() > 1e-10 * rx.max(ry) {
        return rx.total_cmp(&ry);
    }
    canonical_arg(x).total_cmp(&canonical_arg(y))
}

pub(crate) fn gcd(mut x: u32, mut y: u32) -> u32 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}
