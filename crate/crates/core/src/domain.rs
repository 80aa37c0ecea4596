//! Shared domain types: Lebesgue exponents stored as reciprocals, the
//! interior height of the evaluation line, points of the closed strip,
//! and quadrature tolerances.

use crate::error::{Error, Result};

/// A Lebesgue exponent p in [1, inf], stored as its reciprocal u = 1/p.
///
/// The reciprocal representation makes p = inf the exact value u = 0 and
/// Hoelder conjugation the exact subtraction u* = 1 - u, so conjugation is
/// an involution with no floating-point special cases.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Exponent {
    recip: f64,
}

impl Exponent {
    pub const ONE: Exponent = Exponent { recip: 1.0 };
    pub const TWO: Exponent = Exponent { recip: 0.5 };
    pub const INFINITY: Exponent = Exponent { recip: 0.0 };

    /// Build from the exponent value p in [1, inf]; `f64::INFINITY` is accepted.
    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() {
            return Err(Error::NonFinite("exponent p is NaN".into()));
        }
        if p == f64::INFINITY {
            return Ok(Self { recip: 0.0 });
        }
        if p < 1.0 {
            return Err(Error::Domain(format!("exponent p = {p} is < 1")));
        }
        Ok(Self { recip: 1.0 / p })
    }

    /// Build from the reciprocal u = 1/p in [0, 1].
    pub fn from_recip(recip: f64) -> Result<Self> {
        if !recip.is_finite() {
            return Err(Error::NonFinite("reciprocal 1/p is not finite".into()));
        }
        if !(0.0..=1.0).contains(&recip) {
            return Err(Error::Domain(format!("reciprocal 1/p = {recip} outside [0, 1]")));
        }
        Ok(Self { recip })
    }

    /// The stored reciprocal 1/p (0 encodes p = inf).
    pub fn recip(self) -> f64 {
        self.recip
    }

    /// The exponent value p (inf when the reciprocal is 0).
    pub fn value(self) -> f64 {
        if self.recip == 0.0 {
            f64::INFINITY
        } else {
            1.0 / self.recip
        }
    }

    pub fn is_infinite(self) -> bool {
        self.recip == 0.0
    }

    pub fn is_one(self) -> bool {
        self.recip == 1.0
    }

    /// Hoelder conjugate p* with 1/p + 1/p* = 1. Exact in the reciprocal
    /// representation, hence an exact involution.
    pub fn conjugate(self) -> Self {
        Self { recip: 1.0 - self.recip }
    }
}

impl std::fmt::Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.value())
        }
    }
}

/// Hoelder conjugate of `p` (free-function form of [`Exponent::conjugate`]).
pub fn conjugate(p: Exponent) -> Exponent {
    p.conjugate()
}

/// Exponent interpolation 1/p_t = (1-t)/p_0 + t/p_1.
pub fn interpolate_exponent(p0: Exponent, p1: Exponent, t: f64) -> Result<Exponent> {
    if !t.is_finite() {
        return Err(Error::NonFinite("interpolation parameter t".into()));
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("interpolation parameter t = {t} outside [0, 1]")));
    }
    // Endpoints reproduce p0/p1 exactly.
    if t == 0.0 {
        return Ok(p0);
    }
    if t == 1.0 {
        return Ok(p1);
    }
    Exponent::from_recip((1.0 - t) * p0.recip() + t * p1.recip())
}

/// Lower bound on the distance of an [`Alpha`] from the endpoints of (0, 1).
pub const ALPHA_MARGIN: f64 = 1e-9;

/// Interior height alpha of the evaluation line inside the unit strip.
///
/// Construction rejects values within [`ALPHA_MARGIN`] of the endpoints; the
/// small-alpha asymptotics of the Lieb-Thirring bounds are served by
/// dedicated closed-form evaluation, not by quadrature at extreme alpha.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Alpha {
    value: f64,
}

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFinite("alpha is not finite".into()));
        }
        if value <= ALPHA_MARGIN || value >= 1.0 - ALPHA_MARGIN {
            return Err(Error::Domain(format!(
                "alpha = {value} outside the admissible open interval ({ALPHA_MARGIN}, {})",
                1.0 - ALPHA_MARGIN
            )));
        }
        Ok(Self { value })
    }

    pub fn value(self) -> f64 {
        self.value
    }

    /// The reflected height 1 - alpha.
    pub fn flip(self) -> Self {
        Self { value: 1.0 - self.value }
    }
}

impl std::fmt::Display for Alpha {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A point of the closed strip |Im z| <= 1 (the strip S for y in [0, 1], its
/// reflection S* for y in [-1, 0]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripPoint {
    pub x: f64,
    pub y: f64,
}

impl StripPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::NonFinite("strip point coordinates".into()));
        }
        if y.abs() > 1.0 {
            return Err(Error::Domain(format!("strip point y = {y} outside [-1, 1]")));
        }
        Ok(Self { x, y })
    }

    pub fn to_complex(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.x, self.y)
    }

    /// Reflection across the real axis (S <-> S*).
    pub fn conj(self) -> Self {
        Self { x: self.x, y: -self.y }
    }

    pub fn in_open_upper_strip(self) -> bool {
        self.y > 0.0 && self.y < 1.0
    }

    pub fn in_open_lower_strip(self) -> bool {
        self.y > -1.0 && self.y < 0.0
    }
}

/// Absolute/relative tolerance pair plus a refinement budget for the
/// adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_refinements: usize,
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64, max_refinements: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol > 0.0) {
            return Err(Error::Domain(format!(
                "tolerances must be positive: abs_tol = {abs_tol}, rel_tol = {rel_tol}"
            )));
        }
        Ok(Self { abs_tol, rel_tol, max_refinements })
    }

    /// Default for scalar kernels and plain line integrals.
    pub fn scalar() -> Self {
        Self { abs_tol: 1e-10, rel_tol: 1e-10, max_refinements: 4000 }
    }

    /// Tight tolerance for the optimal-value integrals feeding the
    /// duality-relation gates.
    pub fn tight() -> Self {
        Self { abs_tol: 1e-13, rel_tol: 1e-13, max_refinements: 8000 }
    }

    /// Default for convolution-based quantities (optimizer phases).
    pub fn convolution() -> Self {
        Self { abs_tol: 1e-8, rel_tol: 1e-8, max_refinements: 2000 }
    }

    pub fn bound(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::scalar()
    }
}
