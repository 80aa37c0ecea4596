//! Complex dilogarithm and the Clausen function, with the identity suite
//! (inversion, reflection, duplication) used to certify them.
//!
//! `dilog` is the principal branch of Li2 with cut along [1, inf). The
//! argument is first reduced into the unit disk with Re z <= 1/2 via the
//! inversion and reflection identities, then summed with the Debye series
//! Li2(z) = w - w^2/4 + sum_k B_{2k} w^{2k+1} / ((2k+1)(2k)!), w = -log(1-z),
//! which converges geometrically on the whole reduced region (|w| < 3.3).

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// zeta(2) = pi^2/6, the value Li2(1).
pub const ZETA2: f64 = PI * PI / 6.0;

/// Tail coefficients B_{2k}/((2k+1)(2k)!) of the Debye series, k = 1..=30.
const DILOG_SERIES_COEFF: [f64; 30] = [
    0.0277777777777777778,
    -0.000277777777777777778,
    4.72411186696900983e-6,
    -9.18577307466196355e-8,
    1.89788699889709991e-9,
    -4.06476164514422553e-11,
    8.92169102045645256e-13,
    -1.99392958607210757e-14,
    4.51898002961991819e-16,
    -1.03565176121812470e-17,
    2.39521862102618675e-19,
    -5.58178587432500934e-21,
    1.30915075541832129e-22,
    -3.08741980242674029e-24,
    7.31597565270220342e-26,
    -1.74084565723400074e-27,
    4.15763564461389972e-29,
    -9.96214848828462210e-31,
    2.39403442489616530e-32,
    -5.76834735536739008e-34,
    1.39317947964700798e-35,
    -3.37212196548508947e-37,
    8.17820877756210262e-39,
    -1.98701083115238593e-40,
    4.83577851804055090e-42,
    -1.17869372487183843e-43,
    2.87709640811725715e-45,
    -7.03205909815602801e-47,
    1.72086031450331463e-48,
    -4.21607239056044549e-50,
];

/// Coefficients zeta(2m)/(m(2m+1)(2pi)^{2m}) of the small-angle Clausen
/// series CI2(t) = t - t log t + sum_m d_m t^{2m+1}, m = 1..=12.
const CLAUSEN_SERIES_COEFF: [f64; 12] = [
    0.0138888888888888889,
    0.0000694444444444444444,
    7.87351977828168304e-7,
    1.14822163433274544e-8,
    1.89788699889709991e-10,
    3.38730137095352127e-12,
    6.37263644318318040e-14,
    1.24620599129506723e-15,
    2.51054446089995455e-17,
    5.17825880609062351e-19,
    1.08873573683008488e-20,
    2.32574411430208722e-22,
];

/// Below this reduced angle the direct series is used instead of
/// Im Li2(e^{i theta}), avoiding cancellation in the logarithmic
/// singularity of the integrand.
const CLAUSEN_SMALL_THETA: f64 = 1e-2;

fn require_finite(z: Complex64, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what.into()))
    }
}

/// Principal-branch dilogarithm Li2(z), cut along [1, inf).
///
/// Real z > 1 is rejected; z = 1 returns the limit value pi^2/6.
pub fn dilog(z: Complex64) -> Result<Complex64> {
    require_finite(z, "dilog argument")?;
    if z.im == 0.0 && z.re > 1.0 {
        return Err(Error::Cut(format!("dilog at real z = {} > 1", z.re)));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if z == Complex64::new(1.0, 0.0) {
        return Ok(Complex64::new(ZETA2, 0.0));
    }
    if z.norm_sqr() > 1.0 {
        // Inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2 / 2.
        // Here z is off [0, inf), so -z is off the log cut.
        let lnmz = (-z).ln();
        return Ok(-dilog_disk(1.0 / z) - ZETA2 - 0.5 * lnmz * lnmz);
    }
    Ok(dilog_disk(z))
}

/// Li2 on the closed unit disk minus {1}.
fn dilog_disk(z: Complex64) -> Complex64 {
    if z.re > 0.5 {
        // Reflection moves the argument to |1-z| < 1, Re(1-z) < 1/2.
        let omz = 1.0 - z;
        Complex64::new(ZETA2, 0.0) - z.ln() * omz.ln() - dilog_debye(omz)
    } else {
        dilog_debye(z)
    }
}

/// Debye series at |w| = |log(1-z)| < 2 pi; callers keep |w| below ~3.3.
fn dilog_debye(z: Complex64) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return z;
    }
    let w = -(1.0 - z).ln();
    let w2 = w * w;
    let mut term = w; // w^{2k+1}
    let mut acc = w - 0.25 * w2;
    for &c in DILOG_SERIES_COEFF.iter() {
        term *= w2;
        let contrib = c * term;
        acc += contrib;
        if contrib.norm_sqr() <= 1e-34 * acc.norm_sqr() {
            break;
        }
    }
    acc
}

/// Clausen function CI2(theta) = -int_0^theta log(2 |sin(u/2)|) du,
/// equal to Im Li2(e^{i theta}). Odd and 2 pi periodic.
pub fn clausen2(theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::NonFinite("clausen2 argument".into()));
    }
    let mut t = theta.rem_euclid(2.0 * PI);
    let mut sign = 1.0;
    if t > PI {
        t = 2.0 * PI - t;
        sign = -1.0;
    }
    let value = if t < CLAUSEN_SMALL_THETA {
        clausen2_series(t)
    } else {
        // e^{it} has Re <= cos(1e-2) here, so the reflection path inside
        // dilog keeps the series argument well away from 1.
        dilog_disk(Complex64::new(t.cos(), t.sin())).im
    };
    Ok(sign * value)
}

fn clausen2_series(t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let t2 = t * t;
    let mut term = t;
    let mut acc = t - t * t.ln();
    for &d in CLAUSEN_SERIES_COEFF.iter() {
        term *= t2;
        let contrib = d * term;
        acc += contrib;
        if contrib.abs() <= 1e-17 * acc.abs() {
            break;
        }
    }
    acc
}

/// Absolute residuals of the dilogarithm identities at `z`.
///
/// Each field is `None` when `z` lies outside that identity's stated
/// validity domain (inversion: z off [0, inf); reflection: z off
/// (-inf, 0] and [1, inf); duplication: z off (-inf, -1) and (1, inf)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilogResiduals {
    pub inversion: Option<f64>,
    pub reflection: Option<f64>,
    pub duplication: Option<f64>,
}

impl DilogResiduals {
    /// Largest residual among the identities that apply at the point.
    pub fn max(&self) -> f64 {
        [self.inversion, self.reflection, self.duplication]
            .into_iter()
            .flatten()
            .fold(0.0, f64::max)
    }
}

/// Evaluate both sides of the inversion, reflection, and duplication
/// identities at `z` and return the absolute defects.
pub fn dilog_identity_residuals(z: Complex64) -> Result<DilogResiduals> {
    require_finite(z, "identity residual argument")?;
    if z.im == 0.0 && z.re > 1.0 {
        return Err(Error::Cut(format!("identities at real z = {} > 1", z.re)));
    }
    let li2_z = dilog(z)?;
    let real = z.im == 0.0;

    let inversion = if real && z.re >= 0.0 {
        None
    } else {
        let lnmz = (-z).ln();
        let lhs = li2_z + dilog(1.0 / z)?;
        let rhs = -ZETA2 - 0.5 * lnmz * lnmz;
        Some((lhs - rhs).norm())
    };

    let reflection = if real && (z.re <= 0.0 || z.re >= 1.0) {
        None
    } else {
        let lhs = dilog(1.0 - z)? + li2_z;
        let rhs = Complex64::new(ZETA2, 0.0) - z.ln() * (1.0 - z).ln();
        Some((lhs - rhs).norm())
    };

    let duplication = if real && z.re.abs() > 1.0 {
        None
    } else {
        let lhs = 0.5 * dilog(z * z)?;
        let rhs = dilog(-z)? + li2_z;
        Some((lhs - rhs).norm())
    };

    Ok(DilogResiduals { inversion, reflection, duplication })
}
