//! Bound calculator for the CLR and Lieb-Thirring constant ratios,
//! their semiclassical normalizers, and the small-alpha asymptote probe.

use std::f64::consts::PI;

use crate::domain::Alpha;
use crate::error::{Error, Result};
use crate::special::clausen2;

/// Which eigenvalue bound the query targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// Counting bound N_0((-Delta)^s + V), valid for 0 < s < d/2.
    Clr,
    /// Riesz-mean bound tr((-Delta)^s + V)_-, valid for s > 0.
    Lt,
}

/// A (dimension, fractional power, bound kind) query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LtQuery {
    pub d: u32,
    pub s: f64,
    pub kind: BoundKind,
}

impl LtQuery {
    pub fn new(d: u32, s: f64, kind: BoundKind) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("dimension d must be >= 1".into()));
        }
        if !s.is_finite() || s <= 0.0 {
            return Err(Error::Domain(format!("fractional power s = {s} must be positive")));
        }
        if kind == BoundKind::Clr && !(s < d as f64 / 2.0) {
            return Err(Error::Domain(format!(
                "CLR bound requires 0 < s < d/2, got s = {s}, d = {d}"
            )));
        }
        Ok(Self { d, s, kind })
    }
}

/// The interior height entering the bound: 2s/d for CLR, 2s/(d+2s) for LT.
pub fn alpha_of(query: LtQuery) -> Result<Alpha> {
    let d = query.d as f64;
    let a = match query.kind {
        BoundKind::Clr => 2.0 * query.s / d,
        BoundKind::Lt => 2.0 * query.s / (d + 2.0 * query.s),
    };
    Alpha::new(a)
}

/// Bound on the constant ratio at an explicit alpha in (0, 1):
/// CLR: pi/(alpha sin(pi alpha)) exp(CI2(2 pi (1-alpha)) / (pi alpha));
/// LT:  the same times (1-alpha)^{1/alpha}.
pub fn ratio_bound_at(kind: BoundKind, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain(format!("alpha = {alpha} outside (0, 1)")));
    }
    let clausen_term = (clausen2(2.0 * PI * (1.0 - alpha))? / (PI * alpha)).exp();
    let base = PI / (alpha * (PI * alpha).sin()) * clausen_term;
    Ok(match kind {
        BoundKind::Clr => base,
        BoundKind::Lt => base * (1.0 - alpha).powf(1.0 / alpha),
    })
}

/// Bound on L_{0,d,s}/L^cl_{0,d} (CLR) or L_{1,d,s}/L^cl_{1,d,s} (LT).
pub fn ratio_bound(query: LtQuery) -> Result<f64> {
    ratio_bound_at(query.kind, alpha_of(query)?.value())
}

/// Which semiclassical constant to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemiclassicalOrder {
    /// L^cl_{0,d} = |B_1| / (2 pi)^d
    Zeroth,
    /// L^cl_{1,d,s} = 2s/(d+2s) L^cl_{0,d}
    First,
}

/// Volume of the unit ball in R^d, pi^{d/2} / Gamma(d/2 + 1).
pub fn unit_ball_volume(d: u32) -> f64 {
    // Gamma(d/2 + 1) by the recurrence from Gamma(1) or Gamma(1/2).
    let target = d as f64 / 2.0 + 1.0;
    let mut g;
    let mut x;
    if d % 2 == 0 {
        g = 1.0; // Gamma(1)
        x = 1.0;
    } else {
        g = PI.sqrt(); // Gamma(1/2)
        x = 0.5;
    }
    while x + 0.5 < target {
        g *= x;
        x += 1.0;
    }
    PI.powf(d as f64 / 2.0) / g
}

/// Semiclassical constant of the requested order.
pub fn semiclassical(d: u32, s: f64, order: SemiclassicalOrder) -> Result<f64> {
    if d == 0 {
        return Err(Error::Domain("dimension d must be >= 1".into()));
    }
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::Domain(format!("fractional power s = {s} must be positive")));
    }
    let zeroth = unit_ball_volume(d) / (2.0 * PI).powi(d as i32);
    Ok(match order {
        SemiclassicalOrder::Zeroth => zeroth,
        SemiclassicalOrder::First => 2.0 * s / (d as f64 + 2.0 * s) * zeroth,
    })
}

/// 4 pi^2 e^{-2}, one of the two small-alpha limits of the bound formulas.
pub fn asymptote_limit_a() -> f64 {
    4.0 * PI * PI * (-2.0f64).exp()
}

/// 4 pi^2 e^{-3}, the other small-alpha limit.
pub fn asymptote_limit_b() -> f64 {
    4.0 * PI * PI * (-3.0f64).exp()
}

/// Evaluate the bound formula along a sequence of small alphas in (0, 0.05].
pub fn asymptote_probe(kind: BoundKind, alphas: &[f64]) -> Result<Vec<(f64, f64)>> {
    alphas
        .iter()
        .map(|&a| {
            if !(a > 0.0 && a <= 0.05) {
                return Err(Error::Domain(format!("probe alpha = {a} outside (0, 0.05]")));
            }
            Ok((a, ratio_bound_at(kind, a)?))
        })
        .collect()
}

/// Numerically determined pairing of the two formulas with the two limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptotePairing {
    pub alpha: f64,
    pub clr_value: f64,
    pub lt_value: f64,
    /// Limit (4 pi^2 e^{-2} or 4 pi^2 e^{-3}) nearest the CLR formula.
    pub clr_nearest_limit: f64,
    /// Limit nearest the LT formula.
    pub lt_nearest_limit: f64,
    /// Whether the measured pairing agrees with the source text, which
    /// attaches 4 pi^2 e^{-2} to LT and 4 pi^2 e^{-3} to CLR.
    pub matches_stated_pairing: bool,
}

/// Evaluate both formulas at a small alpha and report which limit each
/// converges to. The discrepancy with the stated pairing is flagged here,
/// not asserted away.
pub fn asymptote_pairing(alpha: f64) -> Result<AsymptotePairing> {
    let clr_value = ratio_bound_at(BoundKind::Clr, alpha)?;
    let lt_value = ratio_bound_at(BoundKind::Lt, alpha)?;
    let (la, lb) = (asymptote_limit_a(), asymptote_limit_b());
    let nearest = |v: f64| if (v - la).abs() <= (v - lb).abs() { la } else { lb };
    let clr_nearest_limit = nearest(clr_value);
    let lt_nearest_limit = nearest(lt_value);
    Ok(AsymptotePairing {
        alpha,
        clr_value,
        lt_value,
        clr_nearest_limit,
        lt_nearest_limit,
        matches_stated_pairing: lt_nearest_limit == la && clr_nearest_limit == lb,
    })
}
