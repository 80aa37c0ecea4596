//! Optimal values H_{p,q}(alpha) of the three-lines problem by two
//! independent routes (dilogarithm closed form and direct quadrature),
//! the duality and log-linear relations, and the interpolation bound
//! calculator.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::domain::{Alpha, Exponent, Tolerance};
use crate::error::Result;
use crate::kernels::poisson_raw;
use crate::quad::{integrate_line, Envelope, LineFunction};
use crate::special::dilog;

/// Evaluation route for the optimal value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ClosedForm,
    Quadrature,
}

/// An optimal value H_{p,q}(alpha), carried in log form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalValue {
    pub log_h: f64,
    pub h: f64,
    pub route: Route,
}

impl OptimalValue {
    fn from_log(log_h: f64, route: Route) -> Self {
        Self { log_h, h: log_h.exp(), route }
    }
}

/// log H_{1,infty}(alpha): the scalar building block
/// I(alpha) = integral of P_alpha log(P_alpha / (1-alpha)).
///
/// The closed form is
/// -(1-alpha) log(4 (1-alpha) sin(pi alpha)) + Im Li2(e^{2 pi i alpha}) / pi.
pub fn log_i(alpha: Alpha, route: Route, tol: Tolerance) -> Result<f64> {
    match route {
        Route::ClosedForm => {
            let a = alpha.value();
            let im_li2 = dilog(Complex64::from_polar(1.0, 2.0 * PI * a))?.im;
            Ok(-(1.0 - a) * (4.0 * (1.0 - a) * (PI * a).sin()).ln() + im_li2 / PI)
        }
        Route::Quadrature => {
            let a = alpha.value();
            let log_norm = (1.0 - a).ln();
            let f = LineFunction::new(
                move |x: f64| {
                    let p = poisson_raw(a, x);
                    p * (p.ln() - log_norm)
                },
                optimal_value_envelope(a),
            );
            Ok(integrate_line(&f, tol)?.value)
        }
    }
}

/// Envelope for P_alpha log(P_alpha / c): the kernel decays like
/// sin(pi alpha) e^{-pi |x|} and the logarithm grows linearly.
fn optimal_value_envelope(a: f64) -> Envelope {
    let sin_pa = (PI * a).sin();
    let log_range = (sin_pa / (1.0 - a)).ln().abs() + 1.0;
    Envelope {
        scale: 1.3 * sin_pa * (PI + log_range),
        poly_growth: 1.0,
        tail_rate: PI,
        x0: 2.0,
    }
}

/// log H_{p,q}(alpha) = (1/p) I(alpha) + (1/q) I(1-alpha).
///
/// Reciprocal weights are exact, so the Hadamard corner p = q = infinity
/// yields exactly zero without touching the quadrature.
pub fn log_h(p: Exponent, q: Exponent, alpha: Alpha, route: Route, tol: Tolerance) -> Result<OptimalValue> {
    let up = p.recip();
    let uq = q.recip();
    let mut log_h = 0.0;
    if up != 0.0 {
        log_h += up * log_i(alpha, route, tol)?;
    }
    if uq != 0.0 {
        log_h += uq * log_i(alpha.flip(), route, tol)?;
    }
    Ok(OptimalValue::from_log(log_h, route))
}

/// Right-hand side of the duality relation,
/// 1 / (4 sin(pi alpha) alpha^alpha (1-alpha)^{1-alpha}).
pub fn duality_target(alpha: Alpha) -> f64 {
    let a = alpha.value();
    1.0 / (4.0 * (PI * a).sin() * a.powf(a) * (1.0 - a).powf(1.0 - a))
}

/// |H_{p,q}(alpha) H_{p*,q*}(alpha) - duality_target(alpha)|.
pub fn duality_defect(p: Exponent, q: Exponent, alpha: Alpha, route: Route, tol: Tolerance) -> Result<f64> {
    let h = log_h(p, q, alpha, route, tol)?;
    let h_conj = log_h(p.conjugate(), q.conjugate(), alpha, route, tol)?;
    Ok(((h.log_h + h_conj.log_h).exp() - duality_target(alpha)).abs())
}

/// |log H_{p_t,q_t} - (1-t) log H_{p0,q0} - t log H_{p1,q1}|.
#[allow(clippy::too_many_arguments)]
pub fn loglinear_defect(
    p0: Exponent,
    q0: Exponent,
    p1: Exponent,
    q1: Exponent,
    t: f64,
    alpha: Alpha,
    route: Route,
    tol: Tolerance,
) -> Result<f64> {
    let pt = crate::domain::interpolate_exponent(p0, p1, t)?;
    let qt = crate::domain::interpolate_exponent(q0, q1, t)?;
    let mid = log_h(pt, qt, alpha, route, tol)?;
    let end0 = log_h(p0, q0, alpha, route, tol)?;
    let end1 = log_h(p1, q1, alpha, route, tol)?;
    Ok((mid.log_h - (1.0 - t) * end0.log_h - t * end1.log_h).abs())
}

/// Interpolation bound H_{s0,s1}(alpha) m0^{1-alpha} m1^{alpha} on the
/// operator norm at the interior line.
pub fn stein_bound(
    s0: Exponent,
    s1: Exponent,
    alpha: Alpha,
    m0_norm: f64,
    m1_norm: f64,
    tol: Tolerance,
) -> Result<f64> {
    let a = alpha.value();
    let h = log_h(s0, s1, alpha, Route::ClosedForm, tol)?;
    Ok(h.h * m0_norm.powf(1.0 - a) * m1_norm.powf(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn a(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    fn tol() -> Tolerance {
        Tolerance::tight()
    }

    #[test]
    fn log_i_at_half_is_minus_half_log_two() {
        // Closed form at alpha = 1/2: Im Li2(e^{i pi}) = Im Li2(-1) = 0.
        let closed = log_i(a(0.5), Route::ClosedForm, tol()).unwrap();
        assert!((closed + 0.5 * LN_2).abs() < 1e-15, "{closed}");
        let quad = log_i(a(0.5), Route::Quadrature, tol()).unwrap();
        assert!((quad + 0.5 * LN_2).abs() < 1e-12, "{quad}");
    }

    #[test]
    fn routes_agree_across_alpha() {
        for i in 1..=9 {
            let alpha = a(i as f64 / 10.0);
            let closed = log_i(alpha, Route::ClosedForm, tol()).unwrap();
            let quad = log_i(alpha, Route::Quadrature, tol()).unwrap();
            assert!(
                (closed - quad).abs() < 1e-11,
                "alpha = {alpha}: {closed} vs {quad}"
            );
        }
    }

    #[test]
    fn hadamard_corner_is_exactly_one() {
        for route in [Route::ClosedForm, Route::Quadrature] {
            let v = log_h(Exponent::INFINITY, Exponent::INFINITY, a(0.37), route, tol()).unwrap();
            assert_eq!(v.log_h, 0.0);
            assert_eq!(v.h, 1.0);
        }
    }

    #[test]
    fn spot_values() {
        // H_{1,infty}(1/2) = 2^{-1/2}
        let v = log_h(Exponent::ONE, Exponent::INFINITY, a(0.5), Route::ClosedForm, tol()).unwrap();
        assert!((v.h - 0.5f64.sqrt()).abs() < 1e-14);
        // H_{1,1}(1/2) = 1/2
        let v = log_h(Exponent::ONE, Exponent::ONE, a(0.5), Route::ClosedForm, tol()).unwrap();
        assert!((v.h - 0.5).abs() < 1e-14);
        // H_{infty,2}(1/2) = 2^{-1/4}
        let v = log_h(Exponent::INFINITY, Exponent::TWO, a(0.5), Route::ClosedForm, tol()).unwrap();
        assert!((v.h - 0.25f64.exp2().recip()).abs() < 1e-14);
        assert!((v.h - 0.8408964152537145).abs() < 1e-12);
    }

    #[test]
    fn h11_matches_duality_target_everywhere() {
        // The closed form at (1,1) must reproduce the duality right side,
        // which exercises the Clausen cancellation CI2(x) + CI2(2pi - x) = 0.
        for i in 1..=19 {
            let alpha = a(i as f64 / 20.0);
            let v = log_h(Exponent::ONE, Exponent::ONE, alpha, Route::ClosedForm, tol()).unwrap();
            let target = duality_target(alpha);
            assert!((v.h - target).abs() < 1e-12 * target.max(1.0), "alpha = {alpha}");
        }
    }

    #[test]
    fn duality_defect_examples() {
        let d = duality_defect(Exponent::INFINITY, Exponent::INFINITY, a(0.5), Route::ClosedForm, tol()).unwrap();
        assert!(d < 1e-14);
        let d = duality_defect(Exponent::ONE, Exponent::INFINITY, a(0.5), Route::ClosedForm, tol()).unwrap();
        assert!(d < 1e-14);
        let p = Exponent::new(3.0).unwrap();
        let q = Exponent::new(2.0).unwrap();
        let d = duality_defect(p, q, a(0.37), Route::ClosedForm, tol()).unwrap();
        assert!(d < 1e-10, "{d}");
    }

    #[test]
    fn loglinear_defect_examples() {
        let p0 = Exponent::ONE;
        let q0 = Exponent::ONE;
        let p1 = Exponent::INFINITY;
        let q1 = Exponent::INFINITY;
        // Endpoint is exact.
        let d = loglinear_defect(p0, q0, p1, q1, 0.0, a(0.37), Route::ClosedForm, tol()).unwrap();
        assert_eq!(d, 0.0);
        // Midpoint hits (2,2): H_{2,2}(1/2) = 2^{-1/2}.
        let d = loglinear_defect(p0, q0, p1, q1, 0.5, a(0.5), Route::ClosedForm, tol()).unwrap();
        assert!(d < 1e-14);
        let v = log_h(Exponent::TWO, Exponent::TWO, a(0.5), Route::ClosedForm, tol()).unwrap();
        assert!((v.h - 0.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn flip_symmetry_is_exact_in_closed_form() {
        let p = Exponent::new(4.0).unwrap();
        let q = Exponent::new(4.0 / 3.0).unwrap();
        for i in 1..=9 {
            let alpha = a(i as f64 / 10.0);
            let lhs = log_h(p, q, alpha, Route::ClosedForm, tol()).unwrap().log_h;
            let rhs = log_h(q, p, alpha.flip(), Route::ClosedForm, tol()).unwrap().log_h;
            assert!((lhs - rhs).abs() < 1e-12, "alpha = {alpha}");
        }
    }

    #[test]
    fn stein_bound_examples() {
        let one = stein_bound(Exponent::INFINITY, Exponent::INFINITY, a(0.5), 1.0, 1.0, tol()).unwrap();
        assert_eq!(one, 1.0);
        let v = stein_bound(Exponent::INFINITY, Exponent::TWO, a(0.5), 1.0, 1.0, tol()).unwrap();
        assert!((v - 0.25f64.exp2().recip()).abs() < 1e-14);
        let v = stein_bound(Exponent::INFINITY, Exponent::INFINITY, a(0.5), 2.0, 8.0, tol()).unwrap();
        assert!((v - 4.0).abs() < 1e-14);
    }
}
