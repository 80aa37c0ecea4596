//! Adaptive integration over the real line for integrands with exponential
//! tails and mild polynomial growth, plus Lp norms and supremum scans.
//!
//! The core rule is a 7/15-point Gauss-Kronrod pair applied to [-X, X],
//! where the truncation point X is solved from the certified decay envelope
//! so that the discarded tail stays below a tenth of the absolute tolerance.
//! Panels are refined worst-error-first; the final sum runs over panels in
//! left-to-right order with compensated addition, so results are
//! deterministic regardless of refinement history.

use std::collections::BinaryHeap;

use crate::domain::{Exponent, Tolerance};
use crate::error::{Error, Result};

/// Certified decay envelope |f(x)| <= scale * (1+|x|)^poly_growth * e^{-tail_rate |x|}
/// for |x| >= x0. `tail_rate = 0` marks a non-integrable (sup-scan only) function.
#[derive(Debug, Clone, Copy)]
pub struct Envelope {
    pub scale: f64,
    pub poly_growth: f64,
    pub tail_rate: f64,
    pub x0: f64,
}

impl Envelope {
    pub fn exponential(scale: f64, tail_rate: f64) -> Self {
        Self { scale, poly_growth: 0.0, tail_rate, x0: 0.0 }
    }

    /// Envelope value at |x| = r.
    fn at(&self, r: f64) -> f64 {
        self.scale * (1.0 + r).powf(self.poly_growth) * (-self.tail_rate * r).exp()
    }
}

/// A real-line integrand together with its decay envelope.
pub struct LineFunction<F: Fn(f64) -> f64> {
    eval: F,
    envelope: Envelope,
}

impl<F: Fn(f64) -> f64> LineFunction<F> {
    pub fn new(eval: F, envelope: Envelope) -> Self {
        #[cfg(debug_assertions)]
        {
            if envelope.tail_rate > 0.0 && envelope.scale > 0.0 {
                let base = envelope.x0.max(1.0);
                for r in [2.0 * base, 4.0 * base] {
                    let bound = envelope.at(r) * (1.0 + 1e-6) + 1e-300;
                    debug_assert!(
                        eval(r).abs() <= bound && eval(-r).abs() <= bound,
                        "envelope violated at |x| = {r}: |f| = {} vs bound {bound}",
                        eval(r).abs().max(eval(-r).abs()),
                    );
                }
            }
        }
        Self { eval, envelope }
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    pub fn envelope(&self) -> Envelope {
        self.envelope
    }
}

/// Outcome of an adaptive line integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evaluations: usize,
}

// 7/15 Gauss-Kronrod nodes and weights (positive half, QUADPACK values).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// One Gauss-Kronrod 15-point application on [a, b].
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut fv1 = [0.0f64; 7];
    let mut fv2 = [0.0f64; 7];
    let mut res_gauss = f_center * WG[3];
    let mut res_kronrod = f_center * WGK[7];
    let mut res_abs = res_kronrod.abs();

    for j in 0..7 {
        let abscissa = half * XGK[j];
        let v1 = f(center - abscissa);
        let v2 = f(center + abscissa);
        fv1[j] = v1;
        fv2[j] = v2;
        let sum = v1 + v2;
        res_kronrod += WGK[j] * sum;
        res_abs += WGK[j] * (v1.abs() + v2.abs());
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * sum;
        }
    }

    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let err = (res_kronrod - res_gauss) * half;
    (res_kronrod * half, rescale_error(err, res_abs * half.abs(), res_asc * half.abs()))
}

#[derive(Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.a == other.a
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Max-heap on error, ties broken by left endpoint for determinism.
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Truncation point: smallest X >= max(x0, 1) with the envelope tail mass
/// beyond X certified below `tail_target`.
fn truncation_point(env: &Envelope, tail_target: f64) -> Result<f64> {
    if !(env.tail_rate > 0.0) {
        return Err(Error::Envelope(format!(
            "nonpositive decay rate {}",
            env.tail_rate
        )));
    }
    if env.scale == 0.0 {
        return Ok(env.x0.max(1.0));
    }
    let r = env.tail_rate;
    let g = env.poly_growth.max(0.0);
    let mut x = env.x0.max(1.0).max(2.0 * g / r);
    // Fixed point of x = [log(2 C / (r * target)) + g log(1+x)] / r.
    for _ in 0..200 {
        let proposal = ((2.0 * env.scale / (r * tail_target)).ln() + g * (1.0 + x).ln()) / r;
        let next = x.max(proposal);
        if next - x < 0.25 {
            x = next;
            break;
        }
        x = next;
    }
    Ok(x + 1.0)
}

/// Adaptive integral of `f` over the whole real line.
pub fn integrate_line<F: Fn(f64) -> f64>(
    f: &LineFunction<F>,
    tol: Tolerance,
) -> Result<QuadratureResult> {
    let x_max = truncation_point(&f.envelope, tol.abs_tol / 20.0)?;
    integrate_interval(&f.eval, -x_max, x_max, tol)
}

/// Adaptive Gauss-Kronrod on a finite interval.
pub fn integrate_interval<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: Tolerance,
) -> Result<QuadratureResult> {
    let span = b - a;
    let n0 = ((span / 4.0).ceil() as usize).clamp(4, 64);
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0usize;
    let mut total_value = 0.0;
    let mut total_err = 0.0;
    for i in 0..n0 {
        let pa = a + span * (i as f64) / (n0 as f64);
        let pb = a + span * ((i + 1) as f64) / (n0 as f64);
        let (value, err) = qk15(f, pa, pb);
        evaluations += 15;
        total_value += value;
        total_err += err;
        heap.push(Panel { a: pa, b: pb, value, err });
    }

    let mut refinements = 0usize;
    while total_err > tol.bound(total_value) {
        if refinements >= tol.max_refinements {
            return Err(Error::NoConvergence { err_estimate: total_err, evaluations });
        }
        let worst = heap.pop().expect("panel heap cannot be empty");
        if worst.b - worst.a < 1e-15 * (1.0 + worst.a.abs()) {
            // Panel width at rounding level; its error estimate is noise.
            heap.push(Panel { err: 0.0, ..worst });
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = qk15(f, worst.a, mid);
        let (v2, e2) = qk15(f, mid, worst.b);
        evaluations += 30;
        refinements += 1;
        total_value += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: mid, value: v1, err: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, err: e2 });
    }

    // Deterministic final pass: left-to-right compensated sums.
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|u, v| u.a.total_cmp(&v.a));
    let mut value = 0.0;
    let mut comp = 0.0;
    let mut err = 0.0;
    for p in &panels {
        let y = p.value - comp;
        let t = value + y;
        comp = (t - value) - y;
        value = t;
        err += p.err;
    }
    Ok(QuadratureResult { value, err_estimate: err, evaluations })
}

/// Lp norm of `f`. Finite p integrates |f|^p under the transformed envelope;
/// p = inf locates the supremum by coarse scan plus golden-section refinement.
pub fn lp_norm<F: Fn(f64) -> f64>(
    f: &LineFunction<F>,
    p: Exponent,
    tol: Tolerance,
) -> Result<f64> {
    if p.is_infinite() {
        let window = sup_window(&f.envelope, tol)?;
        let (_, sup) = sup_scan(f, window, tol);
        return Ok(sup);
    }
    let pv = p.value();
    let env = f.envelope;
    if !(env.tail_rate > 0.0) {
        return Err(Error::Envelope(
            "|f|^p has nonpositive decay rate (envelope tail_rate = 0)".into(),
        ));
    }
    let transformed = LineFunction::new(
        |x: f64| (f.eval)(x).abs().powf(pv),
        Envelope {
            scale: env.scale.powf(pv),
            poly_growth: env.poly_growth * pv,
            tail_rate: env.tail_rate * pv,
            x0: env.x0,
        },
    );
    let integral = integrate_line(&transformed, tol)?;
    Ok(integral.value.max(0.0).powf(1.0 / pv))
}

/// Window beyond which the envelope certifies |f| is negligible.
fn sup_window(env: &Envelope, tol: Tolerance) -> Result<f64> {
    if env.tail_rate > 0.0 {
        truncation_point(env, tol.abs_tol.min(1e-8))
    } else {
        // Envelope-free function: scan a fixed default window.
        Ok(env.x0.max(8.0))
    }
}

/// Global maximum of |f| on [-window, window]: coarse scan with step
/// <= window/2048, then golden-section refinement of the best bracket.
/// Returns (argmax, max); global only for profiles unimodal after the scan.
pub fn sup_scan<F: Fn(f64) -> f64>(
    f: &LineFunction<F>,
    window: f64,
    tol: Tolerance,
) -> (f64, f64) {
    let n = 4096usize;
    let step = 2.0 * window / n as f64;
    let mut best_x = -window;
    let mut best = f.eval(-window).abs();
    for i in 1..=n {
        let x = -window + step * i as f64;
        let v = f.eval(x).abs();
        if v > best {
            best = v;
            best_x = x;
        }
    }

    // Golden-section on the bracketing interval.
    let inv_phi = 0.618_033_988_749_894_9;
    let mut lo = best_x - step;
    let mut hi = best_x + step;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f.eval(x1).abs();
    let mut f2 = f.eval(x2).abs();
    for _ in 0..200 {
        if hi - lo <= tol.rel_tol * (1.0 + best_x.abs()) {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f.eval(x2).abs();
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f.eval(x1).abs();
        }
    }
    let mid = 0.5 * (lo + hi);
    let fm = f.eval(mid).abs();
    if fm >= best {
        (mid, fm)
    } else {
        (best_x, best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Exponent;

    fn tol() -> Tolerance {
        Tolerance { abs_tol: 1e-12, rel_tol: 1e-12, max_refinements: 4000 }
    }

    /// Test-local adaptive Simpson on [a, b]; independent of the
    /// Gauss-Kronrod path it checks.
    fn simpson_oracle<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, eps: f64) -> f64 {
        fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
            (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
        }
        fn recurse<F: Fn(f64) -> f64>(
            f: &F,
            a: f64,
            b: f64,
            whole: f64,
            eps: f64,
            depth: u32,
        ) -> f64 {
            let m = 0.5 * (a + b);
            let left = simpson(f, a, m);
            let right = simpson(f, m, b);
            if depth == 0 || (left + right - whole).abs() <= 15.0 * eps {
                left + right + (left + right - whole) / 15.0
            } else {
                recurse(f, a, m, left, eps / 2.0, depth - 1)
                    + recurse(f, m, b, right, eps / 2.0, depth - 1)
            }
        }
        recurse(f, a, b, simpson(f, a, b), eps, 40)
    }

    #[test]
    fn gaussian_integral() {
        let f = LineFunction::new(
            |x: f64| (-x * x).exp(),
            Envelope { scale: 1.0, poly_growth: 0.0, tail_rate: 4.0, x0: 5.0 },
        );
        let r = integrate_line(&f, tol()).unwrap();
        assert!((r.value - std::f64::consts::PI.sqrt()).abs() < 1e-12, "{}", r.value);
        assert!(r.err_estimate < 1e-10);
    }

    #[test]
    fn linearity_on_fixed_pair() {
        let make_f = || {
            LineFunction::new(
                |x: f64| (-x * x).exp(),
                Envelope { scale: 1.0, poly_growth: 0.0, tail_rate: 4.0, x0: 5.0 },
            )
        };
        let make_g = || {
            LineFunction::new(
                |x: f64| 1.0 / (1.0 + x * x) * (-x.abs()).exp(),
                Envelope { scale: 1.0, poly_growth: 0.0, tail_rate: 1.0, x0: 0.0 },
            )
        };
        let (a, b): (f64, f64) = (2.5, -1.25);
        let fa = integrate_line(&make_f(), tol()).unwrap().value;
        let gb = integrate_line(&make_g(), tol()).unwrap().value;
        let combo = LineFunction::new(
            |x: f64| {
                a * (-x * x).exp() + b * (1.0 / (1.0 + x * x) * (-x.abs()).exp())
            },
            Envelope { scale: a.abs() + b.abs(), poly_growth: 0.0, tail_rate: 1.0, x0: 0.0 },
        );
        let lhs = integrate_line(&combo, tol()).unwrap().value;
        assert!((lhs - (a * fa + b * gb)).abs() < 2e-12);
    }

    #[test]
    fn even_symmetry_matches_half_line_oracle() {
        // Even integrand: full-line result equals twice the half-line
        // integral computed by an independent Simpson oracle.
        let f = |x: f64| (-2.0 * x.abs()).exp() * (1.0 + x * x).recip();
        let lf = LineFunction::new(f, Envelope { scale: 1.0, poly_growth: 0.0, tail_rate: 2.0, x0: 0.0 });
        let full = integrate_line(&lf, tol()).unwrap().value;
        let half = simpson_oracle(&f, 0.0, 25.0, 1e-14);
        assert!((full - 2.0 * half).abs() < 1e-11, "{} vs {}", full, 2.0 * half);
    }

    #[test]
    fn no_convergence_with_exhausted_budget() {
        let f = LineFunction::new(
            |x: f64| (50.0 * x).cos() * (-x.abs()).exp(),
            Envelope { scale: 1.0, poly_growth: 0.0, tail_rate: 1.0, x0: 0.0 },
        );
        let starved = Tolerance { abs_tol: 1e-14, rel_tol: 1e-14, max_refinements: 2 };
        match integrate_line(&f, starved) {
            Err(Error::NoConvergence { evaluations, .. }) => assert!(evaluations > 0),
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn envelope_error_for_nondecaying_lp() {
        let f = LineFunction::new(
            |_x: f64| 1.0,
            Envelope { scale: 1.0, poly_growth: 0.0, tail_rate: 0.0, x0: 0.0 },
        );
        assert!(matches!(
            lp_norm(&f, Exponent::ONE, tol()),
            Err(Error::Envelope(_))
        ));
    }

    #[test]
    fn sup_norm_of_constant_is_one() {
        let f = LineFunction::new(
            |_x: f64| 1.0,
            Envelope { scale: 1.0, poly_growth: 0.0, tail_rate: 0.0, x0: 0.0 },
        );
        let sup = lp_norm(&f, Exponent::INFINITY, tol()).unwrap();
        assert_eq!(sup, 1.0);
    }

    #[test]
    fn sup_scan_finds_shifted_peak() {
        let f = LineFunction::new(
            |x: f64| (-(x - 3.0).abs()).exp(),
            Envelope { scale: 25.0, poly_growth: 0.0, tail_rate: 1.0, x0: 4.0 },
        );
        let (argmax, max) = sup_scan(&f, 10.0, tol());
        assert!((argmax - 3.0).abs() < 1e-9, "argmax = {argmax}");
        assert!((max - 1.0).abs() < 1e-9);
    }

    #[test]
    fn truncation_grows_with_scale() {
        let small = truncation_point(&Envelope::exponential(1.0, 1.0), 1e-10).unwrap();
        let large = truncation_point(&Envelope::exponential(1e6, 1.0), 1e-10).unwrap();
        assert!(large > small);
        assert!(truncation_point(&Envelope::exponential(1.0, 0.0), 1e-10).is_err());
    }
}
