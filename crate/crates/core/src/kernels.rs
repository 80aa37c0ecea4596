//! Kernels on the unit strip: the Poisson kernel (real and meromorphic
//! forms), its Fourier transform, the harmonic-conjugate kernel, and the
//! Blaschke factor with zero at i*alpha.
//!
//! All real evaluations use the rearrangement
//!   cosh(pi x) - cos(pi y) = (1 - q)^2/q + 2(1 - cos(pi y)),  q = e^{-pi |x|},
//! written as ((1-q)^2 + 4 q sin^2(pi y / 2)) / q, which neither overflows
//! for large |x| nor cancels for small |x|.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::domain::{Alpha, StripPoint};
use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn check_height(y: f64) -> Result<()> {
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::Domain(format!("kernel height y = {y} outside (0, 1)")));
    }
    Ok(())
}

/// (1-q)^2 + 4 q sin^2(pi y / 2) with q = e^{-pi |x|}; this is
/// q * (cosh(pi x) - cos(pi y)) * 2 ... precisely 2 q (cosh - cos).
fn scaled_denominator(y: f64, x: f64) -> (f64, f64) {
    let q = (-PI * x.abs()).exp();
    let one_minus_q = -(-PI * x.abs()).exp_m1();
    let s = (0.5 * PI * y).sin();
    (q, one_minus_q * one_minus_q + 4.0 * q * s * s)
}

/// Poisson kernel of the strip, P_y(x) = sin(pi y) / (2 (cosh(pi x) - cos(pi y))).
pub fn poisson(y: f64, x: f64) -> Result<f64> {
    check_height(y)?;
    Ok(poisson_raw(y, x))
}

pub(crate) fn poisson_raw(y: f64, x: f64) -> f64 {
    let (q, denom) = scaled_denominator(y, x);
    (PI * y).sin() * q / denom
}

/// The second kernel Q_y of the Poisson representation; identically
/// P_{1-y} and implemented as that alias.
pub fn q_kernel(y: f64, x: f64) -> Result<f64> {
    check_height(y)?;
    Ok(poisson_raw(1.0 - y, x))
}

/// Harmonic-conjugate kernel of P_y on the strip,
/// Q_y(x) = sinh(pi x) / (2 (cosh(pi x) - cos(pi y))); the pair
/// P_y + i Q_y is the boundary trace of (i/2) coth(pi z / 2).
pub fn conjugate_poisson(y: f64, x: f64) -> Result<f64> {
    check_height(y)?;
    Ok(conjugate_poisson_raw(y, x))
}

pub(crate) fn conjugate_poisson_raw(y: f64, x: f64) -> f64 {
    let (_q, denom) = scaled_denominator(y, x);
    // sinh(pi x) = sign(x) (1 - q^2) / (2 q); the q cancels the shared scaling.
    let numer = -(-2.0 * PI * x.abs()).exp_m1(); // 1 - q^2
    0.5 * x.signum() * numer / denom
}

/// Holomorphic completion kernel (i/2) coth(pi z / 2), whose boundary trace
/// on the real axis is P_y + i Q_y.
pub fn completion_kernel(z: Complex64) -> Complex64 {
    let w = 0.5 * PI * z;
    0.5 * I * w.cosh() / w.sinh()
}

/// Meromorphic Poisson kernel on the closed strip, poles at +/- i alpha.
pub fn poisson_complex(alpha: Alpha, z: StripPoint) -> Result<Complex64> {
    let a = alpha.value();
    let zc = z.to_complex();
    for pole in [I * a, -I * a] {
        if (zc - pole).norm() < 1e-12 {
            return Err(Error::Pole(format!("poisson kernel pole at {pole}")));
        }
    }
    Ok(poisson_complex_raw(a, zc))
}

pub(crate) fn poisson_complex_raw(a: f64, z: Complex64) -> Complex64 {
    let sin_pa = (PI * a).sin();
    if z.re.abs() <= 30.0 {
        // cosh(pi z) - cos(pi a) = 2 (sinh^2(pi z/2) + sin^2(pi a/2))
        let sh = (0.5 * PI * z).sinh();
        let sp = (0.5 * PI * a).sin();
        0.5 * sin_pa / (2.0 * (sh * sh + sp * sp))
    } else {
        // Multiply through by e^{-pi |Re z|}; the kernel is even in z.
        let zz = if z.re > 0.0 { z } else { -z };
        let q = (-PI * zz).exp();
        sin_pa * q / ((1.0 - q) * (1.0 - q) + 2.0 * q * (1.0 - (PI * a).cos()))
    }
}

/// Fourier transform of the Poisson kernel, sinh((1-y) k) / sinh(k),
/// with the analytic k -> 0 limit 1 - y.
pub fn poisson_ft(y: f64, k: f64) -> Result<f64> {
    check_height(y)?;
    if !k.is_finite() {
        return Err(Error::NonFinite("poisson_ft frequency".into()));
    }
    let ak = k.abs();
    if ak < 1e-6 {
        // sinh((1-y)k)/sinh(k) = (1-y) (1 + k^2 ((1-y)^2 - 1)/6 + O(k^4))
        let c = 1.0 - y;
        return Ok(c * (1.0 + ak * ak * (c * c - 1.0) / 6.0));
    }
    // e^{-y k} (1 - e^{-2(1-y)k}) / (1 - e^{-2k}), even in k.
    let numer = -(-2.0 * (1.0 - y) * ak).exp_m1();
    let denom = -(-2.0 * ak).exp_m1();
    Ok((-y * ak).exp() * numer / denom)
}

/// Blaschke factor of the strip with zero at i alpha and pole at -i alpha,
/// B(z) = e^{-i pi alpha} (e^{i pi alpha} - e^{pi z}) / (e^{pi z} - e^{-i pi alpha}).
pub fn blaschke(alpha: Alpha, z: StripPoint) -> Result<Complex64> {
    let a = alpha.value();
    let zc = z.to_complex();
    if (zc + I * a).norm() < 1e-12 {
        return Err(Error::Pole(format!("Blaschke pole at -i {a}")));
    }
    Ok(blaschke_raw(a, zc))
}

pub(crate) fn blaschke_raw(a: f64, z: Complex64) -> Complex64 {
    let zero = Complex64::from_polar(1.0, PI * a); // e^{i pi alpha}
    let pole = zero.conj();
    if z.re <= 0.0 {
        let e = (PI * z).exp();
        pole * (zero - e) / (e - pole)
    } else {
        let f = (-PI * z).exp();
        pole * (zero * f - 1.0) / (1.0 - pole * f)
    }
}

/// The pole-cancelled product P_alpha(z) B_alpha(z) =
/// -sin(pi alpha) e^{pi z} e^{-i pi alpha} / (e^{pi z} - e^{-i pi alpha})^2,
/// regular at i alpha with value 1/(4 sin(pi alpha)), double pole at -i alpha.
pub fn poisson_blaschke_product(alpha: Alpha, z: StripPoint) -> Result<Complex64> {
    let a = alpha.value();
    let zc = z.to_complex();
    if (zc + I * a).norm() < 1e-12 {
        return Err(Error::Pole(format!("double pole at -i {a}")));
    }
    let sin_pa = (PI * a).sin();
    let pole = Complex64::from_polar(1.0, -PI * a);
    Ok(if zc.re <= 0.0 {
        let e = (PI * zc).exp();
        let d = e - pole;
        -sin_pa * e * pole / (d * d)
    } else {
        let f = (-PI * zc).exp();
        let d = 1.0 - pole * f;
        -sin_pa * f * pole / (d * d)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Tolerance;
    use crate::quad::{integrate_line, sup_scan, Envelope, LineFunction};

    fn alpha(a: f64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    fn zp(x: f64, y: f64) -> StripPoint {
        StripPoint::new(x, y).unwrap()
    }

    fn poisson_envelope(y: f64) -> Envelope {
        Envelope { scale: 1.3 * (PI * y).sin().abs() + 0.1, poly_growth: 0.0, tail_rate: PI, x0: 1.0 }
    }

    #[test]
    fn poisson_spot_values() {
        assert!((poisson(0.5, 0.0).unwrap() - 0.5).abs() < 1e-15);
        // Naive formula as the cross-check for the rearranged evaluation.
        let naive = 0.5 * (PI * 0.5).sin() / ((PI * 1.0).cosh() - (PI * 0.5).cos());
        assert!((poisson(0.5, 1.0).unwrap() - naive).abs() < 1e-16);
        assert!((poisson(0.5, 1.0).unwrap() - 0.5 / PI.cosh()).abs() < 1e-15);
        assert!(poisson(0.0, 1.0).is_err());
        assert!(poisson(1.0, 1.0).is_err());
        // Positivity and evenness.
        for &x in &[0.0, 0.3, -2.0, 17.5, 200.0] {
            let v = poisson(0.37, x).unwrap();
            assert!(v >= 0.0);
            assert_eq!(v, poisson(0.37, -x).unwrap());
        }
    }

    #[test]
    fn poisson_mass_is_one_minus_y() {
        let tol = Tolerance { abs_tol: 1e-13, rel_tol: 1e-13, max_refinements: 6000 };
        for i in 1..=9 {
            let y = i as f64 / 10.0;
            let f = LineFunction::new(|x: f64| poisson_raw(y, x), poisson_envelope(y));
            let r = integrate_line(&f, tol).unwrap();
            assert!(
                (r.value - (1.0 - y)).abs() < 1e-12,
                "y = {y}: integral {} vs {}",
                r.value,
                1.0 - y
            );
        }
    }

    #[test]
    fn q_kernel_is_reflected_poisson() {
        for i in 1..=9 {
            let y = i as f64 / 10.0;
            let mut x = -6.0;
            while x <= 6.0 {
                let direct = 0.5 * (PI * y).sin() / ((PI * x).cosh() + (PI * y).cos());
                assert!(
                    (q_kernel(y, x).unwrap() - direct).abs() <= 1e-15 * (1.0 + direct),
                    "y = {y}, x = {x}"
                );
                x += 0.7;
            }
        }
    }

    #[test]
    fn poisson_complex_agrees_on_real_axis_and_reflects() {
        let a = alpha(0.37);
        let mut x = -4.0;
        while x <= 4.0 {
            let on_axis = poisson_complex(a, zp(x, 0.0)).unwrap();
            assert!((on_axis.re - poisson_raw(0.37, x)).abs() < 1e-14);
            assert!(on_axis.im.abs() < 1e-15);
            // P_alpha(x - i) = -P_{1-alpha}(x)
            let shifted = poisson_complex(a, zp(x, -1.0)).unwrap();
            assert!((shifted.re + poisson_raw(1.0 - 0.37, x)).abs() < 1e-13);
            assert!(shifted.im.abs() < 1e-13);
            x += 0.37;
        }
    }

    #[test]
    fn poisson_complex_residue_at_upper_pole() {
        // (2 pi i)^{-1} contour integral on a small circle around i alpha,
        // trapezoid rule (spectrally accurate for meromorphic integrands).
        let a = alpha(0.3);
        let n = 64;
        let r = 1e-3;
        let center = Complex64::new(0.0, 0.3);
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..n {
            let theta = 2.0 * PI * (j as f64) / (n as f64);
            let offset = Complex64::from_polar(r, theta);
            let z = center + offset;
            let val = poisson_complex(a, zp(z.re, z.im)).unwrap();
            acc += val * offset * I; // f(z) dz with dz = i r e^{i theta} dtheta
        }
        let integral = acc * (2.0 * PI / n as f64);
        let residue = integral / (2.0 * PI * I);
        // Res(P_alpha, i alpha) = 1/(2 pi i)
        let expected = 1.0 / (2.0 * PI * I);
        assert!((residue - expected).norm() < 1e-12, "residue = {residue}");
    }

    #[test]
    fn poisson_complex_pole_guard() {
        let a = alpha(0.3);
        assert!(matches!(
            poisson_complex(a, zp(0.0, 0.3)),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            poisson_complex(a, zp(0.0, -0.3)),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn poisson_ft_spot_values() {
        assert_eq!(poisson_ft(0.3, 0.0).unwrap(), 0.7);
        let expected = 0.5f64.sinh() / 1.0f64.sinh();
        assert!((poisson_ft(0.5, 1.0).unwrap() - expected).abs() < 1e-15);
        // Half-angle identity at y = 1/2: sinh(k/2)/sinh(k) = 1/(2 cosh(k/2)).
        for k in [1.0, 2.0, 3.0] {
            let lhs = poisson_ft(0.5, k).unwrap();
            let rhs = 0.5 / (0.5 * k).cosh();
            assert!((lhs - rhs).abs() < 1e-15, "k = {k}");
        }
        // Evenness and the series branch joining the direct branch.
        assert_eq!(poisson_ft(0.3, 2.0).unwrap(), poisson_ft(0.3, -2.0).unwrap());
        let below = poisson_ft(0.3, 0.999e-6).unwrap();
        let above = poisson_ft(0.3, 1.001e-6).unwrap();
        assert!((below - above).abs() < 1e-14);
    }

    #[test]
    fn poisson_ft_matches_quadrature() {
        let tol = Tolerance { abs_tol: 1e-13, rel_tol: 1e-13, max_refinements: 6000 };
        for i in [1, 3, 5, 7, 9] {
            let y = i as f64 / 10.0;
            for k in [-10.0, -4.0, -1.0, 0.5, 2.0, 6.5, 10.0] {
                let f = LineFunction::new(
                    |x: f64| poisson_raw(y, x) * (k * x).cos(),
                    poisson_envelope(y),
                );
                let numeric = integrate_line(&f, tol).unwrap().value;
                let closed = poisson_ft(y, k).unwrap();
                assert!(
                    (numeric - closed).abs() < 1e-10,
                    "y = {y}, k = {k}: {numeric} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn conjugate_poisson_basics() {
        assert_eq!(conjugate_poisson(0.5, 0.0).unwrap(), 0.0);
        // Odd in x.
        assert_eq!(
            conjugate_poisson(0.3, 1.7).unwrap(),
            -conjugate_poisson(0.3, -1.7).unwrap()
        );
        // sinh/cosh ratio limit 1/2 at +infinity.
        assert!((conjugate_poisson(0.5, 40.0).unwrap() - 0.5).abs() < 1e-50);
        assert!((conjugate_poisson(0.5, -40.0).unwrap() + 0.5).abs() < 1e-50);
        assert!(conjugate_poisson(1.0, 1.0).is_err());
    }

    #[test]
    fn completion_kernel_has_poisson_pair_as_trace() {
        // Re[(i/2) coth(pi z/2)] = P_y(x), Im = Q_y(x): the coth addition
        // identity coth(a+ib) = (sinh 2a - i sin 2b)/(cosh 2a - cos 2b)
        // verified numerically against the independent complex-cosh path.
        for i in 1..=9 {
            let y = i as f64 / 10.0;
            let mut x = -5.0;
            while x <= 5.0 {
                let k = completion_kernel(Complex64::new(x, y));
                assert!((k.re - poisson_raw(y, x)).abs() < 1e-13, "Re at ({x}, {y})");
                assert!(
                    (k.im - conjugate_poisson_raw(y, x)).abs() < 1e-13,
                    "Im at ({x}, {y})"
                );
                x += 0.61;
            }
        }
    }

    #[test]
    fn poisson_maximum_at_origin() {
        let f = LineFunction::new(|x: f64| poisson_raw(0.5, x), poisson_envelope(0.5));
        let (argmax, max) = sup_scan(&f, 10.0, Tolerance::scalar());
        // The peak is flat to rounding within ~1e-8 of the origin.
        assert!(argmax.abs() < 1e-6);
        assert!((max - 0.5).abs() < 1e-12);
    }

    #[test]
    fn blaschke_zero_value_and_modulus() {
        let a = alpha(0.3);
        assert!(blaschke(a, zp(0.0, 0.3)).unwrap().norm() < 1e-15);
        // B_{1/2}(0) = 1 by direct algebra.
        let b0 = blaschke(alpha(0.5), zp(0.0, 0.0)).unwrap();
        assert!((b0 - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        // Unit modulus on both boundary lines.
        for &aa in &[0.1, 0.37, 0.5, 0.82] {
            let a = alpha(aa);
            let mut x = -20.0;
            while x <= 20.0 {
                for y in [0.0, 1.0] {
                    let m = blaschke(a, zp(x, y)).unwrap().norm();
                    assert!((m - 1.0).abs() < 1e-12, "alpha = {aa}, x = {x}, y = {y}");
                }
                x += 1.3;
            }
        }
        assert!(matches!(blaschke(a, zp(0.0, -0.3)), Err(Error::Pole(_))));
    }

    #[test]
    fn blaschke_contracts_interior() {
        let a = alpha(0.4);
        for &(x, y) in &[(0.0, 0.5), (1.0, 0.2), (-2.0, 0.8), (0.3, 0.4000001)] {
            assert!(blaschke(a, zp(x, y)).unwrap().norm() < 1.0);
        }
    }

    #[test]
    fn poisson_blaschke_product_limit() {
        // Mean over four directions at radius 1e-4 around i alpha; the mean
        // kills the first three Taylor terms, leaving O(r^4).
        for &aa in &[0.1, 0.3, 0.5, 0.7, 0.9] {
            let a = alpha(aa);
            let r = 1e-4;
            let mut mean = Complex64::new(0.0, 0.0);
            for j in 0..4 {
                let theta = 0.5 * PI * j as f64;
                let z = Complex64::new(0.0, aa) + Complex64::from_polar(r, theta);
                let p = poisson_complex(a, zp(z.re, z.im)).unwrap();
                let b = blaschke(a, zp(z.re, z.im)).unwrap();
                mean += p * b;
            }
            mean /= 4.0;
            let expected = 1.0 / (4.0 * (PI * aa).sin());
            assert!(
                (mean - Complex64::new(expected, 0.0)).norm() < 1e-6,
                "alpha = {aa}: {mean} vs {expected}"
            );
        }
    }

    #[test]
    fn cancelled_product_matches_direct_product() {
        let a = alpha(0.3);
        for &(x, y) in &[(0.5, 0.25), (-1.2, 0.8), (2.0, 0.5), (35.0, 0.6), (0.0, 0.9)] {
            let direct = poisson_complex(a, zp(x, y)).unwrap()
                * blaschke(a, zp(x, y)).unwrap();
            let fused = poisson_blaschke_product(a, zp(x, y)).unwrap();
            assert!(
                (direct - fused).norm() <= 1e-13 * (1.0 + direct.norm()),
                "at ({x}, {y}): {direct} vs {fused}"
            );
        }
        // Regular at the cancelled pole i alpha.
        let at_zero = poisson_blaschke_product(a, zp(0.0, 0.3)).unwrap();
        let expected = 1.0 / (4.0 * (PI * 0.3).sin());
        assert!((at_zero - Complex64::new(expected, 0.0)).norm() < 1e-14);
    }
}
