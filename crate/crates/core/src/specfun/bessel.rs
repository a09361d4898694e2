//! Macdonald function `K_s(y) = ½∫₀^∞ e^{-y(t+t⁻¹)/2} t^s dt/t`.
//!
//! With `t = e^u` the integrand becomes `½ e^{-y cosh u + s u}` on the real
//! line. The real part of the exponent is concave with its maximum at
//! `u* = asinh(σ/y)`, `σ = Re s`; writing `u = u* + v` gives
//!
//! ```text
//! -y cosh u + s u = (-q + σ u*) + i τ u* + g(v),
//! g(v) = -2q sinh²(v/2) - σ (sinh v - v) + i τ v,   q = √(y² + σ²),
//! ```
//!
//! so the peak value is factored out exactly and the remaining integrand is
//! O(1) at `v = 0` for every order. The trapezoid rule on the real line is
//! then refined by step halving.

use num_complex::Complex64;

use super::Precision;
use crate::error::{Error, Result};

/// Relative cut-off for the integration range: `e^{-60}`.
const RANGE_LOG_CUTOFF: f64 = -60.0;
const MIN_LEVELS: usize = 3;

fn sinh_minus_id(v: f64) -> f64 {
    if v.abs() < 0.1 {
        let v2 = v * v;
        v * v2 * (1.0 / 6.0 + v2 * (1.0 / 120.0 + v2 * (1.0 / 5040.0 + v2 / 362_880.0)))
    } else {
        v.sinh() - v
    }
}

struct Integrand {
    q: f64,
    sigma: f64,
    tau: f64,
}

impl Integrand {
    fn re_exponent(&self, v: f64) -> f64 {
        let h = (v / 2.0).sinh();
        -2.0 * self.q * h * h - self.sigma * sinh_minus_id(v)
    }

    fn eval(&self, v: f64) -> Complex64 {
        Complex64::from_polar(self.re_exponent(v).exp(), self.tau * v)
    }

    /// Number of steps of size `h` from 0 until the integrand drops below the cut-off.
    fn reach(&self, h: f64, dir: f64) -> usize {
        let mut j = 1usize;
        while self.re_exponent(dir * j as f64 * h) > RANGE_LOG_CUTOFF {
            j += 1;
        }
        j
    }
}

struct Setup {
    integrand: Integrand,
    log_prefactor: Complex64,
    h0: f64,
    lo: usize,
    hi: usize,
}

fn setup(order: Complex64, y: f64) -> Result<Setup> {
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::Domain(format!("K-Bessel argument must be positive, got {y}")));
    }
    if !(order.re.is_finite() && order.im.is_finite()) {
        return Err(Error::Domain(format!("K-Bessel order must be finite, got {order}")));
    }
    let (sigma, tau) = (order.re, order.im);
    let q = y.hypot(sigma);
    let u_star = (sigma / y).asinh();
    let log_prefactor =
        Complex64::new(0.5f64.ln() - q + sigma * u_star, tau * u_star);
    let integrand = Integrand { q, sigma, tau };
    let mut h0 = 0.5f64.min(1.0 / q.sqrt());
    if tau != 0.0 {
        h0 = h0.min(1.0 / tau.abs());
    }
    let lo = integrand.reach(h0, -1.0);
    let hi = integrand.reach(h0, 1.0);
    Ok(Setup {
        integrand,
        log_prefactor,
        h0,
        lo,
        hi,
    })
}

/// Trapezoid estimates of the scaled integral `∫ e^{g(v)} dv` for levels
/// `0..=levels`, each halving the step of the previous one.
fn refine<F>(s: &Setup, max_levels: usize, mut stop: F) -> Vec<Complex64>
where
    F: FnMut(&[Complex64]) -> bool,
{
    let f = &s.integrand;
    let mut level0 = Complex64::new(0.0, 0.0);
    for j in -(s.lo as i64)..=(s.hi as i64) {
        level0 += f.eval(j as f64 * s.h0);
    }
    let mut estimates = vec![level0 * s.h0];
    let mut h = s.h0;
    let mut odd_points = s.lo + s.hi;
    for _ in 0..max_levels {
        if stop(&estimates) {
            break;
        }
        h /= 2.0;
        let start = -(s.lo as f64) * s.h0 + h;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..odd_points {
            acc += f.eval(start + 2.0 * k as f64 * h);
        }
        let prev = *estimates.last().expect("at least one level");
        estimates.push(prev / 2.0 + acc * h);
        odd_points *= 2;
    }
    estimates
}

fn relative_change(est: &[Complex64]) -> f64 {
    match est {
        [.., a, b] => (b - a).norm() / b.norm(),
        _ => f64::INFINITY,
    }
}

/// `ln K_order(y)`; the imaginary part is the phase modulo `2π`.
pub fn ln_bessel_k(order: Complex64, y: f64, prec: &Precision) -> Result<Complex64> {
    let s = setup(order, y)?;
    let tol = prec.rel_tol.max(16.0 * f64::EPSILON);
    let est = refine(&s, prec.quad_levels as usize, |e| {
        e.len() >= MIN_LEVELS && relative_change(e) <= tol
    });
    let achieved = relative_change(&est);
    if est.len() < MIN_LEVELS || !(achieved <= tol) {
        return Err(Error::Accuracy { achieved });
    }
    Ok(s.log_prefactor + est.last().expect("nonempty").ln())
}

pub fn bessel_k(order: Complex64, y: f64, prec: &Precision) -> Result<Complex64> {
    Ok(ln_bessel_k(order, y, prec)?.exp())
}

/// Per-level estimates of `K_order(y)` for exactly `levels + 1` refinement
/// levels, without early stopping; for convergence diagnostics.
pub fn bessel_k_levels(order: Complex64, y: f64, levels: usize) -> Result<Vec<Complex64>> {
    let s = setup(order, y)?;
    let pre = s.log_prefactor.exp();
    Ok(refine(&s, levels, |_| false)
        .into_iter()
        .map(|v| v * pre)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn half_integer_closed_form() {
        let p = Precision::default();
        for y in [0.5, 1.0, 2.0, 5.0, 30.0] {
            let k = bessel_k(c(0.5, 0.0), y, &p).unwrap();
            let exact = (PI / (2.0 * y)).sqrt() * (-y).exp();
            assert_relative_eq!(k.re, exact, max_relative = 1e-12);
            assert!(k.im.abs() < 1e-14 * exact);
        }
        // K_{3/2}(y) = √(π/2y) e^{-y} (1 + 1/y)
        let y = 1.7;
        let k = bessel_k(c(1.5, 0.0), y, &p).unwrap().re;
        assert_relative_eq!(k, (PI / (2.0 * y)).sqrt() * (-y).exp() * (1.0 + 1.0 / y), max_relative = 1e-12);
    }

    #[test]
    fn order_symmetry_and_positivity() {
        let p = Precision::default();
        let a = bessel_k(c(0.7, 0.0), 2.0, &p).unwrap();
        let b = bessel_k(c(-0.7, 0.0), 2.0, &p).unwrap();
        assert_relative_eq!(a.re, b.re, max_relative = 1e-12);
        let a = bessel_k(c(1.2, 3.5), 0.8, &p).unwrap();
        let b = bessel_k(c(-1.2, -3.5), 0.8, &p).unwrap();
        assert!((a - b).norm() < 1e-10 * a.norm());
        for order in [0.0, 0.3, 2.0, 10.0, -4.0] {
            for y in [0.01, 0.3, 3.0, 40.0] {
                assert!(bessel_k(c(order, 0.0), y, &p).unwrap().re > 0.0);
            }
        }
    }

    #[test]
    fn huge_orders_stay_finite_in_log_form() {
        let p = Precision::default();
        // Laplace: ln K_ν(z) ≈ ln Γ(ν) - ln 2 + ν ln(2/z) for ν ≫ z
        let nu = 1e8;
        let z = 3.0;
        let ln_k = ln_bessel_k(c(nu, 0.0), z, &p).unwrap().re;
        let approx = crate::specfun::ln_gamma(c(nu, 0.0)).unwrap().re - 2f64.ln() + nu * (2.0 / z).ln();
        assert!((ln_k - approx).abs() < 1e-6 * approx.abs());
    }

    #[test]
    fn domain_errors() {
        let p = Precision::default();
        assert!(matches!(bessel_k(c(0.0, 0.0), 0.0, &p), Err(Error::Domain(_))));
        assert!(matches!(bessel_k(c(0.0, 0.0), -1.0, &p), Err(Error::Domain(_))));
        let starved = Precision {
            quad_levels: 1,
            ..Precision::default()
        };
        assert!(matches!(bessel_k(c(0.0, 0.0), 1.0, &starved), Err(Error::Accuracy { .. })));
    }

    #[test]
    fn level_differences_shrink() {
        let levels = bessel_k_levels(c(1.0, 0.0), 2.0 * PI, 8).unwrap();
        let diffs: Vec<f64> = levels.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
        let scale = levels.last().unwrap().norm();
        for pair in diffs.windows(2) {
            if pair[0] > 1e-14 * scale {
                assert!(pair[1] < pair[0], "{diffs:?}");
            }
        }
    }
}
