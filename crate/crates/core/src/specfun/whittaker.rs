//! Archimedean, p-adic and global Whittaker factors of the `SL₂` Eisenstein
//! series, valid for `Re s > 1`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::arith::{divisor_power_sum, is_prime, p_adic_valuation, primes_up_to};
use super::bessel::ln_bessel_k;
use super::gamma::ln_gamma;
use super::zeta::ln_xi;
use super::Precision;
use crate::error::{Error, Result};

fn check_args(n: i64, y: f64, s: Complex64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("Whittaker index n must be nonzero".into()));
    }
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::Domain(format!("Whittaker argument y must be positive, got {y}")));
    }
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!("Whittaker factors need Re s > 1, got s = {s}")));
    }
    Ok(())
}

/// `W^∞_n(y, s) = 2π^{s/2} Γ(s/2)⁻¹ |ny|^{(s-1)/2} K_{(s-1)/2}(2π|n|y)`.
pub fn whittaker_inf(n: i64, y: f64, s: Complex64, prec: &Precision) -> Result<Complex64> {
    check_args(n, y, s)?;
    let ny = (n.unsigned_abs() as f64) * y;
    let order = (s - 1.0) / 2.0;
    let log = 2f64.ln() + s / 2.0 * PI.ln() - ln_gamma(s / 2.0)?
        + order * ny.ln()
        + ln_bessel_k(order, 2.0 * PI * ny, prec)?;
    Ok(log.exp())
}

/// `W^p_n(s) = (1 - p^{-s})(1 - p^{(n_p+1)(1-s)}) / (1 - p^{1-s})`.
pub fn whittaker_p(p: u64, n: i64, s: Complex64) -> Result<Complex64> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::Domain("Whittaker index n must be nonzero".into()));
    }
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!("Whittaker factors need Re s > 1, got s = {s}")));
    }
    let lp = (p as f64).ln();
    let np = p_adic_valuation(n, p) as f64;
    let pow = |e: Complex64| (e * lp).exp();
    Ok((1.0 - pow(-s)) * (1.0 - pow((np + 1.0) * (1.0 - s))) / (1.0 - pow(1.0 - s)))
}

/// `∏_{p ≤ bound} W^p_n(s)`, the truncated Euler product of the local factors.
pub fn euler_product_local(n: i64, s: Complex64, bound: u64) -> Result<Complex64> {
    primes_up_to(bound)
        .into_iter()
        .try_fold(Complex64::new(1.0, 0.0), |acc, p| Ok(acc * whittaker_p(p, n, s)?))
}

/// `ln W_n(y, s)` for the global factor
/// `W_n(y, s) = 2σ_{1-s}(|n|) |ny|^{(s-1)/2} K_{(s-1)/2}(2π|n|y) / ξ(s)`.
pub fn ln_whittaker_global(n: i64, y: f64, s: Complex64, prec: &Precision) -> Result<Complex64> {
    check_args(n, y, s)?;
    let abs_n = n.unsigned_abs() as f64;
    let order = (s - 1.0) / 2.0;
    Ok(2f64.ln() + divisor_power_sum(1.0 - s, n.abs())?.ln() + order * (abs_n * y).ln()
        + ln_bessel_k(order, 2.0 * PI * abs_n * y, prec)?
        - ln_xi(s, prec)?)
}

pub fn whittaker_global(n: i64, y: f64, s: Complex64, prec: &Precision) -> Result<Complex64> {
    Ok(ln_whittaker_global(n, y, s, prec)?.exp())
}

/// Upper bound for `ln |W_n(y, s)|` that only evaluates real-order Bessel
/// functions: `|K_{σ+iτ}| ≤ K_σ` and `|σ_{1-s}(n)| ≤ σ_{1-Re s}(n)`.
pub fn ln_whittaker_global_bound(n: i64, y: f64, s: Complex64, prec: &Precision) -> Result<f64> {
    check_args(n, y, s)?;
    let abs_n = n.unsigned_abs() as f64;
    let order = (s.re - 1.0) / 2.0;
    let sigma = divisor_power_sum(Complex64::new(1.0 - s.re, 0.0), n.abs())?.re;
    Ok(2f64.ln() + sigma.ln() + order * (abs_n * y).ln()
        + ln_bessel_k(Complex64::new(order, 0.0), 2.0 * PI * abs_n * y, prec)?.re
        - ln_xi(s, prec)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{bessel_k, xi, zeta};
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn local_factor_examples() {
        let w = whittaker_p(2, 2, c(3.0, 0.0)).unwrap();
        assert_relative_eq!(w.re, 1.093_75, max_relative = 1e-14);
        let s = c(2.5, 0.7);
        let w = whittaker_p(7, 6, s).unwrap();
        let expected = 1.0 - (-s * 7f64.ln()).exp();
        assert!((w - expected).norm() < 1e-15);
        assert!(whittaker_p(9, 6, s).is_err());
        assert!(whittaker_p(3, 6, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn local_factor_is_truncated_geometric_sum() {
        let s = c(2.3, -1.1);
        for (p, n) in [(2u64, 48i64), (3, 54), (5, -125)] {
            let np = p_adic_valuation(n, p);
            let lp = (p as f64).ln();
            let geo: Complex64 = (0..=np).map(|k| ((1.0 - s) * (k as f64) * lp).exp()).sum();
            let expected = (1.0 - (-s * lp).exp()) * geo;
            let w = whittaker_p(p, n, s).unwrap();
            assert!((w - expected).norm() < 1e-14 * expected.norm());
        }
    }

    #[test]
    fn global_closed_form_example() {
        let p = Precision::default();
        let s = c(3.0, 0.0);
        let w = whittaker_global(1, 1.0, s, &p).unwrap();
        let expected = 2.0 * bessel_k(c(1.0, 0.0), 2.0 * PI, &p).unwrap() / xi(s, &p).unwrap();
        assert!((w - expected).norm() < 1e-12 * expected.norm());
        let w_neg = whittaker_global(-1, 1.0, s, &p).unwrap();
        assert!((w - w_neg).norm() < 1e-15 * w.norm());
    }

    #[test]
    fn global_equals_archimedean_times_euler_product() {
        let p = Precision::default();
        for (n, y, s) in [(6i64, 0.5, c(2.5, 0.0)), (1, 0.3, c(3.0, 0.0)), (-12, 0.2, c(4.0, 1.5))] {
            let closed = whittaker_global(n, y, s, &p).unwrap();
            let product = whittaker_inf(n, y, s, &p).unwrap() * euler_product_local(n, s, 10_000).unwrap();
            assert!((closed - product).norm() < 1e-6 * closed.norm(), "{n} {y} {s}");
        }
    }

    #[test]
    fn euler_product_converges_to_divisor_sum_over_zeta() {
        let p = Precision::default();
        for n in [1i64, 6, 12] {
            for s in [c(2.5, 0.0), c(3.0, 0.0)] {
                let target = divisor_power_sum(1.0 - s, n).unwrap() / zeta(s, &p).unwrap();
                let errs: Vec<f64> = [100u64, 1000, 10_000]
                    .iter()
                    .map(|&b| (euler_product_local(n, s, b).unwrap() - target).norm())
                    .collect();
                assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
                assert!(errs[2] < 1e-5 * target.norm());
            }
        }
    }

    #[test]
    fn real_for_real_s_and_even_in_n() {
        let p = Precision::default();
        let w = whittaker_inf(3, 0.4, c(2.2, 0.0), &p).unwrap();
        assert!(w.im.abs() < 1e-14 * w.re.abs());
        let w2 = whittaker_inf(-3, 0.4, c(2.2, 0.0), &p).unwrap();
        assert_eq!(w, w2);
    }

    #[test]
    fn domain_checks() {
        let p = Precision::default();
        assert!(whittaker_inf(1, 1.0, c(1.0, 0.0), &p).is_err());
        assert!(whittaker_inf(0, 1.0, c(3.0, 0.0), &p).is_err());
        assert!(whittaker_global(1, 1.0, c(0.5, 2.0), &p).is_err());
        assert!(whittaker_global(1, -1.0, c(3.0, 0.0), &p).is_err());
    }

    #[test]
    fn bound_dominates_value() {
        let p = Precision::default();
        for s in [c(3.0, 0.0), c(3.0, 4.0), c(9.5, -20.0)] {
            let v = ln_whittaker_global(2, 1.3, s, &p).unwrap().re;
            let b = ln_whittaker_global_bound(2, 1.3, s, &p).unwrap();
            assert!(v <= b + 1e-12, "{s}: {v} > {b}");
        }
    }
}
