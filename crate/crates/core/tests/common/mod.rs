//! Independent reference computations used by the integration tests.
//! Nothing here calls the library's special functions or closed forms.

#![allow(dead_code)]

use std::f64::consts::PI;

/// `B₀ = 0, B₁ = 1, B_{k+1} = m B_k - B_{k-1}`.
pub fn b_seq(m: i128, len: usize) -> Vec<i128> {
    let mut b = vec![0i128, 1];
    while b.len() < len {
        let k = b.len();
        b.push(m * b[k - 1] - b[k - 2]);
    }
    b.truncate(len);
    b
}

pub fn gamma_of(m: f64) -> f64 {
    (m + (m * m - 4.0).sqrt()) / 2.0
}

/// `K_ν(y) = ∫₀^∞ e^{-y cosh t} cosh(νt) dt` by composite Simpson on `[0, T]`.
pub fn bessel_k_simpson(order: f64, y: f64) -> f64 {
    // integrand below 1e-300 beyond T
    let t_max = ((700.0 + order.abs() * 40.0) / y).acosh().max(1.0);
    let n = 20_000;
    let h = t_max / n as f64;
    let f = |t: f64| (-y * t.cosh()).exp() * (order * t).cosh();
    let mut acc = f(0.0) + f(t_max);
    for k in 1..n {
        acc += f(k as f64 * h) * if k % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0
}

/// Trapezoid rule in `u = ln t` for `∫₀^∞ g(t) dt` with `g` decaying
/// exponentially at both ends in `u`.
fn log_trapezoid(g: impl Fn(f64) -> f64) -> f64 {
    let (lo, hi, h) = (-60.0, 8.0, 1.0 / 64.0);
    let steps = ((hi - lo) / h) as usize;
    (0..=steps)
        .map(|k| {
            let t = (lo + k as f64 * h).exp();
            g(t) * t
        })
        .sum::<f64>()
        * h
}

/// `Γ(x)` for real `x > 0` by quadrature of Euler's integral.
pub fn gamma_quad(x: f64) -> f64 {
    log_trapezoid(|t| t.powf(x - 1.0) * (-t).exp())
}

/// `∫_ℝ (1 + x²)^{-s/2} e^{-2πi n y x} dx`, evaluated by writing
/// `(1+x²)^{-σ} = Γ(σ)⁻¹ ∫₀^∞ t^{σ-1} e^{-t(1+x²)} dt` and doing the Gaussian
/// integral in `x`, which leaves a smooth positive integral in `t`.
pub fn whittaker_inf_quad(n: i64, y: f64, s: f64) -> f64 {
    let sigma = s / 2.0;
    let xi = (n.unsigned_abs() as f64) * y;
    let c = PI * PI * xi * xi;
    let inner = log_trapezoid(|t| t.powf(sigma - 1.5) * (-t - c / t).exp());
    PI.sqrt() * inner / gamma_quad(sigma)
}

pub fn sieve(bound: usize) -> Vec<u64> {
    let mut composite = vec![false; bound + 1];
    let mut primes = Vec::new();
    for k in 2..=bound {
        if !composite[k] {
            primes.push(k as u64);
            let mut j = k * k;
            while j <= bound {
                composite[j] = true;
                j += k;
            }
        }
    }
    primes
}

/// `ζ(s)` for real `s > 1`: direct sum to `N` plus an Euler-Maclaurin tail.
pub fn zeta_real(s: f64) -> f64 {
    let n = 1000.0f64;
    let head: f64 = (1..1000).map(|k| (k as f64).powf(-s)).sum();
    head + n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s) + s * n.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * n.powf(-s - 3.0) / 720.0
}

/// `σ_k(n) = Σ_{d | n} d^k` by trial division.
pub fn sigma_real(k: f64, n: u64) -> f64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| (d as f64).powf(k)).sum()
}

/// `∏_{p ≤ bound} (1-p^{-s})(1-p^{(v_p(n)+1)(1-s)})/(1-p^{1-s})` over sieved primes.
pub fn euler_product(n: u64, s: f64, bound: usize) -> f64 {
    sieve(bound)
        .into_iter()
        .map(|p| {
            let mut v = 0;
            let mut r = n;
            while r.is_multiple_of(p) {
                r /= p;
                v += 1;
            }
            let p = p as f64;
            (1.0 - p.powf(-s)) * (1.0 - p.powf((v as f64 + 1.0) * (1.0 - s))) / (1.0 - p.powf(1.0 - s))
        })
        .product()
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
