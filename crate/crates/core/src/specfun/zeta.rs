use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::{ln_gamma, ln_gamma_ratio_half, ln_sin_pi};
use super::Precision;
use crate::error::{Error, Result};

pub(crate) const MAX_EM_TERMS: usize = 20;

// B_{2k} / (2k)!, k = 1..20
const EM_COEFFS: [f64; MAX_EM_TERMS] = [
    0.083_333_333_333_333_33,
    -0.001_388_888_888_888_889,
    3.306_878_306_878_307e-5,
    -8.267_195_767_195_768e-7,
    2.087_675_698_786_81e-8,
    -5.284_190_138_687_493e-10,
    1.338_253_653_068_467_9e-11,
    -3.389_680_296_322_582_7e-13,
    8.586_062_056_277_845e-15,
    -2.174_868_698_558_062e-16,
    5.509_002_828_360_229_5e-18,
    -1.395_446_468_581_252_2e-19,
    3.534_707_039_629_467e-21,
    -8.953_517_427_037_546e-23,
    2.267_952_452_337_683e-24,
    -5.744_790_668_872_202e-26,
    1.455_172_475_614_865e-27,
    -3.685_994_940_665_310_3e-29,
    9.336_734_257_095_045e-31,
    -2.365_022_415_700_63e-32,
];

fn pow_neg(n: f64, s: Complex64) -> Complex64 {
    (-s * n.ln()).exp()
}

fn euler_maclaurin(s: Complex64, prec: &Precision) -> Complex64 {
    let n_cut = prec.euler_maclaurin_n as usize;
    let nf = n_cut as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n_cut {
        sum += pow_neg(k as f64, s);
    }
    let n_pow = pow_neg(nf, s);
    sum += n_pow * nf / (s - 1.0) + n_pow * 0.5;
    // T_k = B_{2k}/(2k)! · N^{-s} · s(s+1)…(s+2k-2) / N^{2k-1}
    let mut poch = s / nf;
    for (k, &c) in EM_COEFFS
        .iter()
        .enumerate()
        .take(prec.euler_maclaurin_m as usize)
    {
        sum += n_pow * poch * c;
        let j = (2 * k + 1) as f64;
        poch = poch * (s + j) * (s + j + 1.0) / (nf * nf);
    }
    sum
}

/// Riemann zeta function for `s ≠ 1`.
pub fn zeta(s: Complex64, prec: &Precision) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole { at: s });
    }
    if s.re > 60.0 {
        // remainder below 40^{-59}
        let mut sum = Complex64::new(1.0, 0.0);
        for k in 2..=40 {
            sum += pow_neg(k as f64, s);
        }
        return Ok(sum);
    }
    if is_negative_even_integer(s) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if s.re < 0.0 {
        // the Euler-Maclaurin terms grow like N^{-Re s} and cancel badly here
        // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
        let log = s * 2f64.ln() + (s - 1.0) * PI.ln() + ln_sin_pi(s / 2.0) + ln_gamma(1.0 - s)?;
        return Ok(log.exp() * zeta(1.0 - s, prec)?);
    }
    Ok(euler_maclaurin(s, prec))
}

fn is_negative_even_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re < 0.0 && s.re.fract() == 0.0 && (s.re / 2.0).fract() == 0.0
}

fn xi_direct(s: Complex64, prec: &Precision) -> Result<Complex64> {
    Ok((-s / 2.0 * PI.ln() + ln_gamma(s / 2.0)?).exp() * zeta(s, prec)?)
}

/// Completed zeta `ξ(s) = π^{-s/2} Γ(s/2) ζ(s)`, `s ∉ {0, 1}`.
///
/// At the removable singularities `s = -2, -4, …` (Gamma pole against a
/// trivial zero) the value is the mean over a small circle around `s`.
pub fn xi(s: Complex64, prec: &Precision) -> Result<Complex64> {
    if s == Complex64::new(0.0, 0.0) || s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole { at: s });
    }
    if is_negative_even_integer(s) {
        const POINTS: usize = 16;
        const RADIUS: f64 = 0.25;
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..POINTS {
            let theta = 2.0 * PI * (j as f64 + 0.5) / POINTS as f64;
            acc += xi_direct(s + Complex64::from_polar(RADIUS, theta), prec)?;
        }
        return Ok(acc / POINTS as f64);
    }
    xi_direct(s, prec)
}

/// `ln ξ(s)` (imaginary part modulo `2π`). Uses `ξ(s) = ξ(1 - s)` to move
/// into `Re s ≥ ½`, where every factor stays representable in log form.
pub fn ln_xi(s: Complex64, prec: &Precision) -> Result<Complex64> {
    if s == Complex64::new(0.0, 0.0) || s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole { at: s });
    }
    let s = if s.re < 0.5 { 1.0 - s } else { s };
    Ok(-s / 2.0 * PI.ln() + ln_gamma(s / 2.0)? + zeta(s, prec)?.ln())
}

/// `ln(ξ(u) / ξ(u + 1))`, the logarithm of one Gindikin-Karpelevich factor
/// `ξ(-x)/ξ(1-x)` at `u = -x`.
pub fn ln_xi_ratio(u: Complex64, prec: &Precision) -> Result<Complex64> {
    for pole in [-1.0, 0.0, 1.0] {
        if u == Complex64::new(pole, 0.0) {
            return Err(Error::Pole { at: u });
        }
    }
    if u.re < -0.5 {
        // ξ(u)/ξ(u+1) = ξ(1-u)/ξ(-u)
        return Ok(-ln_xi_ratio(-u, prec)?);
    }
    if u.re < 0.5 {
        return Ok(xi(u, prec)?.ln() - xi(u + 1.0, prec)?.ln());
    }
    Ok(0.5 * PI.ln() + ln_gamma_ratio_half(u / 2.0)? + zeta(u, prec)?.ln()
        - zeta(u + 1.0, prec)?.ln())
}
