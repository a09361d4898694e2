use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

// B_{2k} / (2k(2k-1)), k = 1..10
const STIRLING: [f64; 10] = [
    0.083_333_333_333_333_33,
    -0.002_777_777_777_777_778,
    0.000_793_650_793_650_793_7,
    -0.000_595_238_095_238_095_3,
    0.000_841_750_841_750_841_7,
    -0.001_917_526_917_526_917_6,
    0.006_410_256_410_256_41,
    -0.029_550_653_594_771_242,
    0.179_644_372_368_830_57,
    -1.392_432_216_905_901_1,
];

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// `ln sin(πz)`, stable for large `|Im z|`. Defined up to multiples of `2πi`.
pub(crate) fn ln_sin_pi(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    if z.im.abs() < 20.0 {
        (z * PI).sin().ln()
    } else if z.im > 0.0 {
        // sin(πz) = (i/2) e^{-iπz} (1 - e^{2πiz})
        -i * PI * z + Complex64::new(0.0, 0.5).ln() + (1.0 - (i * 2.0 * PI * z).exp()).ln()
    } else {
        i * PI * z + Complex64::new(0.0, -0.5).ln() + (1.0 - (-i * 2.0 * PI * z).exp()).ln()
    }
}

/// `ln Γ(z)`, up to multiples of `2πi` in the imaginary part.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { at: z });
    }
    if z.re < 0.5 {
        // Γ(z) Γ(1 - z) = π / sin(πz)
        return Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma(1.0 - z)?);
    }
    let z = z - 1.0;
    let mut series = Complex64::new(LANCZOS[0], 0.0);
    for (k, &c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + series.ln())
}

pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(ln_gamma(z)?.exp())
}

fn stirling_tail(z: Complex64) -> Complex64 {
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in &STIRLING {
        acc += c * pow;
        pow *= inv2;
    }
    acc
}

fn ln_1p(w: Complex64) -> Complex64 {
    if w.norm() < 1e-4 {
        let w2 = w * w;
        w - w2 / 2.0 + w2 * w / 3.0 - w2 * w2 / 4.0 + w2 * w2 * w / 5.0
    } else {
        (1.0 + w).ln()
    }
}

/// `ln Γ(z) - ln Γ(z + ½)` without forming the two (possibly huge) logs
/// separately when `|z|` is large.
pub fn ln_gamma_ratio_half(z: Complex64) -> Result<Complex64> {
    if z.norm() < 20.0 || z.re <= 0.0 {
        return Ok(ln_gamma(z)? - ln_gamma(z + 0.5)?);
    }
    Ok(-0.5 * z.ln() - z * ln_1p(0.5 / z) + 0.5 + stirling_tail(z) - stirling_tail(z + 0.5))
}
