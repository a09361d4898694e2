use num_complex::Complex64;

use super::eisenstein::ln_torus_term;
use super::{check_max_length, truncated_sum, TruncatedSum};
use crate::error::{Error, Result};
use crate::rootsys::{CartanData, TorusPoint, Weight};
use crate::specfun::{ln_xi_ratio, Precision};
use crate::weyl::{WeylElt, WeylGroup};

/// Bracketed growth constant of the `W₁` terms:
/// `C_n = γ^{2n} / ((m²-4)(γ+1)(γ-1)²) · [-s(mγ-2)(γ-1) - (m²-4)γ]`.
pub fn cuspidal_cn(cd: &CartanData, s: f64, n: i64) -> f64 {
    let g = cd.gamma();
    let m = cd.mf();
    let d = m * m - 4.0;
    let bracket = -s * (m * g - 2.0) * (g - 1.0) - d * g;
    g.powi(2 * n as i32) / (d * (g + 1.0) * (g - 1.0).powi(2)) * bracket
}

/// `-1 - 1/γ`: `C_n → +∞` exactly for `s` below this value.
pub fn srange_threshold(cd: &CartanData) -> f64 {
    -1.0 - 1.0 / cd.gamma()
}

/// `D = 2γ - m = √(m² - 4)`.
pub fn iwasawa_d(cd: &CartanData) -> f64 {
    2.0 * cd.gamma() - cd.mf()
}

/// `B_n ≥ D (2B_{n+1} - mB_n) / (m² - 4)`.
pub fn b_ratio_holds(cd: &CartanData, n: usize, d: f64) -> Result<bool> {
    let seq = crate::weyl::SeqCache::new(cd.m(), n + 2);
    let (b0, b1) = (seq.b_f64(n)?, seq.b_f64(n + 1)?);
    let m = cd.mf();
    Ok(b0 >= d * (2.0 * b1 - m * b0) / (m * m - 4.0))
}

/// Smallest `k ∈ ℕ`, `k ≥ 1`, with `d = kD > re_s - s0`; returns `(d, k)`.
/// Then `re_s - d < s0`.
pub fn shift_for_decay(re_s: f64, s0: f64, d_const: f64) -> Result<(f64, u64)> {
    if !(s0 < -2.0) {
        return Err(Error::Domain(format!("reference point s0 = {s0} must be < -2")));
    }
    if !(d_const > 0.0 && d_const.is_finite()) {
        return Err(Error::Domain(format!("constant D = {d_const} must be positive")));
    }
    let gap = re_s - s0;
    let mut k = ((gap / d_const).floor().max(0.0) as u64).max(1);
    while (k as f64) * d_const <= gap {
        k += 1;
    }
    Ok((k as f64 * d_const, k))
}

/// `Φ_w = Φ₊ ∩ wΦ₋`, the inversion set of `w⁻¹`, in binary64 coordinates.
pub fn iwasawa_phi_w(cd: &CartanData, w: &WeylElt) -> Result<Vec<[f64; 2]>> {
    WeylGroup::new(*cd, w.length()).inversion_set_f64(&w.inverse())
}

/// Outcome of the two Iwasawa inequalities for one `w ∈ W₁` and `a ∈ A'`.
#[derive(Debug, Clone, PartialEq)]
pub struct IwasawaCheck {
    /// `D` used for the root inequality.
    pub d: f64,
    /// `α₁(h_α) ≥ D ϖ₂(h_α)` for every `α ∈ Φ_w` (relative tolerance 1e-9).
    pub iwa2: bool,
    /// Smallest `α₁(h_α) - D ϖ₂(h_α)` over `Φ_w`, scaled by `max(1, ϖ₂(h_α))`.
    pub iwa2_min_margin: f64,
    /// The `D` in `(0, (m²-4)/(2γ-m))` for which `a^{w⁻¹α₁} ≥ a^{D w⁻¹ϖ₂}`,
    /// as a closed-or-open interval `(lo, hi)`; `None` if no such `D`.
    pub iwa1_interval: Option<(f64, f64)>,
}

impl IwasawaCheck {
    pub fn holds(&self) -> bool {
        self.iwa2 && self.iwa1_interval.is_some()
    }
}

/// Checks the root inequality over `Φ_w` with `D = 2γ - m` and searches the
/// admissible range of `D` for the torus inequality at `a`.
pub fn check_iwasawa_inequalities(cd: &CartanData, w: &WeylElt, a: &TorusPoint) -> Result<IwasawaCheck> {
    let wg = WeylGroup::new(*cd, w.length());
    if !wg.in_w1(w)? {
        return Err(Error::NotInW1 { w: *w });
    }
    cd.require_cone(a)?;
    let d = iwasawa_d(cd);
    let m = cd.mf();
    let mut iwa2 = true;
    let mut iwa2_min_margin = f64::INFINITY;
    for alpha in wg.inversion_set_f64(&w.inverse())? {
        let lhs = 2.0 * alpha[0] - m * alpha[1];
        let rhs = d * alpha[1];
        let scale = 1f64.max(lhs.abs()).max(rhs.abs());
        iwa2 &= lhs >= rhs - 1e-9 * scale;
        iwa2_min_margin = iwa2_min_margin.min((lhs - rhs) / 1f64.max(alpha[1]));
    }
    let winv = w.inverse();
    let a1 = wg.act_f64(&winv, [1.0, 0.0])?;
    let l1 = cd.torus_log(a, &Weight::real(a1[0], a1[1])).re;
    let l2 = cd.torus_log(a, &wg.act_weight(&winv, &cd.varpi2())?).re;
    let d_max = (m * m - 4.0) / d;
    let iwa1_interval = admissible_d(l1, l2, d_max);
    Ok(IwasawaCheck {
        d,
        iwa2,
        iwa2_min_margin,
        iwa1_interval,
    })
}

/// `{D ∈ (0, d_max) : l1 ≥ D·l2}`.
fn admissible_d(l1: f64, l2: f64, d_max: f64) -> Option<(f64, f64)> {
    let (lo, hi) = if l2 > 0.0 {
        (0.0, d_max.min(l1 / l2))
    } else if l2 < 0.0 {
        ((l1 / l2).max(0.0), d_max)
    } else if l1 >= 0.0 {
        (0.0, d_max)
    } else {
        return None;
    };
    (lo < hi).then_some((lo, hi))
}

fn sum_cuspidal(cd: &CartanData, s: Complex64, a: &TorusPoint, prec: &Precision, max_length: usize, checked: bool) -> Result<TruncatedSum> {
    let wg = WeylGroup::new(*cd, max_length);
    let nu_rho = cd.varpi2() * s + cd.rho();
    truncated_sum(max_length, prec, |w| {
        if !wg.in_w1(w)? {
            return Ok(None);
        }
        let mut log = ln_torus_term(&wg, a, &nu_rho, w)?;
        for beta in wg.inversion_set_f64(w)? {
            let x = cd.form(&nu_rho, beta[0], beta[1]);
            if checked && !(-x.re > 1.0) {
                return Err(Error::OutsideValidityRegion { root: beta, pairing: x.re });
            }
            log += ln_xi_ratio(-x, prec)?;
        }
        Ok(Some(log))
    })
}

/// `E♯_s(a) = Σ_{w ∈ W₁} a^{w(sϖ₂+ρ)-ρ} c(sϖ₂, w)` for `Re s < -2`.
pub fn cuspidal_constant_term(cd: &CartanData, s: Complex64, a: &TorusPoint, prec: &Precision, max_length: usize) -> Result<TruncatedSum> {
    prec.validate()?;
    check_max_length(max_length)?;
    if !(s.re < -2.0) {
        return Err(Error::OutsideTheoremRegion { re_s: s.re });
    }
    cd.require_cone(a)?;
    sum_cuspidal(cd, s, a, prec, max_length, true)
}

/// Evaluates the cuspidal sum for any `s`, returning an
/// [`Error::OutsideTheoremRegion`] warning alongside the value when
/// `Re s ≥ -2`; the c-function factors are then continued meromorphically.
pub fn cuspidal_constant_term_forced(
    cd: &CartanData,
    s: Complex64,
    a: &TorusPoint,
    prec: &Precision,
    max_length: usize,
) -> Result<(TruncatedSum, Option<Error>)> {
    prec.validate()?;
    check_max_length(max_length)?;
    cd.require_cone(a)?;
    let inside = s.re < -2.0;
    let sum = sum_cuspidal(cd, s, a, prec, max_length, inside)?;
    let warning = (!inside).then_some(Error::OutsideTheoremRegion { re_s: s.re });
    Ok((sum, warning))
}
