use num_complex::Complex64;

use super::{check_max_length, term_from_log, truncated_sum, TruncatedSum};
use crate::error::{Error, Result};
use crate::rootsys::{CartanData, Simple, TorusPoint, Weight};
use crate::specfun::{ln_whittaker_global, ln_xi_ratio, Precision};
use crate::weyl::{WeylElt, WeylGroup};

fn root_f64(i: Simple) -> [f64; 2] {
    let r = i.root();
    [r.c1 as f64, r.c2 as f64]
}

/// `ln ξ(-x)/ξ(1-x)` with `x = λ(h_β)` for each root `β`; with `checked`
/// every `-Re x` must exceed 1.
fn ln_factors(cd: &CartanData, lambda: &Weight, roots: &[[f64; 2]], prec: &Precision, checked: bool) -> Result<Vec<Complex64>> {
    roots
        .iter()
        .map(|beta| {
            let x = cd.form(lambda, beta[0], beta[1]);
            if checked && !(-x.re > 1.0) {
                return Err(Error::OutsideValidityRegion {
                    root: *beta,
                    pairing: x.re,
                });
            }
            ln_xi_ratio(-x, prec)
        })
        .collect()
}

/// Logs of the individual factors `ξ(-x_β)/ξ(1-x_β)`, `x_β = (ν+ρ)(h_β)`, over
/// the inversion set of `w`, in inversion-set order.
pub fn xi_ratio_factors(cd: &CartanData, nu: &Weight, w: &WeylElt, prec: &Precision) -> Result<Vec<Complex64>> {
    prec.validate()?;
    let wg = WeylGroup::new(*cd, w.length());
    ln_factors(cd, &(*nu + cd.rho()), &wg.inversion_set_f64(w)?, prec, true)
}

fn ln_c(wg: &WeylGroup, nu_rho: &Weight, w: &WeylElt, prec: &Precision, checked: bool) -> Result<Complex64> {
    let roots = wg.inversion_set_f64(w)?;
    Ok(ln_factors(wg.cartan(), nu_rho, &roots, prec, checked)?.into_iter().sum())
}

/// `ln c(ν, w)` for the Gindikin-Karpelevich product
/// `c(ν, w) = ∏_{β ∈ Φ₊ ∩ w⁻¹Φ₋} ξ(-(ν+ρ)(h_β)) / ξ(1-(ν+ρ)(h_β))`.
pub fn ln_c_function(cd: &CartanData, nu: &Weight, w: &WeylElt, prec: &Precision) -> Result<Complex64> {
    prec.validate()?;
    let wg = WeylGroup::new(*cd, w.length());
    ln_c(&wg, &(*nu + cd.rho()), w, prec, true)
}

pub fn c_function(cd: &CartanData, nu: &Weight, w: &WeylElt, prec: &Precision) -> Result<Complex64> {
    Ok(ln_c_function(cd, nu, w, prec)?.exp())
}

/// Same product without the validity-region check, i.e. the meromorphic
/// continuation of each factor; only poles are rejected.
pub fn ln_c_function_unchecked(cd: &CartanData, nu: &Weight, w: &WeylElt, prec: &Precision) -> Result<Complex64> {
    prec.validate()?;
    let wg = WeylGroup::new(*cd, w.length());
    ln_c(&wg, &(*nu + cd.rho()), w, prec, false)
}

pub fn c_function_unchecked(cd: &CartanData, nu: &Weight, w: &WeylElt, prec: &Precision) -> Result<Complex64> {
    Ok(ln_c_function_unchecked(cd, nu, w, prec)?.exp())
}

/// `ln a^{w(ν+ρ)-ρ}`, using `w(ν+ρ)(h_i) = (ν+ρ)(h_{w⁻¹α_i})`.
pub(crate) fn ln_torus_term(wg: &WeylGroup, a: &TorusPoint, nu_rho: &Weight, w: &WeylElt) -> Result<Complex64> {
    let cd = wg.cartan();
    let winv = w.inverse();
    let mut log = Complex64::new(0.0, 0.0);
    for (i, x) in [(Simple::One, a.x1()), (Simple::Two, a.x2())] {
        let beta = wg.act_f64(&winv, root_f64(i))?;
        log += (cd.form(nu_rho, beta[0], beta[1]) - 1.0) * x.ln();
    }
    Ok(log)
}

fn ln_ct_term(wg: &WeylGroup, a: &TorusPoint, nu_rho: &Weight, w: &WeylElt, prec: &Precision, checked: bool) -> Result<Complex64> {
    Ok(ln_torus_term(wg, a, nu_rho, w)? + ln_c(wg, nu_rho, w, prec, checked)?)
}

fn sum_constant_term(cd: &CartanData, nu: &Weight, a: &TorusPoint, prec: &Precision, max_length: usize, checked: bool) -> Result<TruncatedSum> {
    let wg = WeylGroup::new(*cd, max_length);
    let nu_rho = *nu + cd.rho();
    truncated_sum(max_length, prec, |w| Ok(Some(ln_ct_term(&wg, a, &nu_rho, w, prec, checked)?)))
}

/// The single summand `a^{w(ν+ρ)-ρ} c(ν, w)` of the constant term.
pub fn constant_term_summand(cd: &CartanData, nu: &Weight, a: &TorusPoint, w: &WeylElt, prec: &Precision) -> Result<Complex64> {
    prec.validate()?;
    let wg = WeylGroup::new(*cd, w.length());
    term_from_log(w, ln_ct_term(&wg, a, &(*nu + cd.rho()), w, prec, true)?)
}

/// `E♯_ν(a) = Σ_w a^{w(ν+ρ)-ρ} c(ν, w)` truncated at Weyl length `max_length`.
/// Requires Godement's criterion and `a ∈ A'`.
pub fn constant_term(cd: &CartanData, nu: &Weight, a: &TorusPoint, prec: &Precision, max_length: usize) -> Result<TruncatedSum> {
    prec.validate()?;
    check_max_length(max_length)?;
    cd.require_godement(nu)?;
    cd.require_cone(a)?;
    sum_constant_term(cd, nu, a, prec, max_length, true)
}

/// The same sum for arbitrary `ν`, continuing the c-function factors
/// meromorphically. Used by the convergence explorer.
pub fn constant_term_unchecked(cd: &CartanData, nu: &Weight, a: &TorusPoint, prec: &Precision, max_length: usize) -> Result<TruncatedSum> {
    prec.validate()?;
    check_max_length(max_length)?;
    cd.require_cone(a)?;
    sum_constant_term(cd, nu, a, prec, max_length, false)
}

/// Degenerate Fourier coefficient `E_{ν,ψ_{i,n}}(a)`: the sum over `w` with
/// `w⁻¹α_i < 0` of `a^{w(ν+ρ)-ρ}` times the c-function product without the
/// root `-w⁻¹α_i`, times `W_n(a^{-α_i}, 1 + w(ν+ρ)(h_{α_i}))`.
pub fn fourier_coeff(
    cd: &CartanData,
    i: Simple,
    n: i64,
    nu: &Weight,
    a: &TorusPoint,
    prec: &Precision,
    max_length: usize,
) -> Result<TruncatedSum> {
    prec.validate()?;
    check_max_length(max_length)?;
    if n == 0 {
        return Err(Error::DegenerateCharacter);
    }
    cd.require_godement(nu)?;
    cd.require_cone(a)?;
    let wg = WeylGroup::new(*cd, max_length);
    let nu_rho = *nu + cd.rho();
    let y = cd.torus_eval(a, &(-i.root()).to_weight()).re;
    truncated_sum(max_length, prec, |w| ln_fourier_term(&wg, i, n, y, &nu_rho, a, w, prec))
}

#[allow(clippy::too_many_arguments)]
fn ln_fourier_term(
    wg: &WeylGroup,
    i: Simple,
    n: i64,
    y: f64,
    nu_rho: &Weight,
    a: &TorusPoint,
    w: &WeylElt,
    prec: &Precision,
) -> Result<Option<Complex64>> {
    let cd = wg.cartan();
    if !wg.inverse_makes_negative(w, i)? {
        return Ok(None);
    }
    let mut roots = wg.inversion_set_f64(w)?;
    let last = roots.pop().expect("w is not the identity");
    let winv_ai = wg.act_f64(&w.inverse(), root_f64(i))?;
    let scale = last[0].abs().max(last[1].abs());
    if (last[0] + winv_ai[0]).abs() > 1e-12 * scale || (last[1] + winv_ai[1]).abs() > 1e-12 * scale {
        return Err(Error::Domain(format!("inversion set of {w} does not end with -w^-1 alpha_i")));
    }
    let s = 1.0 + cd.form(nu_rho, winv_ai[0], winv_ai[1]);
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!("Whittaker argument s = {s} for {w} violates Re s > 1")));
    }
    let ln_xi: Complex64 = ln_factors(cd, nu_rho, &roots, prec, true)?.into_iter().sum();
    Ok(Some(ln_torus_term(wg, a, nu_rho, w)? + ln_xi + ln_whittaker_global(n, y, s, prec)?))
}

/// The summand of [`fourier_coeff`] for one `w`; `None` when `w⁻¹α_i > 0`.
#[allow(clippy::too_many_arguments)]
pub fn fourier_summand(
    cd: &CartanData,
    i: Simple,
    n: i64,
    nu: &Weight,
    a: &TorusPoint,
    w: &WeylElt,
    prec: &Precision,
) -> Result<Option<Complex64>> {
    prec.validate()?;
    if n == 0 {
        return Err(Error::DegenerateCharacter);
    }
    cd.require_godement(nu)?;
    let wg = WeylGroup::new(*cd, w.length());
    let y = cd.torus_eval(a, &(-i.root()).to_weight()).re;
    ln_fourier_term(&wg, i, n, y, &(*nu + cd.rho()), a, w, prec)?
        .map(|log| term_from_log(w, log))
        .transpose()
}

/// Fourier coefficient for a generic character (both `n₁, n₂ ≠ 0`), which
/// vanishes identically.
pub fn fourier_coeff_generic(n1: i64, n2: i64) -> Result<Complex64> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::Domain(format!(
            "character ({n1}, {n2}) is degenerate; use the degenerate coefficient or the constant term"
        )));
    }
    Ok(Complex64::new(0.0, 0.0))
}

/// Leading growth constants `(C_ν, D_ν)` of the exponents of the
/// `r₁(r₂r₁)ⁿ` and `(r₁r₂)ⁿ⁺¹` terms, from the real parts of `ν`:
/// `C_ν = (γs₂ - s₁ - γ/(γ-1))/(γ²-1)`, `D_ν = (γs₁ - s₂ - γ/(γ-1))/(γ²-1)`.
pub fn growth_constants(cd: &CartanData, nu: &Weight) -> (f64, f64) {
    let g = cd.gamma();
    let (s1, s2) = (nu.s1.re, nu.s2.re);
    let shift = g / (g - 1.0);
    let den = g * g - 1.0;
    ((g * s2 - s1 - shift) / den, (g * s1 - s2 - shift) / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::xi;
    use crate::weyl::Shape;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn setup() -> (CartanData, Weight, TorusPoint, Precision) {
        (
            CartanData::new(3).unwrap(),
            Weight::real(3.0, 3.0),
            TorusPoint::new(2.0, 2.0).unwrap(),
            Precision::default(),
        )
    }

    #[test]
    fn c_function_examples() {
        let (cd, nu, _, p) = setup();
        assert_eq!(c_function(&cd, &nu, &WeylElt::identity(), &p).unwrap(), c(1.0));
        let r1 = WeylElt::alternating(Simple::One, 1);
        let v = c_function(&cd, &nu, &r1, &p).unwrap();
        let expected = xi(c(2.0), &p).unwrap() / xi(c(3.0), &p).unwrap();
        assert!((v - expected).norm() < 1e-13 * expected.norm());
    }

    #[test]
    fn c_function_validity_region() {
        let (cd, _, _, p) = setup();
        let nu = Weight::from_pairings(&cd, c(-1.5), c(-3.0));
        let r1 = WeylElt::alternating(Simple::One, 1);
        match c_function(&cd, &nu, &r1, &p) {
            Err(Error::OutsideValidityRegion { root, .. }) => assert_eq!(root, [1.0, 0.0]),
            other => panic!("{other:?}"),
        }
        assert!(c_function_unchecked(&cd, &nu, &r1, &p).is_ok());
    }

    #[test]
    fn length_zero_truncation_is_identity_term() {
        let (cd, nu, a, p) = setup();
        let t = constant_term(&cd, &nu, &a, &p, 0).unwrap();
        assert_eq!(t.terms_used, 1);
        let expected = cd.torus_eval(&a, &nu);
        assert!((t.value - expected).norm() < 1e-14 * expected.norm());
    }

    #[test]
    fn constant_term_preconditions() {
        let (cd, nu, a, p) = setup();
        let bad_nu = Weight::from_pairings(&cd, c(-2.0), c(-3.0));
        assert!(matches!(constant_term(&cd, &bad_nu, &a, &p, 5), Err(Error::GodementViolation { .. })));
        let bad_a = TorusPoint::new(1.0, 1.0).unwrap();
        assert!(matches!(constant_term(&cd, &nu, &bad_a, &p, 5), Err(Error::NotInCone { .. })));
        assert!(constant_term(&cd, &nu, &a, &p, 201).is_err());
    }

    #[test]
    fn constant_term_converges_and_is_real() {
        let (cd, nu, a, p) = setup();
        let t = constant_term(&cd, &nu, &a, &p, 20).unwrap();
        assert!(t.converged, "{t:?}");
        assert_eq!(t.terms_used, 41);
        assert!(t.value.im.abs() < 1e-10 * t.value.norm());
    }

    #[test]
    fn fourier_contributors_start_with_r_i() {
        let (cd, nu, a, p) = setup();
        let t = fourier_coeff(&cd, Simple::One, 1, &nu, &a, &p, 9).unwrap();
        assert_eq!(t.terms_used, 9);
        assert_eq!(t.bands.first().unwrap().length, 1);
        let wg = WeylGroup::new(cd, 9);
        for w in crate::weyl::enumerate(9) {
            let contributes = wg.inverse_makes_negative(&w, Simple::One).unwrap();
            let shape_ok = matches!(w.shape(), Shape::R1Alt | Shape::Alt12);
            assert_eq!(contributes, shape_ok, "{w}");
        }
    }

    #[test]
    fn fourier_degenerate_and_generic() {
        let (cd, nu, a, p) = setup();
        assert_eq!(fourier_coeff(&cd, Simple::Two, 0, &nu, &a, &p, 4), Err(Error::DegenerateCharacter));
        assert_eq!(fourier_coeff_generic(1, -2).unwrap(), c(0.0));
        assert!(fourier_coeff_generic(0, 3).is_err());
    }

    #[test]
    fn growth_constants_positive_under_godement() {
        let (cd, nu, _, _) = setup();
        let (cn, dn) = growth_constants(&cd, &nu);
        assert!(cn > 0.0 && dn > 0.0);
    }
}
