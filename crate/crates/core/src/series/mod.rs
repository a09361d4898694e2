//! Truncated Weyl-group sums: the constant term, the degenerate Fourier
//! coefficients and the cuspidal constant term, plus a convergence explorer.
//!
//! Every sum is accumulated in canonical order (length, then shape) and
//! grouped into length bands; convergence is judged on the last two bands.

mod cuspidal;
mod eisenstein;
mod scan;

pub use cuspidal::{
    check_iwasawa_inequalities, cuspidal_cn, cuspidal_constant_term, cuspidal_constant_term_forced,
    b_ratio_holds, iwasawa_phi_w, iwasawa_d, shift_for_decay, srange_threshold, IwasawaCheck,
};
pub use eisenstein::{
    c_function, c_function_unchecked, constant_term, constant_term_summand, constant_term_unchecked,
    fourier_coeff, fourier_coeff_generic, fourier_summand, growth_constants, ln_c_function, ln_c_function_unchecked, xi_ratio_factors,
};
pub use scan::{scan_convergence, ConvergenceReport, ScanPoint, Verdict};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::Precision;
use crate::weyl::{enumerate, WeylElt};

/// Terms with `Re ln|term|` below this underflow to zero in binary64.
const LN_UNDERFLOW: f64 = -745.0;
/// Terms with `Re ln|term|` above this overflow.
const LN_OVERFLOW: f64 = 709.0;

/// Contribution of all included Weyl elements of one length.
#[derive(Debug, Clone, PartialEq)]
pub struct Band {
    pub length: usize,
    /// `Σ |term|` over the band.
    pub magnitude: f64,
    /// Accumulated value after this band.
    pub partial_sum: Complex64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSum {
    pub value: Complex64,
    pub terms_used: usize,
    pub max_length: usize,
    /// Magnitude of the last band.
    pub last_term_mag: f64,
    /// Ratio of the last two band magnitudes.
    pub tail_ratio: f64,
    pub converged: bool,
    pub bands: Vec<Band>,
}

impl TruncatedSum {
    /// `rel_tol · |value|`.
    pub fn abs_tol(&self, prec: &Precision) -> f64 {
        prec.rel_tol * self.value.norm()
    }
}

fn band_ratio(prev: f64, last: f64) -> f64 {
    if last == 0.0 {
        0.0
    } else if prev == 0.0 {
        f64::INFINITY
    } else {
        last / prev
    }
}

/// Turns a log-space term into a value, mapping underflow to zero.
fn term_from_log(w: &WeylElt, log: Complex64) -> Result<Complex64> {
    if log.re.is_nan() || log.im.is_nan() || log.re > LN_OVERFLOW {
        return Err(Error::TermOverflow { w: *w });
    }
    if log.re < LN_UNDERFLOW {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(log.exp())
}

/// Sums `term(w)` over all `w` of length `≤ max_length` for which `term`
/// returns `Some(log)`, in canonical order.
fn truncated_sum<F>(max_length: usize, prec: &Precision, mut ln_term: F) -> Result<TruncatedSum>
where
    F: FnMut(&WeylElt) -> Result<Option<Complex64>>,
{
    let mut value = Complex64::new(0.0, 0.0);
    let mut terms_used = 0;
    let mut bands: Vec<Band> = Vec::new();
    let elts = enumerate(max_length);
    let mut idx = 0;
    for length in 0..=max_length {
        let mut magnitude = 0.0;
        let mut included = false;
        while idx < elts.len() && elts[idx].length() == length {
            let w = elts[idx];
            idx += 1;
            if let Some(log) = ln_term(&w)? {
                let t = term_from_log(&w, log)?;
                value += t;
                magnitude += t.norm();
                terms_used += 1;
                included = true;
            }
        }
        if included {
            bands.push(Band {
                length,
                magnitude,
                partial_sum: value,
            });
        }
    }
    let (last_term_mag, tail_ratio) = match bands.as_slice() {
        [.., p, l] => (l.magnitude, band_ratio(p.magnitude, l.magnitude)),
        [l] => (l.magnitude, f64::INFINITY),
        [] => (0.0, f64::INFINITY),
    };
    let abs_tol = prec.rel_tol * value.norm();
    let converged = match bands.as_slice() {
        [.., p, l] => p.magnitude < abs_tol && l.magnitude < abs_tol && tail_ratio < 1.0,
        _ => false,
    };
    Ok(TruncatedSum {
        value,
        terms_used,
        max_length,
        last_term_mag,
        tail_ratio,
        converged,
        bands,
    })
}

pub(crate) fn check_max_length(max_length: usize) -> Result<()> {
    if max_length > crate::MAX_LENGTH {
        return Err(Error::Domain(format!(
            "max_length {max_length} exceeds the supported bound {}",
            crate::MAX_LENGTH
        )));
    }
    Ok(())
}
