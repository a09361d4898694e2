use num_complex::Complex64;

use super::cuspidal::cuspidal_constant_term_forced;
use super::eisenstein::constant_term_unchecked;
use super::TruncatedSum;
use crate::error::Result;
use crate::rootsys::{CartanData, TorusPoint, Weight};
use crate::specfun::Precision;

/// Number of trailing band ratios inspected by the classifier.
const TAIL_BANDS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScanPoint {
    /// Quasi-character `ν` of the full constant term.
    Nu(Weight),
    /// Parameter `s` of the cuspidal constant term.
    Cuspidal(Complex64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Decaying,
    Stalling,
    Growing,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Decaying => "Decaying",
            Verdict::Stalling => "Stalling",
            Verdict::Growing => "Growing",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub point: ScanPoint,
    pub a: TorusPoint,
    /// `(length cutoff, partial sum)` in increasing length.
    pub partial_sums: Vec<(usize, Complex64)>,
    /// Band magnitudes matching `partial_sums`.
    pub band_magnitudes: Vec<f64>,
    pub verdict: Verdict,
    /// Why the verdict was forced (evaluation error, region warning).
    pub note: Option<String>,
}

/// Geometric mean of the last few band ratios.
fn tail_trend(mags: &[f64]) -> f64 {
    let start = mags.len().saturating_sub(TAIL_BANDS + 1);
    let tail = &mags[start..];
    if tail.len() < 2 {
        return f64::NAN;
    }
    let mut log_sum = 0.0;
    for pair in tail.windows(2) {
        let r = match (pair[0], pair[1]) {
            (_, 0.0) => 0.0,
            (0.0, _) => f64::INFINITY,
            (a, b) => b / a,
        };
        log_sum += r.ln();
    }
    (log_sum / (tail.len() - 1) as f64).exp()
}

fn classify(sum: &TruncatedSum) -> Verdict {
    if sum.converged {
        return Verdict::Decaying;
    }
    let mags: Vec<f64> = sum.bands.iter().map(|b| b.magnitude).collect();
    let trend = tail_trend(&mags);
    if trend < 0.95 {
        Verdict::Decaying
    } else if trend > 1.05 {
        Verdict::Growing
    } else {
        Verdict::Stalling
    }
}

/// Empirical classification of the length-band tail at each grid point.
/// Godement's criterion and the cuspidal region are not enforced; any
/// evaluation failure (overflow, pole) is reported as `Growing` with a note.
pub fn scan_convergence(
    cd: &CartanData,
    grid: &[ScanPoint],
    a: &TorusPoint,
    prec: &Precision,
    max_length: usize,
) -> Result<Vec<ConvergenceReport>> {
    prec.validate()?;
    super::check_max_length(max_length)?;
    cd.require_cone(a)?;
    Ok(grid
        .iter()
        .map(|point| {
            let evaluated = match point {
                ScanPoint::Nu(nu) => constant_term_unchecked(cd, nu, a, prec, max_length).map(|s| (s, None)),
                ScanPoint::Cuspidal(s) => cuspidal_constant_term_forced(cd, *s, a, prec, max_length)
                    .map(|(sum, w)| (sum, w.map(|e| e.to_string()))),
            };
            match evaluated {
                Ok((sum, note)) => ConvergenceReport {
                    point: *point,
                    a: *a,
                    partial_sums: sum.bands.iter().map(|b| (b.length, b.partial_sum)).collect(),
                    band_magnitudes: sum.bands.iter().map(|b| b.magnitude).collect(),
                    verdict: classify(&sum),
                    note,
                },
                Err(e) => ConvergenceReport {
                    point: *point,
                    a: *a,
                    partial_sums: Vec::new(),
                    band_magnitudes: Vec::new(),
                    verdict: Verdict::Growing,
                    note: Some(e.to_string()),
                },
            }
        })
        .collect())
}
