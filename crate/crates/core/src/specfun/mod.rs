//! Scalar special functions: Gamma, Riemann zeta and its completion, the
//! Macdonald K-Bessel function, divisor power sums and the local and global
//! Whittaker factors of `SL₂`.
//!
//! Everything is binary64 complex arithmetic. Functions that can overflow
//! for large arguments come with a logarithmic twin (`ln_*`) used by the
//! series evaluators.

mod arith;
mod bessel;
mod gamma;
mod whittaker;
mod zeta;

pub use arith::{divisor_power_sum, divisors, is_prime, p_adic_valuation, primes_up_to};
pub use bessel::{bessel_k, bessel_k_levels, ln_bessel_k};
pub use gamma::{gamma, ln_gamma, ln_gamma_ratio_half};
pub use whittaker::{
    euler_product_local, ln_whittaker_global, ln_whittaker_global_bound, whittaker_global,
    whittaker_inf, whittaker_p,
};
pub use zeta::{ln_xi, ln_xi_ratio, xi, zeta};

use crate::error::{Error, Result};

/// Accuracy controls shared by the numerical routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precision {
    /// Target relative accuracy.
    pub rel_tol: f64,
    /// Maximum number of step halvings in the Bessel quadrature.
    pub quad_levels: u32,
    /// Direct-sum cutoff `N` in Euler-Maclaurin.
    pub euler_maclaurin_n: u32,
    /// Number of Bernoulli correction terms `M` in Euler-Maclaurin (at most 20).
    pub euler_maclaurin_m: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            rel_tol: 1e-10,
            quad_levels: 12,
            euler_maclaurin_n: 40,
            euler_maclaurin_m: 20,
        }
    }
}

impl Precision {
    pub fn with_rel_tol(rel_tol: f64) -> Result<Self> {
        let p = Precision {
            rel_tol,
            ..Precision::default()
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-3) {
            return Err(Error::InvalidPrecision(format!(
                "rel_tol must lie in (0, 1e-3], got {}",
                self.rel_tol
            )));
        }
        if self.quad_levels == 0 || self.euler_maclaurin_n == 0 || self.euler_maclaurin_m == 0 {
            return Err(Error::InvalidPrecision(
                "quadrature levels and Euler-Maclaurin counters must be positive".into(),
            ));
        }
        if self.euler_maclaurin_m as usize > zeta::MAX_EM_TERMS {
            return Err(Error::InvalidPrecision(format!(
                "at most {} Euler-Maclaurin correction terms are tabulated",
                zeta::MAX_EM_TERMS
            )));
        }
        Ok(())
    }
}
