use num_complex::Complex64;
use thiserror::Error;

use crate::weyl::WeylElt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Cartan parameter m = {m} is not hyperbolic (need m >= 3)")]
    InvalidCartan { m: i64 },

    #[error("({c1}, {c2}) is not a real root")]
    NotRealRoot { c1: i128, c2: i128 },

    #[error("sequence index {index} is negative")]
    InvalidIndex { index: i64 },

    #[error("integer overflow while computing {what}")]
    Overflow { what: &'static str },

    #[error("pole at s = {}{:+}i", at.re, at.im)]
    Pole { at: Complex64 },

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("quadrature did not reach the requested accuracy (estimated relative error {achieved:e})")]
    Accuracy { achieved: f64 },

    #[error("invalid precision settings: {0}")]
    InvalidPrecision(String),

    #[error(
        "root ({}, {}) has -Re (nu+rho)(h) = {:.6} <= 1, outside the product's validity region",
        root[0], root[1], -pairing
    )]
    OutsideValidityRegion { root: [f64; 2], pairing: f64 },

    #[error("weight fails Godement's criterion: Re nu(h_1) = {p1}, Re nu(h_2) = {p2} (both must be < -2)")]
    GodementViolation { p1: f64, p2: f64 },

    #[error("torus point is outside the cone A': a^alpha_1 = {q1}, a^alpha_2 = {q2} (both must be < 1)")]
    NotInCone { q1: f64, q2: f64 },

    #[error("term for w = {w} overflows binary64")]
    TermOverflow { w: WeylElt },

    #[error("character index n = 0 is degenerate; use the constant term instead")]
    DegenerateCharacter,

    #[error("Re s = {re_s} is outside the proven region Re s < -2")]
    OutsideTheoremRegion { re_s: f64 },

    #[error("{w} is not a minimal coset representative (w alpha_1 < 0)")]
    NotInW1 { w: WeylElt },
}

impl Error {
    /// Stable machine-readable code used by the command-line reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidCartan { .. } => "invalid_cartan",
            Error::NotRealRoot { .. } => "not_real_root",
            Error::InvalidIndex { .. } => "invalid_index",
            Error::Overflow { .. } => "overflow",
            Error::Pole { .. } => "pole",
            Error::Domain(_) => "domain",
            Error::Accuracy { .. } => "accuracy",
            Error::InvalidPrecision(_) => "invalid_precision",
            Error::OutsideValidityRegion { .. } => "outside_validity_region",
            Error::GodementViolation { .. } => "godement_violation",
            Error::NotInCone { .. } => "not_in_cone",
            Error::TermOverflow { .. } => "term_overflow",
            Error::DegenerateCharacter => "degenerate_character",
            Error::OutsideTheoremRegion { .. } => "outside_theorem_region",
            Error::NotInW1 { .. } => "not_in_w1",
        }
    }
}
