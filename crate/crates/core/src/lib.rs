//! Eisenstein series on rank 2 hyperbolic Kac-Moody groups with Cartan
//! matrix `[[2, -m], [-m, 2]]`, `m ≥ 3`: root data and the infinite dihedral
//! Weyl group, the special functions entering the c-function and Whittaker
//! factors, and truncated evaluation of the constant term, the degenerate
//! Fourier coefficients and the cuspidal constant term.

// negated comparisons reject NaN along with out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod rootsys;
pub mod series;
pub mod specfun;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{CartanData, RootVec, Simple, TorusPoint, Weight};
pub use specfun::Precision;
pub use series::TruncatedSum;
pub use weyl::{Shape, WeylElt, WeylGroup};

/// Largest supported Weyl-length cutoff.
pub const MAX_LENGTH: usize = 200;
