//! Exact invariants of cyclic covers of the projective line.
//!
//! Given `n` branch points, a cover degree `d` and a character index `k`,
//! this crate computes the eigen-Hodge numbers of the cover, the eigenspectra
//! of the plane-curve singularities `y^d + x^l` that appear when branch points
//! collide, which boundary divisors of `M̄_{0,n}` carry finite local
//! monodromy, GIT stability of weighted point configurations, and the
//! codimension `H(n, d, k)` of the non-pure image inside the GIT quotient.
//! All arithmetic is exact.

pub mod boundary;
pub mod cover;
pub mod dmtable;
pub mod error;
pub mod exact;
pub mod git;
pub mod lmhs;
pub mod spectra;

pub use cover::{CoverData, EigenHodgeNumbers, Regime};
pub use error::{Error, ParseError, Result};
pub use exact::{EpsRational, Rational};
