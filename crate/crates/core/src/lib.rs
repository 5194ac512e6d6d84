//! Precision-tracked arithmetic over the `p`-adic integers and subresultant
//! computations on top of it.
//!
//! * [`padic`]: balls `c + O(p^N)`, ultrametric floats, `Z / p^n Z`.
//! * [`poly`]: dense univariate polynomials over any of those coefficient types.
//! * [`oracle`]: exact subresultants from Sylvester minors and from the
//!   subresultant pseudo-remainder sequence, used as ground truth.
//! * [`prs`]: extended Euclid, the subresultant sequence over balls and over
//!   flat precision, and the stabilized variant that lifts before each step.
//! * [`experiments`]: Monte Carlo drivers and closed forms for valuation laws.

pub mod error;
pub mod experiments;
pub mod padic;
pub mod oracle;
pub mod poly;
pub mod prs;

pub use error::{Error, Result};
