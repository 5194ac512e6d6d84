//! Dense univariate polynomials over exact integers, rationals, balls,
//! floats and residue rings.

mod coeff;
mod dense;
mod flat;
mod text;

pub use coeff::Coeff;
pub use dense::{BallPoly, ExactPoly, Poly, RationalPoly};
pub use flat::FlatPoly;
pub use text::{centers, parse_ball_poly, parse_exact_poly, parse_fixture, Fixture};
