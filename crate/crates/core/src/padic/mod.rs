//! `p`-adic numbers at finite precision: balls (interval-style precision),
//! ultrametric floats and residue rings `Z / p^n Z`.

pub mod arith;
mod ball;
mod float;
mod ring;
mod text;
mod zmod;

pub use ball::Ball;
pub(crate) use ball::fmt_big_o;
pub(crate) use text::{parse_rational, split_big_o};
pub use float::PadicFloat;
pub use ring::{Ring, DEFAULT_PRECISION_CAP};
pub use zmod::{Zmod, ZmodRing};
