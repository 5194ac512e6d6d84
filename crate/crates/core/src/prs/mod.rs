//! Precision-tracked gcd and subresultant algorithms over balls.

mod euclid;
mod jacobian;
mod normal;
mod stable;
mod transcript;

pub use euclid::{extended_euclid, EuclidResult, EuclidStep};
pub use jacobian::{
    elementary_divisor_valuations, jacobian_lattice_check, subresultant_jacobian, DiagonalLattice, JacobianReport,
};
pub use normal::{prs_ball, prs_ball_from, prs_flat, prs_generic, Recurrence};
pub use stable::{stabilized_prs, Lift, StableOptions};
pub use transcript::{Step, SubresTranscript};
