//! Monte Carlo experiments on random monic pairs: loss of precision, laws of
//! the valuations of principal subresultants, floats against intervals.
//!
//! Every experiment is deterministic in its configuration: trial `t` draws
//! from its own block range of the generator seeded with `seed` (see
//! [`runner::trial_rng`]), and results are aggregated in
//! trial order whatever the number of workers.

mod config;
mod float;
mod geometric;
mod law;
mod loss;
mod report;
mod residue;
pub mod runner;
mod sampling;
pub mod stats;

pub use config::{ExperimentConfig, ExperimentKind};
pub use float::{float_loss, run_float_compare, FloatOutcome};
pub use geometric::{sigma, GeometricModel};
pub use law::{oracle_valuations, run_deltaj, run_joint, run_maxvj, run_vj, Valuations, MAXVJ_ORACLE_DEGREE};
pub use loss::{euclid_loss, run_loss, REFERENCE_LOSS};
pub use report::{Check, Report, SummaryRow, Value};
pub use residue::{omega_counts, run_residue, vanishing_pattern, OmegaCount, EXHAUSTIVE_DEGREE};
pub use sampling::{random_monic, random_monic_pair};

use crate::error::Result;

/// Runs the experiment named by the configuration.
pub fn run(cfg: &ExperimentConfig) -> Result<Report> {
    match cfg.kind {
        ExperimentKind::Loss => run_loss(cfg),
        ExperimentKind::Vj => run_vj(cfg),
        ExperimentKind::Deltaj => run_deltaj(cfg),
        ExperimentKind::Residue => run_residue(cfg),
        ExperimentKind::Joint => run_joint(cfg),
        ExperimentKind::FloatCompare => run_float_compare(cfg),
        ExperimentKind::MaxVj => run_maxvj(cfg),
    }
}
