use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::padic::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExperimentKind {
    /// Flat-model loss of precision against twice the valuation of the resultant.
    Loss,
    /// Law of `V_j` against the `Y_j` sampler and the closed forms.
    Vj,
    /// Lower bound on `P[delta_j >= m]`.
    Deltaj,
    /// Vanishing of the principal subresultants over the residue field.
    Residue,
    /// Joint law of `(V_{d-1}, V_{d-2})`.
    Joint,
    /// Ultrametric floats against flat precision tracking.
    FloatCompare,
    /// Growth of `E[max_j V_j]`.
    MaxVj,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 7] = [
        ExperimentKind::Loss,
        ExperimentKind::Vj,
        ExperimentKind::Deltaj,
        ExperimentKind::Residue,
        ExperimentKind::Joint,
        ExperimentKind::FloatCompare,
        ExperimentKind::MaxVj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::Loss => "loss",
            ExperimentKind::Vj => "vj",
            ExperimentKind::Deltaj => "deltaj",
            ExperimentKind::Residue => "residue",
            ExperimentKind::Joint => "joint",
            ExperimentKind::FloatCompare => "float-compare",
            ExperimentKind::MaxVj => "maxvj",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExperimentKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown experiment {s:?}")))
    }
}

/// Parameters of one experiment run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub p: u64,
    pub degrees: Vec<usize>,
    /// Input precision `N`.
    pub prec: i64,
    pub trials: usize,
    pub seed: u64,
    /// Largest `m` for [`ExperimentKind::Deltaj`].
    pub m_max: u32,
}

impl ExperimentConfig {
    /// Defaults of the reference runs.
    pub fn new(kind: ExperimentKind) -> ExperimentConfig {
        let (degrees, prec, trials) = match kind {
            ExperimentKind::Loss => (vec![5, 10, 25, 50], 128, 1000),
            ExperimentKind::Vj | ExperimentKind::Deltaj | ExperimentKind::Residue | ExperimentKind::Joint => {
                (vec![6], 32, 100_000)
            }
            ExperimentKind::FloatCompare => (vec![10, 50], 32, 500),
            ExperimentKind::MaxVj => (vec![1, 2, 4, 8, 16, 32, 64], 32, 10_000),
        };
        ExperimentConfig { kind, p: 2, degrees, prec, trials, seed: 1, m_max: 4 }
    }

    /// q, the size of the residue field.
    pub fn q(&self) -> u64 {
        self.p
    }

    pub fn validate(&self) -> Result<Ring> {
        let ring = Ring::new(self.p)?;
        if self.trials == 0 {
            return Err(Error::InvalidInput("trials must be at least 1".into()));
        }
        if self.degrees.is_empty() || self.degrees.contains(&0) {
            return Err(Error::InvalidInput("degrees must be a nonempty list of positive integers".into()));
        }
        if self.prec < 2 {
            return Err(Error::InvalidInput("precision must be at least 2".into()));
        }
        if self.kind == ExperimentKind::Joint && self.degrees.iter().any(|&d| d < 2) {
            return Err(Error::InvalidInput("the joint law needs d >= 2".into()));
        }
        if self.kind == ExperimentKind::MaxVj && self.degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("degrees must be increasing".into()));
        }
        Ok(ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in ExperimentKind::ALL {
            assert_eq!(k.name().parse::<ExperimentKind>().unwrap(), k);
        }
        assert!("nope".parse::<ExperimentKind>().is_err());
    }

    #[test]
    fn validation() {
        let mut c = ExperimentConfig::new(ExperimentKind::Loss);
        assert!(c.validate().is_ok());
        c.trials = 0;
        assert!(c.validate().is_err());
        c.trials = 1;
        c.p = 4;
        assert_eq!(c.validate(), Err(Error::NotPrime(4)));
    }
}
