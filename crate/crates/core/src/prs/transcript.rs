use crate::error::{Error, Result};
use crate::padic::{Ball, Ring};
use crate::poly::BallPoly;

/// Record of one subresultant `R_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Step {
    pub j: usize,
    pub poly: BallPoly,
    /// Principal coefficient `r_j` (coefficient of `X^j`).
    pub r: Ball,
    /// Flat absolute precision of `R_j`: the smallest coefficient precision.
    pub n: i64,
    /// `V_j = val(r_j)`.
    pub v: i64,
    /// `W_j`: smallest coefficient valuation of `R_j`.
    pub w: i64,
    /// `delta_j = V_j - W_j`.
    pub delta: i64,
}

impl Step {
    pub fn new(j: usize, poly: BallPoly) -> Step {
        let r = poly.coeff(j).expect("R_j has j + 1 coefficients").clone();
        let n = poly.min_prec().unwrap();
        let v = r.valuation();
        let w = poly.coeffs().iter().map(|c| c.valuation()).min().unwrap();
        Step { j, poly, r, n, v, w, delta: v - w }
    }
}

/// Full record of one run of the subresultant sequence.
///
/// `steps` holds `R_{d-1}, R_{d-2}, ...` in computation order; on failure it
/// stops at the subresultant whose principal coefficient could not be used.
#[derive(Clone, Debug, PartialEq)]
pub struct SubresTranscript {
    pub ring: Ring,
    pub d: usize,
    /// Precision `N` of the inputs.
    pub input_prec: i64,
    pub steps: Vec<Step>,
    pub failure: Option<Error>,
    /// Largest absolute precision handled by the run (the lifted working
    /// precision for the stabilized algorithm).
    pub max_working_prec: i64,
}

impl SubresTranscript {
    pub fn is_complete(&self) -> bool {
        self.failure.is_none() && self.steps.len() == self.d
    }

    /// The record of `R_j`, if it was computed.
    pub fn step(&self, j: usize) -> Option<&Step> {
        (j < self.d).then(|| self.steps.get(self.d - 1 - j)).flatten()
    }

    /// `R_j` for `j = 0..d`, in increasing `j`.
    pub fn subresultants(&self) -> Result<Vec<BallPoly>> {
        self.check_complete()?;
        Ok(self.steps.iter().rev().map(|s| s.poly.clone()).collect())
    }

    /// `V_j` with the convention `V_d = 0`.
    pub fn v(&self, j: usize) -> Option<i64> {
        if j == self.d {
            return Some(0);
        }
        self.step(j).map(|s| s.v)
    }

    fn check_complete(&self) -> Result<()> {
        match &self.failure {
            Some(e) => Err(Error::IncompleteTranscript(e.to_string())),
            None if self.steps.len() < self.d => {
                Err(Error::IncompleteTranscript(format!("{} of {} steps", self.steps.len(), self.d)))
            }
            None => Ok(()),
        }
    }

    /// Observed loss `N - N_0`.
    pub fn loss(&self) -> Result<i64> {
        self.check_complete()?;
        Ok(self.input_prec - self.step(0).unwrap().n)
    }

    /// Upper bounds `N + V_{j+1} - 2 (delta_{j+1} + ... + delta_{d-1})` on `N_j`,
    /// indexed by `j = 0..d`.
    pub fn loss_bound(&self) -> Result<Vec<i64>> {
        self.check_complete()?;
        let mut out = vec![0; self.d];
        let mut tail = 0;
        for j in (0..self.d).rev() {
            out[j] = self.input_prec + self.v(j + 1).unwrap() - 2 * tail;
            tail += self.step(j).unwrap().delta;
        }
        Ok(out)
    }

    /// `-V_1 + 2 (delta_1 + ... + delta_{d-1})`: the loss `N - N_0` implied by the bound at `j = 0`.
    pub fn aggregate_loss_bound(&self) -> Result<i64> {
        Ok(self.input_prec - self.loss_bound()?[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_ball_poly;

    #[test]
    fn step_valuations() {
        let ring = Ring::new(2).unwrap();
        let s = Step::new(2, parse_ball_poly(ring, "5*X^2 + 20*X + O(2^5)").unwrap());
        assert_eq!((s.v, s.w, s.delta, s.n), (0, 0, 0, 5));
        let s = Step::new(1, parse_ball_poly(ring, "4*X + 2 + O(2^5)").unwrap());
        assert_eq!((s.v, s.w, s.delta), (2, 1, 1));
    }
}
