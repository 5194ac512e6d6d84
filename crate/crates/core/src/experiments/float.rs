use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::Result;
use crate::experiments::config::{ExperimentConfig, ExperimentKind};
use crate::experiments::loss::flat_run;
use crate::experiments::report::{Check, Report, SummaryRow};
use crate::experiments::runner::run_trials;
use crate::experiments::sampling::random_monic_pair;
use crate::experiments::stats::{linear_fit, Summary};
use crate::oracle::{max_digits, resultant_mod_pk};
use crate::padic::arith::{int_valuation, pow_p};
use crate::padic::{PadicFloat, Ring};
use crate::poly::{ExactPoly, Poly};
use crate::prs::{prs_generic, Recurrence};

/// Float loss at the larger degree must stay below this share of the interval loss.
pub const FLOAT_SHARE: f64 = 0.25;
/// Bound on the growth of the float loss between the two degrees.
pub const FLOAT_GROWTH: f64 = 2.0;
/// Expected growth of the interval loss from degree 10 to 50, and its tolerance.
pub const INTERVAL_GROWTH: f64 = 5.0;
pub const INTERVAL_GROWTH_TOLERANCE: f64 = 0.25;

/// Outcome of the float run on one pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FloatOutcome {
    /// Digits lost: `N` minus the leading digits agreeing with the exact resultant.
    Loss(i64),
    /// The float resultant has the wrong valuation.
    ValuationMismatch,
    /// Some float `R_j` lost its leading term (exact cancellation).
    Degenerate,
    /// The exact resultant is not known to enough digits for the comparison.
    Censored,
}

/// Digits lost by the normal recurrence in ultrametric floats with `prec`
/// digits, against the exact resultant of the same integer pair.
pub fn float_loss(ring: Ring, prec: u32, a: &ExactPoly, b: &ExactPoly, form: Recurrence) -> FloatOutcome {
    let p = ring.p();
    let k = max_digits(p);
    let exact = resultant_mod_pk(a, b, p, k);
    let Some(v) = exact.valuation else {
        return FloatOutcome::Censored;
    };
    if v + prec as i64 > k as i64 {
        return FloatOutcome::Censored;
    }
    let to_float = |x: &ExactPoly| -> Poly<PadicFloat> { x.map(|c| PadicFloat::from_int(ring, prec, c.clone())) };
    let Ok(seq) = prs_generic(&to_float(a), &to_float(b), form) else {
        return FloatOutcome::Degenerate;
    };
    let res = seq.last().unwrap().coeff(0).unwrap();
    if res.exponent() != Some(v) {
        return FloatOutcome::ValuationMismatch;
    }
    let modulus = pow_p(p, k as u64);
    let value = pow_p(p, v as u64) * res.significand().unwrap();
    let diff: BigInt = (value - &exact.residue).mod_floor(&modulus);
    let agree = int_valuation(&diff, p).unwrap_or(k as i64) - v;
    FloatOutcome::Loss(prec as i64 - agree.min(prec as i64))
}

#[derive(Clone, Copy, Debug)]
struct CompareTrial {
    float: FloatOutcome,
    float_prem: FloatOutcome,
    interval: Option<i64>,
}

/// Ultrametric floats against flat precision tracking on the same inputs.
///
/// Both runs start from the integer pair drawn at `N` digits and use the
/// same remainder recurrence as [`crate::prs::prs_flat`]. The float run keeps
/// `N` significant digits; the flat run tracks absolute precision from a
/// working precision large enough that no trial saturates, and its loss is
/// measured from that working precision. The pseudo-remainder recurrence in
/// floats is reported alongside.
pub fn run_float_compare(cfg: &ExperimentConfig) -> Result<Report> {
    let ring = cfg.validate()?;
    let prec = cfg.prec;
    let mut rep = Report::new(ExperimentKind::FloatCompare);
    let mut means = Vec::new();
    for (i, &d) in cfg.degrees.iter().enumerate() {
        let work = prec.max(128) + 4 * d as i64;
        let res = run_trials(cfg.trials, cfg.seed, i as u64, |rng| {
            let (a, b) = random_monic_pair(ring.p(), d, prec as u64, rng);
            let interval = flat_run(ring, work, a.coeffs(), b.coeffs()).ok().and_then(|t| t.loss().ok());
            CompareTrial {
                float: float_loss(ring, prec as u32, &a, &b, Recurrence::Remainder),
                float_prem: float_loss(ring, prec as u32, &a, &b, Recurrence::Prem),
                interval,
            }
        });
        let fl = Summary::of(res.iter().filter_map(|t| match t.float {
            FloatOutcome::Loss(x) => Some(x as f64),
            _ => None,
        }));
        let fp = Summary::of(res.iter().filter_map(|t| match t.float_prem {
            FloatOutcome::Loss(x) => Some(x as f64),
            _ => None,
        }));
        let count = |o: FloatOutcome| res.iter().filter(|t| t.float == o).count();
        let int = Summary::of(res.iter().filter_map(|t| t.interval.map(|x| x as f64)));
        rep.rows.push(
            SummaryRow::new()
                .with("row", "degree")
                .with("degree", d)
                .with("trials", cfg.trials)
                .with("float_completed", fl.n)
                .with("valuation_mismatch", count(FloatOutcome::ValuationMismatch))
                .with("degenerate", count(FloatOutcome::Degenerate))
                .with("censored", count(FloatOutcome::Censored))
                .with("mean_float_loss", fl.mean)
                .with("stderr_float_loss", fl.stderr())
                .with("prem_completed", fp.n)
                .with("mean_float_prem_loss", fp.mean)
                .with("stderr_float_prem_loss", fp.stderr())
                .with("working_prec", work)
                .with("interval_completed", int.n)
                .with("mean_interval_loss", int.mean)
                .with("stderr_interval_loss", int.stderr()),
        );
        means.push((d, fl, int, fp));
    }
    if means.len() >= 2 {
        let ln: Vec<f64> = means.iter().map(|m| (m.0 as f64).ln()).collect();
        let lin: Vec<f64> = means.iter().map(|m| m.0 as f64).collect();
        let (fs, fi) = linear_fit(&ln, &means.iter().map(|m| m.1.mean).collect::<Vec<_>>());
        let (is, ii) = linear_fit(&lin, &means.iter().map(|m| m.2.mean).collect::<Vec<_>>());
        rep.rows.push(
            SummaryRow::new()
                .with("row", "fit")
                .with("float_slope_vs_ln_degree", fs)
                .with("float_intercept", fi)
                .with("interval_slope_vs_degree", is)
                .with("interval_intercept", ii),
        );
    }
    if let [lo, .., hi] = means.as_slice() {
        let float_ratio = hi.1.mean / lo.1.mean;
        let interval_ratio = hi.2.mean / lo.2.mean;
        rep.rows.push(
            SummaryRow::new()
                .with("row", "growth")
                .with("from_degree", lo.0)
                .with("to_degree", hi.0)
                .with("float_ratio", float_ratio)
                .with("float_prem_ratio", hi.3.mean / lo.3.mean)
                .with("interval_ratio", interval_ratio),
        );
        rep.checks.push(Check::new(
            "float_share",
            hi.1.mean < FLOAT_SHARE * hi.2.mean,
            format!("float {:.3} vs interval {:.3} at d = {}", hi.1.mean, hi.2.mean, hi.0),
        ));
        rep.checks.push(Check::new(
            "float_growth",
            float_ratio < FLOAT_GROWTH,
            format!("{float_ratio:.3} < {FLOAT_GROWTH}"),
        ));
        if (lo.0, hi.0) == (10, 50) {
            let ok = (interval_ratio - INTERVAL_GROWTH).abs() <= INTERVAL_GROWTH_TOLERANCE * INTERVAL_GROWTH;
            rep.checks.push(Check::new(
                "interval_growth",
                ok,
                format!("{interval_ratio:.3} vs {INTERVAL_GROWTH} +- {:.0}%", INTERVAL_GROWTH_TOLERANCE * 100.0),
            ));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_loses_nothing_in_floats() {
        let ring = Ring::new(2).unwrap();
        let a = ExactPoly::from_i64(&[3, 1]);
        let b = ExactPoly::from_i64(&[11, 1]);
        // Res = 8 (up to sign) and a single exact subtraction.
        for form in [Recurrence::Prem, Recurrence::Remainder] {
            assert_eq!(float_loss(ring, 16, &a, &b, form), FloatOutcome::Loss(0));
        }
    }
}
