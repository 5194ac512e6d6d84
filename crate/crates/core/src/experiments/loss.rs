use num_bigint::BigInt;

use crate::error::Result;
use crate::experiments::config::{ExperimentConfig, ExperimentKind};
use crate::experiments::geometric::{to_f64, GeometricModel};
use crate::experiments::report::{Check, Report, SummaryRow};
use crate::experiments::runner::run_trials;
use crate::experiments::sampling::random_monic_pair;
use crate::experiments::stats::{linear_fit, Summary};
use crate::oracle::{max_digits, resultant_mod_pk};
use crate::padic::Ring;
use crate::poly::FlatPoly;
use crate::prs::{extended_euclid, prs_flat};

/// Published averages over `Z_2`: degree, loss, expected loss.
pub const REFERENCE_LOSS: [(usize, f64, f64); 5] =
    [(5, 6.3, 3.1), (10, 14.3, 3.2), (25, 38.9, 3.2), (50, 79.9, 3.2), (100, 160.0, 3.2)];

/// Relative tolerance on the reference loss and absolute tolerance on the expected loss.
pub const LOSS_TOLERANCE: f64 = 0.15;
pub const EXPECTED_TOLERANCE: f64 = 0.2;
pub const SLOPE_RANGE: (f64, f64) = (1.4, 1.8);

#[derive(Clone, Debug, Default)]
struct LossTrial {
    loss: Option<i64>,
    aggregate_bound: Option<i64>,
    bound_ok: bool,
    expected: Option<i64>,
    euclid: Option<i64>,
}

/// Flat precision run on integer inputs at absolute precision `prec`.
pub(crate) fn flat_run(ring: Ring, prec: i64, a: &[BigInt], b: &[BigInt]) -> Result<crate::prs::SubresTranscript> {
    prs_flat(&FlatPoly::from_centers(ring, prec, a), &FlatPoly::from_centers(ring, prec, b))
}

/// Significant digits lost by extended Euclid over balls: `N` minus the relative
/// precision of the last nonzero remainder, when that remainder is a constant.
pub fn euclid_loss(ring: Ring, prec: i64, a: &crate::poly::ExactPoly, b: &crate::poly::ExactPoly) -> Option<i64> {
    let r = extended_euclid(&a.to_balls(ring, prec), &b.to_balls(ring, prec)).ok()?;
    (r.d.len() == 1).then(|| prec - r.d.coeff(0).unwrap().relative_precision())
}

fn loss_trial(ring: Ring, d: usize, prec: i64, rng: &mut rand_chacha::ChaCha8Rng) -> LossTrial {
    let p = ring.p();
    let (a, b) = random_monic_pair(p, d, prec as u64, rng);
    let mut out = LossTrial { bound_ok: true, ..Default::default() };
    out.expected = resultant_mod_pk(&a, &b, p, max_digits(p)).valuation.map(|v| 2 * v);
    out.euclid = euclid_loss(ring, prec, &a, &b);
    let Ok(t) = flat_run(ring, prec, a.coeffs(), b.coeffs()) else {
        return out;
    };
    if t.is_complete() {
        out.loss = t.loss().ok();
        out.aggregate_bound = t.aggregate_loss_bound().ok();
        let bound = t.loss_bound().unwrap();
        out.bound_ok = (0..d).all(|j| t.step(j).unwrap().n <= bound[j]);
    }
    out
}

/// Loss of precision of the flat-model subresultant sequence on random monic
/// pairs, against twice the valuation of the resultant. Extended Euclid over
/// balls runs on the same pairs for comparison.
pub fn run_loss(cfg: &ExperimentConfig) -> Result<Report> {
    let ring = cfg.validate()?;
    let model = GeometricModel::new(cfg.q());
    let mut rep = Report::new(ExperimentKind::Loss);
    let mut fit = (Vec::new(), Vec::new());
    let mut fit_euclid = (Vec::new(), Vec::new());
    let reference = cfg.p == 2 && cfg.prec >= 128;
    for (i, &d) in cfg.degrees.iter().enumerate() {
        let res = run_trials(cfg.trials, cfg.seed, i as u64, |rng| loss_trial(ring, d, cfg.prec, rng));
        let loss = Summary::of(res.iter().filter_map(|t| t.loss.map(|x| x as f64)));
        let bound = Summary::of(res.iter().filter_map(|t| t.aggregate_bound.map(|x| x as f64)));
        let expected = Summary::of(res.iter().filter_map(|t| t.expected.map(|x| x as f64)));
        let euclid = Summary::of(res.iter().filter_map(|t| t.euclid.map(|x| x as f64)));
        let violations = res.iter().filter(|t| !t.bound_ok).count();
        let closed = 2.0 * to_f64(&model.closed_form_mean(d, 0));
        rep.rows.push(
            SummaryRow::new()
                .with("row", "degree")
                .with("degree", d)
                .with("trials", cfg.trials)
                .with("completed", loss.n)
                .with("failed", cfg.trials - loss.n)
                .with("mean_loss", loss.mean)
                .with("stderr_loss", loss.stderr())
                .with("mean_bound", bound.mean)
                .with("stderr_bound", bound.stderr())
                .with("bound_violations", violations)
                .with("expected_trials", expected.n)
                .with("mean_expected", expected.mean)
                .with("stderr_expected", expected.stderr())
                .with("closed_form_expected", closed)
                .with("euclid_completed", euclid.n)
                .with("mean_euclid_loss", euclid.mean)
                .with("stderr_euclid_loss", euclid.stderr()),
        );
        rep.checks.push(Check::new(
            format!("bound_holds_d{d}"),
            violations == 0,
            format!("{violations} trials with some N_j above its bound"),
        ));
        rep.checks.push(Check::new(
            format!("expected_matches_closed_form_d{d}"),
            expected.within(closed, 3.0),
            format!("{:.4} +- {:.4} vs {closed:.4}", expected.mean, expected.stderr()),
        ));
        if loss.n > 0 {
            fit.0.push(d as f64);
            fit.1.push(loss.mean);
        }
        if euclid.n > 0 {
            fit_euclid.0.push(d as f64);
            fit_euclid.1.push(euclid.mean);
        }
        if let Some(&(_, ref_loss, ref_exp)) = REFERENCE_LOSS.iter().find(|r| r.0 == d).filter(|_| reference) {
            let ok = (loss.mean - ref_loss).abs() <= LOSS_TOLERANCE * ref_loss;
            rep.checks.push(Check::new(
                format!("reference_loss_d{d}"),
                ok,
                format!("{:.3} vs {ref_loss} +- {:.0}%", loss.mean, LOSS_TOLERANCE * 100.0),
            ));
            let ok = (euclid.mean - ref_loss).abs() <= LOSS_TOLERANCE * ref_loss;
            rep.checks.push(Check::new(
                format!("reference_euclid_loss_d{d}"),
                ok,
                format!("{:.3} vs {ref_loss} +- {:.0}%", euclid.mean, LOSS_TOLERANCE * 100.0),
            ));
            let ok = (expected.mean - ref_exp).abs() <= EXPECTED_TOLERANCE;
            rep.checks.push(Check::new(
                format!("reference_expected_d{d}"),
                ok,
                format!("{:.3} vs {ref_exp} +- {EXPECTED_TOLERANCE}", expected.mean),
            ));
        }
    }
    for (name, (xs, ys)) in [("", &fit), ("_euclid", &fit_euclid)] {
        if xs.len() < 2 {
            continue;
        }
        let (slope, intercept) = linear_fit(xs, ys);
        rep.rows.push(
            SummaryRow::new()
                .with("row", if name.is_empty() { "fit" } else { "fit_euclid" })
                .with("slope", slope)
                .with("intercept", intercept),
        );
        if reference {
            let ok = (SLOPE_RANGE.0..=SLOPE_RANGE.1).contains(&slope);
            rep.checks.push(Check::new(
                format!("reference{name}_slope"),
                ok,
                format!("{slope:.4} in [{}, {}]", SLOPE_RANGE.0, SLOPE_RANGE.1),
            ));
        }
    }
    Ok(rep)
}
