use std::collections::BTreeMap;

use crate::error::Result;
use crate::experiments::config::{ExperimentConfig, ExperimentKind};
use crate::experiments::geometric::{to_f64, GeometricModel};
use crate::experiments::report::{Check, Report, SummaryRow};
use crate::experiments::runner::run_trials;
use crate::experiments::sampling::random_monic_pair;
use crate::experiments::stats::{binomial_stderr, chi2_two_sample, histogram, tv_distance, Histogram, Summary};
use crate::oracle::subresultants_prs;
use crate::padic::arith::int_valuation;
use crate::poly::ExactPoly;

/// Degrees up to which [`ExperimentKind::MaxVj`] also runs the exact oracle.
pub const MAXVJ_ORACLE_DEGREE: usize = 8;

/// Valuations of the principal subresultants of a random pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuations {
    /// `V_j` for `j = 0..d`, capped at the sampling precision.
    pub v: Vec<i64>,
    /// `delta_j = V_j - W_j`.
    pub delta: Vec<i64>,
}

fn capped(x: &num_bigint::BigInt, p: u64, cap: i64) -> i64 {
    int_valuation(x, p).map_or(cap, |v| v.min(cap))
}

/// `V_j` and `delta_j` of the exact subresultants of two integer polynomials,
/// with valuations capped at `cap` (the number of sampled digits: beyond it the
/// law of a Haar-random pair is not determined by the sample).
pub fn oracle_valuations(a: &ExactPoly, b: &ExactPoly, p: u64, cap: i64) -> Result<Valuations> {
    let d = a.degree().unwrap_or(0);
    let s = subresultants_prs(a, b)?;
    let mut out = Valuations { v: Vec::with_capacity(d), delta: Vec::with_capacity(d) };
    for j in 0..d {
        let v = capped(&s.r[j], p, cap);
        let w = (0..=j).map(|i| s.res[j].coeff(i).map_or(cap, |c| capped(c, p, cap))).min().unwrap();
        out.v.push(v);
        out.delta.push(v - w);
    }
    Ok(out)
}

fn oracle_trials(cfg: &ExperimentConfig, d: usize, stream: u64) -> Vec<Valuations> {
    let p = cfg.p;
    run_trials(cfg.trials, cfg.seed, stream, |rng| {
        let (a, b) = random_monic_pair(p, d, cfg.prec as u64, rng);
        oracle_valuations(&a, &b, p, cfg.prec).expect("monic pairs have subresultants")
    })
}

fn mean_of(h: &Histogram<i64>) -> Summary {
    Summary::of(h.iter().flat_map(|(&k, &n)| std::iter::repeat_n(k as f64, n as usize)))
}

/// Law of `V_j`: exact oracle on random pairs, the `Y_j` sampler and the closed forms.
pub fn run_vj(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    let g = GeometricModel::new(cfg.q());
    let q = cfg.q() as f64;
    let mut rep = Report::new(ExperimentKind::Vj);
    for (i, &d) in cfg.degrees.iter().enumerate() {
        let oracle = oracle_trials(cfg, d, 2 * i as u64);
        let samples = run_trials(cfg.trials, cfg.seed, 2 * i as u64 + 1, |rng| {
            let xs: Vec<u32> = (0..d).map(|_| g.sample_x(rng)).collect();
            (0..d).map(|j| GeometricModel::y_from(&xs, j) as i64).collect::<Vec<_>>()
        });
        for j in 0..d {
            let ho = histogram(oracle.iter().map(|t| t.v[j]));
            let hs = histogram(samples.iter().map(|y| y[j]));
            let (mo, ms) = (mean_of(&ho), mean_of(&hs));
            let cm = to_f64(&g.closed_form_mean(d, j));
            let cv = to_f64(&g.closed_form_var(d, j));
            let tv = tv_distance(&ho, &hs);
            let chi = chi2_two_sample(&ho, &hs);
            let p0 = ho.get(&0).copied().unwrap_or(0) as f64 / cfg.trials as f64;
            let p0_se = binomial_stderr(p0, cfg.trials);
            let kmax = ho.keys().chain(hs.keys()).max().copied().unwrap_or(0);
            for k in 0..=kmax {
                rep.rows.push(
                    SummaryRow::new()
                        .with("row", "law")
                        .with("degree", d)
                        .with("j", j)
                        .with("k", k)
                        .with("trials", cfg.trials)
                        .with("p_oracle", ho.get(&k).copied().unwrap_or(0) as f64 / cfg.trials as f64)
                        .with("p_sampler", hs.get(&k).copied().unwrap_or(0) as f64 / cfg.trials as f64),
                );
            }
            rep.rows.push(
                SummaryRow::new()
                    .with("row", "summary")
                    .with("degree", d)
                    .with("j", j)
                    .with("trials", cfg.trials)
                    .with("mean_oracle", mo.mean)
                    .with("stderr_oracle", mo.stderr())
                    .with("var_oracle", mo.var)
                    .with("mean_sampler", ms.mean)
                    .with("stderr_sampler", ms.stderr())
                    .with("var_sampler", ms.var)
                    .with("closed_form_mean", cm)
                    .with("closed_form_var", cv)
                    .with("p_zero_oracle", p0)
                    .with("tv", tv)
                    .with("chi2", chi.stat)
                    .with("chi2_dof", chi.dof)
                    .with("chi2_p", chi.p_value),
            );
            let tag = format!("d{d}_j{j}");
            rep.checks.push(Check::new(format!("tv_{tag}"), tv < 0.01, format!("{tv:.5} < 0.01")));
            rep.checks.push(Check::new(
                format!("oracle_mean_{tag}"),
                mo.within(cm, 3.0),
                format!("{:.4} +- {:.4} vs {cm:.4}", mo.mean, mo.stderr()),
            ));
            rep.checks.push(Check::new(
                format!("sampler_mean_{tag}"),
                ms.within(cm, 3.0),
                format!("{:.4} +- {:.4} vs {cm:.4}", ms.mean, ms.stderr()),
            ));
            rep.checks.push(Check::new(
                format!("chi2_{tag}"),
                chi.p_value > 0.001,
                format!("p = {:.4} ({} dof)", chi.p_value, chi.dof),
            ));
            rep.checks.push(Check::new(
                format!("unit_probability_{tag}"),
                (p0 - (1.0 - 1.0 / q)).abs() <= 3.0 * p0_se,
                format!("{p0:.4} +- {p0_se:.4} vs {:.4}", 1.0 - 1.0 / q),
            ));
        }
    }
    Ok(rep)
}

/// Empirical `P[delta_j >= m]` against its lower bound, and the exact value at `j = d - 1`.
pub fn run_deltaj(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    let g = GeometricModel::new(cfg.q());
    let q = cfg.q() as f64;
    let n = cfg.trials;
    let mut rep = Report::new(ExperimentKind::Deltaj);
    for (i, &d) in cfg.degrees.iter().enumerate() {
        let oracle = oracle_trials(cfg, d, i as u64);
        for j in 0..d {
            let delta = Summary::of(oracle.iter().map(|t| t.delta[j] as f64));
            let v = Summary::of(oracle.iter().map(|t| t.v[j] as f64));
            let lower = (q.powi(j as i32) - 1.0) / (q.powi(j as i32 + 1) - 1.0);
            rep.rows.push(
                SummaryRow::new()
                    .with("row", "mean")
                    .with("degree", d)
                    .with("j", j)
                    .with("trials", n)
                    .with("mean_delta", delta.mean)
                    .with("stderr_delta", delta.stderr())
                    .with("mean_v", v.mean)
                    .with("stderr_v", v.stderr())
                    .with("lower", lower),
            );
            rep.checks.push(Check::new(
                format!("mean_delta_d{d}_j{j}"),
                delta.mean >= lower - 3.0 * delta.stderr() && delta.mean <= v.mean,
                format!("{lower:.4} <= {:.4} <= {:.4}", delta.mean, v.mean),
            ));
            for m in 1..=cfg.m_max {
                let hits = oracle.iter().filter(|t| t.delta[j] >= m as i64).count();
                let emp = hits as f64 / n as f64;
                let se = binomial_stderr(emp.max(1.0 / n as f64), n);
                let bound = to_f64(&g.delta_bound(j, m));
                let mut row = SummaryRow::new()
                    .with("row", "tail")
                    .with("degree", d)
                    .with("j", j)
                    .with("m", m as usize)
                    .with("trials", n)
                    .with("p_empirical", emp)
                    .with("stderr", se)
                    .with("bound", bound);
                let tag = format!("d{d}_j{j}_m{m}");
                rep.checks.push(Check::new(
                    format!("bound_{tag}"),
                    emp >= bound - 3.0 * se,
                    format!("{emp:.5} +- {se:.5} >= {bound:.5}"),
                ));
                if j == d - 1 && d >= 2 {
                    let exact = to_f64(&g.delta_top(d, m));
                    row = row.with("exact", exact);
                    rep.checks.push(Check::new(
                        format!("exact_{tag}"),
                        (emp - exact).abs() <= 3.0 * se,
                        format!("{emp:.5} +- {se:.5} vs {exact:.5}"),
                    ));
                }
                rep.rows.push(row);
            }
        }
    }
    Ok(rep)
}

/// Joint law of `(V_{d-1}, V_{d-2})` against `(X, X' + min(X', floor(X/2)))`.
pub fn run_joint(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    let g = GeometricModel::new(cfg.q());
    let mut rep = Report::new(ExperimentKind::Joint);
    for (i, &d) in cfg.degrees.iter().enumerate() {
        let oracle = oracle_trials(cfg, d, 2 * i as u64);
        let ho: Histogram<(i64, i64)> = histogram(oracle.iter().map(|t| (t.v[d - 1], t.v[d - 2])));
        let hs: Histogram<(i64, i64)> = histogram(
            run_trials(cfg.trials, cfg.seed, 2 * i as u64 + 1, |rng| g.sample_joint(rng))
                .into_iter()
                .map(|(x, y)| (x as i64, y as i64)),
        );
        let mut cells: BTreeMap<(i64, i64), ()> = BTreeMap::new();
        cells.extend(ho.keys().chain(hs.keys()).map(|&k| (k, ())));
        for &(x, y) in cells.keys() {
            rep.rows.push(
                SummaryRow::new()
                    .with("row", "cell")
                    .with("degree", d)
                    .with("v_top", x)
                    .with("v_next", y)
                    .with("trials", cfg.trials)
                    .with("p_oracle", ho.get(&(x, y)).copied().unwrap_or(0) as f64 / cfg.trials as f64)
                    .with("p_sampler", hs.get(&(x, y)).copied().unwrap_or(0) as f64 / cfg.trials as f64),
            );
        }
        let tv = tv_distance(&ho, &hs);
        let chi = chi2_two_sample(&ho, &hs);
        rep.rows.push(
            SummaryRow::new()
                .with("row", "summary")
                .with("degree", d)
                .with("trials", cfg.trials)
                .with("tv", tv)
                .with("chi2", chi.stat)
                .with("chi2_dof", chi.dof)
                .with("chi2_p", chi.p_value),
        );
        rep.checks.push(Check::new(
            format!("chi2_d{d}"),
            chi.p_value > 0.001,
            format!("p = {:.4} ({} dof), tv = {tv:.4}", chi.p_value, chi.dof),
        ));
    }
    Ok(rep)
}

/// Growth of `E[max_j V_j]` with the degree.
///
/// Every degree runs the `Y_j` surrogate: one draw of `X_0, ..., X_{d-1}`
/// shared by all `j`, which has the right marginals but not the joint law of
/// the `V_j`. Degrees up to [`MAXVJ_ORACLE_DEGREE`] also run the exact oracle.
pub fn run_maxvj(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    let g = GeometricModel::new(cfg.q());
    let q = cfg.q() as f64;
    let mut rep = Report::new(ExperimentKind::MaxVj);
    let mut surrogate = Vec::new();
    for (i, &d) in cfg.degrees.iter().enumerate() {
        let s = Summary::of(run_trials(cfg.trials, cfg.seed, 2 * i as u64 + 1, |rng| {
            let xs: Vec<u32> = (0..d).map(|_| g.sample_x(rng)).collect();
            (0..d).map(|j| GeometricModel::y_from(&xs, j)).max().unwrap() as f64
        }));
        let mut row = SummaryRow::new()
            .with("row", "degree")
            .with("degree", d)
            .with("trials", cfg.trials)
            .with("log_q_degree", (d as f64).ln() / q.ln())
            .with("mean_max_surrogate", s.mean)
            .with("stderr_max_surrogate", s.stderr());
        if d <= MAXVJ_ORACLE_DEGREE {
            let o = Summary::of(
                oracle_trials(cfg, d, 2 * i as u64).iter().map(|t| *t.v.iter().max().unwrap() as f64),
            );
            row = row.with("mean_max_oracle", o.mean).with("stderr_max_oracle", o.stderr());
            if d == 1 {
                let want = 1.0 / (q - 1.0);
                rep.checks.push(Check::new(
                    "degree_one_oracle",
                    o.within(want, 3.0),
                    format!("{:.4} +- {:.4} vs {want:.4}", o.mean, o.stderr()),
                ));
            }
        }
        if d == 1 {
            let want = 1.0 / (q - 1.0);
            rep.checks.push(Check::new(
                "degree_one_surrogate",
                s.within(want, 3.0),
                format!("{:.4} +- {:.4} vs {want:.4}", s.mean, s.stderr()),
            ));
        }
        rep.rows.push(row);
        surrogate.push((d, s));
    }
    let monotone = surrogate.windows(2).all(|w| {
        let tol = 3.0 * (w[0].1.stderr().powi(2) + w[1].1.stderr().powi(2)).sqrt();
        w[1].1.mean >= w[0].1.mean - tol
    });
    rep.checks.push(Check::new("monotone", monotone, "E[max] nondecreasing within 3 stderr"));
    if surrogate.len() >= 2 {
        let (first, last) = (surrogate[0], surrogate[surrogate.len() - 1]);
        let log = |d: usize| (d as f64).ln() / q.ln();
        let allowed = log(last.0) - log(first.0) + log(last.0).sqrt();
        let tol = 3.0 * (first.1.stderr().powi(2) + last.1.stderr().powi(2)).sqrt();
        let growth = last.1.mean - first.1.mean;
        let xs: Vec<f64> = surrogate.iter().map(|(d, _)| log(*d)).collect();
        let ys: Vec<f64> = surrogate.iter().map(|(_, s)| s.mean).collect();
        let (slope, intercept) = crate::experiments::stats::linear_fit(&xs, &ys);
        rep.rows.push(
            SummaryRow::new()
                .with("row", "fit")
                .with("slope_vs_log_q_degree", slope)
                .with("intercept", intercept)
                .with("growth", growth)
                .with("allowed_growth", allowed),
        );
        rep.checks.push(Check::new(
            "log_growth",
            growth <= allowed + tol,
            format!("{growth:.3} <= log_q ratio + sqrt(log_q d) = {allowed:.3}"),
        ));
    }
    Ok(rep)
}
