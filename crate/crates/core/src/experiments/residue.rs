use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::Result;
use crate::experiments::config::{ExperimentConfig, ExperimentKind};
use crate::experiments::report::{Check, Report, SummaryRow};
use crate::experiments::runner::run_trials;
use crate::experiments::sampling::random_monic_pair;
use crate::experiments::stats::{binomial_stderr, correlation};
use crate::oracle::subresultants_prs;
use crate::poly::ExactPoly;

/// Largest pairwise correlation accepted between vanishing indicators.
pub const MAX_CORRELATION: f64 = 0.02;

/// `r_j mod p == 0` for `j = 0..d`.
pub fn vanishing_pattern(a: &ExactPoly, b: &ExactPoly, p: u64) -> Result<Vec<bool>> {
    let s = subresultants_prs(a, b)?;
    let p = BigInt::from(p);
    Ok(s.r.iter().map(|r| r.mod_floor(&p) == BigInt::from(0)).collect())
}

/// Counts for one index set `J` over all monic pairs of degree `d` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaCount {
    pub set: Vec<usize>,
    /// Pairs with `r_j != 0` exactly for `j` in `J`.
    pub exact: u64,
    /// Pairs with `r_j != 0` for every `j` in `J`.
    pub nonvanishing: u64,
}

/// Exhaustive enumeration of the `q^{2d}` monic pairs over `F_q`, `q = p`.
pub fn omega_counts(p: u64, d: usize) -> Result<Vec<OmegaCount>> {
    let total = p.pow(2 * d as u32);
    let mut by_pattern = vec![0u64; 1 << d];
    for code in 0..total {
        let mut c = code;
        let mut digit = || {
            let x = c % p;
            c /= p;
            x as i64
        };
        let mut a: Vec<i64> = (0..d).map(|_| digit()).collect();
        let mut b: Vec<i64> = (0..d).map(|_| digit()).collect();
        a.push(1);
        b.push(1);
        let z = vanishing_pattern(&ExactPoly::from_i64(&a), &ExactPoly::from_i64(&b), p)?;
        let mask = z.iter().enumerate().filter(|(_, &v)| !v).fold(0usize, |m, (j, _)| m | 1 << j);
        by_pattern[mask] += 1;
    }
    Ok((0..1usize << d)
        .map(|set| OmegaCount {
            set: (0..d).filter(|j| set >> j & 1 == 1).collect(),
            exact: by_pattern[set],
            nonvanishing: (0..1usize << d).filter(|m| m & set == set).map(|m| by_pattern[m]).sum(),
        })
        .collect())
}

/// Degree used for the exhaustive count.
pub const EXHAUSTIVE_DEGREE: usize = 2;

/// Independence of the events `r_j = 0` over the residue field.
pub fn run_residue(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    let p = cfg.p;
    let q = p as f64;
    let n = cfg.trials;
    let mut rep = Report::new(ExperimentKind::Residue);
    for (i, &d) in cfg.degrees.iter().enumerate() {
        let pats = run_trials(n, cfg.seed, i as u64, |rng| {
            let (a, b) = random_monic_pair(p, d, 1, rng);
            vanishing_pattern(&a, &b, p).expect("monic pairs have subresultants")
        });
        let col = |j: usize| -> Vec<bool> { pats.iter().map(|z| z[j]).collect() };
        let freq = |f: &dyn Fn(&Vec<bool>) -> bool| pats.iter().filter(|z| f(z)).count() as f64 / n as f64;
        let mut worst: f64 = 0.0;
        for j in 0..d {
            let pj = freq(&|z| z[j]);
            let se = binomial_stderr(pj, n);
            rep.rows.push(
                SummaryRow::new()
                    .with("row", "marginal")
                    .with("degree", d)
                    .with("j", j)
                    .with("trials", n)
                    .with("frequency", pj)
                    .with("stderr", se)
                    .with("expected", 1.0 / q),
            );
            rep.checks.push(Check::new(
                format!("marginal_d{d}_j{j}"),
                (pj - 1.0 / q).abs() <= 3.0 * se,
                format!("{pj:.4} +- {se:.4} vs {:.4}", 1.0 / q),
            ));
            for k in j + 1..d {
                let rho = correlation(&col(j), &col(k));
                worst = worst.max(rho.abs());
                let pjk = freq(&|z| z[j] && z[k]);
                rep.rows.push(
                    SummaryRow::new()
                        .with("row", "pair")
                        .with("degree", d)
                        .with("j", j)
                        .with("k", k)
                        .with("trials", n)
                        .with("frequency", pjk)
                        .with("stderr", binomial_stderr(pjk, n))
                        .with("expected", 1.0 / (q * q))
                        .with("correlation", rho),
                );
                if d <= 5 {
                    for l in k + 1..d {
                        let pjkl = freq(&|z| z[j] && z[k] && z[l]);
                        rep.rows.push(
                            SummaryRow::new()
                                .with("row", "triple")
                                .with("degree", d)
                                .with("j", j)
                                .with("k", k)
                                .with("l", l)
                                .with("trials", n)
                                .with("frequency", pjkl)
                                .with("stderr", binomial_stderr(pjkl, n))
                                .with("expected", 1.0 / (q * q * q)),
                        );
                    }
                }
            }
        }
        rep.checks.push(Check::new(
            format!("correlation_d{d}"),
            worst < MAX_CORRELATION,
            format!("max |rho| = {worst:.4} < {MAX_CORRELATION}"),
        ));
    }
    if p.pow(2 * EXHAUSTIVE_DEGREE as u32) <= 1 << 20 {
        let d = EXHAUSTIVE_DEGREE;
        let (mut printed_ok, mut partition_ok) = (true, true);
        for c in omega_counts(p, d)? {
            let k = c.set.len() as u32;
            let printed = p.pow(2 * d as u32 - k) * (p - 1).pow(k);
            let partition = p.pow(d as u32) * (p - 1).pow(k);
            printed_ok &= c.nonvanishing == printed;
            partition_ok &= c.exact == partition;
            let set: Vec<String> = c.set.iter().map(|j| j.to_string()).collect();
            rep.rows.push(
                SummaryRow::new()
                    .with("row", "omega")
                    .with("degree", d)
                    .with("set", set.join(" ").as_str())
                    .with("count_nonvanishing", c.nonvanishing)
                    .with("formula_nonvanishing", printed)
                    .with("count_exact", c.exact)
                    .with("formula_exact", partition),
            );
        }
        rep.checks.push(Check::new(
            "omega_nonvanishing",
            printed_ok,
            "#{r_j != 0 for j in J} = q^(2d-|J|) (q-1)^|J|",
        ));
        rep.checks.push(Check::new(
            "omega_exact",
            partition_ok,
            "#{r_j != 0 exactly for j in J} = q^d (q-1)^|J|",
        ));
    }
    Ok(rep)
}
