//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so that every line is printed. Criteria
//! listed in `KNOWN_FAILURES` are reported but do not fail the target; any
//! other failure does.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subres_core::experiments::{self, random_monic, random_monic_pair, ExperimentConfig, ExperimentKind, Report};
use subres_core::oracle::{check_relations, reconstruct_pair, reduce, subresultants_minors};
use subres_core::padic::arith::pow_p;
use subres_core::padic::{Ball, Ring, ZmodRing};
use subres_core::poly::{centers, parse_fixture, ExactPoly};
use subres_core::prs::{extended_euclid, jacobian_lattice_check, prs_ball, prs_ball_from, stabilized_prs, StableOptions};

/// Criteria that fail with the faithful implementation; see the README.
const KNOWN_FAILURES: [&str; 2] = ["flat_loss_table", "float_loss_trend"];

struct Outcome {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn outcome(name: &'static str, passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { name, passed, detail: detail.into() }
}

fn failed_checks(rep: &Report) -> Vec<String> {
    rep.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect()
}

fn report_outcome(name: &'static str, reps: &[Report], elapsed: Duration) -> Outcome {
    let fails: Vec<String> = reps.iter().flat_map(failed_checks).collect();
    let total: usize = reps.iter().map(|r| r.checks.len()).sum();
    let detail = if fails.is_empty() {
        format!("{total} checks in {:.1} s", elapsed.as_secs_f64())
    } else {
        format!("{} of {total} checks failed: {}", fails.len(), fails.join("; "))
    };
    outcome(name, fails.is_empty(), detail)
}

fn experiment(kind: ExperimentKind, p: u64) -> Report {
    let mut cfg = ExperimentConfig::new(kind);
    cfg.p = p;
    experiments::run(&cfg).expect("experiment runs")
}

fn stabilized_matches_oracle() -> Outcome {
    let start = Instant::now();
    let (d, prec, pairs) = (10, 20, 200);
    let mut tested = 0;
    let mut skipped = 0;
    let mut mismatches = Vec::new();
    for p in [2u64, 3] {
        let ring = Ring::new(p).unwrap();
        let modulus = pow_p(p, prec as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(100 + p);
        for trial in 0..pairs {
            let (a, b) = random_monic_pair(p, d, prec as u64, &mut rng);
            let t = stabilized_prs(&a.to_balls(ring, prec), &b.to_balls(ring, prec), prec, StableOptions::default())
                .unwrap();
            if !t.is_complete() {
                skipped += 1;
                continue;
            }
            tested += 1;
            let s = subresultants_minors(&a, &b, d, d);
            for j in 0..d {
                let got = &t.step(j).unwrap().poly;
                let want = &s.res[j];
                let len = got.len().max(want.len());
                let ok = (0..len).all(|i| {
                    let w = want.coeff(i).cloned().unwrap_or_default().mod_floor(&modulus);
                    match got.coeff(i) {
                        Some(c) => c.prec() == prec && c.center() == BigRational::from_integer(w),
                        None => w.is_zero(),
                    }
                });
                if !ok {
                    mismatches.push(format!("p = {p}, trial {trial}, R{j}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let passed = mismatches.is_empty() && tested > 0 && elapsed < Duration::from_secs(60);
    outcome(
        "stabilized_matches_oracle",
        passed,
        format!(
            "{tested} pairs compared, {skipped} outside the hypothesis, {} mismatches, {:.1} s",
            mismatches.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn flat_loss_table() -> Outcome {
    let start = Instant::now();
    let rep = experiment(ExperimentKind::Loss, 2);
    let elapsed = start.elapsed();
    let wanted = |name: &str| name.starts_with("reference_loss_d") || name.starts_with("reference_expected_d") || name == "reference_slope";
    let relevant: Vec<_> = rep.checks.iter().filter(|c| wanted(&c.name)).collect();
    let fails: Vec<String> =
        relevant.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    let passed = fails.is_empty() && relevant.len() == 9 && elapsed < Duration::from_secs(600);
    let detail = if fails.is_empty() {
        format!("{} checks in {:.1} s", relevant.len(), elapsed.as_secs_f64())
    } else {
        format!("{} of {} checks failed in {:.1} s: {}", fails.len(), relevant.len(), elapsed.as_secs_f64(), fails.join("; "))
    };
    outcome("flat_loss_table", passed, detail)
}

fn worked_examples() -> Outcome {
    let f = parse_fixture(include_str!("../fixtures/deg5_p2.txt")).unwrap();
    let (a, b) = (f.get("A").unwrap(), f.get("B").unwrap());
    let mut bad = Vec::new();
    let e = extended_euclid(a, b).unwrap();
    for (k, name) in [(2, "S3"), (3, "S4"), (4, "S5"), (5, "S6"), (6, "S7")] {
        if e.trace.get(k).map(|s| &s.s) != f.get(name) {
            bad.push(name.to_string());
        }
    }
    let t = prs_ball(a, b).unwrap();
    for j in 0..5 {
        if t.step(j).map(|s| &s.poly) != f.get(&format!("R{j}_true")) {
            bad.push(format!("R{j} from B - A"));
        }
    }
    // The published rows come from the published R4.
    let published = prs_ball_from(f.ring, 5, b, &Ball::one(f.ring), f.get("R4").unwrap());
    for j in 0..4 {
        if published.step(j).map(|s| &s.poly) != f.get(&format!("R{j}")) {
            bad.push(format!("R{j} from the published R4"));
        }
    }
    let exact = subresultants_minors(&centers(a).unwrap(), &centers(b).unwrap(), 5, 5);
    let r4: Vec<BigInt> = exact.res[4].coeffs().iter().map(|c| c.mod_floor(&BigInt::from(32))).collect();
    if r4 != centers(f.get("R4_true").unwrap()).unwrap().coeffs() {
        bad.push("oracle R4".into());
    }
    outcome("worked_examples", bad.is_empty(), if bad.is_empty() { "all rows bit-exact".into() } else { bad.join(", ") })
}

fn relations_and_reconstruction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = Vec::new();
    for i in 0..100 {
        let d = rng.gen_range(1..=6);
        let a = random_monic(5, d, 3, &mut rng);
        let b = random_monic(5, d, 3, &mut rng);
        let rep = check_relations(&a, &b).unwrap();
        if !rep.all() {
            bad.push(format!("relations #{i}: {:?}", rep.failures));
        }
    }
    let ring = ZmodRing::new(3, 8);
    let mut reconstructed = 0;
    let mut instances = 0;
    while instances < 100 {
        let d = rng.gen_range(2..=6);
        let (a, b) = random_monic_pair(3, d, 8, &mut rng);
        let s = subresultants_minors(&a, &b, d, d);
        let js: Vec<usize> = (1..d).filter(|&j| ring.elem(s.r[j].clone()).is_unit()).collect();
        if js.is_empty() {
            continue;
        }
        instances += 1;
        let red = |p: &ExactPoly| reduce(p, &ring);
        for j in js {
            match reconstruct_pair(d, j, &red(&s.u[j]), &red(&s.u[j - 1]), &red(&s.res[j]), &red(&s.res[j - 1]), &ring) {
                Ok(pair) if pair == (red(&a), red(&b)) => reconstructed += 1,
                other => bad.push(format!("reconstruction d = {d}, j = {j}: {:?}", other.err())),
            }
        }
    }
    outcome(
        "relations_and_reconstruction",
        bad.is_empty(),
        if bad.is_empty() {
            format!("100 relation instances, {reconstructed} reconstructions over {instances} instances")
        } else {
            bad.join("; ")
        },
    )
}

fn ball_arithmetic() -> Outcome {
    let ring = Ring::new(2).unwrap();
    let balls: Vec<Ball> =
        (1..=6i64).flat_map(|n| (0..1i64 << n).map(move |c| Ball::new(ring, c, n))).collect();
    // A few representatives of each coset.
    let reps = |x: &Ball| -> Vec<BigRational> {
        (0..4).map(|k| x.center() + BigRational::from_integer(BigInt::from(k) << x.prec())).collect()
    };
    let mut checked = 0u64;
    let mut bad = Vec::new();
    for x in &balls {
        for y in &balls {
            let (sum, prod) = (x.add_ref(y), x.mul_ref(y));
            let (vx, vy) = (x.valuation(), y.valuation());
            if sum.prec() != x.prec().min(y.prec()) || prod.prec() != (x.prec() + vy).min(y.prec() + vx) {
                bad.push(format!("precision of {x} and {y}"));
            }
            let quot = x.checked_div(y).ok();
            if let Some(q) = &quot {
                if q.prec() != (x.prec() - vy).min(y.prec() + vx - 2 * vy) {
                    bad.push(format!("precision of {x} / {y}"));
                }
            }
            for xr in reps(x) {
                for yr in reps(y) {
                    checked += 1;
                    let mut ok = sum.contains(&(&xr + &yr)) && prod.contains(&(&xr * &yr));
                    if let Some(q) = &quot {
                        ok &= q.contains(&(&xr / &yr));
                    }
                    if !ok {
                        bad.push(format!("{x}, {y} at representatives {xr}, {yr}"));
                    }
                }
            }
        }
    }
    outcome(
        "ball_arithmetic",
        bad.is_empty(),
        if bad.is_empty() { format!("{checked} representative pairs contained") } else { bad[..bad.len().min(5)].join("; ") },
    )
}

fn jacobian_lattice() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    let mut bad = Vec::new();
    let mut done = 0;
    let mut top = 0;
    while done < 20 {
        let d = 2 + done % 2;
        let j = rng.gen_range(1..d);
        let (a, b) = random_monic_pair(2, d, 3, &mut rng);
        let Ok(rep) = jacobian_lattice_check(&a, &b, j, 2) else {
            continue;
        };
        done += 1;
        top = top.max(rep.v_j);
        if !rep.within_bounds {
            bad.push(format!("d = {d}, j = {j}: {:?} with val(r_j) = {}", rep.valuations, rep.v_j));
        }
    }
    outcome(
        "jacobian_lattice",
        bad.is_empty(),
        if bad.is_empty() { format!("20 instances, largest val(r_j) = {top}") } else { bad.join("; ") },
    )
}

fn timed(name: &'static str, kinds: &[(ExperimentKind, u64)]) -> Outcome {
    let start = Instant::now();
    let reps: Vec<Report> = kinds.iter().map(|&(k, p)| experiment(k, p)).collect();
    report_outcome(name, &reps, start.elapsed())
}

fn main() -> ExitCode {
    let criteria: Vec<fn() -> Outcome> = vec![
        stabilized_matches_oracle,
        flat_loss_table,
        worked_examples,
        || timed("valuation_law", &[(ExperimentKind::Vj, 2), (ExperimentKind::Vj, 3)]),
        || timed("delta_tail", &[(ExperimentKind::Deltaj, 2)]),
        || timed("residue_patterns", &[(ExperimentKind::Residue, 2)]),
        relations_and_reconstruction,
        ball_arithmetic,
        jacobian_lattice,
        || timed("float_loss_trend", &[(ExperimentKind::FloatCompare, 2)]),
    ];
    let mut unexpected = 0;
    for run in criteria {
        let o = run();
        let known = KNOWN_FAILURES.contains(&o.name);
        let tag = if o.passed { "PASS" } else { "FAIL" };
        let note = if known && !o.passed { " (known failure)" } else { "" };
        println!("{tag} {}{note}: {}", o.name, o.detail);
        if !o.passed && !known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failures");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
