use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use subres_core::experiments::runner::{run_trials, run_trials_sequential};
use subres_core::experiments::random_monic_pair;
use subres_core::padic::Ring;
use subres_core::poly::FlatPoly;
use subres_core::prs::prs_flat;

const TRIALS: usize = 64;

fn loss_trial(rng: &mut rand_chacha::ChaCha8Rng) -> Option<i64> {
    let ring = Ring::new(2).unwrap();
    let (a, b) = random_monic_pair(2, 20, 64, rng);
    let t = prs_flat(&FlatPoly::from_centers(ring, 64, a.coeffs()), &FlatPoly::from_centers(ring, 64, b.coeffs())).ok()?;
    t.loss().ok()
}

fn runner(c: &mut Criterion) {
    let mut g = c.benchmark_group("flat_loss_d20");
    g.sample_size(20);
    g.bench_function("parallel", |b| b.iter(|| black_box(run_trials(TRIALS, 1, 0, loss_trial))));
    g.bench_function("sequential", |b| b.iter(|| black_box(run_trials_sequential(TRIALS, 1, 0, loss_trial))));
    g.finish();
}

criterion_group!(benches, runner);
criterion_main!(benches);
