use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generator of trial `trial`: the generator seeded with `seed` on stream
/// `stream` (one stream per independent series of trials inside an
/// experiment), advanced to a block range of `2^40` words owned by the trial.
pub fn trial_rng(seed: u64, stream: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos((trial as u128) << 40);
    rng
}

/// Runs `trials` independent trials and returns their results in trial order.
///
/// With the `parallel` feature trials are spread over the rayon pool; the
/// output does not depend on the number of workers.
pub fn run_trials<T, F>(trials: usize, seed: u64, stream: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..trials).into_par_iter().map(|t| f(&mut trial_rng(seed, stream, t as u64))).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_trials_sequential(trials, seed, stream, f)
    }
}

/// Same as [`run_trials`] on the calling thread.
pub fn run_trials_sequential<T, F>(trials: usize, seed: u64, stream: u64, f: F) -> Vec<T>
where
    F: Fn(&mut ChaCha8Rng) -> T,
{
    (0..trials).map(|t| f(&mut trial_rng(seed, stream, t as u64))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |r: &mut ChaCha8Rng| r.gen::<u64>();
        assert_eq!(run_trials(100, 9, 2, f), run_trials_sequential(100, 9, 2, f));
        assert_ne!(run_trials_sequential(3, 9, 2, f), run_trials_sequential(3, 9, 3, f));
        let mut a = run_trials_sequential(64, 1, 0, f);
        let mut b = run_trials_sequential(64, 2, 0, f);
        a.sort();
        b.sort();
        assert_ne!(a, b);
    }
}
