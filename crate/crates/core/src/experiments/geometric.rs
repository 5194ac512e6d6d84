use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Independent variables `X_0, ..., X_{d-1}` with `P[X = k] = (1 - 1/q) q^{-k}`,
/// extended by `X_i = +inf` for `i < 0` and `X_i = 0` for `i >= d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeometricModel {
    pub q: u64,
}

impl GeometricModel {
    pub fn new(q: u64) -> GeometricModel {
        assert!(q >= 2, "residue field has at least two elements");
        GeometricModel { q }
    }

    /// One draw of `X`: the number of leading zero digits of a Haar-random element.
    pub fn sample_x<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        let mut k = 0;
        while rng.gen_range(0..self.q) == 0 {
            k += 1;
        }
        k
    }

    /// `Y_j = sum_{i=0}^{d} min(X_{j-i}, ..., X_{j+i})` from the given draws
    /// `X_0, ..., X_{d-1}`.
    pub fn y_from(xs: &[u32], j: usize) -> u32 {
        let d = xs.len();
        let mut total = 0;
        let mut m = u32::MAX;
        // Windows grow by one index on each side; the part below 0 is ignored
        // and any window reaching index d contains a zero.
        for i in 0..d.saturating_sub(j) {
            if i <= j {
                m = m.min(xs[j - i]);
            }
            m = m.min(xs[j + i]);
            total += m;
        }
        total
    }

    /// One draw of `Y_j` with fresh `X_i`.
    pub fn sample_yj<R: Rng + ?Sized>(&self, d: usize, j: usize, rng: &mut R) -> u32 {
        assert!(j < d, "0 <= j < d");
        let xs: Vec<u32> = (0..d).map(|_| self.sample_x(rng)).collect();
        Self::y_from(&xs, j)
    }

    /// One draw of `(X, X' + min(X', floor(X / 2)))`.
    pub fn sample_joint<R: Rng + ?Sized>(&self, rng: &mut R) -> (u32, u32) {
        let x = self.sample_x(rng);
        let x2 = self.sample_x(rng);
        (x, x2 + x2.min(x / 2))
    }

    fn term(&self, s: u32) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(self.q).pow(s) - 1)
    }

    /// `E[V_j] = sum_{i=1}^{d-j} 1 / (q^{sigma(i)} - 1)`.
    pub fn closed_form_mean(&self, d: usize, j: usize) -> BigRational {
        assert!(j < d, "0 <= j < d");
        sigma(d)[..d - j].iter().fold(BigRational::zero(), |acc, &s| acc + self.term(s))
    }

    /// `Var[V_j] = sum_{i=1}^{d-j} (2i - 1) q^{tau(i)} / (q^{tau(i)} - 1)^2`, where
    /// `tau` lists `sigma(1), ..., sigma(d-j)` in increasing order.
    pub fn closed_form_var(&self, d: usize, j: usize) -> BigRational {
        assert!(j < d, "0 <= j < d");
        let mut tau = sigma(d)[..d - j].to_vec();
        tau.sort_unstable();
        tau.iter().enumerate().fold(BigRational::zero(), |acc, (i, &s)| {
            let qs = BigInt::from(self.q).pow(s);
            let den = (&qs - 1u32) * (&qs - 1u32);
            acc + BigRational::new(BigInt::from(2 * i + 1) * qs, den)
        })
    }

    /// `P[delta_j >= m]` lower bound `(q-1)(q^j-1) / (q^{j+1}-1) q^{-m}`.
    pub fn delta_bound(&self, j: usize, m: u32) -> BigRational {
        let q = BigInt::from(self.q);
        let qj = q.pow(j as u32);
        BigRational::new((&q - 1u32) * (&qj - 1u32), (&qj * &q - 1u32) * q.pow(m))
    }

    /// Exact `P[delta_{d-1} >= m] = q (q^j-1) / (q^{j+1}-1) q^{-m}` with `j = d - 1`.
    pub fn delta_top(&self, d: usize, m: u32) -> BigRational {
        let q = BigInt::from(self.q);
        let qj = q.pow(d as u32 - 1);
        BigRational::new(&q * (&qj - 1u32), (&qj * &q - 1u32) * q.pow(m))
    }
}

/// The permutation of `[1, d]` taking the odd values increasingly, then the
/// even values decreasingly.
pub fn sigma(d: usize) -> Vec<u32> {
    let d = d as u32;
    (1..=d).filter(|k| k % 2 == 1).chain((1..=d).rev().filter(|k| k % 2 == 0)).collect()
}

pub(crate) fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sigma_orders() {
        assert_eq!(sigma(5), vec![1, 3, 5, 4, 2]);
        assert_eq!(sigma(6), vec![1, 3, 5, 6, 4, 2]);
        assert_eq!(sigma(1), vec![1]);
    }

    #[test]
    fn closed_forms() {
        let g = GeometricModel::new(2);
        assert_eq!(g.closed_form_mean(5, 4), rat(1, 1));
        let want = rat(1, 1) + rat(1, 7) + rat(1, 31) + rat(1, 15) + rat(1, 3);
        assert_eq!(g.closed_form_mean(5, 0), want);
        // Top index: one geometric variable, variance q / (q - 1)^2.
        let g3 = GeometricModel::new(3);
        assert_eq!(g3.closed_form_var(4, 3), rat(3, 4));
        assert_eq!(g.delta_bound(3, 1), rat(7, 30));
        assert_eq!(g.delta_bound(0, 2), rat(0, 1));
        for q in [2u64, 3, 5] {
            let g = GeometricModel::new(q);
            for d in 1..9 {
                for j in 0..d {
                    let m = g.closed_form_mean(d, j);
                    assert!(m >= rat(1, q as i64 - 1));
                    assert!(m < rat(q as i64, (q as i64 - 1).pow(2)));
                }
            }
        }
    }

    #[test]
    fn windows() {
        // d = 4, j = 1: windows {1}, {0,1,2}, {0..3}.
        let xs = [5, 3, 4, 2];
        assert_eq!(GeometricModel::y_from(&xs, 1), 3 + 3 + 2);
        assert_eq!(GeometricModel::y_from(&xs, 3), 2);
        assert_eq!(GeometricModel::y_from(&xs, 0), 5 + 3 + 3 + 2);
    }

    #[test]
    fn sampler_mean_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (q, d, j) in [(2u64, 5usize, 0usize), (3, 6, 2), (2, 6, 5)] {
            let g = GeometricModel::new(q);
            let n = 40_000;
            let xs: Vec<f64> = (0..n).map(|_| g.sample_yj(d, j, &mut rng) as f64).collect();
            let mean = xs.iter().sum::<f64>() / n as f64;
            let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
            let se = (var / n as f64).sqrt();
            let cf = to_f64(&g.closed_form_mean(d, j));
            assert!((mean - cf).abs() < 4.0 * se, "q={q} d={d} j={j}: {mean} vs {cf}");
            let cv = to_f64(&g.closed_form_var(d, j));
            assert!((var - cv).abs() < 0.1 * cv, "variance {var} vs {cv}");
        }
    }
}
