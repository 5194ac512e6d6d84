use std::collections::BTreeMap;

use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Sample mean and unbiased variance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Summary {
    pub n: usize,
    pub mean: f64,
    pub var: f64,
}

impl Summary {
    pub fn of(xs: impl IntoIterator<Item = f64>) -> Summary {
        let xs: Vec<f64> = xs.into_iter().collect();
        let n = xs.len();
        if n == 0 {
            return Summary { n, mean: f64::NAN, var: f64::NAN };
        }
        let mean = xs.iter().sum::<f64>() / n as f64;
        let var = if n > 1 { xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64 } else { 0.0 };
        Summary { n, mean, var }
    }

    pub fn stderr(&self) -> f64 {
        (self.var / self.n as f64).sqrt()
    }

    /// `|mean - target| <= z * stderr`.
    pub fn within(&self, target: f64, z: f64) -> bool {
        (self.mean - target).abs() <= z * self.stderr()
    }
}

/// Standard error of an empirical frequency `p_hat` over `n` draws.
pub fn binomial_stderr(p_hat: f64, n: usize) -> f64 {
    (p_hat * (1.0 - p_hat) / n as f64).sqrt()
}

pub type Histogram<K> = BTreeMap<K, u64>;

pub fn histogram<K: Ord>(xs: impl IntoIterator<Item = K>) -> Histogram<K> {
    let mut h = BTreeMap::new();
    for x in xs {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

fn total<K>(h: &Histogram<K>) -> f64 {
    h.values().sum::<u64>() as f64
}

/// Total variation distance between two empirical laws.
pub fn tv_distance<K: Ord>(a: &Histogram<K>, b: &Histogram<K>) -> f64 {
    let (na, nb) = (total(a), total(b));
    let mut s = 0.0;
    for (k, &x) in a {
        s += (x as f64 / na - b.get(k).copied().unwrap_or(0) as f64 / nb).abs();
    }
    for (k, &y) in b {
        if !a.contains_key(k) {
            s += y as f64 / nb;
        }
    }
    s / 2.0
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChiSquare {
    pub stat: f64,
    pub dof: usize,
    pub p_value: f64,
}

/// Two-sample chi-square test of homogeneity. Bins are taken in key order
/// and merged with their successors until every expected count is at least 5.
pub fn chi2_two_sample<K: Ord>(a: &Histogram<K>, b: &Histogram<K>) -> ChiSquare {
    let (na, nb) = (total(a), total(b));
    let n = na + nb;
    let mut keys: Vec<&K> = a.keys().chain(b.keys()).collect();
    keys.sort();
    keys.dedup();
    let mut cells: Vec<(f64, f64)> = Vec::new();
    let mut cur = (0.0, 0.0);
    for k in keys {
        cur.0 += a.get(k).copied().unwrap_or(0) as f64;
        cur.1 += b.get(k).copied().unwrap_or(0) as f64;
        let col = cur.0 + cur.1;
        if col * na.min(nb) / n >= 5.0 {
            cells.push(cur);
            cur = (0.0, 0.0);
        }
    }
    if cur.0 + cur.1 > 0.0 {
        match cells.last_mut() {
            Some(last) => {
                last.0 += cur.0;
                last.1 += cur.1;
            }
            None => cells.push(cur),
        }
    }
    let stat: f64 = cells
        .iter()
        .map(|&(x, y)| {
            let col = x + y;
            let (ea, eb) = (col * na / n, col * nb / n);
            (x - ea).powi(2) / ea + (y - eb).powi(2) / eb
        })
        .sum();
    let dof = cells.len().saturating_sub(1);
    let p_value = if dof == 0 { 1.0 } else { ChiSquared::new(dof as f64).unwrap().sf(stat) };
    ChiSquare { stat, dof, p_value }
}

/// Least squares line `y = slope * x + intercept`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// Pearson correlation of two indicator sequences.
pub fn correlation(x: &[bool], y: &[bool]) -> f64 {
    let n = x.len() as f64;
    let px = x.iter().filter(|&&b| b).count() as f64 / n;
    let py = y.iter().filter(|&&b| b).count() as f64 / n;
    let pxy = x.iter().zip(y).filter(|(a, b)| **a && **b).count() as f64 / n;
    let den = (px * (1.0 - px) * py * (1.0 - py)).sqrt();
    if den == 0.0 {
        0.0
    } else {
        (pxy - px * py) / den
    }
}
