use crate::error::Result;
use crate::padic::{Ball, Ring};
use crate::poly::dense::BallPoly;

/// Polynomial with one absolute precision shared by every coefficient:
/// `sum a_i X^i + O(p^N)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatPoly {
    ring: Ring,
    prec: i64,
    coeffs: Vec<Ball>,
}

impl FlatPoly {
    /// Truncates every coefficient of `p` to the smallest precision found among them.
    pub fn flatten(p: &BallPoly) -> FlatPoly {
        let ring = p.ring().expect("flattening needs at least one coefficient");
        let prec = p.min_prec().unwrap();
        FlatPoly { ring, prec, coeffs: p.coeffs().iter().map(|c| c.truncate(prec)).collect() }
    }

    /// Builds a flat polynomial from centers known modulo `p^prec`.
    pub fn from_centers(ring: Ring, prec: i64, centers: &[num_bigint::BigInt]) -> FlatPoly {
        FlatPoly { ring, prec, coeffs: centers.iter().map(|c| Ball::new(ring, c.clone(), prec)).collect() }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// The shared absolute precision `N`.
    pub fn prec(&self) -> i64 {
        self.prec
    }

    pub fn coeffs(&self) -> &[Ball] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_ball_poly(&self) -> BallPoly {
        BallPoly::new(self.coeffs.clone())
    }

    pub fn gauss_valuation(&self) -> Result<i64> {
        self.to_ball_poly().gauss_valuation()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_takes_the_smallest_precision() {
        let r = Ring::new(2).unwrap();
        let p = BallPoly::new(vec![Ball::new(r, 13, 5), Ball::new(r, 15, 3)]);
        let f = FlatPoly::flatten(&p);
        assert_eq!(f.prec(), 3);
        assert_eq!(f.coeffs(), &[Ball::new(r, 5, 3), Ball::new(r, 7, 3)]);
        assert_eq!(FlatPoly::flatten(&f.to_ball_poly()), f);
        let q = BallPoly::new(vec![Ball::new(r, 13, 5), Ball::new(r, 15, 5)]);
        assert_eq!(FlatPoly::flatten(&q).prec(), 5);
    }
}
