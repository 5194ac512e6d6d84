use num_bigint::{BigInt, RandBigInt};
use num_traits::{One, Zero};
use rand::Rng;

use crate::padic::arith::pow_p;
use crate::poly::ExactPoly;

/// Monic polynomial of degree `d` whose lower coefficients are uniform in
/// `[0, p^digits)`, i.e. Haar-random modulo `p^digits`.
pub fn random_monic<R: Rng + ?Sized>(p: u64, d: usize, digits: u64, rng: &mut R) -> ExactPoly {
    let m = pow_p(p, digits);
    let mut c: Vec<BigInt> = (0..d).map(|_| rng.gen_bigint_range(&BigInt::zero(), &m)).collect();
    c.push(BigInt::one());
    ExactPoly::new(c)
}

pub fn random_monic_pair<R: Rng + ?Sized>(p: u64, d: usize, digits: u64, rng: &mut R) -> (ExactPoly, ExactPoly) {
    let a = random_monic(p, d, digits, rng);
    (a, random_monic(p, d, digits, rng))
}
