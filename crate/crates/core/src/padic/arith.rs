//! Integer helpers shared by balls, floats and residue rings: powers of `p`,
//! `p`-adic valuations of integers and inverses modulo `p^k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `p^k` for `k >= 0`.
pub fn pow_p(p: u64, k: u64) -> BigInt {
    if p == 2 {
        BigInt::one() << k
    } else {
        num_traits::pow(BigInt::from(p), k as usize)
    }
}

/// Largest `b` with `2^b <= p`.
pub(crate) fn floor_log2(p: u64) -> u64 {
    63 - p.leading_zeros() as u64
}

/// True when `0 <= x < p^k` can be decided from the bit length alone.
pub(crate) fn certainly_below_pow(x: &BigInt, p: u64, k: u64) -> bool {
    !x.is_negative() && x.bits() <= k.saturating_mul(floor_log2(p))
}

/// Removes every factor `p` from a nonzero integer, returning `(v_p(x), x / p^v)`.
pub fn strip_p(x: &BigInt, p: u64) -> (i64, BigInt) {
    debug_assert!(!x.is_zero());
    if p == 2 {
        let tz = x.trailing_zeros().unwrap_or(0);
        return (tz as i64, x >> tz);
    }
    let pb = BigInt::from(p);
    let mut v = 0i64;
    let mut cur = x.clone();
    loop {
        let (q, r) = cur.div_rem(&pb);
        if !r.is_zero() {
            return (v, cur);
        }
        cur = q;
        v += 1;
    }
}

/// `p`-adic valuation of an integer, `None` for zero.
pub fn int_valuation(x: &BigInt, p: u64) -> Option<i64> {
    if x.is_zero() {
        None
    } else {
        Some(strip_p(x, p).0)
    }
}

/// `x mod p` as a machine integer in `[0, p)`.
pub(crate) fn residue_u64(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of a `p`-adic unit modulo `p^k` by Newton iteration
/// `x <- x (2 - a x)`, doubling the number of correct digits each round.
///
/// Returns `None` when `a` is divisible by `p`. The result lies in `[0, p^k)`.
pub fn inv_mod_pk(a: &BigInt, p: u64, k: u64) -> Option<BigInt> {
    let a0 = residue_u64(a, p);
    if a0 == 0 {
        return None;
    }
    if k == 0 {
        return Some(BigInt::zero());
    }
    let x0 = if p == 2 { 1 } else { pow_mod_u64(a0, p - 2, p) };
    let mut x = BigInt::from(x0);
    let mut prec = 1u64;
    let two = BigInt::from(2u8);
    while prec < k {
        prec = (2 * prec).min(k);
        let m = pow_p(p, prec);
        let ax = (a * &x).mod_floor(&m);
        x = (&x * (&two - ax)).mod_floor(&m);
    }
    Some(x)
}

/// Deterministic primality test for the small primes used as residue characteristics.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strip_and_valuation() {
        assert_eq!(strip_p(&BigInt::from(12), 2), (2, BigInt::from(3)));
        assert_eq!(strip_p(&BigInt::from(-18), 3), (2, BigInt::from(-2)));
        assert_eq!(int_valuation(&BigInt::from(0), 5), None);
        assert_eq!(int_valuation(&BigInt::from(250), 5), Some(3));
    }

    #[test]
    fn newton_inverse_matches_brute_force() {
        for p in [2u64, 3, 5, 7] {
            for k in 1..6u64 {
                let m = pow_p(p, k);
                let m_u = m.to_u64().unwrap();
                for a in 0..m_u {
                    let inv = inv_mod_pk(&BigInt::from(a), p, k);
                    if a % p == 0 {
                        assert!(inv.is_none());
                        continue;
                    }
                    let brute = (1..m_u).find(|x| (a * x) % m_u == 1).unwrap();
                    assert_eq!(inv.unwrap(), BigInt::from(brute), "p={p} k={k} a={a}");
                }
            }
        }
    }

    #[test]
    fn inverse_of_negative_unit() {
        let inv = inv_mod_pk(&BigInt::from(-3), 2, 10).unwrap();
        let m = pow_p(2, 10);
        assert_eq!((BigInt::from(-3) * inv).mod_floor(&m), BigInt::one());
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
