use std::cmp::min;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, RandBigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::padic::arith::{certainly_below_pow, inv_mod_pk, pow_p, residue_u64, strip_p};
use crate::padic::ring::Ring;

/// A `p`-adic number known modulo `p^N`: the coset `c + p^N Z_p`.
///
/// The center is stored as `p^val * unit` with `unit` prime to `p` and reduced
/// into `[0, p^(N - val))`, so structural equality is equality of cosets.
/// A ball with no known nonzero digit stores `unit = 0` and `val = N`.
///
/// Balls whose precision reaches the ring cap are exact. Their center is kept
/// as an unreduced rational `p^val * unit / den` (with `den` prime to `p`), so
/// exact constants never materialize `p^cap`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ball {
    ring: Ring,
    prec: i64,
    val: i64,
    unit: BigInt,
    den: Option<BigInt>,
}

impl Ball {
    /// Builds the canonical ball of center `p^v * num / den` at absolute precision `prec`.
    /// `den` must be positive and prime to `p`.
    fn from_parts(ring: Ring, prec: i64, v: i64, num: BigInt, den: Option<BigInt>) -> Ball {
        let prec = prec.min(ring.cap());
        if num.is_zero() {
            return Ball::zero(ring, prec);
        }
        let p = ring.p();
        let (k, m) = strip_p(&num, p);
        let v = v + k;
        if prec >= ring.cap() {
            let (unit, den) = match den {
                Some(d) if !d.is_one() => {
                    let g = m.gcd(&d);
                    let (m, d) = (m / &g, d / g);
                    (m, if d.is_one() { None } else { Some(d) })
                }
                _ => (m, None),
            };
            return Ball { ring, prec, val: v, unit, den };
        }
        if v >= prec {
            return Ball::zero(ring, prec);
        }
        let k = (prec - v) as u64;
        let unit = match den {
            Some(d) if !d.is_one() => {
                let modulus = pow_p(p, k);
                let inv = inv_mod_pk(&d, p, k).expect("denominator is a unit");
                (m * inv).mod_floor(&modulus)
            }
            _ => {
                if certainly_below_pow(&m, p, k) {
                    m
                } else {
                    m.mod_floor(&pow_p(p, k))
                }
            }
        };
        Ball { ring, prec, val: v, unit, den: None }
    }

    /// The ball `value + O(p^prec)`.
    pub fn new(ring: Ring, value: impl Into<BigInt>, prec: i64) -> Ball {
        Ball::from_parts(ring, prec, 0, value.into(), None)
    }

    /// The ball `p^v * value + O(p^prec)`.
    pub fn from_scaled(ring: Ring, v: i64, value: impl Into<BigInt>, prec: i64) -> Ball {
        Ball::from_parts(ring, prec, v, value.into(), None)
    }

    /// The ball centered at a rational number.
    pub fn from_rational(ring: Ring, value: &BigRational, prec: i64) -> Ball {
        if value.is_zero() {
            return Ball::zero(ring, prec);
        }
        let (num, den) = (value.numer().clone(), value.denom().clone());
        let (dv, dunit) = strip_p(&den, ring.p());
        Ball::from_parts(ring, prec, -dv, num, Some(dunit))
    }

    /// An exactly known integer (precision at the ring cap).
    pub fn exact(ring: Ring, value: impl Into<BigInt>) -> Ball {
        Ball::new(ring, value, ring.cap())
    }

    pub fn exact_rational(ring: Ring, value: &BigRational) -> Ball {
        Ball::from_rational(ring, value, ring.cap())
    }

    pub fn one(ring: Ring) -> Ball {
        Ball::exact(ring, 1)
    }

    /// `O(p^prec)`.
    pub fn zero(ring: Ring, prec: i64) -> Ball {
        let prec = prec.min(ring.cap());
        Ball { ring, prec, val: prec, unit: BigInt::zero(), den: None }
    }

    /// A Haar-uniform element of `Z_p` known at precision `prec`.
    pub fn haar_sample<R: Rng + ?Sized>(ring: Ring, prec: i64, rng: &mut R) -> Ball {
        assert!(prec >= 1, "Haar sampling needs a positive precision");
        let bound = pow_p(ring.p(), prec as u64).to_biguint().unwrap();
        let c = rng.gen_biguint_below(&bound);
        Ball::new(ring, BigInt::from_biguint(Sign::Plus, c), prec)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn p(&self) -> u64 {
        self.ring.p()
    }

    /// Absolute precision `N`.
    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// Valuation of the center, or `N` when no digit is known to be nonzero.
    pub fn valuation(&self) -> i64 {
        self.val
    }

    /// `N - val`; zero for a ball with no known nonzero digit.
    pub fn relative_precision(&self) -> i64 {
        self.prec - self.val
    }

    pub fn is_exact(&self) -> bool {
        self.prec >= self.ring.cap()
    }

    /// True when no digit is known to be nonzero (the ball contains 0).
    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    /// The unit part of the center (zero for an unknown-zero ball).
    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    /// Exact center as a rational number.
    pub fn center(&self) -> BigRational {
        if self.unit.is_zero() {
            return BigRational::zero();
        }
        let pv = pow_p(self.p(), self.val.unsigned_abs());
        let den = self.den.clone().unwrap_or_else(BigInt::one);
        if self.val >= 0 {
            BigRational::new(&self.unit * pv, den)
        } else {
            BigRational::new(self.unit.clone(), den * pv)
        }
    }

    /// Center reduced into `[0, p^k)`; `None` if the center has negative valuation.
    pub fn center_mod_pk(&self, k: u64) -> Option<BigInt> {
        if self.unit.is_zero() {
            return Some(BigInt::zero());
        }
        if self.val < 0 {
            return None;
        }
        if self.val as u64 >= k {
            return Some(BigInt::zero());
        }
        let p = self.p();
        let modulus = pow_p(p, k);
        let rel = k - self.val as u64;
        let unit = match &self.den {
            Some(d) => &self.unit * inv_mod_pk(d, p, rel).expect("denominator is a unit"),
            None => self.unit.clone(),
        };
        Some((unit * pow_p(p, self.val as u64)).mod_floor(&modulus))
    }

    /// Digits `x_v, ..., x_{N-1}` of the canonical center, starting at `min(val, N)`.
    pub fn digits(&self) -> Vec<u64> {
        if self.is_exact() || self.unit.is_zero() {
            return Vec::new();
        }
        let p = BigInt::from(self.p());
        let mut out = Vec::with_capacity(self.relative_precision() as usize);
        let mut cur = self.unit.clone();
        for _ in 0..self.relative_precision() {
            let (q, r) = cur.div_mod_floor(&p);
            out.push(residue_u64(&r, self.p()));
            cur = q;
        }
        out
    }

    /// Same center, absolute precision reset to `prec` (truncating or zero-filling digits).
    pub fn with_prec(&self, prec: i64) -> Ball {
        if self.unit.is_zero() {
            return Ball::zero(self.ring, prec);
        }
        Ball::from_parts(self.ring, prec, self.val, self.unit.clone(), self.den.clone())
    }

    /// Lowers the precision to `min(N, prec)`.
    pub fn truncate(&self, prec: i64) -> Ball {
        if prec >= self.prec {
            self.clone()
        } else {
            self.with_prec(prec)
        }
    }

    /// Raises the precision to `max(N, prec)` by choosing zero for every unknown digit.
    pub fn lift(&self, prec: i64) -> Ball {
        if prec <= self.prec {
            self.clone()
        } else {
            self.with_prec(prec)
        }
    }

    /// Raises the precision to `max(N, prec)` choosing uniformly random unknown digits.
    pub fn lift_random<R: Rng + ?Sized>(&self, prec: i64, rng: &mut R) -> Ball {
        if prec <= self.prec || self.is_exact() {
            return self.clone();
        }
        let extra = (prec - self.prec) as u64;
        let bound = pow_p(self.p(), extra).to_biguint().unwrap();
        let noise = BigInt::from_biguint(Sign::Plus, rng.gen_biguint_below(&bound));
        let noise = Ball::from_scaled(self.ring, self.prec, noise, prec);
        self.lift(prec).add_ref(&noise)
    }

    /// True when the rational `x` lies in the coset.
    pub fn contains(&self, x: &BigRational) -> bool {
        let diff = x - self.center();
        if diff.is_zero() {
            return true;
        }
        let p = self.p();
        let vn = strip_p(diff.numer(), p).0;
        let vd = strip_p(diff.denom(), p).0;
        vn - vd >= self.prec
    }

    fn assert_ring(&self, other: &Ball) {
        assert_eq!(self.ring.p(), other.ring.p(), "balls over different rings");
    }

    fn den_or_one(&self) -> BigInt {
        self.den.clone().unwrap_or_else(BigInt::one)
    }

    fn mul_dens(a: &Option<BigInt>, b: &Option<BigInt>) -> Option<BigInt> {
        match (a, b) {
            (None, None) => None,
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (Some(x), Some(y)) => Some(x * y),
        }
    }

    pub fn add_ref(&self, other: &Ball) -> Ball {
        self.assert_ring(other);
        let m = min(self.prec, other.prec);
        let a_live = !self.unit.is_zero() && self.val < m;
        let b_live = !other.unit.is_zero() && other.val < m;
        match (a_live, b_live) {
            (false, false) => return Ball::zero(self.ring, m),
            (true, false) => return self.with_prec(m),
            (false, true) => return other.with_prec(m),
            _ => {}
        }
        let v = min(self.val, other.val);
        let p = self.p();
        let scale = |b: &Ball, other_den: &Option<BigInt>| -> BigInt {
            let mut t = b.unit.clone();
            if let Some(d) = other_den {
                t *= d;
            }
            if b.val > v {
                t *= pow_p(p, (b.val - v) as u64);
            }
            t
        };
        let num = scale(self, &other.den) + scale(other, &self.den);
        Ball::from_parts(self.ring, m, v, num, Ball::mul_dens(&self.den, &other.den))
    }

    pub fn neg_ref(&self) -> Ball {
        if self.unit.is_zero() {
            return self.clone();
        }
        Ball::from_parts(self.ring, self.prec, self.val, -&self.unit, self.den.clone())
    }

    pub fn sub_ref(&self, other: &Ball) -> Ball {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Ball) -> Ball {
        self.assert_ring(other);
        let m = if self.is_exact() && other.is_exact() {
            self.ring.cap()
        } else {
            min(self.prec.saturating_add(other.val), other.prec.saturating_add(self.val))
        };
        if self.unit.is_zero() || other.unit.is_zero() {
            return Ball::zero(self.ring, m);
        }
        Ball::from_parts(
            self.ring,
            m,
            self.val + other.val,
            &self.unit * &other.unit,
            Ball::mul_dens(&self.den, &other.den),
        )
    }

    /// Quotient with precision `min(N_a - val b, N_b + val a - 2 val b)`.
    pub fn checked_div(&self, other: &Ball) -> Result<Ball> {
        self.assert_ring(other);
        if other.unit.is_zero() {
            return Err(if other.is_exact() {
                Error::DivisionByZero
            } else {
                Error::DivisionByUnknownZero
            });
        }
        let m = if self.is_exact() && other.is_exact() {
            self.ring.cap()
        } else {
            min(
                self.prec.saturating_sub(other.val),
                other.prec.saturating_add(self.val).saturating_sub(2 * other.val),
            )
        };
        if self.unit.is_zero() {
            return Ok(Ball::zero(self.ring, m));
        }
        let mut num = &self.unit * other.den_or_one();
        let mut den = self.den_or_one() * &other.unit;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Ball::from_parts(self.ring, m, self.val - other.val, num, Some(den)))
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, e: u64) -> Ball {
        let mut acc = Ball::one(self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Add for &Ball {
    type Output = Ball;
    fn add(self, rhs: &Ball) -> Ball {
        self.add_ref(rhs)
    }
}

impl Sub for &Ball {
    type Output = Ball;
    fn sub(self, rhs: &Ball) -> Ball {
        self.sub_ref(rhs)
    }
}

impl Mul for &Ball {
    type Output = Ball;
    fn mul(self, rhs: &Ball) -> Ball {
        self.mul_ref(rhs)
    }
}

impl Neg for &Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        self.neg_ref()
    }
}

pub(crate) fn fmt_big_o(f: &mut fmt::Formatter<'_>, p: u64, n: i64) -> fmt::Result {
    if n == 1 {
        write!(f, "O({p})")
    } else {
        write!(f, "O({p}^{n})")
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit.is_zero() {
            if self.is_exact() {
                return write!(f, "0");
            }
            return fmt_big_o(f, self.p(), self.prec);
        }
        write!(f, "{}", self.center())?;
        if !self.is_exact() {
            write!(f, " + ")?;
            fmt_big_o(f, self.p(), self.prec)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ball({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r2() -> Ring {
        Ring::new(2).unwrap()
    }

    fn b(c: i64, n: i64) -> Ball {
        Ball::new(r2(), c, n)
    }

    #[test]
    fn precision_of_sums() {
        assert_eq!(&b(3, 5) + &b(6, 4), b(9, 4));
        assert_eq!(&b(27, 5) - &b(24, 5), b(3, 5));
        let x = b(13, 7);
        assert_eq!(&b(0, 3) + &x, b(13, 3));
    }

    #[test]
    fn precision_of_products() {
        assert_eq!(&b(2, 5) * &b(4, 6), b(8, 7));
        assert_eq!(&b(0, 3) * &b(0, 4), Ball::zero(r2(), 7));
        let x = b(11, 9);
        assert_eq!(&Ball::new(r2(), 1, 9) * &x, x);
    }

    #[test]
    fn precision_of_quotients() {
        assert_eq!(b(4, 5).checked_div(&b(2, 5)).unwrap(), b(2, 4));
        let x = b(11, 9);
        assert_eq!(x.checked_div(&b(1, 9)).unwrap(), x);
        assert_eq!(b(1, 5).checked_div(&b(0, 5)), Err(Error::DivisionByUnknownZero));
        assert_eq!(b(1, 5).checked_div(&Ball::exact(r2(), 0)), Err(Error::DivisionByZero));
        let q = b(3, 5).checked_div(&b(4, 5)).unwrap();
        assert_eq!(q.valuation(), -2);
        assert_eq!(q.prec(), 1);
    }

    #[test]
    fn valuations() {
        assert_eq!(b(12, 5).valuation(), 2);
        assert_eq!(b(0, 5).valuation(), 5);
        let r = BigRational::new(3.into(), 4.into());
        assert_eq!(Ball::from_rational(r2(), &r, 2).valuation(), -2);
    }

    #[test]
    fn canonical_form() {
        assert_eq!(b(37, 5), b(5, 5));
        assert_eq!(b(-1, 3), b(7, 3));
        assert_eq!(b(32, 5), Ball::zero(r2(), 5));
        let x = b(45, 6);
        assert_eq!(x.with_prec(6), x);
    }

    #[test]
    fn display_matches_the_usual_notation() {
        assert_eq!(b(27, 5).to_string(), "27 + O(2^5)");
        assert_eq!(b(1, 1).to_string(), "1 + O(2)");
        assert_eq!(Ball::zero(r2(), 5).to_string(), "O(2^5)");
        let r = BigRational::new(3.into(), 4.into());
        assert_eq!(Ball::from_rational(r2(), &r, 2).to_string(), "3/4 + O(2^2)");
        assert_eq!(Ball::one(r2()).to_string(), "1");
    }

    #[test]
    fn exact_constants_stay_exact() {
        let r = r2();
        let third = Ball::one(r).checked_div(&Ball::exact(r, 3)).unwrap();
        assert!(third.is_exact());
        assert_eq!(third.center(), BigRational::new(1.into(), 3.into()));
        let back = third.mul_ref(&Ball::exact(r, 3));
        assert_eq!(back, Ball::one(r));
        // Mixing with a finite ball reduces to the finite precision.
        let x = third.mul_ref(&b(1, 3));
        assert_eq!(x, b(3, 3));
        assert_eq!(third.center_mod_pk(3), Some(BigInt::from(3)));
    }

    #[test]
    fn digits_and_lifts() {
        assert_eq!(b(6, 5).digits(), vec![1, 1, 0, 0]);
        let x = b(5, 3);
        assert_eq!(x.lift(8), b(5, 8));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let y = x.lift_random(8, &mut rng);
        assert_eq!(y.prec(), 8);
        assert_eq!(y.truncate(3), x);
    }

    #[test]
    fn haar_sampler_is_uniform_on_residues() {
        let r = Ring::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut counts = [0u32; 9];
        let n = 90_000;
        for _ in 0..n {
            let x = Ball::haar_sample(r, 2, &mut rng);
            let c = x.center_mod_pk(2).unwrap();
            counts[usize::try_from(c).unwrap()] += 1;
        }
        for c in counts {
            let f = c as f64 / n as f64;
            assert!((f - 1.0 / 9.0).abs() < 3.0 * (1.0 / 9.0 * 8.0 / 9.0 / n as f64).sqrt() + 1e-3);
        }
    }
}
