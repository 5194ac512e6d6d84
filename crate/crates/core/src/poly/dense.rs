use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::padic::arith::int_valuation;
use crate::padic::{Ball, Ring};
use crate::poly::coeff::Coeff;

/// Dense univariate polynomial, coefficients stored lowest degree first.
///
/// Over exact coefficient types trailing zeros are trimmed, so the zero
/// polynomial has no coefficients. Over balls the stored length is the formal
/// degree plus one, even when the leading ball has no known nonzero digit.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type ExactPoly = Poly<BigInt>;
pub type RationalPoly = Poly<BigRational>;
pub type BallPoly = Poly<Ball>;

impl<C: Coeff> Poly<C> {
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// The zero polynomial (no coefficients).
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn normalize(&mut self) {
        if C::EXACT_ZERO {
            while self.coeffs.last().is_some_and(|c| c.is_zero_coeff()) {
                self.coeffs.pop();
            }
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Number of stored coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Formal degree, `None` for an empty coefficient list.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True when every coefficient is zero (for balls: has no known nonzero digit).
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_coeff())
    }

    pub fn coeff(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    /// Leading coefficient of the formal degree.
    pub fn lc(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Keeps the coefficients of `X^0, ..., X^{len-1}`.
    pub fn truncated(&self, len: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.truncate(len);
        Poly::new(c)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    fn sample(&self, other: &Self) -> Option<C> {
        self.coeffs.first().or_else(|| other.coeffs.first()).cloned()
    }

    fn combine(&self, other: &Self, f: impl Fn(&C, &C) -> C, g: impl Fn(&C) -> C) -> Self {
        let n = self.len().max(other.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => g(b),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.add_ref(b), |b| b.clone())
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.sub_ref(b), |b| b.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.neg_ref()).collect())
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        let Some(s) = self.coeffs.first() else {
            return self.clone();
        };
        let z = s.zero_like();
        let mut out = vec![z; k];
        out.extend(self.coeffs.iter().cloned());
        Poly::new(out)
    }

    /// Schoolbook product.
    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return Poly::zero();
        }
        let z = self.sample(other).unwrap().zero_like();
        let mut out = vec![z; self.len() + other.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }

    fn divisor_error() -> Error {
        if C::EXACT_ZERO {
            Error::DivisionByZero
        } else {
            Error::LeadingCoefficientUnknownZero { step: 0 }
        }
    }

    /// Euclidean division `A = B Q + R` with `deg R < deg B`.
    ///
    /// Each step subtracts `q_i X^i B` from the running remainder and drops the
    /// cancelled top coefficient without computing it, so ball precision
    /// follows the scalar rules exactly. The remainder has `deg B` formal
    /// coefficients.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        let lc = b.lc().ok_or(Error::DivisionByZero)?;
        if lc.is_zero_coeff() {
            return Err(Self::divisor_error());
        }
        let db = b.len() - 1;
        if self.len() <= db {
            return Ok((Poly::zero(), self.clone()));
        }
        let shift = self.len() - 1 - db;
        let mut r = self.coeffs.clone();
        let mut q = vec![lc.zero_like(); shift + 1];
        for i in (0..=shift).rev() {
            let qi = r[db + i].div_ref(lc)?;
            for k in 0..db {
                r[k + i] = r[k + i].sub_ref(&qi.mul_ref(&b.coeffs[k]));
            }
            q[i] = qi;
        }
        r.truncate(db);
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        Ok(self.divrem(b)?.1)
    }

    /// Pseudo-remainder `lc(B)^(deg A - deg B + 1) (A % B)` by fraction-free
    /// elimination: each step replaces `R` by `lc(B) R - r_top X^i B`.
    pub fn prem(&self, b: &Self) -> Result<Self> {
        let lc = b.lc().ok_or(Error::DivisionByZero)?;
        if lc.is_zero_coeff() {
            return Err(Self::divisor_error());
        }
        let db = b.len() - 1;
        if self.len() <= db {
            return Err(Error::InvalidInput("prem needs deg A >= deg B".into()));
        }
        let shift = self.len() - 1 - db;
        let mut r = self.coeffs.clone();
        for i in (0..=shift).rev() {
            let top = r[db + i].clone();
            for (m, rm) in r.iter_mut().enumerate().take(db + i) {
                let mut t = lc.mul_ref(rm);
                if m >= i {
                    t = t.sub_ref(&top.mul_ref(&b.coeffs[m - i]));
                }
                *rm = t;
            }
            r.pop();
        }
        Ok(Poly::new(r))
    }

    /// Pseudo-division: returns `(Q, R)` with `lc(B)^(deg A - deg B + 1) A = Q B + R`,
    /// where `R = prem(A, B)`.
    pub fn pseudo_divrem(&self, b: &Self) -> Result<(Self, Self)> {
        let lc = b.lc().ok_or(Error::DivisionByZero)?;
        if lc.is_zero_coeff() {
            return Err(Self::divisor_error());
        }
        let db = b.len() - 1;
        if self.len() <= db {
            return Err(Error::InvalidInput("prem needs deg A >= deg B".into()));
        }
        let shift = self.len() - 1 - db;
        let mut r = self.coeffs.clone();
        let mut q = vec![lc.zero_like(); shift + 1];
        for i in (0..=shift).rev() {
            let top = r[db + i].clone();
            for qk in q.iter_mut().skip(i + 1) {
                *qk = lc.mul_ref(qk);
            }
            q[i] = top.clone();
            for (m, rm) in r.iter_mut().enumerate().take(db + i) {
                let mut t = lc.mul_ref(rm);
                if m >= i {
                    t = t.sub_ref(&top.mul_ref(&b.coeffs[m - i]));
                }
                *rm = t;
            }
            r.pop();
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Divides every coefficient by `c`.
    pub fn div_scalar(&self, c: &C) -> Result<Self> {
        Ok(Poly::new(self.coeffs.iter().map(|a| a.div_ref(c)).collect::<Result<Vec<_>>>()?))
    }
}

impl ExactPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Minimum `p`-adic valuation of the coefficients.
    pub fn gauss_valuation(&self, p: u64) -> Result<i64> {
        self.coeffs
            .iter()
            .filter_map(|c| int_valuation(c, p))
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn to_balls(&self, ring: Ring, prec: i64) -> BallPoly {
        self.map(|c| Ball::new(ring, c.clone(), prec))
    }

    pub fn to_rational(&self) -> RationalPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl BallPoly {
    /// Minimum valuation over the coefficients, counting a ball with no known
    /// nonzero digit at its precision.
    pub fn gauss_valuation(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.coeffs.iter().map(|c| c.valuation()).min().unwrap())
    }

    /// Smallest absolute precision among the coefficients.
    pub fn min_prec(&self) -> Option<i64> {
        self.coeffs.iter().map(|c| c.prec()).min()
    }

    /// Raises every coefficient to precision `prec` by zero-filling unknown digits.
    pub fn lift(&self, prec: i64) -> BallPoly {
        self.map(|c| c.lift(prec))
    }

    pub fn truncate_prec(&self, prec: i64) -> BallPoly {
        self.map(|c| c.truncate(prec))
    }

    pub fn ring(&self) -> Option<Ring> {
        self.coeffs.first().map(|c| c.ring())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn divrem_identity_over_rationals() {
        let a = ExactPoly::from_i64(&[-1, 0, 1]).to_rational();
        let b = ExactPoly::from_i64(&[-1, 1]).to_rational();
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, ExactPoly::from_i64(&[1, 1]).to_rational());
        assert!(r.is_zero());
    }

    #[test]
    fn prem_is_fraction_free() {
        let a = ExactPoly::from_i64(&[0, 0, 1]);
        let b = ExactPoly::from_i64(&[1, 2]);
        assert_eq!(a.prem(&b).unwrap(), ExactPoly::from_i64(&[1]));
        let a = ExactPoly::from_i64(&[3, 1, 4, 1]);
        let b = ExactPoly::from_i64(&[5, 9, 2, 1]);
        assert_eq!(a.prem(&b).unwrap(), a.sub_ref(&b));
        let a = ExactPoly::from_i64(&[7, -3, 0, 5, 2, 1]);
        let b = ExactPoly::from_i64(&[1, 4, 3]);
        let (q, r) = a.pseudo_divrem(&b).unwrap();
        assert_eq!(r, a.prem(&b).unwrap());
        let lhs = a.scale(&BigInt::from(81));
        assert_eq!(lhs, q.mul_ref(&b).add_ref(&r));
    }

    #[test]
    fn gauss_valuations() {
        assert_eq!(ExactPoly::from_i64(&[6, 4]).gauss_valuation(2), Ok(1));
        assert_eq!(ExactPoly::from_i64(&[6, 4, 1]).gauss_valuation(2), Ok(0));
        assert_eq!(ExactPoly::zero().gauss_valuation(2), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn ball_divisor_with_unknown_leading_coefficient() {
        let r = Ring::new(2).unwrap();
        let a = ExactPoly::from_i64(&[1, 2, 1]).to_balls(r, 5);
        let b = Poly::new(vec![Ball::new(r, 1, 5), Ball::zero(r, 5)]);
        assert_eq!(b.degree(), Some(1));
        assert_eq!(a.divrem(&b), Err(Error::LeadingCoefficientUnknownZero { step: 0 }));
        assert!(BigInt::zero().is_zero_coeff());
    }
}
