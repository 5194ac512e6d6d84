use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::{Ball, PadicFloat, Zmod};

/// Coefficient ring interface for dense polynomials.
///
/// `zero_like` and `one_like` build constants living in the same ring as
/// `self` (same prime, modulus or precision), which matters for balls and
/// residue rings whose context is carried by the values themselves.
pub trait Coeff: Clone + Debug + PartialEq {
    /// Whether a zero coefficient is a true zero, so trailing zeros can be trimmed.
    /// Balls keep their formal length instead.
    const EXACT_ZERO: bool;

    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// True when the value is zero (for balls: no known nonzero digit).
    fn is_zero_coeff(&self) -> bool;
    fn div_ref(&self, other: &Self) -> Result<Self>;

    fn from_i64_like(&self, n: i64) -> Self {
        let one = self.one_like();
        let mut acc = self.zero_like();
        let mut base = one;
        let mut m = n.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.add_ref(&base);
            }
            base = base.add_ref(&base);
            m >>= 1;
        }
        if n < 0 {
            acc.neg_ref()
        } else {
            acc
        }
    }

    fn pow_ref(&self, e: u64) -> Self {
        let mut acc = self.one_like();
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

impl Coeff for BigInt {
    const EXACT_ZERO: bool = true;

    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    /// Exact division; fails when the quotient is not an integer.
    fn div_ref(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.div_rem(other);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Coeff for BigRational {
    const EXACT_ZERO: bool = true;

    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn div_ref(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / other)
        }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
}

impl Coeff for Ball {
    const EXACT_ZERO: bool = false;

    /// Exact zero: neutral for sums at any precision.
    fn zero_like(&self) -> Self {
        Ball::exact(self.ring(), 0)
    }
    fn one_like(&self) -> Self {
        Ball::one(self.ring())
    }
    fn add_ref(&self, other: &Self) -> Self {
        Ball::add_ref(self, other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        Ball::sub_ref(self, other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Ball::mul_ref(self, other)
    }
    fn neg_ref(&self) -> Self {
        Ball::neg_ref(self)
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn div_ref(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Ball::exact(self.ring(), n)
    }
}

impl Coeff for PadicFloat {
    const EXACT_ZERO: bool = true;

    fn zero_like(&self) -> Self {
        PadicFloat::zero(self.ring(), self.prec())
    }
    fn one_like(&self) -> Self {
        PadicFloat::from_int(self.ring(), self.prec(), 1)
    }
    fn add_ref(&self, other: &Self) -> Self {
        PadicFloat::add_ref(self, other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        PadicFloat::sub_ref(self, other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        PadicFloat::mul_ref(self, other)
    }
    fn neg_ref(&self) -> Self {
        PadicFloat::neg_ref(self)
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn div_ref(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }
}

impl Coeff for Zmod {
    const EXACT_ZERO: bool = true;

    fn zero_like(&self) -> Self {
        self.ring().elem(0)
    }
    fn one_like(&self) -> Self {
        self.ring().elem(1)
    }
    fn add_ref(&self, other: &Self) -> Self {
        Zmod::add_ref(self, other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        Zmod::sub_ref(self, other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Zmod::mul_ref(self, other)
    }
    fn neg_ref(&self) -> Self {
        Zmod::neg_ref(self)
    }
    fn is_zero_coeff(&self) -> bool {
        self.value().is_zero()
    }
    /// Division by a unit only.
    fn div_ref(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        self.ring().elem(n)
    }
}
