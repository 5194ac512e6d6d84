use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::padic::arith::{inv_mod_pk, pow_p, residue_u64, strip_p};
use crate::padic::ring::Ring;

/// Ultrametric floating point number `p^e * s` with a significand of `N` digits.
///
/// Every operation computes the exact result of the denoted operands and keeps
/// the first `N` digits of its expansion starting from its valuation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PadicFloat {
    ring: Ring,
    prec: u32,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Zero,
    Num { exp: i64, sig: BigInt },
}

impl PadicFloat {
    /// Truncates the exact number `p^e * m` to `prec` digits.
    fn normalize(ring: Ring, prec: u32, e: i64, m: BigInt) -> PadicFloat {
        if m.is_zero() {
            return PadicFloat::zero(ring, prec);
        }
        let (k, unit) = strip_p(&m, ring.p());
        let modulus = pow_p(ring.p(), prec as u64);
        let sig = if unit.is_negative() || unit >= modulus { unit.mod_floor(&modulus) } else { unit };
        PadicFloat { ring, prec, repr: Repr::Num { exp: e + k, sig } }
    }

    pub fn zero(ring: Ring, prec: u32) -> PadicFloat {
        assert!(prec >= 1, "floats need at least one digit");
        PadicFloat { ring, prec, repr: Repr::Zero }
    }

    pub fn from_int(ring: Ring, prec: u32, value: impl Into<BigInt>) -> PadicFloat {
        assert!(prec >= 1, "floats need at least one digit");
        PadicFloat::normalize(ring, prec, 0, value.into())
    }

    pub fn from_rational(ring: Ring, prec: u32, value: &BigRational) -> PadicFloat {
        if value.is_zero() {
            return PadicFloat::zero(ring, prec);
        }
        let p = ring.p();
        let (dv, dunit) = strip_p(value.denom(), p);
        let inv = inv_mod_pk(&dunit, p, prec as u64).expect("denominator unit");
        let (nv, nunit) = strip_p(value.numer(), p);
        PadicFloat::normalize(ring, prec, nv - dv, nunit * inv)
    }

    /// Builds `p^exp * sig` directly; `sig` must be a unit.
    pub fn from_parts(ring: Ring, prec: u32, exp: i64, sig: impl Into<BigInt>) -> Result<PadicFloat> {
        let sig = sig.into();
        if residue_u64(&sig, ring.p()) == 0 {
            return Err(Error::InvalidInput("significand must be prime to p".into()));
        }
        Ok(PadicFloat::normalize(ring, prec, exp, sig))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Number of significand digits `N`.
    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero)
    }

    /// Exponent, which is also the valuation; `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Num { exp, .. } => Some(*exp),
        }
    }

    pub fn significand(&self) -> Option<&BigInt> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Num { sig, .. } => Some(sig),
        }
    }

    /// `(e, significand, N)`, with `(0, 0, N)` for zero.
    pub fn triple(&self) -> (i64, BigInt, u32) {
        match &self.repr {
            Repr::Zero => (0, BigInt::zero(), self.prec),
            Repr::Num { exp, sig } => (*exp, sig.clone(), self.prec),
        }
    }

    /// The denoted exact value.
    pub fn value(&self) -> BigRational {
        match &self.repr {
            Repr::Zero => BigRational::zero(),
            Repr::Num { exp, sig } => {
                let pe = pow_p(self.ring.p(), exp.unsigned_abs());
                if *exp >= 0 {
                    BigRational::from_integer(sig * pe)
                } else {
                    BigRational::new(sig.clone(), pe)
                }
            }
        }
    }

    /// Significand digits `d_0, ..., d_{N-1}`.
    pub fn digits(&self) -> Vec<u64> {
        let Repr::Num { sig, .. } = &self.repr else {
            return Vec::new();
        };
        let p = BigInt::from(self.ring.p());
        let mut cur = sig.clone();
        (0..self.prec)
            .map(|_| {
                let (q, r) = cur.div_rem(&p);
                cur = q;
                residue_u64(&r, self.ring.p())
            })
            .collect()
    }

    fn check(&self, other: &PadicFloat) {
        assert_eq!(self.ring.p(), other.ring.p(), "floats over different rings");
        assert_eq!(self.prec, other.prec, "floats of different precisions");
    }

    /// Exact `self + sign * other`, truncated.
    fn add_signed(&self, other: &PadicFloat, negate: bool) -> PadicFloat {
        self.check(other);
        match (&self.repr, &other.repr) {
            (_, Repr::Zero) => self.clone(),
            (Repr::Zero, _) => {
                if negate {
                    other.neg_ref()
                } else {
                    other.clone()
                }
            }
            (Repr::Num { exp: ea, sig: sa }, Repr::Num { exp: eb, sig: sb }) => {
                let p = self.ring.p();
                let v = (*ea).min(*eb);
                let ta = if *ea > v { sa * pow_p(p, (*ea - v) as u64) } else { sa.clone() };
                let tb = if *eb > v { sb * pow_p(p, (*eb - v) as u64) } else { sb.clone() };
                let s = if negate { ta - tb } else { ta + tb };
                PadicFloat::normalize(self.ring, self.prec, v, s)
            }
        }
    }

    pub fn add_ref(&self, other: &PadicFloat) -> PadicFloat {
        self.add_signed(other, false)
    }

    /// Negation; the significand of `-x` is truncated like any other result.
    pub fn neg_ref(&self) -> PadicFloat {
        match &self.repr {
            Repr::Zero => self.clone(),
            Repr::Num { exp, sig } => PadicFloat::normalize(self.ring, self.prec, *exp, -sig),
        }
    }

    /// Exact difference, truncated (so `x - x` is zero).
    pub fn sub_ref(&self, other: &PadicFloat) -> PadicFloat {
        self.add_signed(other, true)
    }

    pub fn mul_ref(&self, other: &PadicFloat) -> PadicFloat {
        self.check(other);
        match (&self.repr, &other.repr) {
            (Repr::Num { exp: ea, sig: sa }, Repr::Num { exp: eb, sig: sb }) => {
                PadicFloat::normalize(self.ring, self.prec, ea + eb, sa * sb)
            }
            _ => PadicFloat::zero(self.ring, self.prec),
        }
    }

    /// Quotient; the significand of the divisor is inverted by Newton lifting.
    pub fn checked_div(&self, other: &PadicFloat) -> Result<PadicFloat> {
        self.check(other);
        let Repr::Num { exp: eb, sig: sb } = &other.repr else {
            return Err(Error::DivisionByZero);
        };
        match &self.repr {
            Repr::Zero => Ok(self.clone()),
            Repr::Num { exp: ea, sig: sa } => {
                let inv = inv_mod_pk(sb, self.ring.p(), self.prec as u64).expect("significand is a unit");
                Ok(PadicFloat::normalize(self.ring, self.prec, ea - eb, sa * inv))
            }
        }
    }
}

impl fmt::Display for PadicFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.ring.p();
        match &self.repr {
            Repr::Zero => write!(f, "0"),
            Repr::Num { exp, .. } => {
                let digits: Vec<String> = self.digits().iter().map(|d| d.to_string()).collect();
                write!(f, "{p}^{exp} * ({})_{p}", digits.join(" "))
            }
        }
    }
}

impl fmt::Debug for PadicFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PadicFloat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fl(prec: u32, exp: i64, sig: i64) -> PadicFloat {
        PadicFloat::from_parts(Ring::new(2).unwrap(), prec, exp, sig).unwrap()
    }

    #[test]
    fn sums_are_truncated_from_their_valuation() {
        assert_eq!(fl(4, 0, 1).add_ref(&fl(4, 0, 15)), fl(4, 4, 1));
        assert_eq!(fl(3, 0, 7).add_ref(&fl(3, 0, 3)), fl(3, 1, 5));
        let z = PadicFloat::zero(Ring::new(2).unwrap(), 3);
        assert_eq!(fl(3, 2, 5).add_ref(&z), fl(3, 2, 5));
        assert!(fl(3, 2, 5).sub_ref(&fl(3, 2, 5)).is_zero());
    }

    #[test]
    fn quotients() {
        let x = fl(5, 3, 11);
        assert_eq!(x.checked_div(&x).unwrap(), fl(5, 0, 1));
        assert_eq!(fl(3, 0, 1).checked_div(&fl(3, 0, 3)).unwrap(), fl(3, 0, 3));
        let z = PadicFloat::zero(Ring::new(2).unwrap(), 3);
        assert!(z.checked_div(&fl(3, 0, 3)).unwrap().is_zero());
        assert_eq!(fl(3, 0, 1).checked_div(&z), Err(Error::DivisionByZero));
    }

    #[test]
    fn exponents_add_under_products() {
        let x = fl(6, -2, 13);
        let y = fl(6, 5, 7);
        assert_eq!(x.mul_ref(&y).exponent(), Some(3));
    }

    #[test]
    fn rendering() {
        assert_eq!(fl(4, 1, 5).to_string(), "2^1 * (1 0 1 0)_2");
        assert_eq!(fl(4, 1, 5).triple(), (1, BigInt::from(5), 4));
    }
}
