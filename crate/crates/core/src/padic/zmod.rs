use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::padic::arith::{inv_mod_pk, pow_p};

/// An element of `Z / p^n Z`, stored as its representative in `[0, p^n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Zmod {
    p: u64,
    n: u64,
    modulus: Arc<BigInt>,
    value: BigInt,
}

/// The ring `Z / p^n Z`, used to build elements sharing one modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZmodRing {
    p: u64,
    n: u64,
    modulus: Arc<BigInt>,
}

impl ZmodRing {
    pub fn new(p: u64, n: u64) -> ZmodRing {
        ZmodRing { p, n, modulus: Arc::new(pow_p(p, n)) }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn elem(&self, value: impl Into<BigInt>) -> Zmod {
        Zmod {
            p: self.p,
            n: self.n,
            modulus: self.modulus.clone(),
            value: value.into().mod_floor(&self.modulus),
        }
    }
}

impl Zmod {
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn ring(&self) -> ZmodRing {
        ZmodRing { p: self.p, n: self.n, modulus: self.modulus.clone() }
    }

    fn with(&self, value: BigInt) -> Zmod {
        Zmod { p: self.p, n: self.n, modulus: self.modulus.clone(), value: value.mod_floor(&self.modulus) }
    }

    pub fn is_unit(&self) -> bool {
        !(&self.value % self.p).is_zero()
    }

    pub fn add_ref(&self, other: &Zmod) -> Zmod {
        self.with(&self.value + &other.value)
    }

    pub fn sub_ref(&self, other: &Zmod) -> Zmod {
        self.with(&self.value - &other.value)
    }

    pub fn mul_ref(&self, other: &Zmod) -> Zmod {
        self.with(&self.value * &other.value)
    }

    pub fn neg_ref(&self) -> Zmod {
        self.with(-&self.value)
    }

    pub fn inv(&self) -> Result<Zmod> {
        inv_mod_pk(&self.value, self.p, self.n)
            .map(|v| self.with(v))
            .ok_or_else(|| Error::NotInvertible(self.value.to_string()))
    }

    /// Division by a unit.
    pub fn checked_div(&self, other: &Zmod) -> Result<Zmod> {
        Ok(self.mul_ref(&other.inv()?))
    }
}

impl fmt::Display for Zmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.value, self.p, self.n)
    }
}

impl fmt::Debug for Zmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_prime_power() {
        let r = ZmodRing::new(3, 2);
        let a = r.elem(7);
        let b = r.elem(5);
        assert_eq!(a.add_ref(&b), r.elem(3));
        assert_eq!(a.mul_ref(&b), r.elem(8));
        assert_eq!(a.checked_div(&b).unwrap().mul_ref(&b), a);
        assert!(a.checked_div(&r.elem(6)).is_err());
    }
}
