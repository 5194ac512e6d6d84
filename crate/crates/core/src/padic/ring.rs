use crate::error::{Error, Result};
use crate::padic::arith::is_prime;

/// Default precision assigned to exactly representable constants.
pub const DEFAULT_PRECISION_CAP: i64 = 1 << 30;

/// The ring of `p`-adic integers together with the precision cap used for exact constants.
///
/// Residue cardinality `q` equals `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    p: u64,
    cap: i64,
}

impl Ring {
    pub fn new(p: u64) -> Result<Self> {
        Self::with_cap(p, DEFAULT_PRECISION_CAP)
    }

    pub fn with_cap(p: u64, cap: i64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if cap < 1 {
            return Err(Error::InvalidInput(format!("precision cap {cap} must be positive")));
        }
        Ok(Ring { p, cap })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Cardinality of the residue field.
    pub fn q(&self) -> u64 {
        self.p
    }

    /// Balls at or above this absolute precision are treated as exact.
    pub fn cap(&self) -> i64 {
        self.cap
    }
}
