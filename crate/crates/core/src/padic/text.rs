//! Parsing of the `c + O(p^N)` notation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::padic::ball::Ball;
use crate::padic::ring::Ring;

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad number `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::new(n, BigInt::one()))
        }
    }
}

/// Parses the body of `O(...)`: either `p` or `p^N`. Returns `(p, N)`.
pub(crate) fn parse_big_o_body(body: &str) -> Result<(u64, i64)> {
    let bad = || Error::Parse(format!("bad precision term `O({body})`"));
    let body = body.trim();
    match body.split_once('^') {
        Some((p, n)) => {
            let p = p.trim().parse().map_err(|_| bad())?;
            let n = n.trim().trim_matches(|c| c == '{' || c == '}').parse().map_err(|_| bad())?;
            Ok((p, n))
        }
        None => Ok((body.parse().map_err(|_| bad())?, 1)),
    }
}

/// Splits `... O(p^N)` into the text before the `O` and the parsed precision.
pub(crate) fn split_big_o(s: &str) -> Result<(&str, Option<(u64, i64)>)> {
    let s = s.trim();
    match s.rfind("O(") {
        Some(i) => {
            let rest = &s[i + 2..];
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed precision term in `{s}`")))?;
            if !rest[close + 1..].trim().is_empty() {
                return Err(Error::Parse(format!("trailing text after precision term in `{s}`")));
            }
            let o = parse_big_o_body(&rest[..close])?;
            let head = s[..i].trim_end();
            let head = head.strip_suffix('+').unwrap_or(head).trim_end();
            Ok((head, Some(o)))
        }
        None => Ok((s, None)),
    }
}

impl std::str::FromStr for Ball {
    type Err = Error;

    /// Parses `c + O(p^N)` or `O(p^N)`, reading the prime off the precision term.
    /// Exact constants need [`Ball::parse`] since they carry no prime.
    fn from_str(s: &str) -> Result<Ball> {
        let (_, o) = split_big_o(s)?;
        let (p, _) = o.ok_or_else(|| Error::Parse(format!("cannot infer p from `{s}`")))?;
        Ball::parse(Ring::new(p)?, s)
    }
}

impl Ball {
    /// Parses `c + O(p^N)`, `O(p^N)` or an exact constant over `ring`.
    pub fn parse(ring: Ring, s: &str) -> Result<Ball> {
        let (head, o) = split_big_o(s)?;
        let prec = match o {
            Some((p, n)) => {
                if p != ring.p() {
                    return Err(Error::RingMismatch(ring.p(), p));
                }
                n
            }
            None => ring.cap(),
        };
        if head.is_empty() {
            if o.is_none() {
                return Err(Error::Parse("empty ball".into()));
            }
            return Ok(Ball::zero(ring, prec));
        }
        let head = head.trim();
        let head = head
            .strip_prefix('(')
            .and_then(|h| h.strip_suffix(')'))
            .unwrap_or(head);
        Ok(Ball::from_rational(ring, &parse_rational(head)?, prec))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Ring::new(2).unwrap();
        for s in ["27 + O(2^5)", "3/4 + O(2^2)", "7/4 + O(2)", "O(2^5)", "1", "5 + O(2^-1)"] {
            let b = Ball::parse(r, s).unwrap();
            let again: Ball = b.to_string().parse().unwrap_or_else(|_| Ball::parse(r, &b.to_string()).unwrap());
            assert_eq!(b, again, "{s}");
        }
        assert_eq!(Ball::parse(r, "27 + O(2^5)").unwrap().to_string(), "27 + O(2^5)");
        assert_eq!(Ball::parse(r, "37 + O(2^5)").unwrap().to_string(), "5 + O(2^5)");
    }

    #[test]
    fn rejects_garbage() {
        let r = Ring::new(2).unwrap();
        assert!(Ball::parse(r, "x + O(2^5)").is_err());
        assert!(Ball::parse(r, "1 + O(3^5)").is_err());
        assert!(Ball::parse(r, "1 + O(2^5").is_err());
        assert!(Ball::parse(r, "1/0").is_err());
    }
}
