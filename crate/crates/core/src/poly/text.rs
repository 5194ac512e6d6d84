//! Text format for polynomials, highest degree first:
//! `X^5 + (27 + O(2^5))*X^4 + ... + (3 + O(2^5))`.
//!
//! A trailing bare `O(p^N)` term gives every coefficient without its own
//! precision term (including absent ones) the precision `N`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::padic::{fmt_big_o, parse_rational, split_big_o, Ball, Ring};
use crate::poly::dense::{BallPoly, ExactPoly, Poly};
use crate::poly::flat::FlatPoly;

fn fmt_monomial(f: &mut fmt::Formatter<'_>, i: usize) -> fmt::Result {
    match i {
        0 => Ok(()),
        1 => write!(f, "X"),
        _ => write!(f, "X^{i}"),
    }
}

fn fmt_ball_term(f: &mut fmt::Formatter<'_>, c: &Ball, i: usize) -> fmt::Result {
    if c.is_exact() {
        let center = c.center();
        if center.is_one() && i > 0 {
            return fmt_monomial(f, i);
        }
        write!(f, "{center}")?;
    } else if c.is_zero() && i > 0 {
        write!(f, "{c}")?;
    } else {
        write!(f, "({c})")?;
    }
    if i > 0 {
        write!(f, "*")?;
        fmt_monomial(f, i)?;
    }
    Ok(())
}

impl fmt::Display for BallPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_exact() && c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            fmt_ball_term(f, c, i)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for FlatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let center = c.center();
            if center.is_one() && i > 0 {
                fmt_monomial(f, i)?;
            } else {
                write!(f, "{center}")?;
                if i > 0 {
                    write!(f, "*")?;
                    fmt_monomial(f, i)?;
                }
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        fmt_big_o(f, self.ring().p(), self.prec())
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if mag.is_one() && i > 0 {
                fmt_monomial(f, i)?;
            } else {
                write!(f, "{mag}")?;
                if i > 0 {
                    write!(f, "*")?;
                    fmt_monomial(f, i)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Splits at top-level `+` and `-`, keeping the sign with each term.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    let mut prev = ' ';
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
        }
        let sep = depth == 0 && (ch == '+' || (ch == '-' && prev != '^'));
        if sep {
            if !cur.trim().is_empty() {
                out.push((negative, cur.trim().to_string()));
            }
            negative = ch == '-';
            cur.clear();
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = ch;
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
    }
    if !cur.trim().is_empty() {
        out.push((negative, cur.trim().to_string()));
    }
    if out.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    Ok(out)
}

enum Term {
    Coeff { degree: usize, ball: Option<Ball>, exact: num_rational::BigRational },
    Flat(i64),
}

fn parse_term(ring: Ring, negative: bool, t: &str) -> Result<Term> {
    let bad = || Error::Parse(format!("bad term `{t}`"));
    let t = t.trim();
    if t.starts_with("O(") && !t.contains('X') {
        let (head, o) = split_big_o(t)?;
        if head.is_empty() {
            let (p, n) = o.unwrap();
            if p != ring.p() {
                return Err(Error::RingMismatch(ring.p(), p));
            }
            return Ok(Term::Flat(n));
        }
    }
    let (coef, degree) = match t.rfind('X') {
        Some(i) => {
            let exp = t[i + 1..].trim();
            let degree = if exp.is_empty() {
                1
            } else {
                exp.strip_prefix('^').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?
            };
            let coef = t[..i].trim();
            let coef = coef.strip_suffix('*').unwrap_or(coef).trim();
            (coef, degree)
        }
        None => (t, 0usize),
    };
    if coef.is_empty() {
        let one = num_rational::BigRational::one();
        return Ok(Term::Coeff { degree, ball: None, exact: if negative { -one } else { one } });
    }
    if coef.contains("O(") {
        let inner = coef
            .strip_prefix('(')
            .and_then(|c| c.strip_suffix(')'))
            .unwrap_or(coef);
        let b = Ball::parse(ring, inner)?;
        let b = if negative { b.neg_ref() } else { b };
        return Ok(Term::Coeff { degree, ball: Some(b), exact: Zero::zero() });
    }
    let inner = coef
        .strip_prefix('(')
        .and_then(|c| c.strip_suffix(')'))
        .unwrap_or(coef);
    let v = parse_rational(inner)?;
    Ok(Term::Coeff { degree, ball: None, exact: if negative { -v } else { v } })
}

/// Parses a polynomial over balls. Coefficients without a precision term are
/// exact unless a trailing `O(p^N)` term is present.
pub fn parse_ball_poly(ring: Ring, s: &str) -> Result<BallPoly> {
    let terms = split_terms(s)?
        .into_iter()
        .map(|(neg, t)| parse_term(ring, neg, &t))
        .collect::<Result<Vec<_>>>()?;
    let flat = terms.iter().find_map(|t| match t {
        Term::Flat(n) => Some(*n),
        _ => None,
    });
    let deg = terms
        .iter()
        .filter_map(|t| match t {
            Term::Coeff { degree, .. } => Some(*degree),
            _ => None,
        })
        .max();
    let Some(deg) = deg else {
        return Err(Error::Parse(format!("no coefficients in `{s}`")));
    };
    let default_prec = flat.unwrap_or(ring.cap());
    let mut explicit: Vec<Option<Ball>> = vec![None; deg + 1];
    let mut exact: Vec<num_rational::BigRational> = vec![Zero::zero(); deg + 1];
    for t in terms {
        if let Term::Coeff { degree, ball, exact: e } = t {
            match ball {
                Some(b) => {
                    if explicit[degree].is_some() {
                        return Err(Error::Parse(format!("repeated degree {degree}")));
                    }
                    explicit[degree] = Some(b);
                }
                None => exact[degree] += e,
            }
        }
    }
    let coeffs = explicit
        .into_iter()
        .zip(exact)
        .map(|(b, e)| match b {
            Some(b) => b.add_ref(&Ball::from_rational(ring, &e, ring.cap())),
            None => Ball::from_rational(ring, &e, default_prec),
        })
        .collect();
    Ok(Poly::new(coeffs))
}

/// Parses a polynomial with integer coefficients, e.g. `X^3 - 2*X + 7`.
pub fn parse_exact_poly(s: &str) -> Result<ExactPoly> {
    let ring = Ring::new(2)?;
    let p = parse_ball_poly(ring, s)?;
    let mut out = Vec::with_capacity(p.len());
    for c in p.coeffs() {
        if !c.is_exact() {
            return Err(Error::Parse(format!("precision term in exact polynomial `{s}`")));
        }
        let v = c.center();
        if !v.is_integer() {
            return Err(Error::Parse(format!("non-integer coefficient {v} in `{s}`")));
        }
        out.push(v.to_integer());
    }
    Ok(ExactPoly::new(out))
}

/// Named polynomials read from a fixture file.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub ring: Ring,
    pub polys: Vec<(String, BallPoly)>,
}

impl Fixture {
    pub fn get(&self, name: &str) -> Option<&BallPoly> {
        self.polys.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

/// Parses `name = polynomial` lines after a `p = <prime>` header.
/// Lines starting with `#` are comments; a line ending in `\` continues on the next.
pub fn parse_fixture(text: &str) -> Result<Fixture> {
    let mut ring: Option<Ring> = None;
    let mut polys = Vec::new();
    let mut joined = String::new();
    let mut lines = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.starts_with('#') || (line.is_empty() && joined.is_empty()) {
            continue;
        }
        if let Some(head) = line.strip_suffix('\\') {
            joined.push_str(head);
            joined.push(' ');
            continue;
        }
        joined.push_str(line);
        lines.push(std::mem::take(&mut joined));
    }
    for line in lines {
        let (name, body) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected `name = value`, got `{line}`")))?;
        let (name, body) = (name.trim(), body.trim());
        if name == "p" {
            let p: u64 = body.parse().map_err(|_| Error::Parse(format!("bad prime `{body}`")))?;
            ring = Some(Ring::new(p)?);
            continue;
        }
        let r = ring.ok_or_else(|| Error::Parse("fixture must start with `p = <prime>`".into()))?;
        polys.push((name.to_string(), parse_ball_poly(r, body)?));
    }
    let ring = ring.ok_or_else(|| Error::Parse("fixture must declare `p = <prime>`".into()))?;
    Ok(Fixture { ring, polys })
}

/// Integer centers of a ball polynomial, when every center is `p`-integral.
pub fn centers(p: &BallPoly) -> Option<ExactPoly> {
    let mut out = Vec::with_capacity(p.len());
    for c in p.coeffs() {
        let v = c.center();
        if !v.is_integer() {
            return None;
        }
        out.push(v.to_integer());
    }
    Some(ExactPoly::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_polys_round_trip() {
        let r = Ring::new(2).unwrap();
        let s = "X^5 + (27 + O(2^5))*X^4 + (3/4 + O(2^2))*X^2 + O(2^5)*X + (3 + O(2^5))";
        let p = parse_ball_poly(r, s).unwrap();
        assert_eq!(p.degree(), Some(5));
        assert_eq!(p.to_string(), s);
        assert_eq!(parse_ball_poly(r, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn trailing_precision_applies_to_bare_coefficients() {
        let r = Ring::new(2).unwrap();
        let p = parse_ball_poly(r, "5*X^2 + 20*X + O(2^5)").unwrap();
        assert_eq!(p.coeffs(), &[Ball::zero(r, 5), Ball::new(r, 20, 5), Ball::new(r, 5, 5)]);
        let f = FlatPoly::flatten(&p);
        assert_eq!(f.to_string(), "5*X^2 + 20*X + O(2^5)");
    }

    #[test]
    fn exact_polys() {
        let p = parse_exact_poly("X^3 - 2*X + 7").unwrap();
        assert_eq!(p, ExactPoly::from_i64(&[7, -2, 0, 1]));
        assert_eq!(p.to_string(), "X^3 - 2*X + 7");
        assert_eq!(parse_exact_poly("-X^2 - 1").unwrap(), ExactPoly::from_i64(&[-1, 0, -1]));
    }

    #[test]
    fn fixtures() {
        let f = parse_fixture("# demo\np = 3\nA = X^2 + (1 + O(3^4))\nB = X^2 + \\\n  (2 + O(3^4))*X\n").unwrap();
        assert_eq!(f.ring.p(), 3);
        assert_eq!(f.get("B").unwrap().degree(), Some(2));
        assert!(parse_fixture("A = X").is_err());
    }
}
