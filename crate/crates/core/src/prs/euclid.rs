use crate::error::{Error, Result};
use crate::padic::Ball;
use crate::poly::BallPoly;

/// One row `S_k = A U_k + B V_k` of the extended Euclidean algorithm.
#[derive(Clone, Debug, PartialEq)]
pub struct EuclidStep {
    pub s: BallPoly,
    pub u: BallPoly,
    pub v: BallPoly,
}

/// Output of [`extended_euclid`]: `D = A U + B V` plus every row of the run.
///
/// `trace[0]` and `trace[1]` are `S_1 = A` and `S_2 = B`; the final entry is
/// the first row whose remainder has no known nonzero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct EuclidResult {
    pub d: BallPoly,
    pub u: BallPoly,
    pub v: BallPoly,
    pub trace: Vec<EuclidStep>,
}

/// Extended Euclid over balls.
///
/// Runs `S_{k+1} = S_{k-1} % S_k` with matching cofactor updates until the
/// remainder is an unknown zero, and returns the last nonzero row. A divisor
/// whose leading coefficient has no known nonzero digit stops the run with
/// [`Error::LeadingCoefficientUnknownZero`] carrying the 1-based index `k`
/// of that divisor `S_k`.
pub fn extended_euclid(a: &BallPoly, b: &BallPoly) -> Result<EuclidResult> {
    let ring = a.ring().or(b.ring()).ok_or(Error::ZeroPolynomial)?;
    let one = BallPoly::new(vec![Ball::one(ring)]);
    let mut trace = vec![
        EuclidStep { s: a.clone(), u: one.clone(), v: BallPoly::zero() },
        EuclidStep { s: b.clone(), u: BallPoly::zero(), v: one },
    ];
    loop {
        let k = trace.len();
        let (prev, cur) = (&trace[k - 2], &trace[k - 1]);
        if cur.s.is_zero() {
            break;
        }
        let (q, r) = prev.s.divrem(&cur.s).map_err(|e| match e {
            Error::LeadingCoefficientUnknownZero { .. } | Error::DivisionByUnknownZero => {
                Error::LeadingCoefficientUnknownZero { step: k }
            }
            e => e,
        })?;
        let u = prev.u.sub_ref(&q.mul_ref(&cur.u));
        let v = prev.v.sub_ref(&q.mul_ref(&cur.v));
        trace.push(EuclidStep { s: r, u, v });
    }
    let last = &trace[trace.len() - 2];
    Ok(EuclidResult { d: last.s.clone(), u: last.u.clone(), v: last.v.clone(), trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Ring;
    use crate::poly::parse_ball_poly;

    #[test]
    fn constant_divisor() {
        let ring = Ring::new(2).unwrap();
        let a = parse_ball_poly(ring, "X^2 + 3*X + 1 + O(2^5)").unwrap();
        let b = parse_ball_poly(ring, "1").unwrap();
        let out = extended_euclid(&a, &b).unwrap();
        assert_eq!(out.d, b);
        assert!(out.u.is_zero());
        assert_eq!(out.v, b);
    }

    #[test]
    fn equal_inputs_stop_after_one_division() {
        let ring = Ring::new(2).unwrap();
        let a = parse_ball_poly(ring, "X^2 + 3*X + 1 + O(2^5)").unwrap();
        let out = extended_euclid(&a, &a).unwrap();
        assert_eq!(out.trace.len(), 3);
        assert!(out.trace[2].s.is_zero());
        assert_eq!(out.d, a);
    }

    #[test]
    fn unknown_leading_coefficient_reports_the_step() {
        let ring = Ring::new(2).unwrap();
        let a = parse_ball_poly(ring, "X^2 + 1 + O(2^5)").unwrap();
        let b = parse_ball_poly(ring, "O(2^3)*X + 1 + O(2^5)").unwrap();
        assert_eq!(extended_euclid(&a, &b), Err(Error::LeadingCoefficientUnknownZero { step: 2 }));
    }
}
