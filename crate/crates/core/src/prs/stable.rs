use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::padic::Ball;
use crate::poly::BallPoly;
use crate::prs::normal::check_monic_pair;
use crate::prs::transcript::{Step, SubresTranscript};

/// How unknown digits are chosen when a pair is lifted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Lift {
    /// Unknown digits set to zero.
    #[default]
    Zero,
    /// Unknown digits drawn from a generator seeded with the given value.
    Random(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct StableOptions {
    pub lift: Lift,
    /// Accept `deg A >= deg B` with `lc(B)` a unit instead of two monic
    /// polynomials of equal degree.
    pub general_degrees: bool,
}

fn lift_poly(p: &BallPoly, prec: i64, rng: &mut Option<ChaCha8Rng>) -> BallPoly {
    match rng {
        None => p.map(|c| c.with_prec(prec)),
        Some(rng) => BallPoly::new(
            p.coeffs()
                .iter()
                .map(|c| if c.prec() < prec { c.lift_random(prec, rng) } else { c.truncate(prec) })
                .collect(),
        ),
    }
}

/// Leading pair `(R_d, R_{d-1})` and the divisor used by the first step.
fn start(a: &BallPoly, b: &BallPoly, general: bool) -> Result<(usize, BallPoly, Ball)> {
    if !general {
        let (ring, d) = check_monic_pair(a, b)?;
        return Ok((d, b.sub_ref(a).truncated(d), Ball::one(ring)));
    }
    let (Some(n), Some(d)) = (a.degree(), b.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if n < d || d == 0 {
        return Err(Error::InvalidInput("expected deg A >= deg B >= 1".into()));
    }
    let lc = b.lc().unwrap();
    if lc.valuation() != 0 {
        return Err(Error::InvalidInput("leading coefficient of B must be a unit".into()));
    }
    // Res_{d-1} = (-1)^{n-d+1} prem(A, B) and the next step divides by lc(B)^{n-d+1}.
    let e = (n - d + 1) as u64;
    let top = a.prem(b)?;
    let top = if e % 2 == 1 { top.neg_ref() } else { top };
    Ok((d, top, lc.pow(e)))
}

/// Stabilized subresultant sequence.
///
/// Before computing `R_{j-1}`, the pair `(R_{j+1}, R_j)` is lifted to absolute
/// precision `N + 2 val(r_j) + 2 val(r_{j+1})`; every returned `R_j` is then
/// truncated to `O(p^N)`. Stops with [`Error::HypothesisHViolated`] when some
/// `val(r_j)` reaches `ceil(N / 2)`.
pub fn stabilized_prs(a: &BallPoly, b: &BallPoly, prec: i64, opts: StableOptions) -> Result<SubresTranscript> {
    let ring = b.ring().ok_or(Error::ZeroPolynomial)?;
    let (d, first, first_div) = start(a, b, opts.general_degrees)?;
    let threshold = (prec + 1) / 2;
    let mut rng = match opts.lift {
        Lift::Zero => None,
        Lift::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut t = SubresTranscript {
        ring,
        d,
        input_prec: prec,
        steps: vec![Step::new(d - 1, first.truncate_prec(prec))],
        failure: None,
        max_working_prec: prec,
    };
    let mut hi = b.clone();
    let mut lo = first;
    let mut v_hi = 0;
    for j in (1..d).rev() {
        let r = lo.coeff(j).unwrap().clone();
        let v = r.valuation();
        if r.is_zero() || v >= threshold {
            t.failure = Some(Error::HypothesisHViolated { j, valuation: v, threshold });
            break;
        }
        let m = prec + 2 * v + 2 * v_hi;
        let hi_l = lift_poly(&hi, m, &mut rng);
        let lo_l = lift_poly(&lo, m, &mut rng);
        t.max_working_prec = t.max_working_prec.max(m);
        let div = if j == d - 1 { first_div.clone() } else { hi_l.coeff(j + 1).unwrap().pow(2) };
        let next = match hi_l.prem(&lo_l).and_then(|p| p.div_scalar(&div)) {
            Ok(p) => p,
            Err(e) => {
                t.failure = Some(e);
                break;
            }
        };
        t.steps.push(Step::new(j - 1, next.truncate_prec(prec)));
        hi = lo_l;
        lo = next;
        v_hi = v;
    }
    Ok(t)
}
