use crate::error::{Error, Result};
use crate::padic::{Ball, Ring};
use crate::poly::{BallPoly, Coeff, FlatPoly, Poly};
use crate::prs::transcript::{Step, SubresTranscript};

pub(crate) fn is_monic(p: &BallPoly) -> bool {
    p.lc().is_some_and(|c| c.center() == num_rational::BigRational::from_integer(1.into()))
}

/// Checks that `A` and `B` are monic of the same degree `d >= 1` over one ring.
pub(crate) fn check_monic_pair(a: &BallPoly, b: &BallPoly) -> Result<(Ring, usize)> {
    let (Some(ring), Some(rb)) = (a.ring(), b.ring()) else {
        return Err(Error::ZeroPolynomial);
    };
    if ring != rb {
        return Err(Error::RingMismatch(ring.p(), rb.p()));
    }
    if a.len() != b.len() || a.len() < 2 {
        return Err(Error::InvalidInput("expected two polynomials of the same degree d >= 1".into()));
    }
    if !is_monic(a) || !is_monic(b) {
        return Err(Error::InvalidInput("expected monic polynomials".into()));
    }
    Ok((ring, a.len() - 1))
}

pub(crate) fn working_prec(p: &BallPoly) -> i64 {
    p.coeffs().iter().filter(|c| !c.is_exact()).map(|c| c.prec()).max().unwrap_or(i64::MIN)
}

/// `R_{j-1} = prem(R_{j+1}, R_j) / r_{j+1}^2`.
pub(crate) fn prem_step(hi: &BallPoly, r_hi: &Ball, lo: &BallPoly) -> Result<BallPoly> {
    hi.prem(lo)?.div_scalar(&r_hi.mul_ref(r_hi))
}

/// Subresultant sequence over balls with per-coefficient precision.
///
/// `R_d = B`, `r_d = 1`, `R_{d-1} = B - A`, then
/// `R_{j-1} = prem(R_{j+1}, R_j) / r_{j+1}^2` down to `R_0`. A principal
/// coefficient with no known nonzero digit stops the run with
/// [`Error::NotNormal`] recorded in the transcript.
pub fn prs_ball(a: &BallPoly, b: &BallPoly) -> Result<SubresTranscript> {
    let (ring, d) = check_monic_pair(a, b)?;
    let input_prec = a.min_prec().min(b.min_prec()).unwrap();
    let top = b.sub_ref(a).truncated(d);
    Ok(prs_ball_from(ring, input_prec, b, &Ball::one(ring), &top))
}

/// Runs the ball recurrence from an arbitrary consecutive pair
/// `(R_{j+1}, R_j)` with principal coefficient `r_{j+1}` of the first one.
/// The index `j` is read from the length of `lo`; the transcript records
/// `R_j, ..., R_0` and uses `d = j + 1`.
pub fn prs_ball_from(ring: Ring, input_prec: i64, hi: &BallPoly, r_hi: &Ball, lo: &BallPoly) -> SubresTranscript {
    let j0 = lo.len() - 1;
    let mut t = SubresTranscript {
        ring,
        d: j0 + 1,
        input_prec,
        steps: vec![Step::new(j0, lo.clone())],
        failure: None,
        max_working_prec: working_prec(hi).max(working_prec(lo)),
    };
    let mut hi = hi.clone();
    let mut r_hi = r_hi.clone();
    for j in (1..=j0).rev() {
        let cur = t.steps.last().unwrap();
        if cur.r.is_zero() {
            t.failure = Some(Error::NotNormal { j });
            break;
        }
        let next = match prem_step(&hi, &r_hi, &cur.poly) {
            Ok(p) => p,
            Err(e) => {
                t.failure = Some(e);
                break;
            }
        };
        hi = cur.poly.clone();
        r_hi = cur.r.clone();
        t.max_working_prec = t.max_working_prec.max(working_prec(&next));
        t.steps.push(Step::new(j - 1, next));
    }
    t
}

/// `(r_j / r_{j+1})^2 (R_{j+1} % R_j)` by the two eliminations
/// `S = R_{j+1} - (R_{j+1}[j+1] / r_j) X R_j` and `S - (S[j] / r_j) R_j`, with
/// `post` applied to every intermediate polynomial.
fn remainder_step<C: Coeff>(
    hi: &Poly<C>,
    r_hi: &C,
    lo: &Poly<C>,
    j: usize,
    post: &impl Fn(&Poly<C>) -> Poly<C>,
) -> Result<Poly<C>> {
    let r = lo.coeff(j).ok_or(Error::NotNormal { j })?;
    let zero = r.zero_like();
    let c = hi.coeff(j + 1).unwrap_or(&zero).div_ref(r)?;
    let s = post(&hi.sub_ref(&lo.shift(1).scale(&c)).truncated(j + 1));
    let c = s.coeff(j).unwrap_or(&zero).div_ref(r)?;
    let rem = post(&s.sub_ref(&lo.scale(&c)).truncated(j));
    let f = r.mul_ref(r).div_ref(&r_hi.mul_ref(r_hi))?;
    Ok(post(&rem.scale(&f)))
}

/// Subresultant sequence in the flat precision model.
///
/// Each step reduces `R_{j+1}` modulo `R_j` in two eliminations,
/// `S = R_{j+1} - (r_{j+1} / r_j) X R_j` then `S - (s / r_j) R_j` with `s = S[j]`,
/// scales the remainder by `(r_j / r_{j+1})^2`, and flattens every
/// intermediate polynomial, so that each carries one shared precision.
pub fn prs_flat(a: &FlatPoly, b: &FlatPoly) -> Result<SubresTranscript> {
    let (ab, bb) = (a.to_ball_poly(), b.to_ball_poly());
    let (ring, d) = check_monic_pair(&ab, &bb)?;
    let input_prec = a.prec().min(b.prec());
    let flat = |p: &BallPoly| FlatPoly::flatten(p).to_ball_poly();
    let mut t = SubresTranscript {
        ring,
        d,
        input_prec,
        steps: vec![Step::new(d - 1, flat(&bb.sub_ref(&ab).truncated(d)))],
        failure: None,
        max_working_prec: input_prec,
    };
    let mut hi = bb;
    let mut r_hi = Ball::one(ring);
    for j in (1..d).rev() {
        let cur = t.steps.last().unwrap();
        if cur.r.is_zero() {
            t.failure = Some(Error::NotNormal { j });
            break;
        }
        let step = || remainder_step(&hi, &r_hi, &cur.poly, j, &flat);
        match step() {
            Ok(next) => {
                hi = cur.poly.clone();
                r_hi = cur.r.clone();
                t.steps.push(Step::new(j - 1, next));
            }
            Err(e) => {
                t.failure = Some(e);
                break;
            }
        }
    }
    Ok(t)
}

/// Which form of the recurrence [`prs_generic`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Recurrence {
    /// `R_{j-1} = prem(R_{j+1}, R_j) / r_{j+1}^2`.
    #[default]
    Prem,
    /// `R_{j-1} = (r_j / r_{j+1})^2 (R_{j+1} % R_j)`, as in [`prs_flat`].
    Remainder,
}

/// The normal recurrence over any coefficient ring with exact zeros (exact
/// integers, residues, ultrametric floats). Returns `R_{d-1}, ..., R_0`.
///
/// Fails with [`Error::NotNormal`] as soon as some `R_j` does not have degree `j`.
pub fn prs_generic<C: Coeff>(a: &Poly<C>, b: &Poly<C>, form: Recurrence) -> Result<Vec<Poly<C>>> {
    let d = a.degree().ok_or(Error::ZeroPolynomial)?;
    let one = a.lc().unwrap().one_like();
    if d == 0 || b.degree() != Some(d) || a.lc() != Some(&one) || b.lc() != Some(&one) {
        return Err(Error::InvalidInput("expected monic polynomials of the same degree d >= 1".into()));
    }
    let mut out = vec![b.sub_ref(a)];
    let mut hi = b.clone();
    let mut r_hi = one;
    for j in (1..d).rev() {
        let lo = out.last().unwrap();
        if lo.degree() != Some(j) {
            return Err(Error::NotNormal { j });
        }
        let next = match form {
            Recurrence::Prem => hi.prem(lo)?.div_scalar(&r_hi.mul_ref(&r_hi))?,
            Recurrence::Remainder => remainder_step(&hi, &r_hi, lo, j, &|p| p.clone())?,
        };
        r_hi = lo.lc().unwrap().clone();
        hi = lo.clone();
        out.push(next);
    }
    if out.last().unwrap().degree() != Some(0) {
        return Err(Error::NotNormal { j: 0 });
    }
    Ok(out)
}
