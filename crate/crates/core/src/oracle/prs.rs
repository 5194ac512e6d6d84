use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::sylvester::SubresultantSet;
use crate::poly::{Coeff, ExactPoly};

/// Run of the subresultant pseudo-remainder sequence over `Z`.
///
/// Entry `k` of every vector corresponds to sequence index `i = k - 1`, so
/// `s[0] = A`, `s[1] = B` and the sequence stops before the first zero term.
/// With `delta_i = n_{i-1} - n_i`, `s_i = lc(S_i)` and
/// `c_i = s_i^{delta_i} c_{i-1}^{1 - delta_i}` (`s_{-1} = c_{-1} = 1`):
///
/// `S_{i+1} = (-1)^{delta_i + 1} prem(S_{i-1}, S_i) / (s_{i-1} c_{i-1}^{delta_i})`.
#[derive(Clone, Debug, PartialEq)]
pub struct PrsTranscript {
    pub s: Vec<ExactPoly>,
    /// Cofactors with `S_i = A U_i + B V_i`.
    pub u: Vec<ExactPoly>,
    pub v: Vec<ExactPoly>,
    /// Leading coefficients `s_i` (`s_{-1}` is forced to 1).
    pub lc: Vec<BigInt>,
    /// Auxiliary coefficients `c_i`.
    pub c: Vec<BigInt>,
    /// Degrees `n_i`.
    pub n: Vec<usize>,
    /// Degree drops `delta_i = n_{i-1} - n_i` (`delta_{-1} = 0`).
    pub delta: Vec<usize>,
    /// Cofactors produced by the step whose remainder vanished. They are the
    /// cofactors of the (zero) subresultant of index `n_last - 1`.
    pub terminal_cofactors: Option<(ExactPoly, ExactPoly)>,
}

impl PrsTranscript {
    /// Number of nonzero terms including `A` and `B`.
    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }
}

fn signed(p: ExactPoly, negative: bool) -> ExactPoly {
    if negative {
        p.neg_ref()
    } else {
        p
    }
}

/// Runs the sequence for `deg A >= deg B >= 1`.
pub fn prs_transcript(a: &ExactPoly, b: &ExactPoly) -> Result<PrsTranscript> {
    run(a, b, true)
}

fn run(a: &ExactPoly, b: &ExactPoly, cofactors: bool) -> Result<PrsTranscript> {
    let (Some(na), Some(nb)) = (a.degree(), b.degree()) else {
        return Err(Error::InvalidInput("zero polynomial in the pseudo-remainder sequence".into()));
    };
    if na < nb {
        return Err(Error::InvalidInput("needs deg A >= deg B".into()));
    }
    let one = ExactPoly::from_i64(&[1]);
    let mut t = PrsTranscript {
        s: vec![a.clone(), b.clone()],
        u: vec![one.clone(), ExactPoly::zero()],
        v: vec![ExactPoly::zero(), one],
        lc: vec![BigInt::one(), b.lc().unwrap().clone()],
        c: vec![BigInt::one()],
        n: vec![na, nb],
        delta: vec![0, na - nb],
        terminal_cofactors: None,
    };
    // c_0 = s_0^{delta_0} c_{-1}^{1 - delta_0}
    t.c.push(c_next(&t.lc[1], &t.c[0], t.delta[1]));
    loop {
        let k = t.s.len() - 1; // index of S_i, i = k - 1
        let (prev, cur) = (&t.s[k - 1], &t.s[k]);
        if cur.degree() == Some(0) {
            break;
        }
        let delta = t.n[k - 1] - t.n[k];
        let den = &t.lc[k - 1] * num_traits::pow(t.c[k - 1].clone(), delta);
        let neg = delta.is_multiple_of(2);
        let (un, vn, r) = if cofactors {
            let (q, r) = prev.pseudo_divrem(cur)?;
            let lcp = num_traits::pow(t.lc[k].clone(), delta + 1);
            let un = signed(t.u[k - 1].scale(&lcp).sub_ref(&q.mul_ref(&t.u[k])).div_scalar(&den)?, neg);
            let vn = signed(t.v[k - 1].scale(&lcp).sub_ref(&q.mul_ref(&t.v[k])).div_scalar(&den)?, neg);
            (un, vn, r)
        } else {
            (ExactPoly::zero(), ExactPoly::zero(), prev.prem(cur)?)
        };
        if r.is_zero() {
            t.terminal_cofactors = Some((un, vn));
            break;
        }
        let next = signed(r.div_scalar(&den)?, neg);
        let nn = next.degree().unwrap();
        let dn = t.n[k] - nn;
        t.lc.push(next.lc().unwrap().clone());
        t.n.push(nn);
        t.delta.push(dn);
        t.s.push(next);
        t.u.push(un);
        t.v.push(vn);
        let cn = c_next(&t.lc[k + 1], &t.c[k], dn);
        t.c.push(cn);
    }
    Ok(t)
}

/// `c_i = s_i^{delta} c_{i-1}^{1 - delta}` as an exact integer.
fn c_next(s: &BigInt, c_prev: &BigInt, delta: usize) -> BigInt {
    if delta == 0 {
        return c_prev.clone();
    }
    let num = num_traits::pow(s.clone(), delta);
    let den = num_traits::pow(c_prev.clone(), delta - 1);
    num.div_ref(&den).expect("c_i is integral")
}

/// All subresultants `Res_j`, `0 <= j < deg B`, assembled from the sequence:
/// for each nonzero `S_i` (`i >= 1`), `Res_{n_{i-1}-1} = S_i`,
/// `Res_{n_i} = (s_i / c_{i-1})^{delta_i - 1} S_i`, and every other index is zero.
///
/// `c_{i-1}` is the principal coefficient of `Res_{n_{i-1}}`; it equals
/// `s_{i-1}` whenever the previous degree drop is one, but not after a
/// larger drop or when `B` is not monic.
pub fn prs_general(a: &ExactPoly, b: &ExactPoly) -> Result<(PrsTranscript, SubresultantSet<BigInt>)> {
    assemble(run(a, b, true)?)
}

/// Same as [`prs_general`] without the cofactors (every `U_j`, `V_j` is left zero).
pub fn subresultants_prs(a: &ExactPoly, b: &ExactPoly) -> Result<SubresultantSet<BigInt>> {
    Ok(assemble(run(a, b, false)?)?.1)
}

fn assemble(t: PrsTranscript) -> Result<(PrsTranscript, SubresultantSet<BigInt>)> {
    let (da, db) = (t.n[0], t.n[1]);
    let mut set = SubresultantSet {
        da,
        db,
        r: vec![BigInt::zero(); db],
        res: vec![ExactPoly::zero(); db],
        u: vec![ExactPoly::zero(); db],
        v: vec![ExactPoly::zero(); db],
    };
    for k in 2..t.s.len() {
        let top = t.n[k - 1] - 1;
        let bottom = t.n[k];
        let e = t.delta[k] - 1;
        let num = num_traits::pow(t.lc[k].clone(), e);
        let den = num_traits::pow(t.c[k - 1].clone(), e);
        let scale = |p: &ExactPoly| -> Result<ExactPoly> { p.scale(&num).div_scalar(&den) };
        set.res[top] = t.s[k].clone();
        set.u[top] = t.u[k].clone();
        set.v[top] = t.v[k].clone();
        set.res[bottom] = scale(&t.s[k])?;
        set.u[bottom] = scale(&t.u[k])?;
        set.v[bottom] = scale(&t.v[k])?;
    }
    if let Some((u, v)) = &t.terminal_cofactors {
        let top = t.n[t.s.len() - 1] - 1;
        set.u[top] = u.clone();
        set.v[top] = v.clone();
    }
    for j in 0..db {
        set.r[j] = set.res[j].coeff(j).cloned().unwrap_or_default();
    }
    Ok((t, set))
}
