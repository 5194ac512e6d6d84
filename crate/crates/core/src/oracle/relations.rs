use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::oracle::sylvester::{subresultants_minors, subresultants_minors_generic, SubresultantSet};
use crate::padic::{Zmod, ZmodRing};
use crate::poly::{ExactPoly, Poly};

/// Outcome of [`check_relations`]: one flag per identity plus a description
/// of every violated instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    /// `U_{j-1} V_j - U_j V_{j-1} = (-1)^{d-j+1} r_j^2` for `1 <= j <= d`.
    pub wronskian: bool,
    /// `U_j[d-j-1] = -V_j[d-j-1] = (-1)^{d-j} r_{j+1}` for `0 <= j < d`.
    pub leading_cofactors: bool,
    /// `Res_k^{j,j-1}(R_j, R_{j-1}) = r_j^{2(j-k-1)} R_k` for `k < j - 1`.
    pub nested_subresultants: bool,
    /// `Res_k^{d-j,d-j-1}(U_{j-1}, U_j) = r_j^{2(d-j-k-1)} U_{d-1-k}` for `k < d - j - 1`.
    pub nested_cofactors: bool,
    /// `r_j` is unchanged when the coefficients of degree `< 2j - d + 1` move.
    pub top_coefficients_only: bool,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn all(&self) -> bool {
        self.wronskian
            && self.leading_cofactors
            && self.nested_subresultants
            && self.nested_cofactors
            && self.top_coefficients_only
    }
}

fn sign(neg: bool, x: BigInt) -> BigInt {
    if neg {
        -x
    } else {
        x
    }
}

/// Subresultants with the conventions `R_d = B`, `r_d = 1`, `U_d = 0`, `V_d = 1`
/// appended at index `d`.
fn extended_set(a: &ExactPoly, b: &ExactPoly, d: usize) -> SubresultantSet<BigInt> {
    let mut s = subresultants_minors(a, b, d, d);
    s.r.push(BigInt::one());
    s.res.push(b.clone());
    s.u.push(ExactPoly::zero());
    s.v.push(ExactPoly::from_i64(&[1]));
    s
}

/// Checks the structural identities between the subresultants and cofactors
/// of two monic polynomials of the same degree.
pub fn check_relations(a: &ExactPoly, b: &ExactPoly) -> Result<RelationReport> {
    let d = a.degree().ok_or(Error::ZeroPolynomial)?;
    if b.degree() != Some(d) || d == 0 || !a.lc().unwrap().is_one() || !b.lc().unwrap().is_one() {
        return Err(Error::InvalidInput("expected monic polynomials of the same degree d >= 1".into()));
    }
    let s = extended_set(a, b, d);
    let mut rep = RelationReport { failures: Vec::new(), ..Default::default() };

    let mut ok = true;
    for j in 1..=d {
        let lhs = s.u[j - 1].mul_ref(&s.v[j]).sub_ref(&s.u[j].mul_ref(&s.v[j - 1]));
        let rhs = ExactPoly::new(vec![sign((d - j) % 2 == 0, &s.r[j] * &s.r[j])]);
        if lhs != rhs {
            ok = false;
            rep.failures.push(format!("wronskian at j = {j}"));
        }
    }
    rep.wronskian = ok;

    ok = true;
    for j in 0..d {
        let k = d - j - 1;
        let want = sign((d - j) % 2 == 1, s.r[j + 1].clone());
        let u = s.u[j].coeff(k).cloned().unwrap_or_default();
        let v = s.v[j].coeff(k).cloned().unwrap_or_default();
        if u != want || v != -want.clone() {
            ok = false;
            rep.failures.push(format!("leading cofactors at j = {j}"));
        }
    }
    rep.leading_cofactors = ok;

    ok = true;
    for j in 2..=d {
        let t = subresultants_minors(&s.res[j], &s.res[j - 1], j, j - 1);
        for k in 0..j - 1 {
            let want = s.res[k].scale(&num_traits::pow(s.r[j].clone(), 2 * (j - k - 1)));
            if t.res[k] != want {
                ok = false;
                rep.failures.push(format!("nested subresultant R_{k} from (R_{j}, R_{})", j - 1));
            }
        }
    }
    rep.nested_subresultants = ok;

    ok = true;
    for j in 1..d {
        let t = subresultants_minors(&s.u[j - 1], &s.u[j], d - j, d - j - 1);
        for k in 0..(d - j).saturating_sub(1) {
            let want = s.u[d - 1 - k].scale(&num_traits::pow(s.r[j].clone(), 2 * (d - j - k - 1)));
            if t.res[k] != want {
                ok = false;
                rep.failures.push(format!("nested cofactor U_{} from (U_{}, U_{j})", d - 1 - k, j - 1));
            }
        }
    }
    rep.nested_cofactors = ok;

    ok = true;
    for j in 0..d {
        let cut = (2 * j + 1).saturating_sub(d);
        if cut == 0 {
            continue;
        }
        let bump = |p: &ExactPoly, salt: i64| -> ExactPoly {
            let mut c = p.coeffs().to_vec();
            for (i, ci) in c.iter_mut().enumerate().take(cut) {
                *ci += BigInt::from(7 * (i as i64 + 1) + salt);
            }
            ExactPoly::new(c)
        };
        let moved = subresultants_minors(&bump(a, 1), &bump(b, 3), d, d);
        if moved.r[j] != s.r[j] {
            ok = false;
            rep.failures.push(format!("r_{j} moved with the coefficients of degree < {cut}"));
        }
    }
    rep.top_coefficients_only = ok;
    Ok(rep)
}

/// Reduces an integer polynomial modulo `p^n`.
pub fn reduce(p: &ExactPoly, ring: &ZmodRing) -> Poly<Zmod> {
    p.map(|c| ring.elem(c.clone()))
}

/// Recovers `(A, B)` from `(U_j, U_{j-1}, R_j, R_{j-1})` over `Z / p^n Z`,
/// for monic inputs of degree `d` with `r_j = R_j[j]` a unit.
///
/// With `rho` the resultant of `(U_{j-1}, U_j)` in degrees `(d-j, d-j-1)` and
/// `W, W'` its cofactors, `V_j = lambda W - U_j` and
/// `V_{j-1} = -lambda W' - U_{j-1}` where `lambda = (-1)^{d-j+1} r_j^2 / rho`.
/// Then `(A, B)` solves the 2x2 system `R_j = A U_j + B V_j`,
/// `R_{j-1} = A U_{j-1} + B V_{j-1}`.
pub fn reconstruct_pair(
    d: usize,
    j: usize,
    u_j: &Poly<Zmod>,
    u_jm1: &Poly<Zmod>,
    r_j: &Poly<Zmod>,
    r_jm1: &Poly<Zmod>,
    ring: &ZmodRing,
) -> Result<(Poly<Zmod>, Poly<Zmod>)> {
    if j == 0 || j >= d {
        return Err(Error::InvalidInput("reconstruction needs 1 <= j < d".into()));
    }
    let zero = ring.elem(0);
    let a = r_j.coeff(j).cloned().unwrap_or_else(|| zero.clone());
    if !a.is_unit() {
        return Err(Error::NotInvertible(format!("r_{j} = {a}")));
    }
    let (w, w2) = if j == d - 1 {
        // U_{d-1} = -1 is constant: rho = U_{d-1} with cofactors (0, 1).
        (Poly::zero(), Poly::new(vec![ring.elem(1)]))
    } else {
        let t = subresultants_minors_generic(u_jm1, u_j, d - j, d - j - 1, &zero);
        (t.u[0].clone(), t.v[0].clone())
    };
    let rho = u_jm1.mul_ref(&w).add_ref(&u_j.mul_ref(&w2));
    let rho = rho.coeff(0).cloned().unwrap_or_else(|| zero.clone());
    let a2 = a.mul_ref(&a);
    let lambda = a2.checked_div(&rho)?;
    let lambda = if (d - j).is_multiple_of(2) { lambda.neg_ref() } else { lambda };
    let v_j = w.scale(&lambda).sub_ref(u_j);
    let v_jm1 = w2.scale(&lambda).neg_ref().sub_ref(u_jm1);
    let det = u_j.mul_ref(&v_jm1).sub_ref(&u_jm1.mul_ref(&v_j));
    if det.len() > 1 {
        return Err(Error::InvalidInput("cofactor determinant is not a constant".into()));
    }
    let det = det.coeff(0).cloned().unwrap_or_else(|| zero.clone());
    let big_a = r_j.mul_ref(&v_jm1).sub_ref(&r_jm1.mul_ref(&v_j)).div_scalar(&det)?;
    let big_b = u_j.mul_ref(r_jm1).sub_ref(&u_jm1.mul_ref(r_j)).div_scalar(&det)?;
    Ok((big_a, big_b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_on_a_small_pair() {
        let a = ExactPoly::from_i64(&[5, 2, 9, 3, 1]);
        let b = ExactPoly::from_i64(&[1, 8, 2, 7, 1]);
        let rep = check_relations(&a, &b).unwrap();
        assert!(rep.all(), "{:?}", rep.failures);
    }

    #[test]
    fn reconstruction_inverts_the_cofactor_map() {
        let a = ExactPoly::from_i64(&[5, 2, 9, 3, 1]);
        let b = ExactPoly::from_i64(&[1, 8, 2, 7, 1]);
        let s = subresultants_minors(&a, &b, 4, 4);
        let ring = ZmodRing::new(3, 6);
        for j in 1..4 {
            if !ring.elem(s.r[j].clone()).is_unit() {
                continue;
            }
            let red = |p: &ExactPoly| reduce(p, &ring);
            let (ra, rb) =
                reconstruct_pair(4, j, &red(&s.u[j]), &red(&s.u[j - 1]), &red(&s.res[j]), &red(&s.res[j - 1]), &ring)
                    .unwrap();
            assert_eq!((ra, rb), (red(&a), red(&b)), "j = {j}");
        }
    }
}
