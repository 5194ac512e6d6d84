use num_bigint::BigInt;
use num_traits::Zero;

use crate::oracle::matrix::{bareiss_det, berkowitz_det, Matrix};
use crate::poly::{Coeff, ExactPoly, Poly};

fn coeff_or<C: Coeff>(p: &Poly<C>, i: usize, zero: &C) -> C {
    p.coeff(i).cloned().unwrap_or_else(|| zero.clone())
}

/// Matrix of `(U, V) -> A U + B V` restricted to `deg U < d_B - j`, `deg V < d_A - j`.
///
/// Columns follow the source basis `(X^{d_B-j-1}, 0), ..., (1, 0), (0, X^{d_A-j-1}), ..., (0, 1)`;
/// rows follow the target basis `X^{d_A+d_B-j-1}, ..., X, 1`. For `j = 0` this is
/// the Sylvester matrix.
pub fn sylvester_truncated<C: Coeff>(a: &Poly<C>, b: &Poly<C>, da: usize, db: usize, j: usize, zero: &C) -> Matrix<C> {
    assert!(j <= da.min(db), "index beyond the smaller degree");
    let nu = db - j;
    let nv = da - j;
    let top = da + db - j; // number of target rows
    let mut m = Matrix::filled(top, nu + nv, zero.clone());
    for c in 0..nu {
        let shift = nu - 1 - c;
        for k in 0..=da {
            let row = top - 1 - (k + shift);
            *m.at_mut(row, c) = coeff_or(a, k, zero);
        }
    }
    for c in 0..nv {
        let shift = nv - 1 - c;
        for k in 0..=db {
            let row = top - 1 - (k + shift);
            *m.at_mut(row, nu + c) = coeff_or(b, k, zero);
        }
    }
    m
}

/// Sylvester matrix in the canonical bases; its determinant is the resultant.
pub fn sylvester<C: Coeff>(a: &Poly<C>, b: &Poly<C>, da: usize, db: usize, zero: &C) -> Matrix<C> {
    sylvester_truncated(a, b, da, db, 0, zero)
}

/// Subresultants `R_j`, principal coefficients `r_j` and cofactors `U_j, V_j`
/// for `0 <= j < min(d_A, d_B)`, indexed by `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubresultantSet<C> {
    pub da: usize,
    pub db: usize,
    pub r: Vec<C>,
    pub res: Vec<Poly<C>>,
    pub u: Vec<Poly<C>>,
    pub v: Vec<Poly<C>>,
}

impl<C: Coeff> SubresultantSet<C> {
    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D + Copy) -> SubresultantSet<D> {
        SubresultantSet {
            da: self.da,
            db: self.db,
            r: self.r.iter().map(f).collect(),
            res: self.res.iter().map(|p| p.map(f)).collect(),
            u: self.u.iter().map(|p| p.map(f)).collect(),
            v: self.v.iter().map(|p| p.map(f)).collect(),
        }
    }
}

/// Builds `R_j`, `U_j`, `V_j` from maximal minors of the truncated Sylvester matrix.
///
/// `R_j[i]` is the determinant of the square block of rows `X^{d_A+d_B-j-1}..X^j`
/// with its last row replaced by the `X^i` row. The cofactors are the
/// cofactors of that last row, so `A U_j + B V_j = R_j` holds identically.
pub fn subresultants_minors_with<C: Coeff>(
    a: &Poly<C>,
    b: &Poly<C>,
    da: usize,
    db: usize,
    zero: &C,
    det: impl Fn(&Matrix<C>) -> C,
) -> SubresultantSet<C> {
    let n = da.min(db);
    let mut out = SubresultantSet { da, db, r: Vec::new(), res: Vec::new(), u: Vec::new(), v: Vec::new() };
    for j in 0..n {
        let m = sylvester_truncated(a, b, da, db, j, zero);
        let size = da + db - 2 * j;
        let top = da + db - j;
        let cols: Vec<usize> = (0..size).collect();
        let head: Vec<usize> = (0..size - 1).collect();
        let mut res = Vec::with_capacity(j + 1);
        for i in 0..=j {
            let mut rows = head.clone();
            rows.push(top - 1 - i);
            res.push(det(&m.select(&rows, &cols)));
        }
        let mut cof = Vec::with_capacity(size);
        for c in 0..size {
            let keep: Vec<usize> = (0..size).filter(|&k| k != c).collect();
            let minor = det(&m.select(&head, &keep));
            cof.push(if (size - 1 + c) % 2 == 1 { minor.neg_ref() } else { minor });
        }
        let nu = db - j;
        let u: Vec<C> = cof[..nu].iter().rev().cloned().collect();
        let v: Vec<C> = cof[nu..].iter().rev().cloned().collect();
        out.r.push(res[j].clone());
        out.res.push(Poly::new(res));
        out.u.push(Poly::new(u));
        out.v.push(Poly::new(v));
    }
    out
}

/// Exact subresultants over `Z` (Bareiss determinants).
pub fn subresultants_minors(a: &ExactPoly, b: &ExactPoly, da: usize, db: usize) -> SubresultantSet<BigInt> {
    subresultants_minors_with(a, b, da, db, &BigInt::zero(), bareiss_det)
}

/// Subresultants over any commutative ring (division-free determinants).
pub fn subresultants_minors_generic<C: Coeff>(a: &Poly<C>, b: &Poly<C>, da: usize, db: usize, zero: &C) -> SubresultantSet<C> {
    subresultants_minors_with(a, b, da, db, zero, |m| berkowitz_det(m, zero))
}

/// `Res^{d_A, d_B}(A, B)`.
pub fn resultant(a: &ExactPoly, b: &ExactPoly, da: usize, db: usize) -> BigInt {
    bareiss_det(&sylvester(a, b, da, db, &BigInt::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resultants() {
        let a = ExactPoly::from_i64(&[-1, 1]);
        let b = ExactPoly::from_i64(&[1, 1]);
        assert_eq!(resultant(&a, &b, 1, 1), BigInt::from(2));
        // Only one declared degree exceeds the true degree: the resultant
        // picks up a power of the other leading coefficient instead of vanishing.
        assert_eq!(resultant(&a, &b, 2, 1), BigInt::from(-2));
        assert_eq!(resultant(&a, &b, 2, 2), BigInt::zero());
        let c = ExactPoly::from_i64(&[3, 0, 1, 1]);
        assert_eq!(resultant(&c, &c, 3, 3), BigInt::zero());
    }

    #[test]
    fn cofactor_identity_holds() {
        let a = ExactPoly::from_i64(&[3, -1, 4, 1]);
        let b = ExactPoly::from_i64(&[5, 9, -2, 1]);
        let s = subresultants_minors(&a, &b, 3, 3);
        for j in 0..3 {
            let lhs = a.mul_ref(&s.u[j]).add_ref(&b.mul_ref(&s.v[j]));
            assert_eq!(lhs, s.res[j], "j = {j}");
            assert_eq!(s.res[j].coeff(j).cloned().unwrap_or_default(), s.r[j]);
        }
        // Top subresultant of two monic polynomials of equal degree.
        assert_eq!(s.res[2], b.sub_ref(&a));
        assert_eq!(s.u[2], ExactPoly::from_i64(&[-1]));
        assert_eq!(s.v[2], ExactPoly::from_i64(&[1]));
        assert_eq!(s.r[0], resultant(&a, &b, 3, 3));
    }
}
