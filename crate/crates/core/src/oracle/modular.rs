use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::oracle::matrix::Matrix;
use crate::oracle::sylvester::{sylvester, sylvester_truncated};
use crate::padic::arith::{inv_mod_pk, pow_p};
use crate::poly::ExactPoly;

/// Determinant of an integer matrix reduced modulo `p^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModDet {
    pub k: u32,
    /// `det mod p^k` in `[0, p^k)`.
    pub residue: BigInt,
    /// Exact valuation of the determinant, `None` when it is at least `k`.
    pub valuation: Option<i64>,
}

/// Largest `k` with `p^k < 2^62`, so that products of residues fit in `u128`.
pub fn max_digits(p: u64) -> u32 {
    let mut k = 0;
    let mut m: u128 = 1;
    while m * p as u128 <= 1 << 62 {
        m *= p as u128;
        k += 1;
    }
    k
}

fn val_u64(x: u64, p: u64, k: u32) -> u32 {
    if x == 0 {
        return k;
    }
    let mut v = 0;
    let mut x = x;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Determinant modulo `p^k` by elimination over `Z / p^k Z`, choosing at each
/// stage a pivot of minimal valuation in the whole remaining block.
///
/// Every entry of the reduced matrix stays exact modulo `p^k`: the multiplier
/// `a_ik / pivot` is known modulo `p^{k - v}` and multiplies a row whose entries
/// have valuation at least `v`. The valuation of the determinant is the sum
/// of the pivot valuations, hence exact while it stays below `k`.
pub fn det_mod_pk(m: &Matrix<BigInt>, p: u64, k: u32) -> ModDet {
    assert_eq!(m.rows(), m.cols(), "square matrix expected");
    assert!(k >= 1 && k <= max_digits(p), "modulus must fit in 62 bits");
    let modulus = pow_p(p, k as u64);
    let mo = modulus.to_u64().unwrap();
    let n = m.rows();
    let mut a: Vec<Vec<u64>> =
        (0..n).map(|i| m.row(i).iter().map(|x| x.mod_floor(&modulus).to_u64().unwrap()).collect()).collect();
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % mo as u128) as u64;
    let mut det: u64 = 1 % mo;
    let mut negate = false;
    let mut total = 0i64;
    for c in 0..n {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(c) {
            for (j, &x) in row.iter().enumerate().skip(c) {
                let v = val_u64(x, p, k);
                if v < k && best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((v, pi, pj)) = best else {
            return ModDet { k, residue: BigInt::zero(), valuation: None };
        };
        if pi != c {
            a.swap(pi, c);
            negate = !negate;
        }
        if pj != c {
            for row in a.iter_mut() {
                row.swap(pj, c);
            }
            negate = !negate;
        }
        total += v as i64;
        let piv = a[c][c];
        det = mulm(det, piv);
        let pv = p.pow(v);
        let unit_inv = inv_mod_pk(&BigInt::from(piv / pv), p, (k - v) as u64).unwrap().to_u64().unwrap();
        for i in c + 1..n {
            if a[i][c] == 0 {
                continue;
            }
            // a_ic = p^v * t, with t known modulo p^{k-v}.
            let f = mulm(a[i][c] / pv, unit_inv);
            for j in c..n {
                let s = mulm(f, a[c][j]);
                a[i][j] = (a[i][j] + mo - s) % mo;
            }
        }
    }
    if negate && det != 0 {
        det = mo - det;
    }
    let valuation = (total < k as i64).then_some(total);
    ModDet { k, residue: BigInt::from(det), valuation }
}

/// `Res(A, B) mod p^k` in degrees `(deg A, deg B)`.
pub fn resultant_mod_pk(a: &ExactPoly, b: &ExactPoly, p: u64, k: u32) -> ModDet {
    let (da, db) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
    det_mod_pk(&sylvester(a, b, da, db, &BigInt::zero()), p, k)
}

/// Principal subresultant `r_j mod p^k` of two polynomials of degree `d`.
pub fn principal_mod_pk(a: &ExactPoly, b: &ExactPoly, d: usize, j: usize, p: u64, k: u32) -> ModDet {
    let m = sylvester_truncated(a, b, d, d, j, &BigInt::zero());
    let rows: Vec<usize> = (0..2 * (d - j)).collect();
    let cols: Vec<usize> = (0..m.cols()).collect();
    det_mod_pk(&m.select(&rows, &cols), p, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{resultant, subresultants_minors};
    use crate::padic::arith::int_valuation;

    #[test]
    fn digits_fit_the_word() {
        assert_eq!(max_digits(2), 62);
        assert_eq!(max_digits(3), 39);
    }

    #[test]
    fn agrees_with_the_integer_resultant() {
        let a = ExactPoly::from_i64(&[12, 7, -3, 8, 1]);
        let b = ExactPoly::from_i64(&[4, 2, 10, 6, 1]);
        let res = resultant(&a, &b, 4, 4);
        let s = subresultants_minors(&a, &b, 4, 4);
        for p in [2u64, 3, 5] {
            let k = 20;
            let m = resultant_mod_pk(&a, &b, p, k);
            assert_eq!(m.residue, res.mod_floor(&pow_p(p, k as u64)));
            assert_eq!(m.valuation, int_valuation(&res, p));
            for j in 0..4 {
                let r = principal_mod_pk(&a, &b, 4, j, p, k);
                assert_eq!(r.residue, s.r[j].mod_floor(&pow_p(p, k as u64)), "p = {p}, j = {j}");
            }
        }
    }

    #[test]
    fn high_valuation_is_censored() {
        let a = ExactPoly::from_i64(&[0, 1]);
        let b = ExactPoly::from_i64(&[1 << 10, 1]);
        assert_eq!(resultant_mod_pk(&a, &b, 2, 8).valuation, None);
        assert_eq!(resultant_mod_pk(&a, &b, 2, 12).valuation, Some(10));
    }
}
