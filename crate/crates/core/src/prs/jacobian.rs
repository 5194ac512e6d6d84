use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::subresultants_minors_generic;
use crate::padic::arith::int_valuation;
use crate::poly::{Coeff, ExactPoly, Poly};

/// Lattice `p^N * prod_i p^{o_i} W` with one valuation offset `o_i` per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalLattice {
    pub offsets: Vec<i64>,
}

impl DiagonalLattice {
    /// `p^N L` for the unit ball `L` of dimension `dim`.
    pub fn unit(dim: usize) -> DiagonalLattice {
        DiagonalLattice { offsets: vec![0; dim] }
    }

    /// Multiplies the lattice by `p^v`.
    pub fn scaled(&self, v: i64) -> DiagonalLattice {
        DiagonalLattice { offsets: self.offsets.iter().map(|o| o + v).collect() }
    }

    /// `H_max = p^N L_j`.
    pub fn h_max(dim: usize) -> DiagonalLattice {
        Self::unit(dim)
    }

    /// `H_min = r_j^2 p^N L_j`.
    pub fn h_min(dim: usize, v_j: i64) -> DiagonalLattice {
        Self::unit(dim).scaled(2 * v_j)
    }

    /// `H' = r_j^2 r_{j+1}^2 p^N L_j`, the precision a step must be lifted to.
    pub fn h_prime(dim: usize, v_j: i64, v_next: i64) -> DiagonalLattice {
        Self::unit(dim).scaled(2 * v_j + 2 * v_next)
    }

    /// Inclusion `self ⊆ other`.
    pub fn is_within(&self, other: &DiagonalLattice) -> bool {
        self.offsets.len() == other.offsets.len() && self.offsets.iter().zip(&other.offsets).all(|(a, b)| a >= b)
    }

    /// Absolute precision of every coordinate for base precision `N`.
    pub fn precisions(&self, prec: i64) -> Vec<i64> {
        self.offsets.iter().map(|o| prec + o).collect()
    }
}

/// First-order dual numbers `x + y eps` with `eps^2 = 0`.
#[derive(Clone, Debug, PartialEq)]
struct Dual {
    re: BigInt,
    eps: BigInt,
}

impl Coeff for Dual {
    const EXACT_ZERO: bool = true;

    fn zero_like(&self) -> Self {
        Dual { re: BigInt::zero(), eps: BigInt::zero() }
    }

    fn one_like(&self) -> Self {
        Dual { re: BigInt::one(), eps: BigInt::zero() }
    }

    fn add_ref(&self, o: &Self) -> Self {
        Dual { re: &self.re + &o.re, eps: &self.eps + &o.eps }
    }

    fn sub_ref(&self, o: &Self) -> Self {
        Dual { re: &self.re - &o.re, eps: &self.eps - &o.eps }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        Dual { re: &self.re * &o.re, eps: &self.re * &o.eps + &self.eps * &o.re }
    }

    fn neg_ref(&self) -> Self {
        Dual { re: -&self.re, eps: -&self.eps }
    }

    fn is_zero_coeff(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }

    fn div_ref(&self, _: &Self) -> Result<Self> {
        Err(Error::InexactDivision)
    }
}

/// Result of [`jacobian_lattice_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianReport {
    pub j: usize,
    /// `val(r_j)`.
    pub v_j: i64,
    /// Valuations of the elementary divisors of the differential of
    /// `(A, B) -> (R_j, R_{j-1})`, `None` for a missing (zero) divisor.
    pub valuations: Vec<Option<i64>>,
    /// Every valuation lies in `[0, 2 val(r_j)]`.
    pub within_bounds: bool,
}

/// Jacobian of `(a_0..a_{d-1}, b_0..b_{d-1}) -> (R_j, R_{j-1})` for monic `A, B`
/// of degree `d`, as a `(2j+1) x 2d` integer matrix. Rows list the
/// coefficients of `R_j` then `R_{j-1}`, lowest degree first.
pub fn subresultant_jacobian(a: &ExactPoly, b: &ExactPoly, j: usize) -> Result<Vec<Vec<BigInt>>> {
    let d = a.degree().ok_or(Error::ZeroPolynomial)?;
    if b.degree() != Some(d) || j == 0 || j >= d || !a.lc().unwrap().is_one() || !b.lc().unwrap().is_one() {
        return Err(Error::InvalidInput("needs monic A, B of one degree d and 1 <= j < d".into()));
    }
    let zero = Dual { re: BigInt::zero(), eps: BigInt::zero() };
    let lift = |p: &ExactPoly, bump: Option<usize>| -> Poly<Dual> {
        Poly::new(
            (0..=d)
                .map(|i| Dual {
                    re: p.coeff(i).cloned().unwrap_or_default(),
                    eps: if bump == Some(i) { BigInt::one() } else { BigInt::zero() },
                })
                .collect(),
        )
    };
    let mut rows = vec![Vec::with_capacity(2 * d); 2 * j + 1];
    for var in 0..2 * d {
        let (ba, bb) = if var < d { (Some(var), None) } else { (None, Some(var - d)) };
        let s = subresultants_minors_generic(&lift(a, ba), &lift(b, bb), d, d, &zero);
        let coeff = |k: usize, i: usize| s.res[k].coeff(i).map_or_else(BigInt::zero, |c| c.eps.clone());
        for i in 0..=j {
            rows[i].push(coeff(j, i));
        }
        for i in 0..j {
            rows[j + 1 + i].push(coeff(j - 1, i));
        }
    }
    Ok(rows)
}

fn rat_valuation(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(int_valuation(x.numer(), p).unwrap() - int_valuation(x.denom(), p).unwrap())
}

/// Valuations of the elementary divisors over `Z_p` of an integer matrix, by
/// elimination with a pivot of minimal valuation at each step. `None` marks
/// the divisors beyond the rank.
pub fn elementary_divisor_valuations(m: &[Vec<BigInt>], p: u64) -> Vec<Option<i64>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut out = Vec::with_capacity(rows.min(cols));
    for k in 0..rows.min(cols) {
        let mut best: Option<(i64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (jj, x) in row.iter().enumerate().skip(k) {
                if let Some(v) = rat_valuation(x, p) {
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, i, jj));
                    }
                }
            }
        }
        let Some((v, pi, pj)) = best else {
            out.extend(std::iter::repeat_n(None, rows.min(cols) - k));
            break;
        };
        out.push(Some(v));
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        let piv = a[k][k].clone();
        for i in k + 1..rows {
            let f = &a[i][k] / &piv;
            if f.is_zero() {
                continue;
            }
            for jj in k..cols {
                let t = &f * &a[k][jj];
                a[i][jj] -= t;
            }
        }
        for jj in k + 1..cols {
            let f = &a[k][jj] / &piv;
            if f.is_zero() {
                continue;
            }
            for row in a.iter_mut().skip(k) {
                let t = &f * &row[k];
                row[jj] -= t;
            }
        }
    }
    out
}

/// Checks `r_j^2 L_j ⊆ f_j'(A, B)(L) ⊆ L_j` for `f_j = (Res_j, Res_{j-1})`:
/// the differential has integer entries and its elementary divisors have
/// valuations between 0 and `2 val(r_j)`.
pub fn jacobian_lattice_check(a: &ExactPoly, b: &ExactPoly, j: usize, p: u64) -> Result<JacobianReport> {
    let d = a.degree().ok_or(Error::ZeroPolynomial)?;
    let s = crate::oracle::subresultants_minors(a, b, d, d);
    let r = s.r.get(j).ok_or_else(|| Error::InvalidInput(format!("no principal subresultant r_{j}")))?;
    if r.is_zero() {
        return Err(Error::DegenerateJacobian(format!("r_{j} = 0")));
    }
    let v_j = int_valuation(r, p).unwrap();
    let jac = subresultant_jacobian(a, b, j)?;
    let valuations = elementary_divisor_valuations(&jac, p);
    let dim = 2 * j + 1;
    let image = DiagonalLattice { offsets: valuations.iter().map(|v| v.unwrap_or(i64::MAX)).collect() };
    let within_bounds = valuations.iter().all(Option::is_some)
        && DiagonalLattice::h_min(dim, v_j).is_within(&image)
        && image.is_within(&DiagonalLattice::h_max(dim));
    Ok(JacobianReport { j, v_j, valuations, within_bounds })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_valuations_of_a_diagonal_matrix() {
        let m = vec![
            vec![BigInt::from(4), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(6)],
            vec![BigInt::from(2), BigInt::from(2)],
        ];
        assert_eq!(elementary_divisor_valuations(&m, 2), vec![Some(1), Some(1)]);
        let z = vec![vec![BigInt::from(0), BigInt::from(0)]];
        assert_eq!(elementary_divisor_valuations(&z, 3), vec![None]);
    }

    #[test]
    fn lattice_inclusions() {
        let h = DiagonalLattice::h_prime(3, 1, 2);
        assert!(h.is_within(&DiagonalLattice::h_min(3, 1)));
        assert!(DiagonalLattice::h_min(3, 1).is_within(&DiagonalLattice::h_max(3)));
        assert_eq!(h.precisions(10), vec![16, 16, 16]);
    }

    #[test]
    fn generic_pair_of_degree_two() {
        let a = ExactPoly::from_i64(&[3, 1, 1]);
        let b = ExactPoly::from_i64(&[1, 4, 1]);
        let rep = jacobian_lattice_check(&a, &b, 1, 2).unwrap();
        assert_eq!(rep.v_j, 0);
        assert_eq!(rep.valuations, vec![Some(0); 3]);
        assert!(rep.within_bounds);
    }
}
