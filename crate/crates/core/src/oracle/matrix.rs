use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Coeff;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Clone> Matrix<C> {
    pub fn filled(rows: usize, cols: usize, value: C) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut C {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Square submatrix keeping the listed rows and columns, in order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix<C> {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.at(i, j).clone());
            }
        }
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }
}

/// Determinant over `Z` by fraction-free Bareiss elimination with row pivoting.
pub fn bareiss_det(m: &Matrix<BigInt>) -> BigInt {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Division-free determinant (Berkowitz), valid over any commutative ring.
pub fn berkowitz_det<C: Coeff>(m: &Matrix<C>, zero: &C) -> C {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let one = zero.one_like();
    if n == 0 {
        return one;
    }
    // Characteristic polynomial coefficients of the leading r x r block, highest first.
    let mut poly = vec![one.clone(), m.at(0, 0).neg_ref()];
    for r in 1..n {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        let a_rr = m.at(r, r);
        let mut col = Vec::with_capacity(r + 2);
        col.push(one.clone());
        col.push(a_rr.neg_ref());
        let mut v: Vec<C> = (0..r).map(|i| m.at(i, r).clone()).collect();
        for _ in 0..r {
            let mut s = zero.clone();
            for (k, vk) in v.iter().enumerate() {
                s = s.add_ref(&m.at(r, k).mul_ref(vk));
            }
            col.push(s.neg_ref());
            let mut w = Vec::with_capacity(r);
            for i in 0..r {
                let mut t = zero.clone();
                for (k, vk) in v.iter().enumerate() {
                    t = t.add_ref(&m.at(i, k).mul_ref(vk));
                }
                w.push(t);
            }
            v = w;
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut s = zero.clone();
            for k in 0..=i.min(poly.len() - 1) {
                if i - k < col.len() {
                    s = s.add_ref(&col[i - k].mul_ref(&poly[k]));
                }
            }
            next.push(s);
        }
        poly = next;
    }
    let c = poly[n].clone();
    if n % 2 == 1 {
        c.neg_ref()
    } else {
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::ZmodRing;

    fn m(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    #[test]
    fn small_determinants() {
        assert_eq!(bareiss_det(&m(&[&[1, 1], &[-1, 1]])), BigInt::from(2));
        assert_eq!(bareiss_det(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        let a = m(&[&[2, -3, 1], &[2, 0, -1], &[1, 4, 5]]);
        assert_eq!(bareiss_det(&a), BigInt::from(49));
        assert_eq!(berkowitz_det(&a, &BigInt::zero()), BigInt::from(49));
        let z = m(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]);
        assert_eq!(bareiss_det(&z), BigInt::from(-6));
        assert_eq!(berkowitz_det(&z, &BigInt::zero()), BigInt::from(-6));
    }

    #[test]
    fn berkowitz_matches_bareiss_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 1..7 {
            for _ in 0..20 {
                let rows: Vec<Vec<BigInt>> =
                    (0..n).map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-9..10))).collect()).collect();
                let a = Matrix::from_rows(rows);
                let d = bareiss_det(&a);
                assert_eq!(berkowitz_det(&a, &BigInt::zero()), d);
                let r = ZmodRing::new(3, 4);
                let az = Matrix::from_rows(
                    (0..n).map(|i| a.row(i).iter().map(|x| r.elem(x.clone())).collect()).collect(),
                );
                assert_eq!(berkowitz_det(&az, &r.elem(0)), r.elem(d));
            }
        }
    }
}
