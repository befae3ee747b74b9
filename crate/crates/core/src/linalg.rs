//! Dense exact linear algebra over any field type.

use num_traits::{One, Zero};

use crate::scalars::{Cyclo, CycloReal, PrimeFieldScalar, Rational};

/// Minimal field interface used by the elimination routines.
pub trait FieldElement: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn recip(&self) -> Self;
}

impl FieldElement for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn recip(&self) -> Self {
        Rational::recip(self)
    }
}

impl FieldElement for Cyclo {
    fn zero_like(&self) -> Self {
        Cyclo::zero()
    }
    fn one_like(&self) -> Self {
        Cyclo::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn recip(&self) -> Self {
        self.inv().expect("pivot is nonzero")
    }
}

impl FieldElement for CycloReal {
    fn zero_like(&self) -> Self {
        CycloReal::zero()
    }
    fn one_like(&self) -> Self {
        CycloReal::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn recip(&self) -> Self {
        self.inv().expect("pivot is nonzero")
    }
}

impl FieldElement for PrimeFieldScalar {
    fn zero_like(&self) -> Self {
        PrimeFieldScalar::new(0, self.modulus())
    }
    fn one_like(&self) -> Self {
        PrimeFieldScalar::new(1, self.modulus())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(*o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(*o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(*o)
    }
    fn recip(&self) -> Self {
        self.inv().expect("pivot is nonzero")
    }
}

pub type Matrix<T> = Vec<Vec<T>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce<T: FieldElement>(m: &mut Matrix<T>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero_elem()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        if !(inv.minus(&inv.one_like())).is_zero_elem() {
            for x in m[r].iter_mut().skip(c) {
                *x = x.times(&inv);
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero_elem() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero_elem() {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: FieldElement>(m: &Matrix<T>) -> usize {
    let mut a = m.clone();
    row_reduce(&mut a).len()
}

/// Basis of {x : m x = 0}; `zero` fixes the field when `m` has no rows.
pub fn nullspace<T: FieldElement>(m: &Matrix<T>, cols: usize, zero: &T) -> Vec<Vec<T>> {
    let mut a = m.clone();
    let pivots = row_reduce(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero.zero_like(); cols];
            v[f] = zero.one_like();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = a[r][f].zero_like().minus(&a[r][f]);
            }
            v
        })
        .collect()
}

/// Some solution of a x = b, if one exists.
pub fn solve<T: FieldElement>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    let cols = a.first()?.len();
    let mut aug: Matrix<T> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let zero = b.first()?.zero_like();
    let mut x = vec![zero; cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Some(x)
}

pub fn inverse<T: FieldElement>(a: &Matrix<T>) -> Option<Matrix<T>> {
    let n = a.len();
    let zero = a.first()?.first()?.zero_like();
    let mut aug: Matrix<T> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { zero.one_like() } else { zero.clone() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det<T: FieldElement>(a: &Matrix<T>) -> T {
    let n = a.len();
    let mut m = a.clone();
    let one = m[0][0].one_like();
    let mut d = one.clone();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero_elem()) else {
            return one.zero_like();
        };
        if p != c {
            m.swap(p, c);
            d = d.zero_like().minus(&d);
        }
        d = d.times(&m[c][c]);
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero_elem() {
                continue;
            }
            let f = m[i][c].times(&inv);
            for j in c..n {
                let t = f.times(&m[c][j]);
                m[i][j] = m[i][j].minus(&t);
            }
        }
    }
    d
}

/// Indices of a maximal linearly independent subset of rows, chosen greedily.
pub fn independent_rows<T: FieldElement>(rows: &Matrix<T>) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Matrix<T> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(r.clone());
        if rank(&trial) == trial.len() {
            basis = trial;
            chosen.push(i);
        }
    }
    chosen
}

/// Whether every row of `b` lies in the row span of `a`.
pub fn span_contains<T: FieldElement>(a: &Matrix<T>, b: &Matrix<T>) -> bool {
    let ra = rank(a);
    let mut joint = a.clone();
    joint.extend(b.iter().cloned());
    rank(&joint) == ra
}

pub fn mat_mul<T: FieldElement>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let zero = a[0][0].zero_like();
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).fold(zero.clone(), |acc, (x, br)| acc.plus(&x.times(&br[j]))))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let k = nullspace(&m, 3, &rat(0, 1));
        assert_eq!(k.len(), 1);
        for row in &m {
            let s = row.iter().zip(&k[0]).fold(rat(0, 1), |a, (x, y)| a + x * y);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn inverse_and_det() {
        let m = q(&[&[2, 1], &[5, 3]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, q(&[&[3, -1], &[-5, 2]]));
        assert_eq!(det(&m), rat(1, 1));
        assert!(inverse(&q(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(det(&q(&[&[0, 1], &[1, 0]])), rat(-1, 1));
    }

    #[test]
    fn solving() {
        let m = q(&[&[1, 1], &[1, -1]]);
        let x = solve(&m, &[rat(3, 1), rat(1, 1)]).unwrap();
        assert_eq!(x, vec![rat(2, 1), rat(1, 1)]);
        assert!(solve(&q(&[&[1, 1], &[2, 2]]), &[rat(1, 1), rat(3, 1)]).is_none());
    }
}
