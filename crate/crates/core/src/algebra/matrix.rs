use std::ops::{Index, IndexMut};

use super::field::{FieldElement, PrimeField};
use super::Ring;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Copy> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics unless all rows have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let data: Vec<T> = rows
            .into_iter()
            .inspect(|r| assert_eq!(r.len(), cols, "ragged rows"))
            .flatten()
            .collect();
        Matrix { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn map<U: Copy>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Deletes row `r` and column `r`.
    pub fn minor(&self, r: usize) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|&j| j != r).collect();
        Matrix::from_fn(keep.len(), keep_c.len(), |i, j| self[(keep[i], keep_c[j])])
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

/// Rank over the field by Gaussian elimination.
pub fn rank(field: &PrimeField, m: &Matrix<FieldElement>) -> usize {
    rank_capped(field, m, usize::MAX)
}

/// Like [`rank`] but stops as soon as `cap` pivots are found.
pub(crate) fn rank_capped(field: &PrimeField, m: &Matrix<FieldElement>, cap: usize) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows || rank >= cap {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[(r, c)].is_zero()) else {
            continue;
        };
        if p != rank {
            for k in c..cols {
                a.data.swap(p * cols + k, rank * cols + k);
            }
        }
        let inv = field.inv(a[(rank, c)]).expect("pivot is non-zero");
        for r in rank + 1..rows {
            let x = a[(r, c)];
            if x.is_zero() {
                continue;
            }
            let factor = field.mul(x, inv);
            for k in c..cols {
                let v = field.sub(a[(r, k)], field.mul(factor, a[(rank, k)]));
                a[(r, k)] = v;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let f = PrimeField::new(7).unwrap();
        let id = Matrix::from_fn(3, 3, |r, c| f.elem((r == c) as u64));
        assert_eq!(rank(&f, &id), 3);
        assert_eq!(rank(&f, &Matrix::filled(2, 5, f.zero())), 0);
        assert_eq!(rank(&f, &Matrix::filled(0, 4, f.zero())), 0);
        // second row is 3x the first mod 7
        let m = Matrix::from_rows(
            3,
            vec![
                vec![f.elem(1), f.elem(2), f.elem(3)],
                vec![f.elem(3), f.elem(6), f.elem(2)],
            ],
        );
        assert_eq!(rank(&f, &m), 1);
        assert_eq!(rank_capped(&f, &id, 2), 2);
    }

    #[test]
    fn minor_and_transpose() {
        let m = Matrix::from_fn(3, 3, |r, c| (r * 3 + c) as u64);
        assert_eq!(m.minor(0), Matrix::from_rows(2, vec![vec![4, 5], vec![7, 8]]));
        assert_eq!(m.transpose()[(0, 2)], 6);
        assert_eq!(m.row(1), &[3, 4, 5]);
    }
}
