//! Exact Gauss-Jordan elimination over rationals for the small systems the
//! generators and the explorer solve.

use num_traits::Zero;

use crate::rational::Rational;

/// Reduced row echelon form of an augmented system `A·x = b`.
#[derive(Debug, Clone)]
pub struct Echelon {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    pivots: Vec<usize>,
    cols: usize,
}

impl Echelon {
    pub fn reduce(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Echelon {
        assert_eq!(a.len(), b.len(), "row count mismatch");
        let cols = a.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            b.swap(r, p);
            let inv = a[r][col].recip();
            for v in a[r].iter_mut() {
                *v = &*v * &inv;
            }
            b[r] = &b[r] * &inv;
            for i in 0..a.len() {
                if i == r || a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
                let d = &f * &b[r];
                b[i] -= d;
            }
            pivots.push(col);
            r += 1;
            if r == a.len() {
                break;
            }
        }
        Echelon {
            rows: a,
            rhs: b,
            pivots,
            cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_consistent(&self) -> bool {
        self.rhs[self.rank()..].iter().all(Zero::is_zero)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Solution with the free columns set to `free` (in `free_columns` order).
    pub fn solve_with(&self, free: &[Rational]) -> Option<Vec<Rational>> {
        if !self.is_consistent() {
            return None;
        }
        let free_cols = self.free_columns();
        assert_eq!(free.len(), free_cols.len(), "free value count mismatch");
        let mut x = vec![Rational::zero(); self.cols];
        for (c, v) in free_cols.iter().zip(free) {
            x[*c] = v.clone();
        }
        for (r, &pc) in self.pivots.iter().enumerate() {
            let mut v = self.rhs[r].clone();
            for &fc in &free_cols {
                v -= &self.rows[r][fc] * &x[fc];
            }
            x[pc] = v;
        }
        Some(x)
    }
}

pub fn rank(a: Vec<Vec<Rational>>) -> usize {
    let n = a.len();
    Echelon::reduce(a, vec![Rational::zero(); n]).rank()
}

/// Unique solution of a square system, `None` when singular.
pub fn solve_unique(a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    let e = Echelon::reduce(a, b);
    (e.rank() == n && e.cols == n)
        .then(|| e.solve_with(&[]))
        .flatten()
}
