//! Dense integer matrices and the Smith normal form.
//!
//! Everything is exact (`BigInt`); matrices are stored row-major as a list
//! of rows. [`smith_normal_form`] returns unimodular `U`, `V` with
//! `U * M * V = diag(d_1, ..., d_k)` and `d_1 | d_2 | ... | d_k`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Vec<BigInt>>,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            ncols,
            data: vec![vec![BigInt::zero(); ncols]; nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows. `ncols` is needed to give a zero-row
    /// matrix a width.
    ///
    /// # Panics
    /// Panics if the rows have different lengths or disagree with `ncols`.
    pub fn from_rows(ncols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix rows");
        Matrix {
            nrows: rows.len(),
            ncols,
            data: rows,
        }
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            ncols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    /// # Panics
    /// Panics on a dimension mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut out = Matrix::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    out.data[i][j] += a * &other.data[k][j];
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.nrows, "dimension mismatch");
        let mut out = vec![BigInt::zero(); self.ncols];
        for (xi, row) in x.iter().zip(&self.data) {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(row) {
                *o += xi * a;
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in &mut self.data {
            row.swap(a, b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        let src = self.data[source].clone();
        for (t, s) in self.data[target].iter_mut().zip(&src) {
            *t += factor * s;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for row in &mut self.data {
            let s = row[source].clone();
            row[target] += factor * s;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.data[i] {
            *x = -&*x;
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Result of [`smith_normal_form`].
#[derive(Debug, Clone)]
pub struct SmithForm {
    /// `min(nrows, ncols)` invariant factors, nonnegative, each dividing
    /// the next; zeros come last.
    pub diagonal: Vec<BigInt>,
    /// Unimodular row transform (`nrows x nrows`).
    pub left: Matrix,
    /// Unimodular column transform (`ncols x ncols`).
    pub right: Matrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }

    /// Orders of the nontrivial cyclic torsion summands of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }
}

pub fn smith_normal_form(m: &Matrix) -> SmithForm {
    let (nr, nc) = (m.nrows, m.ncols);
    let mut a = m.clone();
    let mut u = Matrix::identity(nr);
    let mut v = Matrix::identity(nc);
    let k = nr.min(nc);

    'pivots: for t in 0..k {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&a, t) else {
                break 'pivots;
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = a.data[t][t].clone();
            let mut cleared = true;
            for i in t + 1..nr {
                if a.data[i][t].is_zero() {
                    continue;
                }
                let q = -a.data[i][t].div_floor(&pivot);
                a.add_row(i, t, &q);
                u.add_row(i, t, &q);
                cleared &= a.data[i][t].is_zero();
            }
            for j in t + 1..nc {
                if a.data[t][j].is_zero() {
                    continue;
                }
                let q = -a.data[t][j].div_floor(&pivot);
                a.add_col(j, t, &q);
                v.add_col(j, t, &q);
                cleared &= a.data[t][j].is_zero();
            }
            if !cleared {
                // a nonzero remainder is smaller than the pivot; re-pick
                continue;
            }

            // The pivot must divide every entry of the trailing block.
            let offender = (t + 1..nr)
                .find(|&i| (t + 1..nc).any(|j| !a.data[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.data[t][t].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    let diagonal = (0..k).map(|i| a.data[i][i].clone()).collect();
    SmithForm {
        diagonal,
        left: u,
        right: v,
    }
}

fn smallest_nonzero(a: &Matrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.nrows {
        for j in t..a.ncols {
            let x = a.data[i][j].abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| x < *b) {
                best = Some((i, j, x));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &Matrix) -> Vec<i64> {
        smith_normal_form(m)
            .diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    fn check_reconstruction(m: &Matrix) {
        let s = smith_normal_form(m);
        let d = s.left.mul(m).mul(&s.right);
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let expected = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(d.get(i, j), &expected, "entry ({i},{j}) of U*M*V for {m:?}");
            }
        }
    }

    #[test]
    fn diagonal_two_three() {
        // [[2,0],[0,3]]: gcd of entries is 1, determinant 6, so (1, 6).
        let m = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(diag(&m), vec![1, 6]);
        check_reconstruction(&m);
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(diag(&Matrix::from_i64(&[&[1]])), vec![1]);
        assert_eq!(diag(&Matrix::from_i64(&[&[0, 0], &[0, 0]])), vec![0, 0]);
    }

    #[test]
    fn empty_matrix() {
        let s = smith_normal_form(&Matrix::zeros(0, 3));
        assert!(s.diagonal.is_empty());
        assert_eq!(s.right.nrows(), 3);
    }

    #[test]
    fn known_four_by_four() {
        let m = Matrix::from_i64(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        assert_eq!(diag(&m), vec![1, 3, 21, 0]);
        check_reconstruction(&m);
    }

    #[test]
    fn rectangular() {
        let m = Matrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12]]);
        assert_eq!(diag(&m), vec![2, 6]);
        check_reconstruction(&m);
        let t = Matrix::from_i64(&[&[2, -6], &[4, 6], &[4, 12]]);
        assert_eq!(diag(&t), vec![2, 6]);
        check_reconstruction(&t);
    }

    #[test]
    fn torsion_of_cokernel() {
        let m = Matrix::from_i64(&[&[2, 2]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.torsion(), vec![BigInt::from(2)]);
    }
}
