//! Dense exact matrices and Gaussian elimination, plus a sparse column
//! reduction used where only ranks are needed.

use std::collections::HashMap;
use std::fmt;

use crate::field::Field;

/// A dense matrix over an exact field, stored row-major.
#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows_i64(field: &F, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(v));
            }
        }
        m
    }

    /// Builds a `rows x columns.len()` matrix from column vectors.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, f.add(&cur, &f.mul(a, b)));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Columns `a` followed by columns `b`.
    pub fn hstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix<F> {
        let mut out = Self::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix<F> {
        let mut out = Self::zeros(&self.field, rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.cols {
                out.set(i, c, self.get(r, c).clone());
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// `row[target] -= factor * row[source]`, touching only columns `from..`.
    fn eliminate_row(&mut self, target: usize, source: usize, factor: &F::Elem, from: usize) {
        let f = self.field.clone();
        for c in from..self.cols {
            let s = &self.data[source * self.cols + c];
            if f.is_zero(s) {
                continue;
            }
            let t = &self.data[target * self.cols + c];
            let v = f.sub_mul(t, factor, s);
            self.data[target * self.cols + c] = v;
        }
    }

    /// Reduced row echelon form and the pivot columns. Pivots are chosen as the
    /// first nonzero entry, scanning columns left to right and rows top down.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let f = self.field.clone();
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !f.is_zero(a.get(i, c))) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = f.inv(a.get(r, c));
            for cc in c..a.cols {
                let v = f.mul(a.get(r, cc), &inv);
                a.set(r, cc, v);
            }
            for i in 0..a.rows {
                if i != r && !f.is_zero(a.get(i, c)) {
                    let factor = a.get(i, c).clone();
                    a.eliminate_row(i, r, &factor, c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Rank by forward elimination.
    pub fn rank(&self) -> usize {
        let f = self.field.clone();
        let mut a = self.clone();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !f.is_zero(a.get(i, c))) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = f.inv(a.get(r, c));
            for i in r + 1..a.rows {
                if !f.is_zero(a.get(i, c)) {
                    let factor = f.mul(a.get(i, c), &inv);
                    a.eliminate_row(i, r, &factor, c);
                }
            }
            r += 1;
        }
        r
    }

    /// Columns spanning the kernel, one per free column of the RREF, in
    /// increasing free-column order.
    pub fn kernel_basis(&self) -> Matrix<F> {
        let f = &self.field;
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| is_pivot[c].is_none()).collect();
        let mut k = Self::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, f.one());
            for (i, &p) in pivots.iter().enumerate() {
                let v = rref.get(i, fc);
                if !f.is_zero(v) {
                    k.set(p, j, f.neg(v));
                }
            }
        }
        k
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n));
        let (r, pivots) = aug.rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(r.select_columns(&cols))
    }

    /// Column-sparse copy, for [`sparse_rank`].
    pub fn to_sparse_columns(&self) -> Vec<SparseVec<F::Elem>> {
        (0..self.cols)
            .map(|c| {
                (0..self.rows)
                    .filter(|&r| !self.field.is_zero(self.get(r, c)))
                    .map(|r| (r, self.get(r, c).clone()))
                    .collect()
            })
            .collect()
    }
}

/// Sparse vector: `(index, value)` pairs with strictly increasing index and
/// nonzero values.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `a - factor * b` for sparse vectors.
fn axpy<F: Field>(
    field: &F,
    a: &SparseVec<F::Elem>,
    factor: &F::Elem,
    b: &SparseVec<F::Elem>,
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, field.neg(&field.mul(factor, &b[j].1))));
            j += 1;
        } else {
            let v = field.sub_mul(&a[i].1, factor, &b[j].1);
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of the matrix whose columns are given, by column reduction on the
/// lowest nonzero row. Independent of the dense elimination path.
pub fn sparse_rank<F: Field>(field: &F, columns: Vec<SparseVec<F::Elem>>) -> usize {
    let mut reduced: Vec<SparseVec<F::Elem>> = Vec::new();
    let mut pivot_of_low: HashMap<usize, usize> = HashMap::new();
    for mut col in columns {
        while let Some((low, val)) = col.last().cloned() {
            match pivot_of_low.get(&low) {
                Some(&p) => {
                    let piv = &reduced[p];
                    let factor = field.div(&val, &piv.last().unwrap().1);
                    col = axpy(field, &col, &factor, piv);
                }
                None => {
                    pivot_of_low.insert(low, reduced.len());
                    reduced.push(col);
                    break;
                }
            }
        }
    }
    reduced.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(Matrix::identity(&f2(), 2).rank(), 2);
        assert_eq!(Matrix::from_rows_i64(&f2(), &[vec![2]]).rank(), 0);
        assert_eq!(Matrix::from_rows_i64(&Rationals, &[vec![2]]).rank(), 1);
        assert_eq!(Matrix::zeros(&Rationals, 0, 3).rank(), 0);
    }

    #[test]
    fn c4_edge_boundary_rank() {
        // edges 12, 14, 23, 34 against vertices 1..4
        let d1 = Matrix::from_rows_i64(
            &Rationals,
            &[
                vec![-1, -1, 0, 0],
                vec![1, 0, -1, 0],
                vec![0, 0, 1, -1],
                vec![0, 1, 0, 1],
            ],
        );
        assert_eq!(d1.rank(), 3);
        assert_eq!(sparse_rank(&Rationals, d1.to_sparse_columns()), 3);
    }

    #[test]
    fn kernels() {
        let z = Matrix::zeros(&Rationals, 2, 3);
        assert_eq!(z.kernel_basis(), Matrix::identity(&Rationals, 3));
        assert_eq!(Matrix::identity(&Rationals, 3).kernel_basis().cols(), 0);
        let a = Matrix::from_rows_i64(&Rationals, &[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn rref_is_deterministic_and_idempotent() {
        let a = Matrix::from_rows_i64(&Rationals, &[vec![0, 2, 4], vec![1, 1, 1], vec![1, 3, 5]]);
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(
            r,
            Matrix::from_rows_i64(&Rationals, &[vec![1, 0, -1], vec![0, 1, 2], vec![0, 0, 0]])
        );
        assert_eq!(r.rref().0, r);
    }

    #[test]
    fn inverses() {
        let a = Matrix::from_rows_i64(&Rationals, &[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(&Rationals, 2));
        let s = Matrix::from_rows_i64(&Rationals, &[vec![1, 2], vec![2, 4]]);
        assert!(s.inverse().is_none());
    }
}
