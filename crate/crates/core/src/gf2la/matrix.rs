//! Dense matrices over GF(2^e) with deterministic Gaussian elimination.
//!
//! Elimination always takes the first nonzero entry of the current column as
//! pivot, scanning columns left to right. Over GF(2) the rows are bit-packed
//! into `u64` words.

use std::fmt;

use super::field::{Elem, Field};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF(2^{})", self.rows, self.cols, self.field.degree())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors, all of length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Elem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (r, &v) in col.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    /// Adds `v` to entry `(r, c)`.
    #[inline]
    pub fn add_to(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] ^= v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn scale(&self, s: Elem) -> Matrix {
        let f = self.field;
        Matrix { data: self.data.iter().map(|&x| f.mul(s, x)).collect(), ..self.clone() }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            data: self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect(),
            ..self.clone()
        }
    }

    pub fn add_assign_scaled(&mut self, s: Elem, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a ^= f.mul(s, b);
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
                if a == 1 {
                    for (d, &b) in dst.iter_mut().zip(orow) {
                        *d ^= b;
                    }
                } else {
                    for (d, &b) in dst.iter_mut().zip(orow) {
                        *d ^= f.mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        let f = self.field;
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(0, |acc, (&a, &b)| acc ^ f.mul(a, b)))
            .collect()
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a == 0 {
                    continue;
                }
                for rr in 0..other.rows {
                    for cc in 0..other.cols {
                        out.set(r * other.rows + rr, c * other.cols + cc, f.mul(a, other.get(rr, cc)));
                    }
                }
            }
        }
        out
    }

    /// Copy of a rectangular block.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c));
            }
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, m: &Matrix) {
        for r in 0..m.rows {
            for c in 0..m.cols {
                self.set(r0 + r, c0 + c, m.get(r, c));
            }
        }
    }

    /// Reduced row echelon form; returns the reduced matrix and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        if self.field.is_prime_field() {
            let mut packed = PackedRows::from_matrix(self);
            let pivots = packed.rref();
            (packed.to_matrix(self.field), pivots)
        } else {
            let mut m = self.clone();
            let pivots = m.rref_in_place();
            (m, pivots)
        }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.get(r, col) != 0) else { continue };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("pivot is nonzero");
            for c in col..self.cols {
                let v = f.mul(inv, self.get(row, c));
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                let factor = self.get(r, col);
                if r == row || factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = self.get(r, c) ^ f.mul(factor, self.get(row, c));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.field.is_prime_field() {
            PackedRows::from_matrix(self).rank()
        } else {
            self.rref().1.len()
        }
    }

    /// Rank together with a basis of the right kernel `{v : M v = 0}`.
    ///
    /// The kernel basis is the standard one read off the reduced echelon form:
    /// one vector per free column, with a 1 in that column and 0 in every other
    /// free column.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Elem>>) {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let kernel = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = r.get(row, free);
                }
                v
            })
            .collect();
        (pivots.len(), kernel)
    }

    pub fn kernel(&self) -> Vec<Vec<Elem>> {
        self.rank_and_kernel().1
    }

    /// Some `x` with `M x = b`, free variables set to zero; `None` when
    /// `b` is not in the column space.
    pub fn solve(&self, b: &[Elem]) -> Option<Vec<Elem>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.data[r * (self.cols + 1)..r * (self.cols + 1) + self.cols].copy_from_slice(self.row(r));
            aug.set(r, self.cols, b[r]);
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = red.get(row, self.cols);
        }
        Some(x)
    }
}

/// Bit-packed GF(2) rows used for elimination.
#[derive(Clone, Debug)]
pub struct PackedRows {
    cols: usize,
    words: usize,
    rows: usize,
    data: Vec<u64>,
}

impl PackedRows {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        PackedRows { cols, words, rows, data: vec![0; rows * words] }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let mut p = Self::new(m.rows, m.cols);
        for r in 0..m.rows {
            for (c, &v) in m.row(r).iter().enumerate() {
                if v & 1 == 1 {
                    p.data[r * p.words + c / 64] |= 1 << (c % 64);
                }
            }
        }
        p
    }

    pub fn to_matrix(&self, field: Field) -> Matrix {
        let mut m = Matrix::zeros(field, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    m.set(r, c, 1);
                }
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] ^= 1 << (c % 64);
    }

    fn xor_rows(&mut self, dst: usize, src: usize, from_word: usize) {
        let w = self.words;
        let (d, s) = (dst * w, src * w);
        for k in from_word..w {
            self.data[d + k] ^= self.data[s + k];
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for k in 0..self.words {
            self.data.swap(a * self.words + k, b * self.words + k);
        }
    }

    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.get(r, col)) else { continue };
            if p != row {
                self.swap_rows(p, row);
            }
            let start = if full { 0 } else { row + 1 };
            for r in start..self.rows {
                if r != row && self.get(r, col) {
                    self.xor_rows(r, row, col / 64);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&mut self) -> Vec<usize> {
        self.eliminate(true)
    }

    pub fn rank(mut self) -> usize {
        self.eliminate(false).len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Field {
        Field::gf2()
    }

    #[test]
    fn identity_has_full_rank_and_no_kernel() {
        for n in [1, 5, 70] {
            let (r, k) = Matrix::identity(gf2(), n).rank_and_kernel();
            assert_eq!(r, n);
            assert!(k.is_empty());
        }
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let (r, k) = Matrix::zeros(gf2(), 3, 4).rank_and_kernel();
        assert_eq!(r, 0);
        assert_eq!(k.len(), 4);
        for (i, v) in k.iter().enumerate() {
            let mut e = vec![0; 4];
            e[i] = 1;
            assert_eq!(v, &e);
        }
    }

    #[test]
    fn all_ones_two_by_two() {
        let m = Matrix::from_rows(gf2(), 2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rank_and_kernel(), (1, vec![vec![1, 1]]));
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(gf2(), 3);
        assert_eq!(id.solve(&[1, 0, 1]), Some(vec![1, 0, 1]));
        assert_eq!(Matrix::zeros(gf2(), 2, 2).solve(&[0, 1]), None);
        let m = Matrix::from_rows(gf2(), 2, &[vec![1, 1]]);
        assert_eq!(m.solve(&[1]), Some(vec![1, 0]));
    }

    #[test]
    fn gf4_elimination() {
        let f = Field::new(2).unwrap();
        // [[t, 1], [1, t+1]]: second row = (t+1) * first row since (t+1) t = 1
        let m = Matrix::from_rows(f, 2, &[vec![2, 1], vec![1, 3]]);
        let (r, k) = m.rank_and_kernel();
        assert_eq!(r, 1);
        assert_eq!(m.mul_vec(&k[0]), vec![0, 0]);
    }

    #[test]
    fn wide_packed_rows() {
        let f = gf2();
        let mut m = Matrix::zeros(f, 3, 130);
        m.set(0, 129, 1);
        m.set(1, 64, 1);
        m.set(1, 129, 1);
        m.set(2, 64, 1);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 128);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }
}
