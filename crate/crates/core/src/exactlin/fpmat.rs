//! Dense matrices over `F_{p^d}`.

use std::fmt;

use rand::Rng;

use super::field::{Elem, Field};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", &self.row(r)[..self.cols.min(24)])?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub matrix: FpMatrix,
    pub pivots: Vec<usize>,
}

impl FpMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Self { field: field.clone(), rows: rows.len(), cols, data }
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { field: field.clone(), rows, cols, data }
    }

    /// Reduce an integer matrix into the prime field.
    pub fn from_i64_rows(field: &Field, rows: &[Vec<i64>]) -> Self {
        let r: Vec<Vec<Elem>> = rows.iter().map(|row| row.iter().map(|&x| field.from_i64(x)).collect()).collect();
        if r.is_empty() {
            return Self::zeros(field, 0, 0);
        }
        Self::from_rows(field, &r)
    }

    pub fn random<R: Rng + ?Sized>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| field.random(rng)).collect();
        Self { field: field.clone(), rows, cols, data }
    }

    /// The same matrix over an extension of its prime field.
    pub fn extend_to(&self, field: &Field) -> Result<FpMatrix> {
        if self.field.degree() != 1 || field.characteristic() != self.field.characteristic() {
            return Err(Error::Incompatible(format!(
                "cannot view a matrix over F_{}^{} as one over F_{}^{}",
                self.field.characteristic(),
                self.field.degree(),
                field.characteristic(),
                field.degree()
            )));
        }
        Ok(Self { field: field.clone(), rows: self.rows, cols: self.cols, data: self.data.clone() })
    }

    pub fn field(&self) -> &Field {
        &self.field
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

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = out.row_mut(i);
                axpy(f, dst, a, orow);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0;
                for (&a, &b) in self.row(r).iter().zip(v) {
                    if a != 0 && b != 0 {
                        acc = f.add(acc, f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        FpMatrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        FpMatrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: Elem) -> FpMatrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        FpMatrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Stack rows of `other` below `self`.
    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Submatrix consisting of the chosen columns.
    pub fn select_columns(&self, cols: &[usize]) -> FpMatrix {
        let mut out = Self::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                out.set(r, k, self.get(r, c));
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> FpMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        FpMatrix { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    /// Reduced row echelon form (zero rows dropped).
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m);
        let r = pivots.len();
        m.data.truncate(r * m.cols);
        m.rows = r;
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        rref_in_place(&mut m).len()
    }

    /// Basis of the right kernel `{x : A x = 0}`, as the rows of a matrix in reduced
    /// row echelon form.
    pub fn kernel(&self) -> FpMatrix {
        let ech = self.rref();
        let f = &self.field;
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Self::zeros(f, free.len(), n);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, 1);
            for (i, &pc) in ech.pivots.iter().enumerate() {
                let v = ech.matrix.get(i, fc);
                if v != 0 {
                    basis.set(k, pc, f.neg(v));
                }
            }
        }
        basis.rref().matrix
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<Elem> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of non-square matrix".into()));
        }
        let f = &self.field;
        let mut m = self.clone();
        let n = self.rows;
        let mut det = 1;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m.get(r, col) != 0) else {
                return Ok(0);
            };
            if piv != col {
                m.swap_rows(piv, col);
                det = f.neg(det);
            }
            let pv = m.get(col, col);
            det = f.mul(det, pv);
            let inv = f.inv(pv).expect("nonzero pivot");
            for r in col + 1..n {
                let v = m.get(r, col);
                if v != 0 {
                    let factor = f.neg(f.mul(v, inv));
                    let (src, dst) = m.two_rows(col, r);
                    axpy(f, dst, factor, src);
                }
            }
        }
        Ok(det)
    }

    /// Coefficients of `det(t I - A)`, constant term first; the last entry is 1.
    /// Reduces to Hessenberg form by similarity, then expands along the subdiagonal.
    pub fn char_poly(&self) -> Result<Vec<Elem>> {
        if self.rows != self.cols {
            return Err(Error::Dimension("characteristic polynomial of non-square matrix".into()));
        }
        let f = &self.field;
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| h.get(i, j) != 0) else {
                continue;
            };
            if piv != j + 1 {
                h.swap_rows(piv, j + 1);
                for r in 0..n {
                    let (a, b) = (h.get(r, piv), h.get(r, j + 1));
                    h.set(r, piv, b);
                    h.set(r, j + 1, a);
                }
            }
            let inv = f.inv(h.get(j + 1, j)).expect("nonzero pivot");
            for k in j + 2..n {
                let u = f.mul(h.get(k, j), inv);
                if u == 0 {
                    continue;
                }
                // row_k -= u row_{j+1}, then col_{j+1} += u col_k
                for c in 0..n {
                    let v = f.sub(h.get(k, c), f.mul(u, h.get(j + 1, c)));
                    h.set(k, c, v);
                }
                for r in 0..n {
                    let v = f.add(h.get(r, j + 1), f.mul(u, h.get(r, k)));
                    h.set(r, j + 1, v);
                }
            }
        }
        // polys[m] = char poly of the leading m x m block
        let mut polys: Vec<Vec<Elem>> = vec![vec![1]];
        for m in 1..=n {
            let mut next = vec![0; m + 1];
            let prev = &polys[m - 1];
            let diag = h.get(m - 1, m - 1);
            for (k, &c) in prev.iter().enumerate() {
                next[k + 1] = f.add(next[k + 1], c);
                next[k] = f.sub(next[k], f.mul(diag, c));
            }
            let mut sub = 1;
            for i in 1..m {
                sub = f.mul(sub, h.get(m - i, m - i - 1));
                let coef = f.mul(h.get(m - 1 - i, m - 1), sub);
                if coef == 0 {
                    continue;
                }
                for (k, &c) in polys[m - 1 - i].iter().enumerate() {
                    next[k] = f.sub(next[k], f.mul(coef, c));
                }
            }
            polys.push(next);
        }
        Ok(polys.pop().expect("n + 1 polynomials"))
    }

    pub fn inverse(&self) -> Result<FpMatrix> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Self::zeros(f, n, 2 * n);
        for r in 0..n {
            aug.row_mut(r)[..n].copy_from_slice(self.row(r));
            aug.set(r, n + r, 1);
        }
        let piv = rref_in_place(&mut aug);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(f, n, n);
        for r in 0..n {
            inv.row_mut(r).copy_from_slice(&aug.row(r)[n..]);
        }
        Ok(inv)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        for k in 0..c {
            self.data.swap(a * c + k, b * c + k);
        }
    }

    /// Disjoint mutable access to rows `a` (shared) and `b` (mutable), `a != b`.
    fn two_rows(&mut self, a: usize, b: usize) -> (&[Elem], &mut [Elem]) {
        let c = self.cols;
        if a < b {
            let (lo, hi) = self.data.split_at_mut(b * c);
            (&lo[a * c..(a + 1) * c], &mut hi[..c])
        } else {
            let (lo, hi) = self.data.split_at_mut(a * c);
            (&hi[..c], &mut lo[b * c..(b + 1) * c])
        }
    }
}

/// `dst += a * src` elementwise.
#[inline]
pub(crate) fn axpy(f: &Field, dst: &mut [Elem], a: Elem, src: &[Elem]) {
    if a == 0 {
        return;
    }
    match f.mul_row(a) {
        Some(row) => {
            for (d, &s) in dst.iter_mut().zip(src) {
                if s != 0 {
                    *d = f.add(*d, row[s as usize]);
                }
            }
        }
        None => {
            let p = f.characteristic();
            let a = a as u64;
            for (d, &s) in dst.iter_mut().zip(src) {
                if s != 0 {
                    *d = ((*d as u64 + a * s as u64) % p) as Elem;
                }
            }
        }
    }
}

fn rref_in_place(m: &mut FpMatrix) -> Vec<usize> {
    let f = m.field.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m.get(i, c) != 0) else {
            continue;
        };
        m.swap_rows(piv, r);
        let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
        if inv != 1 {
            for x in m.row_mut(r).iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let v = m.get(i, c);
            if v != 0 {
                let factor = f.neg(v);
                let (src, dst) = m.two_rows(r, i);
                axpy(&f, dst, factor, src);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Incrementally maintained row space in reduced echelon form. Rows are added one at a
/// time; only rows independent of the current span are kept.
#[derive(Debug, Clone)]
pub struct RowSpace {
    field: Field,
    cols: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: &Field, cols: usize) -> Self {
        Self { field: field.clone(), cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduce `v` against the current rows (in place).
    pub fn reduce(&self, v: &mut [Elem]) {
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                axpy(f, v, f.neg(c), row);
            }
        }
    }

    /// Add a row; returns true if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Elem>) -> bool {
        assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field.clone();
        let inv = f.inv(v[pc]).expect("nonzero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                axpy(&f, row, f.neg(c), &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Rows sorted into canonical reduced echelon form.
    pub fn to_matrix(&self) -> FpMatrix {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let rows: Vec<Vec<Elem>> = order.iter().map(|&i| self.rows[i].clone()).collect();
        if rows.is_empty() {
            return FpMatrix::zeros(&self.field, 0, self.cols);
        }
        FpMatrix::from_rows(&self.field, &rows)
    }

    pub fn pivots_sorted(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }
}
