//! Dense integer matrices with arbitrary-precision entries.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::field::Field;
use super::fpmat::FpMatrix;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Result of a Smith normal form computation: `u * a * v = d`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.get(i, i).clone()).filter(|x| !x.is_zero()).collect()
    }
}

/// Finitely generated abelian group `Z/d_1 x ... x Z/d_k x Z^free_rank` with
/// `1 < d_1 | d_2 | ... | d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub divisors: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty() && self.free_rank == 0
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> BigInt {
        self.divisors.iter().fold(BigInt::one(), |a, b| a * b)
    }

    pub fn divisors_u64(&self) -> Vec<u64> {
        use num_traits::ToPrimitive;
        self.divisors.iter().map(|d| d.to_u64().expect("small divisor")).collect()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.divisors.iter().map(|d| format!("Z/{d}")).collect();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", self.free_rank) });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Self { rows: rows.len(), cols, data }
    }

    /// Same as [`from_i64_rows`](Self::from_i64_rows) but with an explicit column count,
    /// so that an empty row list still has a shape.
    pub fn from_i64_rows_with_cols(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::from_i64_rows(rows);
        if rows.is_empty() {
            m.cols = cols;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Self { rows: n, cols, data }
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m.set(i, i, BigInt::from(x));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        (0..self.rows).map(|r| self.row(r).iter().map(|x| x.to_i64().expect("entry fits in i64")).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn to_fp(&self, field: &Field) -> FpMatrix {
        let data = self.data.iter().map(|x| field.from_bigint(x)).collect();
        FpMatrix::from_vec(field, self.rows, self.cols, data)
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank_q(&self) -> usize {
        bareiss(&mut self.data.clone(), self.rows, self.cols).0
    }

    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of non-square matrix".into()));
        }
        if self.rows == 0 {
            return Ok(BigInt::one());
        }
        let (rank, det) = bareiss(&mut self.data.clone(), self.rows, self.cols);
        Ok(if rank < self.rows { BigInt::zero() } else { det })
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().is_ok_and(|d| d.abs().is_one())
    }

    /// Smith normal form `u * self * v = d` with unimodular `u`, `v` and a diagonal `d`
    /// whose nonzero entries are positive and form a divisibility chain.
    pub fn smith_normal_form(&self) -> SmithForm {
        let (m, n) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut u = IntMatrix::identity(m);
        let mut v = IntMatrix::identity(n);
        let mut t = 0;
        while t < m.min(n) {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = a.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(a.get(t, t));
                a.add_row_multiple(i, t, &-&q);
                u.add_row_multiple(i, t, &-&q);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(a.get(t, t));
                a.add_col_multiple(j, t, &-&q);
                v.add_col_multiple(j, t, &-&q);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and redo this pivot
            let piv = a.get(t, t).clone();
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a.get(i, j).is_multiple_of(&piv)));
            if let Some(i) = offending {
                a.add_row_multiple(t, i, &BigInt::one());
                u.add_row_multiple(t, i, &BigInt::one());
                continue;
            }
            if piv.is_negative() {
                a.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        SmithForm { u, d: a, v }
    }

    /// Row-style Hermite normal form: the nonzero rows form the canonical basis of the
    /// row lattice, with positive pivots and entries above each pivot reduced into
    /// `[0, pivot)`.
    pub fn hermite_normal_form(&self) -> IntMatrix {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            loop {
                let mut best: Option<usize> = None;
                for i in r..m {
                    let x = a.get(i, c);
                    if !x.is_zero() && best.is_none_or(|b| x.abs() < a.get(b, c).abs()) {
                        best = Some(i);
                    }
                }
                let Some(b) = best else { break };
                a.swap_rows(r, b);
                let mut done = true;
                for i in r + 1..m {
                    if a.get(i, c).is_zero() {
                        continue;
                    }
                    let q = a.get(i, c).div_floor(a.get(r, c));
                    a.add_row_multiple(i, r, &-&q);
                    if !a.get(i, c).is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if a.get(r, c).is_zero() {
                continue;
            }
            if a.get(r, c).is_negative() {
                a.negate_row(r);
            }
            let piv = a.get(r, c).clone();
            for i in 0..r {
                let q = a.get(i, c).div_floor(&piv);
                if !q.is_zero() {
                    a.add_row_multiple(i, r, &-&q);
                }
            }
            r += 1;
        }
        a.data.truncate(r * n);
        a.rows = r;
        a
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        let data = self.data.iter().map(|a| a * k).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Entrywise division by `k`, if every entry is divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<IntMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for a in &self.data {
            let (q, r) = a.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            data.push(q);
        }
        Some(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Submatrix with the chosen rows.
    pub fn select_rows(&self, rows: &[usize]) -> IntMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        IntMatrix { rows: rows.len(), cols: self.cols, data }
    }

    /// Submatrix with the columns `start..start + len`.
    pub fn column_range(&self, start: usize, len: usize) -> IntMatrix {
        let mut data = Vec::with_capacity(self.rows * len);
        for r in 0..self.rows {
            data.extend_from_slice(&self.row(r)[start..start + len]);
        }
        IntMatrix { rows: self.rows, cols: len, data }
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Integer coefficients `c` with `c * self = y`, for `self` in Hermite normal form.
    pub fn hnf_coordinates(&self, y: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(y.len(), self.cols);
        let mut rem = y.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows);
        for k in 0..self.rows {
            let row = self.row(k);
            let pc = row.iter().position(|x| !x.is_zero())?;
            let (q, r) = rem[pc].div_rem(&row[pc]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, a) in rem.iter_mut().zip(row) {
                    if !a.is_zero() {
                        *x -= &q * a;
                    }
                }
            }
            coeffs.push(q);
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    /// Indices of a maximal set of rows independent over the rationals, chosen greedily
    /// in order.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
        let mut chosen = Vec::new();
        for r in 0..self.rows {
            let mut v: Vec<BigRational> = self.row(r).iter().map(|x| BigRational::from_integer(x.clone())).collect();
            for (pc, b) in &basis {
                if !v[*pc].is_zero() {
                    let f = v[*pc].clone();
                    for (x, y) in v.iter_mut().zip(b) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
            }
            if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[pc].recip();
                for x in v.iter_mut() {
                    *x *= &inv;
                }
                basis.push((pc, v));
                chosen.push(r);
            }
        }
        chosen
    }

    /// The unique `x` with `self * x = rhs`, for square nonsingular `self`, provided it is
    /// integral.
    pub fn solve_exact(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        let n = self.rows;
        if self.cols != n || rhs.rows != n {
            return Err(Error::Dimension("solve_exact needs a square system".into()));
        }
        let w = n + rhs.cols;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                self.row(r).iter().chain(rhs.row(r)).map(|x| BigRational::from_integer(x.clone())).collect()
            })
            .collect();
        for c in 0..n {
            let piv = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(c, piv);
            let inv = a[c][c].recip();
            for x in a[c].iter_mut() {
                *x *= &inv;
            }
            let prow = a[c].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == c || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for k in c..w {
                    if !prow[k].is_zero() {
                        row[k] -= &f * &prow[k];
                    }
                }
            }
        }
        let mut out = IntMatrix::zeros(n, rhs.cols);
        for r in 0..n {
            for c in 0..rhs.cols {
                let x = &a[r][n + c];
                if !x.is_integer() {
                    return Err(Error::NoIntegralForm);
                }
                out.set(r, c, x.to_integer());
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        for k in 0..c {
            self.data.swap(a * c + k, b * c + k);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        for r in 0..self.rows {
            self.data.swap(r * c + a, r * c + b);
        }
    }

    /// row `dst` += q * row `src`
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        let c = self.cols;
        for k in 0..c {
            let s = &self.data[src * c + k];
            if !s.is_zero() {
                let add = s * q;
                self.data[dst * c + k] += add;
            }
        }
    }

    /// column `dst` += q * column `src`
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        let c = self.cols;
        for r in 0..self.rows {
            let s = &self.data[r * c + src];
            if !s.is_zero() {
                let add = s * q;
                self.data[r * c + dst] += add;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        let c = self.cols;
        for x in &mut self.data[r * c..(r + 1) * c] {
            *x = -&*x;
        }
    }
}

/// Fraction-free elimination in place; returns (rank, last leading minor).
fn bareiss(a: &mut [BigInt], rows: usize, cols: usize) -> (usize, BigInt) {
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if piv != r {
            for k in 0..cols {
                a.swap(piv * cols + k, r * cols + k);
            }
            sign = -sign;
        }
        let p = a[r * cols + c].clone();
        for i in r + 1..rows {
            let f = a[i * cols + c].clone();
            for k in c + 1..cols {
                let v = (&p * &a[i * cols + k] - &f * &a[r * cols + k]) / &prev;
                a[i * cols + k] = v;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = p;
        r += 1;
    }
    let det = if sign < 0 { -prev } else { prev };
    (r, det)
}

/// Smith normal form of `a`.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    a.smith_normal_form()
}

/// Rank of an integer matrix over the rationals.
pub fn rank_q(a: &IntMatrix) -> usize {
    a.rank_q()
}

/// Invariants of `Z^ambient_rank / L` where `L` is spanned by the rows of `sublattice`.
pub fn lattice_quotient(ambient_rank: usize, sublattice: &IntMatrix) -> Result<AbelianInvariants> {
    if sublattice.rows() > 0 && sublattice.cols() != ambient_rank {
        return Err(Error::Dimension(format!(
            "sublattice rows have {} coordinates, ambient rank is {}",
            sublattice.cols(),
            ambient_rank
        )));
    }
    if sublattice.rows() == 0 {
        return Ok(AbelianInvariants { divisors: vec![], free_rank: ambient_rank });
    }
    // reduce to a square-ish basis first so that the Smith step stays small
    let h = sublattice.hermite_normal_form();
    let snf = h.smith_normal_form();
    let divs = snf.divisors();
    let free_rank = ambient_rank - divs.len();
    Ok(AbelianInvariants { divisors: divs.into_iter().filter(|d| !d.is_one()).collect(), free_rank })
}

/// Index of a full-rank sublattice, or `None` if the quotient is infinite.
pub fn sublattice_index(ambient_rank: usize, sublattice: &IntMatrix) -> Result<Option<BigInt>> {
    let inv = lattice_quotient(ambient_rank, sublattice)?;
    Ok(if inv.free_rank == 0 { Some(inv.torsion_order()) } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn check_snf(a: &IntMatrix) -> SmithForm {
        let s = a.smith_normal_form();
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
        assert!(s.d.is_diagonal());
        let divs = s.divisors();
        for w in divs.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(divs.iter().all(|d| d.is_positive()));
        s
    }

    #[test]
    fn snf_small_cases() {
        let s = check_snf(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        let s = check_snf(&IntMatrix::diagonal(&[2, 3]));
        assert_eq!(s.d, IntMatrix::diagonal(&[1, 6]));
        let s = check_snf(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(s.divisors(), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        check_snf(&m(&[&[0, 0], &[0, 0], &[0, 0]]));
        check_snf(&m(&[&[3, 5, 7, 11]]));
    }

    #[test]
    fn hnf_is_canonical() {
        let a = m(&[&[4, 1, 1], &[0, 2, 0], &[0, 0, 2], &[8, 4, 2]]);
        let h = a.hermite_normal_form();
        assert_eq!(h, m(&[&[4, 1, 1], &[0, 2, 0], &[0, 0, 2]]));
        let b = m(&[&[0, 2, 0], &[4, 3, 1], &[0, 0, 2]]);
        assert_eq!(b.hermite_normal_form(), h);
    }

    #[test]
    fn rank_and_det() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a.rank_q(), 2);
        assert_eq!(a.det().unwrap(), BigInt::zero());
        let b = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(b.det().unwrap(), BigInt::from(5));
        let c = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(c.det().unwrap(), BigInt::from(-1));
        assert_eq!(a.independent_rows(), vec![0, 1]);
        let x = b.solve_exact(&m(&[&[3], &[4]])).unwrap();
        assert_eq!(x, m(&[&[1], &[1]]));
        assert!(matches!(b.solve_exact(&m(&[&[1], &[0]])), Err(Error::NoIntegralForm)));
        let h = m(&[&[2, 1, 0], &[0, 3, 1]]);
        let y: Vec<BigInt> = [4, 5, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(h.hnf_coordinates(&y), Some(vec![BigInt::from(2), BigInt::from(1)]));
        let z: Vec<BigInt> = [1, 0, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(h.hnf_coordinates(&z), None);
    }

    #[test]
    fn quotients() {
        let q = lattice_quotient(3, &IntMatrix::identity(3)).unwrap();
        assert!(q.is_trivial());
        let q = lattice_quotient(2, &m(&[&[2, 0]])).unwrap();
        assert_eq!(q.divisors_u64(), vec![2]);
        assert_eq!(q.free_rank, 1);
        assert_eq!(q.to_string(), "Z/2 x Z");
        let q = lattice_quotient(2, &IntMatrix::from_i64_rows_with_cols(&[], 2)).unwrap();
        assert_eq!(q.free_rank, 2);
        assert!(lattice_quotient(3, &m(&[&[1, 2]])).is_err());
    }
}
