//! Exact rational matrices.
//!
//! Everything here is exact: ranks come from fraction-free integer
//! elimination after clearing denominators, and reduced row echelon form
//! runs over the rationals. Sizes stay small (a few dozen rows), so the
//! emphasis is on correctness, not asymptotics.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::Poly;

/// A dense matrix over the rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> RationalMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|&v| BigRational::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn from_columns(cols: Vec<Vec<BigRational>>) -> RationalMatrix {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = RationalMatrix::zeros(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[BigRational] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn trace(&self) -> BigRational {
        assert!(self.is_square());
        (0..self.rows)
            .map(|i| self.get(i, i).clone())
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn add(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &RationalMatrix) -> RationalMatrix {
        self.add(&rhs.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + a * b;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// `k`-th power of a square matrix; the zeroth power is the identity.
    pub fn pow(&self, k: usize) -> RationalMatrix {
        assert!(self.is_square());
        let mut acc = RationalMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Direct sum along the diagonal.
    pub fn block_diag(blocks: &[&RationalMatrix]) -> RationalMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = RationalMatrix::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    // Denominator-free copy: each row is scaled by the lcm of its
    // denominators, which changes no rank.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    lcm = lcm.lcm(self.get(i, j).denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let c = self.get(i, j);
                        c.numer() * (&lcm / c.denom())
                    })
                    .collect()
            })
            .collect()
    }

    /// Rank by fraction-free (Bareiss) elimination over the integers.
    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut col_of = (0..cols).collect::<Vec<_>>();
        let mut prev = BigInt::one();
        let mut k = 0;
        loop {
            if k >= rows || k >= cols {
                return k;
            }
            // Pivot search over the whole remaining submatrix.
            let Some((pi, pj)) = (k..rows)
                .flat_map(|i| (k..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][col_of[j]].is_zero())
            else {
                return k;
            };
            m.swap(k, pi);
            col_of.swap(k, pj);
            let pivot = m[k][col_of[k]].clone();
            for i in (k + 1)..rows {
                let head = m[i][col_of[k]].clone();
                for j in (k + 1)..cols {
                    let v = (&pivot * &m[i][col_of[j]] - &head * &m[k][col_of[j]]) / &prev;
                    m[i][col_of[j]] = v;
                }
                m[i][col_of[k]] = BigInt::zero();
            }
            prev = pivot;
            k += 1;
        }
    }

    /// Reduced row echelon form and the pivot column indices.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pi) = (r..m.rows).find(|&i| !m.get(i, j).is_zero()) else {
                continue;
            };
            for jj in 0..m.cols {
                let tmp = m.get(r, jj).clone();
                let v = m.get(pi, jj).clone();
                m.set(r, jj, v);
                m.set(pi, jj, tmp);
            }
            let inv = BigRational::one() / m.get(r, j);
            for jj in 0..m.cols {
                let v = m.get(r, jj) * &inv;
                m.set(r, jj, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, j).is_zero() {
                    continue;
                }
                let f = m.get(i, j).clone();
                for jj in 0..m.cols {
                    let v = m.get(i, jj) - &f * m.get(r, jj);
                    m.set(i, jj, v);
                }
            }
            pivots.push(j);
            r += 1;
        }
        (m, pivots)
    }

    /// One solution of `self * x = b`, if the system is consistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(self.rows, b.len(), "shape mismatch");
        let mut aug = RationalMatrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // a row reads 0 = 1
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = RationalMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, BigRational::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
            return None;
        }
        let mut out = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    /// Writes `self = F * G` with `F` of full column rank and `G` of full
    /// row rank, both of rank `rank(self)`. `F` keeps the pivot columns of
    /// `self`; `G` is the nonzero part of the reduced echelon form.
    pub fn full_rank_factorization(&self) -> (RationalMatrix, RationalMatrix) {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let mut f = RationalMatrix::zeros(self.rows, rank);
        for (k, &j) in pivots.iter().enumerate() {
            for i in 0..self.rows {
                f.set(i, k, self.get(i, j).clone());
            }
        }
        let mut g = RationalMatrix::zeros(rank, self.cols);
        for i in 0..rank {
            for j in 0..self.cols {
                g.set(i, j, r.get(i, j).clone());
            }
        }
        (f, g)
    }

    /// Monic minimal polynomial of a square matrix.
    ///
    /// Builds the flattened powers `I, M, M^2, ...` and returns the first
    /// linear dependency, tracked through incremental echelon reduction.
    pub fn minimal_polynomial(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        // (reduced vector, lead index, combination over powers)
        let mut echelon: Vec<(Vec<BigRational>, usize, Vec<BigRational>)> = Vec::new();
        let mut power = RationalMatrix::identity(n);
        for k in 0..=n {
            let mut v = power.data.clone();
            let mut combo = vec![BigRational::zero(); k + 1];
            combo[k] = BigRational::one();
            for (rvec, lead, rcombo) in &echelon {
                if v[*lead].is_zero() {
                    continue;
                }
                let f = v[*lead].clone();
                for (slot, rv) in v.iter_mut().zip(rvec) {
                    let nv = &*slot - &f * rv;
                    *slot = nv;
                }
                for (i, rc) in rcombo.iter().enumerate() {
                    let nv = &combo[i] - &f * rc;
                    combo[i] = nv;
                }
            }
            match v.iter().position(|c| !c.is_zero()) {
                None => return Poly::from_coeffs(combo),
                Some(lead) => {
                    let inv = BigRational::one() / &v[lead];
                    for slot in &mut v {
                        let nv = &*slot * &inv;
                        *slot = nv;
                    }
                    for slot in &mut combo {
                        let nv = &*slot * &inv;
                        *slot = nv;
                    }
                    echelon.push((v, lead, combo));
                }
            }
            power = power.mul(self);
        }
        unreachable!("a dependency arises by degree n");
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
