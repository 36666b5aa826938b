//! Dense square matrices over an exact field-like scalar.
//!
//! The same code runs over [`Rational`] and over first-order jets
//! ([`crate::jet::Jet`]), which is how brackets of matrix functions are
//! differentiated exactly.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Scalars the matrix routines run over.
///
/// `is_invertible` looks only at the value part: a jet with nonzero value is
/// invertible even though it is not a field element in the strict sense.
pub trait Scalar:
    Clone
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn is_invertible(&self) -> bool;
    fn from_rational(q: &Rational) -> Self;
}

impl Scalar for Rational {
    fn is_invertible(&self) -> bool {
        !self.is_zero()
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    n: usize,
    data: Vec<S>,
}

pub type RationalMatrix = Matrix<Rational>;

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.n.max(1))).finish()
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![S::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn diagonal(d: &[S]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).take(self.n).collect()
    }

    pub fn from_rational(m: &RationalMatrix) -> Self {
        Matrix { n: m.n, data: m.data.iter().map(S::from_rational).collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: S) {
        self.data[i * self.n + j] = x;
    }

    pub fn map<T, F: Fn(&S) -> T>(&self, f: F) -> Matrix<T> {
        Matrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn diag(&self) -> Vec<S> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.data[i * n + j].clone();
                    out.data[i * n + j] = cur + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Gauss–Jordan inverse with row pivoting on invertible values.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| a.get(r, col).is_invertible())
                .ok_or_else(|| Error::input("singular matrix"))?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.data[col * n + j] = a.data[col * n + j].clone() / p.clone();
                inv.data[col * n + j] = inv.data[col * n + j].clone() / p.clone();
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.data[r * n + j].clone() - f.clone() * a.data[col * n + j].clone();
                    a.data[r * n + j] = x;
                    let y = inv.data[r * n + j].clone() - f.clone() * inv.data[col * n + j].clone();
                    inv.data[r * n + j] = y;
                }
            }
        }
        Ok(inv)
    }

    /// Minor with the given 0-based row and column sets (sorted, equal length).
    ///
    /// Division-free Laplace expansion along rows, memoised over column
    /// subsets; safe for jets whose value determinant vanishes.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> S {
        assert_eq!(rows.len(), cols.len());
        let k = rows.len();
        if k == 0 {
            return S::one();
        }
        assert!(k <= 20, "minor too large");
        // dp[mask] = minor of the first popcount(mask) rows with columns `mask`
        let mut dp: Vec<Option<S>> = vec![None; 1 << k];
        dp[0] = Some(S::one());
        for mask in 1usize..(1 << k) {
            let r = mask.count_ones() as usize - 1;
            let row = rows[r];
            let mut acc = S::zero();
            let mut seen_after = 0;
            for c in (0..k).rev() {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let entry = self.get(row, cols[c]);
                if !entry.is_zero() {
                    if let Some(sub) = &dp[mask & !(1 << c)] {
                        // sign: number of chosen columns after c in the expansion order
                        let term = entry.clone() * sub.clone();
                        acc = if seen_after % 2 == 0 { acc + term } else { acc - term };
                    }
                }
                seen_after += 1;
            }
            dp[mask] = Some(acc);
        }
        dp[(1 << k) - 1].take().unwrap()
    }

    /// Leading principal `k × k` minor.
    pub fn leading_minor(&self, k: usize) -> S {
        let idx: Vec<usize> = (0..k).collect();
        self.minor(&idx, &idx)
    }

    pub fn det(&self) -> S {
        self.leading_minor(self.n)
    }

    /// Gaussian decomposition `x = L · diag(D) · U` with `L` lower and `U`
    /// upper unipotent. Fails when a leading principal minor vanishes.
    pub fn gauss(&self) -> Result<Gauss<S>> {
        let n = self.n;
        let mut a = self.clone();
        let mut l = Self::identity(n);
        for k in 0..n {
            let p = a.get(k, k).clone();
            if !p.is_invertible() {
                return Err(Error::NotInG0 { index: k + 1 });
            }
            for i in (k + 1)..n {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone() / p.clone();
                for j in k..n {
                    let x = a.get(i, j).clone() - f.clone() * a.get(k, j).clone();
                    a.set(i, j, x);
                }
                l.set(i, k, f);
            }
        }
        let d: Vec<S> = a.diag();
        let mut u = Self::identity(n);
        for i in 0..n {
            for j in (i + 1)..n {
                u.set(i, j, a.get(i, j).clone() / d[i].clone());
            }
        }
        Ok(Gauss { lower: l, diag: d, upper: u })
    }

    /// Inverse of a unipotent triangular matrix by substitution (no division).
    pub fn unipotent_inverse(&self) -> Self {
        let n = self.n;
        let lower = (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j).is_zero()));
        let t = if lower { self.transpose() } else { self.clone() };
        // t is upper unipotent: solve t · y = I column by column
        let mut y = Self::identity(n);
        for col in 0..n {
            for i in (0..col).rev() {
                let mut acc = S::zero();
                for k in (i + 1)..=col {
                    let tk = t.get(i, k);
                    if !tk.is_zero() {
                        acc = acc + tk.clone() * y.get(k, col).clone();
                    }
                }
                y.set(i, col, -acc);
            }
        }
        if lower {
            y.transpose()
        } else {
            y
        }
    }
}

/// Factors of a Gaussian decomposition.
#[derive(Debug, Clone)]
pub struct Gauss<S> {
    pub lower: Matrix<S>,
    pub diag: Vec<S>,
    pub upper: Matrix<S>,
}
