//! Dense matrices over exact entries, and fraction-free determinants.

use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Entry type of a [`Matrix`]: a commutative ring with exact equality.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// `re + vol·i` where `i` is a central pseudoscalar with `i² = -1`.
///
/// This is a different unit from the scalar imaginary `j`: `vol` may itself
/// carry `j` terms and the two never mix.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Central {
    pub re: Scalar,
    pub vol: Scalar,
}

impl Central {
    pub fn new(re: Scalar, vol: Scalar) -> Self {
        Self { re, vol }
    }

    pub fn i() -> Self {
        Self::new(Scalar::zero(), Scalar::one())
    }

    pub fn real(re: Scalar) -> Self {
        Self::new(re, Scalar::zero())
    }
}

impl Ring for Central {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::real(Scalar::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.vol.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.re + &rhs.re, &self.vol + &rhs.vol)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.re - &rhs.re, &self.vol - &rhs.vol)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &self.re * &rhs.re - &self.vol * &rhs.vol,
            &self.re * &rhs.vol + &self.vol * &rhs.re,
        )
    }
    fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.vol)
    }
}

impl fmt::Display for Central {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.vol.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.vol.is_one() => write!(f, "i"),
            (true, false) if (-&self.vol).is_one() => write!(f, "-i"),
            (true, false) => write!(f, "({})i", self.vol),
            (false, false) => write!(f, "{} + ({})i", self.re, self.vol),
        }
    }
}

impl fmt::Debug for Central {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Central({self})")
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Coordinate matrix of a multivector.
pub type MvMatrix = Matrix<Scalar>;

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// `[[a, b], [c, d]]` from four equally sized square blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.rows;
        assert!(
            [a, b, c, d].iter().all(|m| m.rows == n && m.cols == n),
            "blocks must be square and equal in size"
        );
        Self::from_fn(2 * n, 2 * n, |i, j| {
            let blk = match (i < n, j < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.get(i % n, j % n).clone()
        })
    }

    /// The `size × size` block whose top-left corner is `(bi·size, bj·size)`.
    pub fn block(&self, bi: usize, bj: usize, size: usize) -> Self {
        Self::from_fn(size, size, |i, j| self.get(bi * size + i, bj * size + j).clone())
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn neg(&self) -> Self {
        self.map(T::neg)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
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
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(self
            .iter_rows()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    /// `Some(c)` when the matrix equals `c·I`.
    pub fn identity_multiple(&self) -> Option<T> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { T::zero() } else { self.get(0, 0).clone() };
        let ok = (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let v = self.get(i, j);
                if i == j {
                    *v == c
                } else {
                    v.is_zero()
                }
            })
        });
        ok.then_some(c)
    }
}

impl<T: Ring> std::ops::Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl<T: Ring> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, "  ")?;
                }
                let c = &cells[i * self.cols + j];
                write!(f, "{}{c}", " ".repeat(width - c.chars().count()))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{self}", self.rows, self.cols)
    }
}

impl Matrix<Scalar> {
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|v| Scalar::int(*v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Hermitian conjugate (`j ↦ -j`, transposed).
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn to_integers(&self) -> Option<Vec<Vec<BigInt>>> {
        self.iter_rows()
            .map(|r| r.iter().map(Scalar::to_integer).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<Value>> = self
            .iter_rows()
            .map(|r| r.iter().map(Scalar::to_json).collect())
            .collect();
        json!({"dim": self.rows, "entries": entries})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let dim = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Schema("matrix needs integer dim".into()))? as usize;
        let rows = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Schema("matrix needs entries array".into()))?;
        if rows.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: rows.len(),
            });
        }
        let rows = rows
            .iter()
            .map(|r| {
                let r = r
                    .as_array()
                    .ok_or_else(|| Error::Schema("matrix row must be an array".into()))?;
                if r.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: r.len(),
                    });
                }
                r.iter().map(Scalar::from_json).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows).map(|m| if dim == 0 { Self::zeros(0, 0) } else { m })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in self.iter_rows() {
            let line: Vec<String> = r.iter().map(|x| csv_cell(&x.to_string())).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate division is exact, so the computation stays in the
/// integers.
pub fn bareiss_det(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = m.len();
    if let Some(bad) = m.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}
