//! Exact arithmetic over the ring of integers modulo 4.
//!
//! [`Z4`] is a scalar, [`Z4Vector`] a fixed-length row vector and
//! [`Z4Matrix`] a dense row-major matrix. All arithmetic is reduced mod 4.
//! The lexicographic order on vectors ([`lex_compare`]) is the only vector
//! ordering used anywhere in the crate; packed codewords in
//! [`crate::code`] are laid out so that their integer order agrees with it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// An element of Z4, always held in `0..4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    /// Reduces any integer mod 4.
    pub fn new(value: i64) -> Z4 {
        Z4(value.rem_euclid(4) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// 1 and 3 are the units of Z4.
    pub fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    /// Multiplicative inverse of a unit (each unit is its own inverse).
    pub fn inverse(self) -> Option<Z4> {
        self.is_unit().then_some(self)
    }

    /// Reduction mod 2.
    pub fn residue(self) -> u8 {
        self.0 & 1
    }
}

impl From<u8> for Z4 {
    fn from(v: u8) -> Z4 {
        Z4(v & 3)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((self.0 + 4 - rhs.0) & 3)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

/// A row vector over Z4 with length fixed at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z4Vector(Vec<Z4>);

impl Z4Vector {
    pub fn zeros(n: usize) -> Z4Vector {
        Z4Vector(vec![Z4::ZERO; n])
    }

    pub fn from_entries(entries: Vec<Z4>) -> Z4Vector {
        Z4Vector(entries)
    }

    /// Builds a vector from small integers, reducing each mod 4.
    pub fn from_values(values: &[i64]) -> Z4Vector {
        Z4Vector(values.iter().map(|&v| Z4::new(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Z4] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Z4 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == Z4::ZERO)
    }

    pub fn negate(&self) -> Z4Vector {
        Z4Vector(self.0.iter().map(|&x| -x).collect())
    }

    pub fn scale(&self, c: Z4) -> Z4Vector {
        Z4Vector(self.0.iter().map(|&x| c * x).collect())
    }

    pub fn add(&self, other: &Z4Vector) -> Result<Z4Vector> {
        check_len(self.len(), other.len())?;
        Ok(Z4Vector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect(),
        ))
    }

    /// Number of entries equal to each symbol, indexed by symbol value.
    pub fn symbol_counts(&self) -> [usize; 4] {
        let mut counts = [0; 4];
        for x in &self.0 {
            counts[x.value() as usize] += 1;
        }
        counts
    }
}

impl fmt::Display for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

fn check_len(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LengthMismatch { left, right })
    }
}

/// Lexicographic order on Z4^n with 0 < 1 < 2 < 3.
pub fn lex_compare(a: &Z4Vector, b: &Z4Vector) -> Result<Ordering> {
    check_len(a.len(), b.len())?;
    Ok(a.0.cmp(&b.0))
}

/// Standard inner product, reduced mod 4.
pub fn inner_product(x: &Z4Vector, y: &Z4Vector) -> Result<Z4> {
    check_len(x.len(), y.len())?;
    Ok(x.0
        .iter()
        .zip(&y.0)
        .fold(Z4::ZERO, |acc, (&a, &b)| acc + a * b))
}

/// Dense row-major matrix over Z4.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Z4>,
}

impl Z4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Z4Matrix {
        Z4Matrix {
            rows,
            cols,
            data: vec![Z4::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Z4Matrix {
        let mut m = Z4Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Z4::ONE);
        }
        m
    }

    /// Builds a matrix from rows of small integers. All rows must have the
    /// same length; an empty row list gives a `0 x 0` matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Z4Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        Z4Matrix::from_rows_with_cols(rows, cols)
    }

    /// Like [`Z4Matrix::from_rows`] but keeps the column count when there are no rows.
    pub fn from_rows_with_cols(rows: &[Vec<i64>], cols: usize) -> Result<Z4Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            check_len(cols, row.len())?;
            data.extend(row.iter().map(|&v| Z4::new(v)));
        }
        Ok(Z4Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_vectors(rows: &[Z4Vector], cols: usize) -> Result<Z4Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            check_len(cols, row.len())?;
            data.extend_from_slice(row.entries());
        }
        Ok(Z4Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Z4 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Z4) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Z4Vector {
        Z4Vector(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<Z4Vector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn column(&self, c: usize) -> Z4Vector {
        Z4Vector((0..self.rows).map(|r| self.get(r, c)).collect())
    }

    pub fn transpose(&self) -> Z4Matrix {
        let mut t = Z4Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn scale(&self, k: Z4) -> Z4Matrix {
        Z4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| k * x).collect(),
        }
    }

    pub fn neg(&self) -> Z4Matrix {
        self.scale(Z4::THREE)
    }

    pub fn add(&self, other: &Z4Matrix) -> Result<Z4Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Z4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect(),
        })
    }

    /// True when every entry lies in the given set.
    pub fn entries_within(&self, allowed: &[u8]) -> bool {
        self.data.iter().all(|x| allowed.contains(&x.value()))
    }
}

impl fmt::Display for Z4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

/// Matrix product over Z4.
pub fn mat_mul(m: &Z4Matrix, n: &Z4Matrix) -> Result<Z4Matrix> {
    if m.cols != n.rows {
        return Err(Error::ShapeMismatch {
            left: (m.rows, m.cols),
            right: (n.rows, n.cols),
        });
    }
    let mut out = Z4Matrix::zeros(m.rows, n.cols);
    for r in 0..m.rows {
        for c in 0..n.cols {
            let v = (0..m.cols).fold(Z4::ZERO, |acc, k| acc + m.get(r, k) * n.get(k, c));
            out.set(r, c, v);
        }
    }
    Ok(out)
}

/// Rows nondecreasing under [`lex_compare`].
pub fn is_row_sorted(m: &Z4Matrix) -> bool {
    (1..m.rows()).all(|r| m.row(r - 1).0 <= m.row(r).0)
}

/// Columns, read top to bottom, nondecreasing under [`lex_compare`].
pub fn is_col_sorted(m: &Z4Matrix) -> bool {
    (1..m.cols()).all(|c| m.column(c - 1).0 <= m.column(c).0)
}
