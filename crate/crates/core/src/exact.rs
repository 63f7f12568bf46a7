//! Exact rational scalars and dense rational matrices.
//!
//! Scalars are `num`'s arbitrary-precision [`BigRational`], which keeps every
//! value in lowest terms with a positive denominator. The textual form is `p`
//! or `p/q` with an optional leading `-`, and it is the only form accepted by
//! [`parse_rational`] and produced by `Display`.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::error::Error;

/// Exact scalar of every algebra in this crate.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `-?digits` or `-?digits/digits`. No sign on the denominator, no
/// whitespace, no leading `+`.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let malformed = || Error::MalformedRational(text.to_string());
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());

    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let unsigned = numer.strip_prefix('-').unwrap_or(numer);
    if !digits(unsigned) {
        return Err(malformed());
    }
    let numer: BigInt = numer.parse().map_err(|_| malformed())?;
    let denom: BigInt = match denom {
        Some(d) if digits(d) => d.parse().map_err(|_| malformed())?,
        Some(_) => return Err(malformed()),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from explicit rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Shape(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        let n_rows = rows.len();
        Ok(Self {
            rows: n_rows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose column `j` is `columns[j]`.
    pub fn from_columns(n_rows: usize, columns: &[Vec<Rational>]) -> Result<Self, Error> {
        let mut m = Self::zeros(n_rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != n_rows {
                return Err(Error::Shape(format!(
                    "column {j} has {} entries, expected {n_rows}",
                    col.len()
                )));
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, Error> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn matmul(&self, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
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
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.reduced_row_echelon().1.len()
    }

    /// Basis of `{v : self * v = 0}`.
    ///
    /// One vector per free column of the reduced row echelon form, in
    /// increasing free-column order; each has a `1` at its free column and
    /// `0` at every other free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.reduced_row_echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -rref.get(r, free).clone();
                }
                v
            })
            .collect()
    }

    /// Gauss-Jordan elimination. The pivot in each column is the first
    /// nonzero entry at or below the current row. Returns the reduced matrix
    /// and the pivot column of each nonzero row.
    pub fn reduced_row_echelon(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            let pivot_row: Vec<Rational> = m.row(row).to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for (c, p) in pivot_row.iter().enumerate().skip(col) {
                    if !p.is_zero() {
                        let v = m.get(r, c) - &factor * p;
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// One row per line, entries separated by single spaces. This is also the
/// matrix file format read by the command-line tool.
impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the matrix file format: one row per line, rational literals
/// separated by spaces. Blank lines are ignored.
pub fn parse_matrix(text: &str) -> Result<RationalMatrix, Error> {
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(parse_rational).collect())
        .collect::<Result<Vec<Vec<Rational>>, Error>>()?;
    RationalMatrix::from_rows(rows)
}
