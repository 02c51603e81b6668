//! Dense polynomial matrices.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{Poly, Rational};

/// Row-major dense matrix of [`Poly`] entries. Zero-row and zero-column
/// shapes are legal and carry their other dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Poly::one();
        }
        m
    }

    /// Builds from explicit rows. Every row must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<Poly>>, cols: usize) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged polynomial matrix");
            entries.extend(row);
        }
        PolyMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    /// Integer-coefficient literal: `m[i][j]` is the ascending coefficient
    /// list of entry `(i, j)`.
    pub fn from_int_rows(rows: &[&[&[i64]]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|c| Poly::from_ints(c)).collect())
                .collect(),
            cols,
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Poly::is_zero)
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self[(i, j)].is_zero())
    }

    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&j| self.is_zero_column(j)).collect()
    }

    /// Largest entry degree, `None` for a zero matrix.
    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    pub fn row_range(&self, range: std::ops::Range<usize>) -> Self {
        let idx: Vec<usize> = range.collect();
        self.select_rows(&idx)
    }

    pub fn column_range(&self, range: std::ops::Range<usize>) -> Self {
        let idx: Vec<usize> = range.collect();
        self.select_columns(&idx)
    }

    /// `[self; other]`. Column counts must agree.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        PolyMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// `[self other]`. Row counts must agree.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Rows whose entries are not all zero, in order.
    pub fn nonzero_rows(&self) -> Self {
        let idx: Vec<usize> = (0..self.rows).filter(|&i| !self.is_zero_row(i)).collect();
        self.select_rows(&idx)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += f * row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, f: &Poly) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = &self[(src, j)] * f;
            let e = &mut self[(dst, j)];
            *e = &*e + &t;
        }
    }

    /// `col[dst] += f * col[src]`.
    pub fn add_column_multiple(&mut self, dst: usize, src: usize, f: &Poly) {
        if f.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = &self[(i, src)] * f;
            let e = &mut self[(i, dst)];
            *e = &*e + &t;
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &Rational) {
        for j in 0..self.cols {
            let e = &mut self[(i, j)];
            *e = e.scale(c);
        }
    }

    pub fn scale_column(&mut self, j: usize, c: &Rational) {
        for i in 0..self.rows {
            let e = &mut self[(i, j)];
            *e = e.scale(c);
        }
    }

    pub fn scale(&self, p: &Poly) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    /// Entry-wise evaluation at a rational point.
    pub fn eval(&self, at: &Rational) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.eval(at)).collect())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Panics on non-square input.
    pub fn determinant(&self) -> Poly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        let mut a = self.clone();
        let mut prev = Poly::one();
        let mut negate = false;
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        negate = !negate;
                    }
                    None => return Poly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[(k, k)] * &a[(i, j)]) - &(&a[(i, k)] * &a[(k, j)]);
                    a[(i, j)] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[(i, k)] = Poly::zero();
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Rank over the field of rational functions.
    ///
    /// Any nonzero `r×r` minor has degree at most `r·deg(M)`, so evaluating
    /// at `min(rows, cols)·deg(M) + 1` distinct points hits a point where the
    /// rank is attained.
    pub fn rank(&self) -> usize {
        let Some(deg) = self.max_degree() else {
            return 0;
        };
        let full = self.rows.min(self.cols);
        let points = full * deg + 1;
        let mut best = 0;
        for k in 0..points {
            let at = Rational::from_integer((k as i64).into());
            best = best.max(rational_rank(self.eval(&at)));
            if best == full {
                break;
            }
        }
        best
    }

    pub fn is_full_row_rank(&self) -> bool {
        self.rank() == self.rows
    }

    /// Checks `self·other` dimensions and multiplies.
    pub fn try_mul(&self, other: &Self) -> Option<Self> {
        (self.cols == other.rows).then(|| self * other)
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entries as nested coefficient-string arrays.
    pub fn to_nested(&self) -> Vec<Vec<Vec<String>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Poly::to_strings).collect())
            .collect()
    }

    /// Renders each row on its own line with `var` as the indeterminate.
    pub fn display_with(&self, var: &str) -> String {
        if self.rows == 0 {
            return format!("[] (0x{})", self.cols);
        }
        (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(|e| e.display_with(var)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub(crate) fn rational_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for j in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][j].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][j].recip();
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut() {
            if row[j].is_zero() {
                continue;
            }
            let f = &row[j] * &inv;
            for (x, y) in row[j..cols].iter_mut().zip(&pivot_row[j..cols]) {
                *x -= &f * y;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl<'a> Mul<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        PolyMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Poly::zero();
            for k in 0..self.cols {
                let (a, b) = (&self[(i, k)], &rhs[(k, j)]);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }
}

impl<'a> Add<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum dimension mismatch");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self + &(-rhs)
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.map(|e| -e)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.display_with("x"))
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_nested().serialize(serializer)
    }
}

/// Deserialization cannot recover the column count of a zero-row matrix;
/// it yields a `0x0` matrix, which callers reshape with
/// [`PolyMatrix::with_cols_if_empty`].
impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Poly>>::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|r| r.len() != cols) {
            return Err(D::Error::custom(format!(
                "row {i} has {} entries, expected {cols}",
                rows[i].len()
            )));
        }
        Ok(PolyMatrix::from_rows(rows, cols))
    }
}

impl PolyMatrix {
    /// Gives a zero-row matrix the stated column count.
    pub fn with_cols_if_empty(self, cols: usize) -> Self {
        if self.rows == 0 {
            PolyMatrix::zeros(0, cols)
        } else {
            self
        }
    }

    /// True when every entry is a constant and the matrix equals the identity.
    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.coeffs().len() == 1 && e.coeffs()[0].is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }
}
