//! Dense integer and bit-packed Boolean matrices.
//!
//! Every product in the crate bottoms out here. Entries are exact `u64`
//! counts; there is no floating point anywhere. Products run in one of three
//! [`Backend`]s that are required to agree bit for bit.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default tile edge for [`matmul_blocked`].
pub const DEFAULT_TILE: usize = 64;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Row-major dense matrix of exact unsigned counts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Builds a matrix from nested rows. All rows must have equal length.
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    r.len(),
                    cols
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// True when every entry is 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|&v| v <= 1)
    }

    pub fn sum(&self) -> u64 {
        self.data.iter().sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for (j, &v) in self.row(i).iter().enumerate() {
                out.data[j * self.rows + i] = v;
            }
        }
        out
    }

    /// Sum of the diagonal. Rejects non-square input.
    pub fn trace(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "trace of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", &self.row(i)[..self.cols.min(16)])?;
        }
        Ok(())
    }
}

/// Bit-packed row-major Boolean matrix. Each row occupies whole `u64` words;
/// padding bits past `cols` are kept at zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = words_for(cols);
        BoolMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Packs a 0/1 integer matrix. Any other entry is rejected.
    pub fn from_int(m: &IntMatrix) -> Result<Self> {
        let mut out = Self::zeros(m.rows, m.cols);
        for i in 0..m.rows {
            for (j, &v) in m.row(i).iter().enumerate() {
                match v {
                    0 => {}
                    1 => out.set(i, j, true),
                    _ => {
                        return Err(Error::InvalidInput(format!(
                            "entry ({i},{j}) = {v} is not 0/1"
                        )))
                    }
                }
            }
        }
        Ok(out)
    }

    /// Lifts to a 0/1 integer matrix.
    pub fn to_int(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) as u64)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of `u64` words per packed row.
    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.words + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.words + j / WORD_BITS];
        let mask = 1u64 << (j % WORD_BITS);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    pub fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.words..(i + 1) * self.words]
    }

    /// Iterates the set column indices of row `i` in increasing order.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row_words(i))
    }

    pub fn count_ones(&self) -> u64 {
        self.data.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn transpose(&self) -> BoolMatrix {
        let mut out = BoolMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                out.set(j, i, true);
            }
        }
        out
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows.min(32) {
            let s: String = (0..self.cols.min(64))
                .map(|j| if self.get(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// Iterates set bit positions of a packed word slice, ascending.
pub fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * WORD_BITS + b)
        })
    })
}

fn check_inner(x_cols: usize, y_rows: usize, op: &str) -> Result<()> {
    if x_cols != y_rows {
        return Err(Error::DimensionMismatch(format!(
            "{op}: left has {x_cols} columns, right has {y_rows} rows"
        )));
    }
    Ok(())
}

/// Textbook triple loop. The reference every other backend is checked against.
pub fn matmul_naive(x: &IntMatrix, y: &IntMatrix) -> Result<IntMatrix> {
    check_inner(x.cols, y.rows, "matmul_naive")?;
    let mut out = IntMatrix::zeros(x.rows, y.cols);
    for i in 0..x.rows {
        for j in 0..y.cols {
            let mut acc = 0u64;
            for l in 0..x.cols {
                acc += x.get(i, l) * y.get(l, j);
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

/// Cache-tiled i-k-j multiply. Row blocks of the output are independent and
/// may be processed on the current rayon pool.
pub fn matmul_blocked(x: &IntMatrix, y: &IntMatrix, tile: usize) -> Result<IntMatrix> {
    check_inner(x.cols, y.rows, "matmul_blocked")?;
    if tile == 0 {
        return Err(Error::InvalidInput("tile must be at least 1".into()));
    }
    let (m, inner, n) = (x.rows, x.cols, y.cols);
    let mut out = IntMatrix::zeros(m, n);
    if m == 0 || n == 0 {
        return Ok(out);
    }
    out.data
        .par_chunks_mut(tile * n)
        .enumerate()
        .for_each(|(bi, block)| {
            let i0 = bi * tile;
            let block_rows = block.len() / n;
            for k0 in (0..inner).step_by(tile) {
                let k1 = (k0 + tile).min(inner);
                for j0 in (0..n).step_by(tile) {
                    let j1 = (j0 + tile).min(n);
                    for di in 0..block_rows {
                        let xrow = x.row(i0 + di);
                        let orow = &mut block[di * n + j0..di * n + j1];
                        for (k, &a) in xrow.iter().enumerate().take(k1).skip(k0) {
                            if a == 0 {
                                continue;
                            }
                            let yrow = &y.row(k)[j0..j1];
                            for (o, &b) in orow.iter_mut().zip(yrow) {
                                *o += a * b;
                            }
                        }
                    }
                }
            }
        });
    Ok(out)
}

/// Boolean product: `out[i,j] = OR_l (x[i,l] AND y[l,j])`.
pub fn bool_matmul(x: &BoolMatrix, y: &BoolMatrix) -> Result<BoolMatrix> {
    check_inner(x.cols, y.rows, "bool_matmul")?;
    let mut out = BoolMatrix::zeros(x.rows, y.cols);
    for i in 0..x.rows {
        let ones: Vec<usize> = x.row_ones(i).collect();
        let orow = out.row_words_mut(i);
        for l in ones {
            for (o, &w) in orow.iter_mut().zip(y.row_words(l)) {
                *o |= w;
            }
        }
    }
    Ok(out)
}

/// `out[i,j] = popcount(x_row_i AND y_row_j)`, i.e. the integer product
/// `x * y^T` of two 0/1 matrices sharing a column dimension.
pub fn and_popcount(x: &BoolMatrix, y: &BoolMatrix) -> Result<IntMatrix> {
    if x.cols != y.cols {
        return Err(Error::DimensionMismatch(format!(
            "and_popcount: column counts {} and {} differ",
            x.cols, y.cols
        )));
    }
    let n = y.rows;
    let mut out = IntMatrix::zeros(x.rows, n);
    if n == 0 {
        return Ok(out);
    }
    out.data
        .par_chunks_mut(n)
        .enumerate()
        .for_each(|(i, orow)| {
            let xr = x.row_words(i);
            for (j, o) in orow.iter_mut().enumerate() {
                *o = xr
                    .iter()
                    .zip(y.row_words(j))
                    .map(|(a, b)| (a & b).count_ones() as u64)
                    .sum();
            }
        });
    Ok(out)
}

/// Selects how rectangular products are evaluated. All variants produce
/// identical integers; they differ only in speed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Naive,
    Blocked {
        tile: usize,
    },
    /// Word-parallel AND + popcount. Only valid for 0/1 operands.
    Bitset,
}

impl Default for Backend {
    fn default() -> Self {
        Backend::Blocked { tile: DEFAULT_TILE }
    }
}

impl Backend {
    pub fn name(&self) -> &'static str {
        match self {
            Backend::Naive => "naive",
            Backend::Blocked { .. } => "blocked",
            Backend::Bitset => "bitset",
        }
    }

    /// `x * y`.
    pub fn mul(&self, x: &IntMatrix, y: &IntMatrix) -> Result<IntMatrix> {
        match *self {
            Backend::Naive => matmul_naive(x, y),
            Backend::Blocked { tile } => matmul_blocked(x, y, tile),
            Backend::Bitset => {
                check_inner(x.cols, y.rows, "bitset mul")?;
                and_popcount(
                    &BoolMatrix::from_int(x)?,
                    &BoolMatrix::from_int(&y.transpose())?,
                )
            }
        }
    }

    /// `x * y^T` for integer operands that share a column dimension.
    pub fn mul_transpose(&self, x: &IntMatrix, y: &IntMatrix) -> Result<IntMatrix> {
        match *self {
            Backend::Bitset => {
                if x.cols != y.cols {
                    return Err(Error::DimensionMismatch(format!(
                        "mul_transpose: column counts {} and {} differ",
                        x.cols, y.cols
                    )));
                }
                and_popcount(&BoolMatrix::from_int(x)?, &BoolMatrix::from_int(y)?)
            }
            _ => self.mul(x, &y.transpose()),
        }
    }

    /// `x * y^T` over 0/1 matrices, as integer counts.
    pub fn mul_transpose_bits(&self, x: &BoolMatrix, y: &BoolMatrix) -> Result<IntMatrix> {
        match *self {
            Backend::Bitset => and_popcount(x, y),
            _ => {
                if x.cols != y.cols {
                    return Err(Error::DimensionMismatch(format!(
                        "mul_transpose_bits: column counts {} and {} differ",
                        x.cols, y.cols
                    )));
                }
                self.mul(&x.to_int(), &y.transpose().to_int())
            }
        }
    }
}

/// `A * A` for the adjacency matrix of `g`; entry `(i,j)` counts the common
/// neighbours of `i` and `j` (the diagonal holds degrees).
pub fn two_path_counts(g: &Graph) -> IntMatrix {
    let a = g.adjacency();
    // A is symmetric, so A*A = A*A^T.
    and_popcount(a, a).expect("adjacency is square")
}
