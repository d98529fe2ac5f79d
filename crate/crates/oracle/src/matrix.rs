//! Dense bit-packed matrices over GF(2).

use std::fmt::Write as _;

use crate::error::{OracleError, Result};

const WORD: usize = 64;

/// A dense matrix over GF(2), one `u64` per 64 columns, rows stored contiguously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        BinaryMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            out.set(i, i, true);
        }
        out
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut out = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    out.set(r, c, true);
                }
            }
        }
        out
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows<R: AsRef<[bool]>>(cols: usize, rows: &[R]) -> Result<Self> {
        let mut out = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(OracleError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, &bit) in row.iter().enumerate() {
                if bit {
                    out.set(r, c, true);
                }
            }
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of bounds"
        );
        self.data[r * self.stride + c / WORD] >> (c % WORD) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of bounds"
        );
        let word = &mut self.data[r * self.stride + c / WORD];
        if value {
            *word |= 1 << (c % WORD);
        } else {
            *word &= !(1 << (c % WORD));
        }
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row_bits(&self, r: usize) -> Vec<bool> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Appends a row given as packed words (bits beyond `cols` must be zero).
    pub fn push_row_words(&mut self, words: &[u64]) {
        assert_eq!(words.len(), self.stride);
        self.data.extend_from_slice(words);
        self.rows += 1;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * s);
        head[lo * s..(lo + 1) * s].swap_with_slice(&mut tail[..s]);
    }

    /// `row[dst] ^= row[src]` on words `from..`.
    fn xor_row(&mut self, dst: usize, src: usize, from: usize) {
        let s = self.stride;
        if dst == src {
            return;
        }
        let (d, sr) = if dst < src {
            let (head, tail) = self.data.split_at_mut(src * s);
            (&mut head[dst * s..(dst + 1) * s], &tail[..s])
        } else {
            let (head, tail) = self.data.split_at_mut(dst * s);
            (&mut tail[..s], &head[src * s..(src + 1) * s])
        };
        for (x, y) in d[from..].iter_mut().zip(&sr[from..]) {
            *x ^= *y;
        }
    }

    /// Gaussian elimination in place. With `full`, entries above pivots are
    /// cleared too (reduced row echelon form). Pivot choice: leftmost column,
    /// first qualifying row. Returns pivot columns.
    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let (w, bit) = (c / WORD, 1u64 << (c % WORD));
            let Some(p) = (rank..self.rows).find(|&r| self.data[r * self.stride + w] & bit != 0)
            else {
                continue;
            };
            self.swap_rows(rank, p);
            let start = if full { 0 } else { rank + 1 };
            for r in start..self.rows {
                if r != rank && self.data[r * self.stride + w] & bit != 0 {
                    self.xor_row(r, rank, w);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(false).len()
    }

    /// Reduced row echelon form with zero rows dropped, and its pivot columns.
    pub fn rref(&self) -> (BinaryMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.eliminate(true);
        m.data.truncate(pivots.len() * m.stride);
        m.rows = pivots.len();
        (m, pivots)
    }

    /// A basis of `{x : self · x = 0}`, one basis vector per row.
    pub fn nullspace(&self) -> BinaryMatrix {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = BinaryMatrix::zeros(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, true);
            for (i, &pc) in pivots.iter().enumerate() {
                if reduced.get(i, fc) {
                    out.set(k, pc, true);
                }
            }
        }
        out
    }

    /// Indices of the rows that increase the rank when rows are taken in order.
    pub fn independent_rows(&self) -> Vec<usize> {
        // basis vectors kept with their leading (lowest) set column
        let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
        let mut chosen = Vec::new();
        for r in 0..self.rows {
            let mut v = self.row_words(r).to_vec();
            for (lead, b) in &basis {
                if v[lead / WORD] >> (lead % WORD) & 1 == 1 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x ^= *y;
                    }
                }
            }
            if let Some(lead) = leading_bit(&v) {
                // keep basis fully reduced on its leading columns
                for (_, b) in basis.iter_mut() {
                    if b[lead / WORD] >> (lead % WORD) & 1 == 1 {
                        for (x, y) in b.iter_mut().zip(&v) {
                            *x ^= *y;
                        }
                    }
                }
                basis.push((lead, v));
                chosen.push(r);
            }
        }
        chosen
    }

    /// The submatrix formed by the listed columns, in the listed order.
    pub fn select_columns(&self, columns: &[usize]) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(self.rows, columns.len());
        for r in 0..self.rows {
            for (k, &c) in columns.iter().enumerate() {
                if self.get(r, c) {
                    out.set(r, k, true);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    out.set(c, r, true);
                }
            }
        }
        out
    }

    /// `self · other^T`.
    pub fn mul_transpose(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.cols {
            return Err(OracleError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut out = BinaryMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            let a = self.row_words(i);
            for j in 0..other.rows {
                let b = other.row_words(j);
                let parity = a
                    .iter()
                    .zip(b)
                    .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones());
                if parity & 1 == 1 {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.cols {
            return Err(OracleError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut out = self.clone();
        out.data.extend_from_slice(&other.data);
        out.rows += other.rows;
        Ok(out)
    }

    /// Whether both matrices span the same row space.
    pub fn row_space_eq(&self, other: &BinaryMatrix) -> Result<bool> {
        let (a, b) = (self.rank(), other.rank());
        Ok(a == b && self.vstack(other)?.rank() == a)
    }

    /// Plain-text form: `"rows cols"` then one 0/1 string per row.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1) + 16);
        writeln!(s, "{} {}", self.rows, self.cols).unwrap();
        for r in 0..self.rows {
            for c in 0..self.cols {
                s.push(if self.get(r, c) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| OracleError::Parse("empty input".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| OracleError::Parse(format!("bad header {header:?}")))
            })
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(OracleError::Parse(format!("bad header {header:?}")));
        };
        let mut out = BinaryMatrix::zeros(rows, cols);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| OracleError::Parse(format!("missing row {r}")))?
                .trim_end();
            if line.len() != cols {
                return Err(OracleError::Parse(format!(
                    "row {r} has length {}",
                    line.len()
                )));
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => out.set(r, c, true),
                    _ => return Err(OracleError::Parse(format!("invalid symbol {ch:?}"))),
                }
            }
        }
        Ok(out)
    }
}

fn leading_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * WORD + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> BinaryMatrix {
        BinaryMatrix::from_rows(
            5,
            &[
                [true, true, false, false, true],
                [false, true, true, false, false],
                [true, false, true, false, true],
                [false, false, false, true, true],
            ],
        )
        .unwrap()
    }

    #[test]
    fn rank_and_rref() {
        let m = sample();
        assert_eq!(m.rank(), 3);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1, 3]);
        assert_eq!(r.rows(), 3);
        assert_eq!(r.rref().0, r);
        assert_eq!(m.independent_rows(), vec![0, 1, 3]);
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let m = sample();
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 2);
        assert!(m.mul_transpose(&ns).unwrap().is_zero());
        assert_eq!(ns.rank(), 2);
    }

    #[test]
    fn wide_matrices_cross_word_boundaries() {
        let m = BinaryMatrix::from_fn(70, 130, |r, c| (r * 7 + c * 3) % 5 == 0 || c == r + 60);
        let ns = m.nullspace();
        assert_eq!(ns.rows() + m.rank(), 130);
        assert!(m.mul_transpose(&ns).unwrap().is_zero());
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn text_round_trip() {
        let m = sample();
        let text = m.to_text();
        assert!(text.starts_with("4 5\n11001\n"));
        assert_eq!(BinaryMatrix::from_text(&text).unwrap(), m);
        assert!(BinaryMatrix::from_text("2 2\n01\n").is_err());
        assert!(BinaryMatrix::from_text("1 2\n0x\n").is_err());
    }

    #[test]
    fn row_spaces() {
        let m = sample();
        let (r, _) = m.rref();
        assert!(m.row_space_eq(&r).unwrap());
        assert!(!m.row_space_eq(&BinaryMatrix::identity(5)).unwrap());
        assert_eq!(
            BinaryMatrix::identity(5)
                .select_columns(&[4, 0])
                .row_bits(4),
            vec![true, false]
        );
    }
}
