//! Bit-packed vectors and matrices over GF(2).
//!
//! Words are stored as little-endian arrays of `u64` blocks, so addition is
//! whole-word XOR and Hamming weight is popcount. Storage beyond the logical
//! length is kept at zero (canonical padding); this makes the derived
//! equality and hash correct and keeps popcounts exact.

use std::fmt;

use crate::error::{Error, Result};

const BLOCK_BITS: usize = 64;

/// A length-`n` binary vector, bit-packed into `u64` blocks.
///
/// Invariant: every bit at position `>= len` is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitWord {
    len: usize,
    blocks: Vec<u64>,
}

impl BitWord {
    /// The all-zero word of the given length.
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            blocks: vec![0; len.div_ceil(BLOCK_BITS)],
        }
    }

    /// The all-ones word of the given length.
    #[must_use]
    pub fn ones(len: usize) -> Self {
        let mut word = Self {
            len,
            blocks: vec![u64::MAX; len.div_ceil(BLOCK_BITS)],
        };
        word.mask_tail();
        word
    }

    /// A word with exactly one bit set.
    ///
    /// # Panics
    /// Panics if `bit >= len`.
    #[must_use]
    pub fn unit(len: usize, bit: usize) -> Self {
        let mut word = Self::zeros(len);
        word.set(bit, true);
        word
    }

    /// Builds a word from bit values, one per position.
    #[must_use]
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut word = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                word.set(i, true);
            }
        }
        word
    }

    #[must_use]
    pub const fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub const fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Zeroes any storage past the logical length.
    fn mask_tail(&mut self) {
        let tail = self.len % BLOCK_BITS;
        if tail != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    /// Returns bit `i`.
    ///
    /// # Panics
    /// Panics if `i >= self.len()`.
    #[inline]
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.blocks[i / BLOCK_BITS] >> (i % BLOCK_BITS)) & 1 == 1
    }

    /// Sets bit `i` to `value`.
    ///
    /// # Panics
    /// Panics if `i >= self.len()`.
    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % BLOCK_BITS);
        if value {
            self.blocks[i / BLOCK_BITS] |= mask;
        } else {
            self.blocks[i / BLOCK_BITS] &= !mask;
        }
    }

    /// Flips bit `i`.
    ///
    /// # Panics
    /// Panics if `i >= self.len()`.
    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.blocks[i / BLOCK_BITS] ^= 1u64 << (i % BLOCK_BITS);
    }

    /// Clears every bit, keeping the length.
    pub fn clear_all(&mut self) {
        self.blocks.fill(0);
    }

    /// Hamming weight: the number of ones.
    #[inline]
    #[must_use]
    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Componentwise XOR, i.e. addition over GF(2).
    ///
    /// Fails with a dimension error when the lengths differ.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// In-place XOR. The unchecked sibling of [`BitWord::xor`].
    ///
    /// # Panics
    /// Panics if the lengths differ.
    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor of words with different lengths");
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    /// Componentwise AND.
    pub fn and(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & b)
            .collect();
        Ok(Self {
            len: self.len,
            blocks,
        })
    }

    /// Standard inner product over GF(2): the parity of the number of
    /// positions where both words are one.
    pub fn dot(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        let ones: u32 = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        Ok(ones % 2 == 1)
    }

    /// Number of positions where both words are one.
    pub fn overlap(&self, other: &Self) -> Result<usize> {
        self.check_len(other)?;
        Ok(self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum())
    }

    /// Iterates over the indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            OnesInBlock {
                block,
                base: i * BLOCK_BITS,
            }
        })
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "word lengths differ: {} vs {}",
                self.len, other.len
            )))
        }
    }
}

struct OnesInBlock {
    block: u64,
    base: usize,
}

impl Iterator for OnesInBlock {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.block == 0 {
            return None;
        }
        let bit = self.block.trailing_zeros() as usize;
        self.block &= self.block - 1;
        Some(self.base + bit)
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

/// A k-by-n matrix over GF(2), stored as bit-packed rows.
///
/// All rows have the same length; `k` or `n` may be zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: Vec<BitWord>,
    cols: usize,
}

impl Gf2Matrix {
    /// The zero matrix of the given shape.
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: (0..rows).map(|_| BitWord::zeros(cols)).collect(),
            cols,
        }
    }

    /// The n-by-n identity matrix.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitWord::unit(n, i)).collect(),
            cols: n,
        }
    }

    /// Builds a matrix from rows, all of which must share one length.
    pub fn from_rows(rows: Vec<BitWord>) -> Result<Self> {
        let cols = rows.first().map_or(0, BitWord::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
        }
        Ok(Self { rows, cols })
    }

    /// Convenience constructor from 0/1 entries, row-major.
    ///
    /// # Panics
    /// Panics if the rows are ragged or an entry is not 0 or 1.
    #[must_use]
    pub fn from_entries(entries: &[&[u8]]) -> Self {
        let rows = entries
            .iter()
            .map(|row| {
                BitWord::from_bits(
                    &row.iter()
                        .map(|&e| match e {
                            0 => false,
                            1 => true,
                            other => panic!("matrix entry {other} is not a bit"),
                        })
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        Self::from_rows(rows).expect("ragged rows")
    }

    #[must_use]
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub const fn col_count(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn row(&self, i: usize) -> &BitWord {
        &self.rows[i]
    }

    #[must_use]
    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    #[inline]
    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.rows[i].flip(j);
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        self.rows.swap(i, j);
    }

    /// XORs row `src` into row `dst` (a GF(2) row operation).
    ///
    /// # Panics
    /// Panics if `dst == src` or either index is out of range.
    pub fn xor_row_into(&mut self, dst: usize, src: usize) {
        assert_ne!(dst, src, "cannot xor a row into itself");
        xor_rows(&mut self.rows, dst, src);
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in &mut self.rows {
            let (x, y) = (row.get(a), row.get(b));
            row.set(a, y);
            row.set(b, x);
        }
    }

    /// Matrix product over GF(2).
    ///
    /// Row `i` of the product is the XOR of the rows of `rhs` selected by the
    /// ones of row `i` of `self`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.row_count() {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.row_count(),
                self.cols,
                rhs.row_count(),
                rhs.cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitWord::zeros(rhs.cols);
                for j in row.iter_ones() {
                    acc.xor_assign(&rhs.rows[j]);
                }
                acc
            })
            .collect();
        Ok(Self {
            rows,
            cols: rhs.cols,
        })
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.row_count());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter_ones() {
                out.rows[j].set(i, true);
            }
        }
        out
    }

    /// The Gram matrix `G * G^T`, computed entrywise from inner products.
    ///
    /// The result is square, symmetric, and has one row per row of `self`.
    #[must_use]
    pub fn gram(&self) -> Self {
        let k = self.row_count();
        let mut out = Self::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let bit = self.rows[i]
                    .dot(&self.rows[j])
                    .expect("rows of one matrix share a length");
                if bit {
                    out.rows[i].set(j, true);
                    out.rows[j].set(i, true);
                }
            }
        }
        out
    }

    /// Rank over GF(2), by Gaussian elimination on a copy.
    #[must_use]
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        eliminate(&mut rows, self.cols, false).len()
    }

    /// Determinant of a square matrix, as a bit: true iff nonsingular.
    ///
    /// Over GF(2) the determinant is 1 exactly when elimination finds a pivot
    /// in every row, so it falls out of the rank computation.
    pub fn det(&self) -> Result<bool> {
        if self.row_count() != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.row_count(),
                self.cols
            )));
        }
        Ok(self.rank() == self.cols)
    }

    /// Reduced row-echelon form and its pivot columns.
    ///
    /// Pivots follow the leftmost-nonzero-column convention, scanning rows
    /// top to bottom, so the output is the canonical representative of the
    /// row space (zero rows, if any, sink to the bottom). Pivot columns are
    /// strictly increasing.
    #[must_use]
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows = self.rows.clone();
        let pivots = eliminate(&mut rows, self.cols, true);
        (
            Self {
                rows,
                cols: self.cols,
            },
            pivots,
        )
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix({}x{}):", self.row_count(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// XORs row `src` into row `dst`.
fn xor_rows(rows: &mut [BitWord], dst: usize, src: usize) {
    debug_assert_ne!(dst, src);
    if dst < src {
        let (lo, hi) = rows.split_at_mut(src);
        lo[dst].xor_assign(&hi[0]);
    } else {
        let (lo, hi) = rows.split_at_mut(dst);
        hi[0].xor_assign(&lo[src]);
    }
}

/// Gaussian elimination in place; returns the pivot columns.
///
/// With `reduced` set, entries above each pivot are cleared too (RREF);
/// otherwise only the echelon shape below pivots is enforced.
fn eliminate(rows: &mut [BitWord], cols: usize, reduced: bool) -> Vec<usize> {
    let k = rows.len();
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == k {
            break;
        }
        let Some(found) = (pivot_row..k).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(pivot_row, found);
        for r in 0..k {
            if r != pivot_row && rows[r].get(col) && (reduced || r > pivot_row) {
                xor_rows(rows, r, pivot_row);
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    pivots
}
