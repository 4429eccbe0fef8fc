//! Dense bit-packed linear algebra over GF(2).
//!
//! Vectors and matrix rows are stored as little-endian arrays of `u64`
//! words: bit `i` lives in word `i / 64` at position `i % 64`. Bits past
//! the logical length are always zero, so word-level comparisons and
//! popcounts are exact.
//!
//! Elimination always pivots on the leftmost available column and, within
//! a column, the topmost available row. Every derived output (reduced
//! echelon form, nullspace basis, particular solution) is therefore a
//! deterministic function of the input.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn word_count(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
fn tail_mask(bits: usize) -> u64 {
    match bits % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; word_count(len)],
        };
        v.clear_tail();
        v
    }

    /// Vector of length `len` with only bit `index` set.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % WORD_BITS == 0 {
                words.push(0);
            }
            if bit {
                words[len / WORD_BITS] |= 1 << (len % WORD_BITS);
            }
            len += 1;
        }
        Self { len, words }
    }

    /// Builds a vector from raw words; bits past `len` are discarded.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(word_count(len), 0);
        let mut v = Self { len, words };
        v.clear_tail();
        v
    }

    fn clear_tail(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= tail_mask(self.len);
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// # Panics
    /// Panics if `index >= len`.
    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(
            index < self.len,
            "bit {index} out of range (len {})",
            self.len
        );
        (self.words[index / WORD_BITS] >> (index % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(
            index < self.len,
            "bit {index} out of range (len {})",
            self.len
        );
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, index: usize) {
        assert!(
            index < self.len,
            "bit {index} out of range (len {})",
            self.len
        );
        self.words[index / WORD_BITS] ^= 1u64 << (index % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// # Panics
    /// Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// # Panics
    /// Panics on length mismatch.
    pub fn and_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in and");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Complements every bit.
    pub fn not_assign(&mut self) {
        for w in &mut self.words {
            *w = !*w;
        }
        self.clear_tail();
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.iter() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Row-major bit-packed matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: BitMatrix,
    /// Pivot column of row `k`, ascending.
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = word_count(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks vectors of length `cols` as rows.
    pub fn from_rows(cols: usize, rows: &[BitVector]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            m.row_words_mut(r).copy_from_slice(row.words());
        }
        Ok(m)
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
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(
            r < self.rows && c < self.cols,
            "entry ({r},{c}) out of range"
        );
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < self.rows && c < self.cols,
            "entry ({r},{c}) out of range"
        );
        let w = &mut self.data[r * self.stride + c / WORD_BITS];
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> BitVector {
        BitVector::from_words(self.cols, self.row_words(r).to_vec())
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * self.stride);
        head[lo * self.stride..(lo + 1) * self.stride].swap_with_slice(&mut tail[..self.stride]);
    }

    /// `row[dst] ^= row[src]`, touching only words from `from_word` on.
    fn xor_row_into(&mut self, src: usize, dst: usize, from_word: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (src_slice, dst_slice) = if src < dst {
            let (head, tail) = self.data.split_at_mut(dst * s);
            (&head[src * s..(src + 1) * s], &mut tail[..s])
        } else {
            let (head, tail) = self.data.split_at_mut(src * s);
            (&tail[..s] as &[u64], &mut head[dst * s..(dst + 1) * s])
        };
        for (d, v) in dst_slice[from_word..]
            .iter_mut()
            .zip(&src_slice[from_word..])
        {
            *d ^= v;
        }
    }

    /// Matrix-vector product `self · x`.
    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(BitVector::from_bools((0..self.rows).map(|r| {
            self.row_words(r)
                .iter()
                .zip(x.words())
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
                & 1
                == 1
        })))
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..m.cols {
            if next == m.rows {
                break;
            }
            let word = c / WORD_BITS;
            let bit = 1u64 << (c % WORD_BITS);
            let Some(p) = (next..m.rows).find(|&r| m.data[r * m.stride + word] & bit != 0) else {
                continue;
            };
            m.swap_rows(p, next);
            for r in 0..m.rows {
                if r != next && m.data[r * m.stride + word] & bit != 0 {
                    m.xor_row_into(next, r, word);
                }
            }
            pivots.push(c);
            next += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{x : self · x = 0}`.
    ///
    /// One vector per free column, in ascending free-column order. The
    /// vector for free column `f` has a 1 at `f`, zeros at every other
    /// free column, and pivot entries read off the reduced form.
    pub fn nullspace_basis(&self) -> Vec<BitVector> {
        let Echelon { reduced, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVector::unit(self.cols, f);
                for (k, &p) in pivots.iter().enumerate() {
                    if reduced.get(k, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self · x = b`, with every free variable set to 0;
    /// `None` if the system is inconsistent.
    pub fn solve(&self, b: &BitVector) -> Result<Option<BitVector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = BitMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in self.row(r).iter_ones() {
                aug.set(r, c, true);
            }
            aug.set(r, self.cols, b.get(r));
        }
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = BitVector::zeros(self.cols);
        for (k, &p) in pivots.iter().enumerate() {
            x.set(p, reduced.get(k, self.cols));
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// Lexicographically smallest nonzero element of the span of `basis`,
/// reading each vector as the tuple `(v[0], v[1], …)` with `0 < 1`.
///
/// Returns `None` for an empty (or all-zero) basis.
pub fn lex_min_nonzero(basis: &[BitVector]) -> Option<BitVector> {
    // Echelonize on lowest set index; after full reduction the vector with
    // the largest leading index is the unique minimum.
    let mut reduced: Vec<BitVector> = Vec::new();
    for v in basis {
        let mut v = v.clone();
        for r in &reduced {
            let lead = r.first_one().expect("reduced rows are nonzero");
            if v.get(lead) {
                v.xor_assign(r);
            }
        }
        if let Some(lead) = v.first_one() {
            for r in &mut reduced {
                if r.get(lead) {
                    r.xor_assign(&v);
                }
            }
            reduced.push(v);
        }
    }
    reduced.into_iter().max_by_key(|r| r.first_one())
}
