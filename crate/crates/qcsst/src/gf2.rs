//! Packed bit vectors and matrices over GF(2).
//!
//! Coordinate 0 is the least significant bit of word 0; all bits beyond a
//! vector's length are kept zero so that weights and products can run
//! word-wise without masking in the hot loops.

use crate::{Error, Result};
use std::fmt;
use std::ops::{BitAndAssign, BitXorAssign};

const WORD_BITS: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2) with packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// The all-zeros vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; word_count(len)],
        }
    }

    /// The all-ones vector of the given length.
    pub fn ones(len: usize) -> Self {
        let mut v = BitVector {
            len,
            words: vec![!0u64; word_count(len)],
        };
        v.mask_tail();
        v
    }

    /// The standard basis vector `e_index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = BitVector::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parse a string of `0`/`1` characters, coordinate 0 first.
    pub fn from_str01(s: &str) -> Result<Self> {
        let mut v = BitVector::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("invalid bit character {c:?} at position {i}"),
                    })
                }
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        (self.words[index / WORD_BITS] >> (index % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    /// Number of set coordinates.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Euclidean inner product modulo 2.
    #[inline]
    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    /// Coordinate-wise product (support intersection).
    #[inline]
    pub fn and(&self, other: &BitVector) -> BitVector {
        debug_assert_eq!(self.len, other.len);
        BitVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Coordinate-wise sum (symmetric difference of supports).
    #[inline]
    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out ^= other;
        out
    }

    /// Indices of the set coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push(wi * WORD_BITS + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        for (i, &w) in self.words.iter().enumerate() {
            out.words[i] = w;
        }
        for i in other.support() {
            out.set(self.len + i, true);
        }
        out
    }

    /// The sub-vector on the given coordinates, in the given order.
    pub fn select(&self, coords: &[usize]) -> BitVector {
        let mut out = BitVector::zeros(coords.len());
        for (j, &i) in coords.iter().enumerate() {
            if self.get(i) {
                out.set(j, true);
            }
        }
        out
    }

    /// Lexicographic order on coordinate strings (coordinate 0 compared first,
    /// `0 < 1`). Used for deterministic certificate tie-breaking.
    pub fn lex_cmp(&self, other: &BitVector) -> std::cmp::Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                // Reversing bits makes coordinate order match numeric order.
                return a.reverse_bits().cmp(&b.reverse_bits());
            }
        }
        std::cmp::Ordering::Equal
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl BitXorAssign<&BitVector> for BitVector {
    #[inline]
    fn bitxor_assign(&mut self, rhs: &BitVector) {
        debug_assert_eq!(self.len, rhs.len);
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitAndAssign<&BitVector> for BitVector {
    #[inline]
    fn bitand_assign(&mut self, rhs: &BitVector) {
        debug_assert_eq!(self.len, rhs.len);
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a &= b;
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Coordinate-wise product of two equal-length vectors.
pub fn schur_product(u: &BitVector, v: &BitVector) -> Result<BitVector> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            got: v.len(),
        });
    }
    Ok(u.and(v))
}

/// Parity of the common support of three equal-length vectors,
/// `wt(u * v * w) mod 2`.
pub fn triple_overlap_parity(u: &BitVector, v: &BitVector, w: &BitVector) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            got: v.len(),
        });
    }
    if u.len() != w.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            got: w.len(),
        });
    }
    let mut acc = 0u64;
    for ((a, b), c) in u.words.iter().zip(&v.words).zip(&w.words) {
        acc ^= a & b & c;
    }
    Ok(acc.count_ones() & 1 == 1)
}

/// A dense matrix over GF(2), stored as packed rows of equal length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n_cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    /// A matrix with the given column count and no rows.
    pub fn empty(n_cols: usize) -> Self {
        BitMatrix {
            n_cols,
            rows: Vec::new(),
        }
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        BitMatrix {
            n_cols,
            rows: vec![BitVector::zeros(n_cols); n_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        BitMatrix {
            n_cols: n,
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    /// Build from rows, which must all have equal length.
    pub fn from_rows(rows: Vec<BitVector>) -> Result<Self> {
        let n_cols = rows.first().map_or(0, BitVector::len);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n_cols {
                return Err(Error::RaggedRows {
                    row: i,
                    got: r.len(),
                    expected: n_cols,
                });
            }
        }
        Ok(BitMatrix { n_cols, rows })
    }

    /// Build from `0`/`1` strings, one row per string.
    pub fn from_str_rows(rows: &[&str]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|s| BitVector::from_str01(s))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &BitVector> {
        self.rows.iter()
    }

    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.n_cols);
        self.rows.push(row);
    }

    /// Maximum row weight (0 for an empty matrix).
    pub fn max_row_weight(&self) -> usize {
        self.rows.iter().map(BitVector::weight).max().unwrap_or(0)
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.n_cols != other.n_cols {
            return Err(Error::DimensionMismatch {
                expected: self.n_cols,
                got: other.n_cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BitMatrix {
            n_cols: self.n_cols,
            rows,
        })
    }

    /// Concatenate columns: each row of the result is `(self_row, other_row)`.
    pub fn hstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.n_rows(), other.n_rows());
        BitMatrix {
            n_cols: self.n_cols + other.n_cols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.concat(b))
                .collect(),
        }
    }

    /// The submatrix on the given columns, in the given order.
    pub fn select_columns(&self, coords: &[usize]) -> BitMatrix {
        BitMatrix {
            n_cols: coords.len(),
            rows: self.rows.iter().map(|r| r.select(coords)).collect(),
        }
    }

    /// Reduced row echelon form. The result is the unique canonical form of
    /// the row space: pivot columns are strictly increasing and each pivot
    /// column contains a single set bit. Zero rows are dropped.
    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.n_cols {
            let Some(pivot) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, pivot);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(col) {
                    *row ^= &pivot_row;
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        Rref {
            matrix: BitMatrix {
                n_cols: self.n_cols,
                rows,
            },
            pivots,
        }
    }

    /// Rank of the matrix over GF(2).
    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// A basis of the right kernel `{ v : M v^T = 0 }`, computed by
    /// augmenting the transpose with the identity and reading the rows whose
    /// left block reduced to zero.
    pub fn kernel(&self) -> BitMatrix {
        let n = self.n_cols;
        // Row i of the augmented system is (column i of self, e_i).
        let mut left: Vec<BitVector> = (0..n)
            .map(|i| {
                let mut v = BitVector::zeros(self.rows.len());
                for (j, row) in self.rows.iter().enumerate() {
                    if row.get(i) {
                        v.set(j, true);
                    }
                }
                v
            })
            .collect();
        let mut right: Vec<BitVector> = (0..n).map(|i| BitVector::unit(n, i)).collect();

        let mut r = 0;
        for col in 0..self.rows.len() {
            let Some(pivot) = (r..n).find(|&i| left[i].get(col)) else {
                continue;
            };
            left.swap(r, pivot);
            right.swap(r, pivot);
            let (lp, rp) = (left[r].clone(), right[r].clone());
            for i in 0..n {
                if i != r && left[i].get(col) {
                    left[i] ^= &lp;
                    right[i] ^= &rp;
                }
            }
            r += 1;
            if r == n {
                break;
            }
        }
        let rows: Vec<BitVector> = (r..n).map(|i| right[i].clone()).collect();
        debug_assert!(rows.iter().all(|v| self.rows.iter().all(|m| !m.dot(v))));
        BitMatrix { n_cols: n, rows }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.n_rows(), self.n_cols)?;
        for row in &self.rows {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

/// A matrix in reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    matrix: BitMatrix,
    pivots: Vec<usize>,
}

impl Rref {
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> BitMatrix {
        self.matrix
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the echelon rows; the residual is zero exactly
    /// when `v` lies in the row space.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut res = v.clone();
        for (row, &p) in self.matrix.rows.iter().zip(&self.pivots) {
            if res.get(p) {
                res ^= row;
            }
        }
        res
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Row-space membership test: true exactly when `v` lies in the row space
/// of `m`.
pub fn member(v: &BitVector, m: &BitMatrix) -> Result<bool> {
    if v.len() != m.n_cols() {
        return Err(Error::DimensionMismatch {
            expected: m.n_cols(),
            got: v.len(),
        });
    }
    Ok(m.rref().contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        BitVector::from_str01(s).unwrap()
    }

    #[test]
    fn schur_product_examples() {
        assert_eq!(schur_product(&bv("1100"), &bv("1010")).unwrap(), bv("1000"));
        assert_eq!(schur_product(&bv("1111"), &bv("0110")).unwrap(), bv("0110"));
        assert_eq!(schur_product(&bv("0000"), &bv("1011")).unwrap(), bv("0000"));
        assert!(schur_product(&bv("110"), &bv("1100")).is_err());
    }

    #[test]
    fn triple_overlap_examples() {
        assert!(triple_overlap_parity(&bv("111"), &bv("111"), &bv("111")).unwrap());
        assert!(triple_overlap_parity(&bv("1100"), &bv("1010"), &bv("1001")).unwrap());
        assert!(!triple_overlap_parity(&bv("1100"), &bv("0011"), &bv("1111")).unwrap());
        assert!(triple_overlap_parity(&bv("110"), &bv("011"), &bv("1111")).is_err());
    }

    #[test]
    fn rref_examples() {
        let m = BitMatrix::from_str_rows(&["11", "01"]).unwrap();
        let e = m.rref();
        assert_eq!(e.rank(), 2);
        assert_eq!(e.matrix().row(0), &bv("10"));
        assert_eq!(e.matrix().row(1), &bv("01"));

        let m = BitMatrix::from_str_rows(&["110", "110"]).unwrap();
        let e = m.rref();
        assert_eq!(e.rank(), 1);
        assert_eq!(e.matrix().row(0), &bv("110"));

        let m = BitMatrix::from_str_rows(&["1111", "1100", "0011"]).unwrap();
        let e = m.rref();
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), &[0, 2]);
    }

    #[test]
    fn rref_is_canonical() {
        let a = BitMatrix::from_str_rows(&["1111", "1100"]).unwrap();
        let b = BitMatrix::from_str_rows(&["0011", "1111", "1100"]).unwrap();
        assert_eq!(a.rref().matrix(), b.rref().matrix());
        let e = a.rref();
        assert_eq!(e.matrix().rref().matrix(), e.matrix());
    }

    #[test]
    fn kernel_examples() {
        let m = BitMatrix::from_str_rows(&["1111"]).unwrap();
        let k = m.kernel();
        assert_eq!(k.n_rows(), 3);
        let ke = k.rref();
        for s in ["1100", "0110", "0011"] {
            assert!(ke.contains(&bv(s)));
        }

        let m = BitMatrix::from_str_rows(&["10", "01"]).unwrap();
        assert_eq!(m.kernel().n_rows(), 0);

        let m = BitMatrix::from_str_rows(&["1100", "0011"]).unwrap();
        let k = m.kernel().rref();
        assert_eq!(k.rank(), 2);
        assert!(k.contains(&bv("1100")));
        assert!(k.contains(&bv("0011")));
    }

    #[test]
    fn kernel_of_kernel_is_row_space() {
        let m = BitMatrix::from_str_rows(&["110101", "011011", "000111"]).unwrap();
        let kk = m.kernel().kernel();
        assert_eq!(kk.rref().matrix(), m.rref().matrix());
    }

    #[test]
    fn member_examples() {
        let m = BitMatrix::from_str_rows(&["1111", "1100"]).unwrap();
        assert!(member(&bv("0011"), &m).unwrap());
        assert!(!member(&bv("1000"), &m).unwrap());
        assert!(member(&bv("0000"), &m).unwrap());
        assert!(member(&bv("000"), &m).is_err());
    }

    #[test]
    fn rank_plus_kernel_rank_is_cols() {
        for rows in [
            vec!["1111", "1100"],
            vec!["1010", "0101", "1111"],
            vec!["0000"],
        ] {
            let m = BitMatrix::from_str_rows(&rows).unwrap();
            assert_eq!(m.rank() + m.kernel().rank(), m.n_cols());
        }
    }

    #[test]
    fn weight_sum_identity() {
        let u = bv("110101110");
        let v = bv("011011001");
        let uv = u.xor(&v);
        assert_eq!(
            uv.weight(),
            u.weight() + v.weight() - 2 * u.and(&v).weight()
        );
    }

    #[test]
    fn lex_cmp_orders_by_leading_coordinate() {
        assert!(bv("0110").lex_cmp(&bv("1000")) == std::cmp::Ordering::Less);
        assert!(bv("1000").lex_cmp(&bv("1001")) == std::cmp::Ordering::Less);
        assert!(bv("1001").lex_cmp(&bv("1001")) == std::cmp::Ordering::Equal);
    }

    #[test]
    fn select_and_concat() {
        let v = bv("10110");
        assert_eq!(v.select(&[0, 2, 3]), bv("111"));
        assert_eq!(v.concat(&bv("01")), bv("1011001"));
        assert_eq!(v.support(), vec![0, 2, 3]);
    }
}
