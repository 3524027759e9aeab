//! Classical binary linear codes held in canonical reduced form.

use crate::gf2::{BitMatrix, BitVector};
use crate::{Error, Result};
use std::fmt;
use std::sync::OnceLock;

/// A binary `[n, k]` linear code, stored as a generator matrix in reduced
/// row echelon form. RREF is the canonical form for code equality: two codes
/// are equal exactly when their generator matrices are identical.
pub struct LinearCode {
    n: usize,
    k: usize,
    gen: BitMatrix,
    pivots: Vec<usize>,
    dual: OnceLock<Box<LinearCode>>,
}

impl LinearCode {
    /// The code spanned by the given rows. The generator is normalized to
    /// RREF, so `k` is the rank of the input.
    pub fn from_rows(rows: BitMatrix) -> Result<Self> {
        if rows.n_cols() == 0 {
            return Err(Error::refused("code length must be positive"));
        }
        let e = rows.rref();
        Ok(LinearCode {
            n: e.matrix().n_cols(),
            k: e.rank(),
            pivots: e.pivots().to_vec(),
            gen: e.into_matrix(),
            dual: OnceLock::new(),
        })
    }

    pub fn from_str_rows(rows: &[&str]) -> Result<Self> {
        Self::from_rows(BitMatrix::from_str_rows(rows)?)
    }

    /// The `[n, 0]` zero code.
    pub fn zero(n: usize) -> Self {
        LinearCode {
            n,
            k: 0,
            gen: BitMatrix::empty(n),
            pivots: Vec::new(),
            dual: OnceLock::new(),
        }
    }

    /// The full space `F_2^n`.
    pub fn full(n: usize) -> Self {
        LinearCode {
            n,
            k: n,
            gen: BitMatrix::identity(n),
            pivots: (0..n).collect(),
            dual: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// The canonical (RREF) generator matrix, `k` rows.
    pub fn gen(&self) -> &BitMatrix {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the generator; zero residual means membership.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        debug_assert_eq!(v.len(), self.n);
        let mut res = v.clone();
        for (row, &p) in self.gen.rows().zip(&self.pivots) {
            if res.get(p) {
                res ^= row;
            }
        }
        res
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.n && self.reduce(v).is_zero()
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.gen.rows().all(|r| other.contains(r))
    }

    /// The Euclidean dual, computed once and cached.
    pub fn dual(&self) -> &LinearCode {
        self.dual.get_or_init(|| {
            let kernel = self.gen.kernel();
            Box::new(LinearCode::from_rows(kernel).expect("dual of a nonempty-length code"))
        })
    }

    /// All `2^k` codewords in Gray-code order. Intended for small codes;
    /// panics above dimension 24.
    pub fn codewords(&self) -> Vec<BitVector> {
        assert!(self.k <= 24, "codeword enumeration limited to dimension 24");
        let mut out = Vec::with_capacity(1 << self.k);
        let mut cur = BitVector::zeros(self.n);
        out.push(cur.clone());
        for t in 1u64..(1u64 << self.k) {
            cur ^= self.gen.row(t.trailing_zeros() as usize);
            out.push(cur.clone());
        }
        out
    }

    /// Structural classification flags, decided on a basis plus pairwise
    /// Schur-product parities: evenness needs only basis weights, and
    /// double-evenness follows from `wt(x + y) = wt(x) + wt(y) - 2 wt(x * y)`
    /// (all basis weights divisible by four and all pairwise overlaps even).
    /// No codeword enumeration.
    pub fn classify(&self) -> CodeClassification {
        let weights: Vec<usize> = self.gen.rows().map(BitVector::weight).collect();
        let is_even = weights.iter().all(|w| w % 2 == 0);
        let mut pair_overlaps_even = true;
        for i in 0..self.k {
            for j in i + 1..self.k {
                if self.gen.row(i).and(self.gen.row(j)).weight() % 2 != 0 {
                    pair_overlaps_even = false;
                }
            }
        }
        let is_self_orthogonal = is_even && pair_overlaps_even;
        let is_doubly_even = weights.iter().all(|w| w % 4 == 0) && pair_overlaps_even;
        CodeClassification {
            is_even,
            is_doubly_even,
            is_self_orthogonal,
            is_self_dual: is_self_orthogonal && 2 * self.k == self.n,
            contains_all_ones: self.contains(&BitVector::ones(self.n)),
        }
    }

    /// The span of all pairwise Schur products of basis rows. Contains the
    /// code itself since `x * x = x`.
    pub fn schur_square(&self) -> LinearCode {
        let mut rows = Vec::with_capacity(self.k * (self.k + 1) / 2);
        for i in 0..self.k {
            for j in i..self.k {
                rows.push(self.gen.row(i).and(self.gen.row(j)));
            }
        }
        if rows.is_empty() {
            return LinearCode::zero(self.n);
        }
        LinearCode::from_rows(BitMatrix::from_rows(rows).expect("equal-length rows"))
            .expect("nonempty length")
    }

    /// Codewords with coordinate `i` equal to zero, with that coordinate
    /// deleted; length drops by one.
    pub fn shorten(&self, i: usize) -> Result<LinearCode> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.n,
            });
        }
        if self.n == 1 {
            return Err(Error::refused("cannot shorten a length-1 code"));
        }
        let mut rows: Vec<BitVector> = self.gen.rows().cloned().collect();
        if let Some(first) = (0..rows.len()).find(|&r| rows[r].get(i)) {
            let lead = rows[first].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != first && row.get(i) {
                    *row ^= &lead;
                }
            }
            rows.remove(first);
        }
        let keep: Vec<usize> = (0..self.n).filter(|&c| c != i).collect();
        let shortened = BitMatrix::from_rows(rows)?.select_columns(&keep);
        LinearCode::from_rows(shortened)
    }

    /// All codewords with coordinate `i` deleted.
    pub fn puncture(&self, i: usize) -> Result<LinearCode> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.n,
            });
        }
        if self.n == 1 {
            return Err(Error::refused("cannot puncture a length-1 code"));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&c| c != i).collect();
        LinearCode::from_rows(self.gen.select_columns(&keep))
    }

    /// The span of the code and `v`; dimension grows by one exactly when
    /// `v` is not already a codeword.
    pub fn augment(&self, v: &BitVector) -> Result<LinearCode> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let mut rows: Vec<BitVector> = self.gen.rows().cloned().collect();
        rows.push(v.clone());
        LinearCode::from_rows(BitMatrix::from_rows(rows)?)
    }
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        LinearCode {
            n: self.n,
            k: self.k,
            gen: self.gen.clone(),
            pivots: self.pivots.clone(),
            dual: OnceLock::new(),
        }
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{},{}] {:?}", self.n, self.k, self.gen)
    }
}

/// Rows extending a basis of `sub` to a basis of `sup`, assuming
/// `sub` is a subcode of `sup`. Deterministic: each generator row of `sup`
/// is reduced modulo `sub` and the residuals are brought to RREF. Every
/// nonzero combination of the returned rows lies outside `sub`.
pub fn extend_basis(sub: &LinearCode, sup: &LinearCode) -> BitMatrix {
    debug_assert!(sub.is_subcode_of(sup));
    let residuals: Vec<BitVector> = sup.gen().rows().map(|r| sub.reduce(r)).collect();
    if residuals.is_empty() {
        return BitMatrix::empty(sup.len());
    }
    BitMatrix::from_rows(residuals)
        .expect("equal-length rows")
        .rref()
        .into_matrix()
}

/// Structural flags of a classical code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeClassification {
    pub is_even: bool,
    pub is_doubly_even: bool,
    pub is_self_orthogonal: bool,
    pub is_self_dual: bool,
    pub contains_all_ones: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::member;

    fn code(rows: &[&str]) -> LinearCode {
        LinearCode::from_str_rows(rows).unwrap()
    }

    #[test]
    fn from_rows_examples() {
        let c = code(&["1111", "1100"]);
        assert_eq!((c.len(), c.dim()), (4, 2));

        let z = code(&["0000"]);
        assert_eq!((z.len(), z.dim()), (4, 0));

        let c = code(&["110", "011", "101"]);
        assert_eq!((c.len(), c.dim()), (3, 2));
        assert!(c.classify().is_even);
    }

    #[test]
    fn dual_is_involution() {
        let c = code(&["110101", "011011"]);
        assert_eq!(c.dual().dual(), &c);
        assert_eq!(c.dim() + c.dual().dim(), c.len());
    }

    #[test]
    fn classify_examples() {
        let c = code(&["1100", "0011"]);
        let f = c.classify();
        assert!(f.is_self_dual && f.is_even && !f.is_doubly_even);

        // All eight codewords of this code have weight divisible by four.
        let c = code(&["11110000", "00111100", "00001111"]);
        let f = c.classify();
        assert!(f.is_doubly_even);
        assert!(c.codewords().iter().all(|w| w.weight() % 4 == 0));

        let z = LinearCode::zero(4);
        let f = z.classify();
        assert!(f.is_even && f.is_doubly_even && f.is_self_orthogonal);
        assert!(!f.is_self_dual && !f.contains_all_ones);
    }

    #[test]
    fn classify_flags_match_enumeration() {
        for rows in [
            vec!["1100", "0110"],
            vec!["111100", "001111"],
            vec!["10110100", "01011010", "00101101"],
        ] {
            let c = code(&rows);
            let f = c.classify();
            let words = c.codewords();
            assert_eq!(f.is_even, words.iter().all(|w| w.weight() % 2 == 0));
            assert_eq!(f.is_doubly_even, words.iter().all(|w| w.weight() % 4 == 0));
            assert_eq!(
                f.is_self_orthogonal,
                c.gen().rows().all(|r| words.iter().all(|w| !r.dot(w)))
            );
        }
    }

    #[test]
    fn schur_square_examples() {
        let c = code(&["1111", "1100"]);
        assert_eq!(c.schur_square(), c);

        let c = code(&["1000"]);
        assert_eq!(c.schur_square(), c);

        // Hamming [7,4]: pairwise products span the full space.
        let h = code(&["1000011", "0100101", "0010110", "0001111"]);
        assert_eq!(h.schur_square().dim(), 7);
    }

    #[test]
    fn code_is_contained_in_schur_square() {
        let c = code(&["110101", "011011", "000111"]);
        assert!(c.is_subcode_of(&c.schur_square()));
    }

    #[test]
    fn shorten_examples() {
        let rep = code(&["11"]);
        let s = rep.shorten(0).unwrap();
        assert_eq!((s.len(), s.dim()), (1, 0));

        let c = code(&["1100", "0011"]);
        let s = c.shorten(0).unwrap();
        assert_eq!((s.len(), s.dim()), (3, 1));
        assert!(s.contains(&BitVector::from_str01("011").unwrap()));

        assert!(c.shorten(4).is_err());
    }

    #[test]
    fn shorten_of_self_dual_is_self_orthogonal() {
        let c = code(&["1100", "0011"]);
        for i in 0..4 {
            let s = c.shorten(i).unwrap();
            assert_eq!(s.dim(), 1);
            assert!(s.classify().is_self_orthogonal);
        }
    }

    #[test]
    fn shorten_dual_equals_puncture_of_dual() {
        let c = code(&["110101", "011011", "000111"]);
        for i in 0..c.len() {
            let lhs = c.shorten(i).unwrap();
            let rhs = c.dual().puncture(i).unwrap();
            assert_eq!(lhs.dual(), &rhs);
        }
    }

    #[test]
    fn augment_examples() {
        let c = code(&["011"]);
        let a = c.augment(&BitVector::ones(3)).unwrap();
        assert_eq!(a.dim(), 2);

        let same = c.augment(&BitVector::zeros(3)).unwrap();
        assert_eq!(same, c);

        assert!(c.augment(&BitVector::zeros(4)).is_err());
    }

    #[test]
    fn membership_via_reduce_matches_free_function() {
        let c = code(&["1111", "1100"]);
        let v = BitVector::from_str01("0011").unwrap();
        assert_eq!(c.contains(&v), member(&v, c.gen()).unwrap());
    }
}
