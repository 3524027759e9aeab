//! Quantum CSS codes from nested pairs of classical codes.

use crate::code::{extend_basis, LinearCode};
use crate::distance::{coset_min_weight, min_distance, DistanceOptions, DistanceResult};
use crate::gf2::{BitMatrix, BitVector};
use crate::{Error, Result};

/// A nested pair `C2 ⊆ C1` encoding `k = dim C1 - dim C2` logical qubits.
///
/// `logical_reps` holds `k` deterministic coset representatives with
/// `C1 = C2 ⊕ rowspace(logical_reps)`; encodings and coset labels are stable
/// across runs because the representatives come from an RREF completion of
/// the canonical generator of `C2` to one of `C1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssPair {
    c1: LinearCode,
    c2: LinearCode,
    logical_reps: BitMatrix,
}

impl CssPair {
    /// Assemble a CSS pair, verifying nesting and a nonempty logical space.
    pub fn new(c1: LinearCode, c2: LinearCode) -> Result<Self> {
        if c1.len() != c2.len() {
            return Err(Error::DimensionMismatch {
                expected: c1.len(),
                got: c2.len(),
            });
        }
        if !c2.is_subcode_of(&c1) {
            return Err(Error::not_nested("C2 is not a subcode of C1"));
        }
        if c2.dim() >= c1.dim() {
            return Err(Error::EmptyLogicalSpace);
        }
        let logical_reps = extend_basis(&c2, &c1);
        debug_assert_eq!(logical_reps.n_rows(), c1.dim() - c2.dim());
        debug_assert!(logical_reps.rows().all(|r| !c2.contains(r)));
        Ok(CssPair {
            c1,
            c2,
            logical_reps,
        })
    }

    pub fn n(&self) -> usize {
        self.c1.len()
    }

    /// Number of logical qubits.
    pub fn k(&self) -> usize {
        self.c1.dim() - self.c2.dim()
    }

    pub fn c1(&self) -> &LinearCode {
        &self.c1
    }

    pub fn c2(&self) -> &LinearCode {
        &self.c2
    }

    pub fn logical_reps(&self) -> &BitMatrix {
        &self.logical_reps
    }

    /// The coset representative `uH` for a logical label `u`, with bit `i`
    /// of `u` selecting row `i` of `logical_reps`.
    pub fn logical_rep(&self, u: u64) -> BitVector {
        let mut rep = BitVector::zeros(self.n());
        let mut bits = u;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            rep ^= self.logical_reps.row(i);
            bits &= bits - 1;
        }
        rep
    }

    /// `H_X` and `H_Z`: generator matrices of `C2` and of the dual of `C1`.
    /// The CSS parity-check matrix is their block-diagonal assembly.
    pub fn parity_check_blocks(&self) -> (BitMatrix, BitMatrix) {
        (self.c2.gen().clone(), self.c1.dual().gen().clone())
    }

    /// Quantum code parameters with exact coset distances and degeneracy
    /// flags. `d_x` and `d_z` carry certificates; degeneracy compares them
    /// to the minimum distances of `C1` and of the dual of `C2`, and stays
    /// unknown when any of the four quantities did not resolve.
    pub fn params(&self, opts: &DistanceOptions) -> Result<CssParams> {
        let d_x = coset_min_weight(&self.c1, &self.c2, opts)?;
        let d_z = coset_min_weight(self.c2.dual(), self.c1.dual(), opts)?;
        let d_c1 = min_distance(&self.c1, opts)?;
        let d_c2_dual = min_distance(self.c2.dual(), opts)?;
        Ok(CssParams::assemble(
            self.n(),
            self.k(),
            d_x,
            d_z,
            d_c1,
            d_c2_dual,
        ))
    }
}

/// Parameters `[[n, k, d]]` of a CSS pair, with the per-side coset distances
/// and the classical distance floors used to decide degeneracy.
#[derive(Clone, Debug)]
pub struct CssParams {
    pub n: usize,
    pub k: usize,
    pub d_x: DistanceResult,
    pub d_z: DistanceResult,
    pub d: DistanceResult,
    /// Minimum distance of `C1` (the X-side floor).
    pub d_c1: DistanceResult,
    /// Minimum distance of the dual of `C2` (the Z-side floor).
    pub d_c2_dual: DistanceResult,
    pub x_degenerate: Option<bool>,
    pub z_degenerate: Option<bool>,
}

impl CssParams {
    pub(crate) fn assemble(
        n: usize,
        k: usize,
        d_x: DistanceResult,
        d_z: DistanceResult,
        d_c1: DistanceResult,
        d_c2_dual: DistanceResult,
    ) -> CssParams {
        let x_degenerate = match (d_x.value, d_c1.value) {
            (Some(dx), Some(floor)) => Some(dx > floor),
            _ => None,
        };
        let z_degenerate = match (d_z.value, d_c2_dual.value) {
            (Some(dz), Some(floor)) => Some(dz > floor),
            _ => None,
        };
        let d = combine_min(&d_x, &d_z);
        CssParams {
            n,
            k,
            d_x,
            d_z,
            d,
            d_c1,
            d_c2_dual,
            x_degenerate,
            z_degenerate,
        }
    }

    /// Equality of everything except certificates: lengths, dimensions,
    /// distance values and bounds, and degeneracy flags.
    pub fn same_parameters(&self, other: &CssParams) -> bool {
        fn same(a: &DistanceResult, b: &DistanceResult) -> bool {
            a.value == b.value && a.lower_bound == b.lower_bound && a.upper_bound == b.upper_bound
        }
        self.n == other.n
            && self.k == other.k
            && same(&self.d_x, &other.d_x)
            && same(&self.d_z, &other.d_z)
            && same(&self.d, &other.d)
            && self.x_degenerate == other.x_degenerate
            && self.z_degenerate == other.z_degenerate
    }
}

/// `d = min(d_x, d_z)` at the bounds level; the value resolves as soon as
/// the combined bounds meet.
fn combine_min(d_x: &DistanceResult, d_z: &DistanceResult) -> DistanceResult {
    let lower = d_x.lower_bound.min(d_z.lower_bound);
    let upper = d_x.upper_bound.min(d_z.upper_bound);
    let certificate = if d_x.upper_bound <= d_z.upper_bound {
        d_x.certificate.clone()
    } else {
        d_z.certificate.clone()
    };
    let method = if d_x.upper_bound <= d_z.upper_bound {
        d_x.method
    } else {
        d_z.method
    };
    DistanceResult {
        value: (lower == upper).then_some(upper),
        certificate,
        method,
        lower_bound: lower,
        upper_bound: upper,
    }
}
