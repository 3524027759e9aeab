//! Construction and verification of CSS, CSS-T and triorthogonal quantum codes
//! from classical binary linear codes.
//!
//! The crate is organized around a packed GF(2) linear-algebra substrate and a
//! stack of code-level layers on top of it:
//!
//! - [`gf2`]: bit-packed vectors and matrices, row reduction, kernels, Schur
//!   products and overlap parities.
//! - [`code`]: classical binary linear codes, classification predicates,
//!   Schur squares, shortening and augmentation.
//! - [`cyclic`]: cyclic codes from generator polynomials and the divisor
//!   lattice of `x^n - 1` via cyclotomic cosets.
//! - [`distance`]: exact minimum-distance and coset-distance computation
//!   (exhaustive Gray-code enumeration and information-set search with
//!   Brouwer–Zimmermann style lower bounds).
//! - [`css`]: nested pairs of classical codes as quantum CSS codes, with
//!   parameters, degeneracy flags and parity-check blocks.
//! - [`csst`]: CSS-T criteria (Schur criterion and the self-dual-support
//!   definition), the `N_phi` length-doubling construction and its iterates,
//!   and the structured sparse parity-check assembly.
//! - [`trio`]: triorthogonality checks, extraction of triorthogonal codes
//!   from CSS-T pairs, and the generalized doubling construction driven by
//!   self-orthogonal ingredient codes.
//! - [`phase`]: exact combinatorial analysis of transversal diagonal gates
//!   (`Z`, `S`, `T` and finer rotations) and transversal CCZ on CSS
//!   codespaces: per-coset phase profiles, preservation verdicts, induced
//!   logical diagonals and their orders.
//! - [`oracle`]: an independent statevector oracle with exact
//!   root-of-unity arithmetic, used to cross-check the phase analyzer.
//! - [`fixtures`]: bundled ingredient codes validated by the library's own
//!   checkers at test time.
//! - [`sampling`]: seeded random and exhaustive corpora of codes and nested
//!   pairs for property tests and experiments.
//!
//! All values are immutable after construction and all operations are pure
//! functions; everything is safe to share across threads. Enumeration-heavy
//! operations parallelize internally via rayon with deterministic merges, so
//! results are reproducible for a fixed seed regardless of thread count (set
//! `RAYON_NUM_THREADS` to control the worker pool).

pub mod code;
pub mod css;
pub mod csst;
pub mod cyclic;
pub mod distance;
pub mod fixtures;
pub mod gf2;
pub mod oracle;
pub mod phase;
pub mod sampling;
pub mod trio;

pub use code::{CodeClassification, LinearCode};
pub use css::{CssPair, CssParams};
pub use csst::{CssTVerdict, CssTWitness, PhiMap};
pub use distance::{DistanceMethod, DistanceOptions, DistanceResult};
pub use gf2::{BitMatrix, BitVector};
pub use phase::{LogicalDiagonal, PhaseProfile};
pub use trio::{DoublingMode, DoublingRecipe, TriorthogonalWitness};

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("coordinate {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("ragged rows: row {row} has length {got}, expected {expected}")]
    RaggedRows { row: usize, got: usize, expected: usize },
    #[error("codes are not nested: {detail}")]
    NotNested { detail: String },
    #[error("empty logical space: dim C1 must exceed dim C2")]
    EmptyLogicalSpace,
    #[error("polynomial does not divide x^{n} - 1")]
    InvalidGenerator { n: usize },
    #[error("even cyclic length {n} is unsupported")]
    EvenCyclicLength { n: usize },
    #[error("minimum distance undefined for the zero code")]
    UndefinedDistance,
    #[error("logical order undefined: the gate does not preserve the codespace")]
    UndefinedOrder,
    #[error("enumeration limit: {what} is {got}, limit {limit}")]
    EnumerationLimit {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("size guard: {what} is {got}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("construction refused: {condition}")]
    Refused { condition: String },
    #[error("map is undefined on the domain: {detail}")]
    PhiDomain { detail: String },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn refused(condition: impl Into<String>) -> Self {
        Error::Refused {
            condition: condition.into(),
        }
    }

    pub(crate) fn not_nested(detail: impl Into<String>) -> Self {
        Error::NotNested {
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
