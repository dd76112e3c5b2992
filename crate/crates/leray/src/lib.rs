//! Exact computational machinery for coverings of finite simplicial complexes:
//! Čech nerves, covering double complexes, Leray homomorphisms between nerve
//! and space (co)homology, and l1/linf seminorms on (co)homology computed by
//! exact rational linear programming.
//!
//! Everything is carried out over the rationals with no floating point, so
//! every identity checked by the test suites holds exactly. The crate is
//! organized bottom-up:
//!
//! * [`matrix`] — sparse rational matrices, rank / kernel / solve / quotient kernels,
//! * [`chain`] — graded complexes of rational vector spaces,
//! * [`simplicial`] — finite abstract simplicial complexes, (co)homology,
//!   barycentric subdivision, simplicial maps,
//! * [`covering`] / [`families`] — indexed coverings, nerves, supports, and
//!   finite-set refinement combinatorics,
//! * [`bicomplex`] — double complexes, total and edge complexes, and the
//!   constructive edge-isomorphism reductions,
//! * [`systems`] — generalized cochain/chain systems attached to supports,
//! * [`leray`] — the covering double complex, the morphisms lambda and tau,
//!   contracting homotopies and the canonical Leray homomorphisms,
//! * [`lp`] / [`norms`] — an exact simplex solver and the l1/linf seminorms,
//! * [`verify`] — the randomized property suites behind `leray verify`.
//!
//! The `examples/` directory shows one runnable program per capability; the
//! thin `leray` binary exposes the same operations as batch subcommands.

pub mod bicomplex;
pub mod chain;
pub mod covering;
pub mod families;
pub mod fixtures;
pub mod io;
pub mod leray;
pub mod lp;
pub mod matrix;
pub mod norms;
pub mod rat;
pub mod simplicial;
pub mod systems;
pub mod verify;

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertex `{0}` is not declared")]
    UnknownVertex(String),
    #[error("covering is not fine: simplex {0} lies in no element")]
    NotFine(String),
    #[error("{0} is not a simplex")]
    NotASimplex(String),
    #[error("vector is not in the expected subspace")]
    NotInSubspace,
    #[error("exactness failure at block (p, q) = ({0}, {1})")]
    NotExact(usize, usize),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
