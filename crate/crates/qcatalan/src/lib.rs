//! Exact combinatorial statistics on 321-avoiding permutations and the
//! lattice-path and polyomino models that encode them.
//!
//! The crate is organized around desk-scale exhaustive oracles paired with
//! structural routes (recursions, bijections, continued fractions) to the
//! same polynomials:
//! - [`polyarith`]: sparse Laurent polynomials and truncated power series,
//! - [`permstats`]: permutations, statistics, avoidance, brute-force sums,
//! - [`paths`]: Dyck and 2-Motzkin paths, peak/tunnel statistics, the
//!   first/last-peak decompositions,
//! - [`polyomino`]: parallelogram and shortened polyominoes,
//! - [`maps`]: the permutation/path bijections with their statistic
//!   transfers,
//! - [`genfun`]: recursions, closed forms, and continued-fraction
//!   expansions,
//! - [`verify`]: the named identity checks behind `qcatalan verify`.

pub mod genfun;
pub mod maps;
pub mod paths;
pub mod permstats;
pub mod polyarith;
pub mod polyomino;
pub mod verify;

pub(crate) mod wordgen;

pub use genfun::{CfKind, CfSpec, IdentityReport, WeightTable};
pub use paths::{DyckPath, DyckStep, MotzkinStep, NePath, NeStep, TwoMotzkinPath};
pub use permstats::{Permutation, ValPosVectors};
pub use polyarith::{ExpVec, MonomialSubst, MultiPoly, PolyError, PolySeries, VarContext};
pub use polyomino::{ParallelogramPolyomino, ShortenedPolyomino};
pub use verify::{CheckReport, CheckStatus};

/// Size caps for the exhaustive oracles.  Catalan-sized sweeps (generation
/// of avoiders, paths, polyominoes) default to 12; factorial-sized sweeps
/// (filtering the full symmetric group) to 9.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBounds {
    pub catalan: usize,
    pub factorial: usize,
}

impl Default for OracleBounds {
    fn default() -> OracleBounds {
        OracleBounds { catalan: 12, factorial: 9 }
    }
}

impl OracleBounds {
    /// Bounds with the Catalan-scale cap raised or lowered to `n`.  The
    /// factorial cap never exceeds its default.
    pub fn with_max_n(n: usize) -> OracleBounds {
        OracleBounds { catalan: n, factorial: n.min(9) }
    }
}
