//! Recursions, closed forms, and continued-fraction expansions for the
//! polynomial families: the (inv, lrm, fix) polynomials, the (maj, des)
//! polynomials, the Dyck-path (alpha, beta, des) polynomials, the signed
//! evaluation at `q = -1`, and the polyomino area/column polynomials.
//!
//! Every route here is independent of the brute-force oracles; the harness
//! in [`crate::verify`] pits them against each other.

mod contfrac;
mod funceq;
mod recursions;
mod signed;
mod weighted;

pub use contfrac::{cf_even_part, cf_odd_part, cf_terms, convergent, CfKind, CfSpec, OddPartCf};
pub use funceq::{
    check_functional_equations, funceq_residual, inv_lrm_fix_series, signed_ode_residual,
    signed_quadratic_residual, signed_series, signed_series_odd, IdentityReport,
};
pub use recursions::{
    alpha_beta_rec_first, alpha_beta_rec_last, area_col_poly, catalan, inv_lrm_alt_rec,
    inv_lrm_fix_rec, inv_lrm_rec, maj_des_rec_first, maj_des_rec_second, narayana, narayana_poly,
};
pub use signed::{signed_closed, signed_coeff, signed_rec};
pub use weighted::{weighted_motzkin_series, WeightTable};

use crate::polyarith::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenFunError {
    #[error("k = {k} is out of range for n = {n}")]
    OutOfRange { n: usize, k: usize },
    #[error("continued fraction depth {depth} cannot determine coefficients up to order {order}; need {needed}")]
    InsufficientDepth { depth: usize, order: usize, needed: usize },
    #[error("a {expected:?}-type spec needs {expected_bs} denominator coefficients, got {got}")]
    BadSpecShape { expected: CfKind, expected_bs: usize, got: usize },
    #[error("continued fraction depth must be at least 1")]
    ZeroDepth,
    #[error("even/odd contraction needs depth at least {needed}")]
    ContractionTooShallow { needed: usize },
    #[error("weight table too short: height {height} needed")]
    TableTooShort { height: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Oracle(#[from] crate::permstats::PermError),
}
