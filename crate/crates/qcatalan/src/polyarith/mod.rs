//! Exact sparse Laurent-polynomial and truncated-power-series arithmetic.
//!
//! Everything downstream (statistics oracles, recursions, continued
//! fractions) reduces to two value types:
//! - [`MultiPoly`]: sparse polynomial in four positional variable slots with
//!   `BigInt` coefficients and signed (Laurent) exponents,
//! - [`PolySeries`]: power series in `z` truncated at a fixed order, with
//!   `MultiPoly` coefficients.
//!
//! Values are immutable after construction and operations are pure, so they
//! can be shared freely across threads.

mod multipoly;
mod series;

pub use multipoly::{abt, qtx, ExpVec, MonomialSubst, MultiPoly, VarContext};
pub use series::PolySeries;

/// Errors from polynomial and series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("substituting 0 into slot {slot} which occurs with a negative exponent")]
    SubstDivisionByZero { slot: usize },
    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("derivative of an order-0 series")]
    DerivativeOrderZero,
    #[error("series divisor must have constant term 1")]
    NonUnitDivisor,
    #[error("polynomial is not univariate in slot {slot}")]
    NotUnivariate { slot: usize },
    #[error("coefficient list has negative entries")]
    NegativeCoefficients,
    #[error("inexact integer division")]
    InexactDivision,
}
