//! Lattice paths: Dyck paths over `{U, D}`, 2-Motzkin paths over
//! `{U, D, L0, L1}`, and free north/east paths, together with every path
//! statistic the identity harness sweeps.
//!
//! Conventions for empty paths: descents, peaks, area, sum-of-peaks and
//! sum-of-tunnels are all 0; `num_peaks = des + 1` is asserted only for
//! nonempty paths.

mod dyck;
mod motzkin;
mod ne;

pub use dyck::{
    brute_alpha_beta_des, delta, delta_inv, delta_last, gen_dyck, peak_to_tunnel,
    peak_to_tunnel_inv, DyckPath, DyckStep,
};
pub use motzkin::{
    gen_motzkin2, gen_motzkin2_restricted, gen_motzkin_plain, MotzkinStep, PlainMotzkinStep,
    TwoMotzkinPath,
};
pub use ne::{NePath, NeStep};

/// Errors from path construction, parsing, and the path oracles.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("path dips below the x-axis")]
    BelowAxis,
    #[error("path does not return to the x-axis")]
    Unbalanced,
    #[error("cannot parse path from {text:?}")]
    Parse { text: String },
    #[error("n = {n} exceeds the oracle bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

/// Descent positions of a 0/1 word: 1-based `i` with `w_i = 1, w_{i+1} = 0`.
pub(crate) fn bit_descent_set(bits: &[bool]) -> Vec<usize> {
    (1..bits.len())
        .filter(|&i| bits[i - 1] && !bits[i])
        .collect()
}
