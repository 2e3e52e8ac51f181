//! Signed enumeration: the (inv, lrm) polynomial evaluated at `q = -1`,
//! both from the binomial closed form and from the parity-split recursions.

use num_bigint::BigInt;
use num_traits::One;

use crate::polyarith::{ExpVec, MultiPoly};

use super::GenFunError;

/// `s(n, k) = C(floor((n-1)/2), floor((k-1)/2)) * C(ceil((n-1)/2),
/// ceil((k-1)/2))` for `1 <= k <= n`; also the number of symmetric Dyck
/// paths of semilength `n` with `k` peaks.
pub fn signed_coeff(n: usize, k: usize) -> Result<BigInt, GenFunError> {
    if k == 0 || k > n {
        return Err(GenFunError::OutOfRange { n, k });
    }
    let fl = |m: usize| BigInt::from(m / 2);
    let ce = |m: usize| BigInt::from(m.div_ceil(2));
    Ok(num_integer::binomial(fl(n - 1), fl(k - 1)) * num_integer::binomial(ce(n - 1), ce(k - 1)))
}

/// Closed form for the signed polynomial:
/// `sum_k (-1)^{n-k} s(n,k) t^k`.
pub fn signed_closed(n: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let mut p = MultiPoly::zero();
    for k in 1..=n {
        let mut c = signed_coeff(n, k).expect("k is in range");
        if (n - k) % 2 == 1 {
            c = -c;
        }
        p.add_term(ExpVec([0, k as i32, 0, 0]), &c);
    }
    p
}

/// The signed polynomial by the parity-split recursions: even sizes pick up
/// a factor `t - 1`; odd sizes follow a three-term recursion whose division
/// by `n + 1` must be exact.  An inexact division can only mean the
/// recursion was implemented wrong, so it aborts loudly.
pub fn signed_rec(n: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let t = MultiPoly::var(crate::polyarith::qtx::T);
    let t_minus_1 = t.sub(&MultiPoly::one());
    // (1 - t^2)^2
    let one_minus_t2 = MultiPoly::one().sub(&t.mul(&t));
    let sq = one_minus_t2.mul(&one_minus_t2);
    // odd[m] holds the polynomial for size 2m + 1; sizes 1 and 3 seed it
    let mut odd: Vec<MultiPoly> = vec![t.clone()];
    {
        let mut i3 = MultiPoly::zero();
        i3.add_term(ExpVec([0, 1, 0, 0]), &BigInt::one());
        i3.add_term(ExpVec([0, 2, 0, 0]), &BigInt::from(-1));
        i3.add_term(ExpVec([0, 3, 0, 0]), &BigInt::one());
        odd.push(i3);
    }
    let top = if n % 2 == 1 { n / 2 + 1 } else { n / 2 };
    for m in 2..top {
        // (m+1) P_{2m+1} = 2((1+t^2)m - t) P_{2m-1} - (1-t^2)^2 (m-1) P_{2m-3}
        let lead = MultiPoly::one()
            .add(&t.mul(&t))
            .scale(m as i64)
            .sub(&t)
            .scale(2);
        let rhs = lead
            .mul(&odd[m - 1])
            .sub(&sq.scale(m as i64 - 1).mul(&odd[m - 2]));
        let p = rhs
            .div_exact(&BigInt::from(m as i64 + 1))
            .unwrap_or_else(|_| {
                panic!("signed recursion division by {} is inexact: implementation bug", m + 1)
            });
        odd.push(p);
    }
    if n % 2 == 1 {
        odd[n / 2].clone()
    } else {
        t_minus_1.mul(&odd[n / 2 - 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::VarContext;

    #[test]
    fn closed_form_small() {
        assert_eq!(signed_closed(3).render(VarContext::Qtx), "t^3 - t^2 + t");
        assert_eq!(signed_closed(4).render(VarContext::Qtx), "t^4 - 2*t^3 + 2*t^2 - t");
        assert!(signed_coeff(4, 5).is_err());
        assert_eq!(signed_coeff(4, 2).unwrap(), BigInt::from(2));
    }

    #[test]
    fn recursion_matches_closed_form() {
        for n in 0..=12 {
            assert_eq!(signed_rec(n), signed_closed(n), "mismatch at n = {n}");
        }
    }

    #[test]
    fn evaluation_at_one_is_aerated_catalan() {
        use super::super::recursions::catalan;
        use num_traits::Zero;
        for m in 0..=5usize {
            assert!(signed_rec(2 * m + 2).eval_all_ones().is_zero());
            assert_eq!(signed_rec(2 * m + 1).eval_all_ones(), catalan(m));
        }
    }
}
