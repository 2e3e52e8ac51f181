//! The polynomial recursions, computed bottom-up from the uniform seed
//! value 1 at `n = 0`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::polyarith::{qtx, ExpVec, MonomialSubst, MultiPoly};

use super::GenFunError;

fn q_pow(k: i32) -> MultiPoly {
    MultiPoly::monomial(1, ExpVec([k, 0, 0, 0]))
}

/// Substitute `t -> q^k t` in a `q, t` polynomial.
fn shift_t_by_q(p: &MultiPoly, k: i32) -> MultiPoly {
    let rule = MonomialSubst::monomial(ExpVec([k, 1, 0, 0]));
    p.subst(&[None, Some(rule), None, None])
        .expect("monomial substitution cannot fail")
}

/// Substitute `t -> (ab)^k t` in an `a, b, t` polynomial.
fn shift_t_by_ab(p: &MultiPoly, k: i32) -> MultiPoly {
    let rule = MonomialSubst::monomial(ExpVec([k, k, 1, 0]));
    p.subst(&[None, None, Some(rule), None])
        .expect("monomial substitution cannot fail")
}

/// Catalan numbers by coefficient extraction from `C(z) = 1 + z C(z)^2`:
/// the convolution recurrence.
pub fn catalan(n: usize) -> BigInt {
    let mut c: Vec<BigInt> = vec![BigInt::from(1)];
    for m in 1..=n {
        let mut total = BigInt::zero();
        for k in 0..m {
            total += &c[k] * &c[m - 1 - k];
        }
        c.push(total);
    }
    c[n].clone()
}

/// Narayana number `N(n, k) = C(n,k) C(n,k-1) / n` for `1 <= k <= n`.
pub fn narayana(n: usize, k: usize) -> Result<BigInt, GenFunError> {
    if k == 0 || k > n {
        return Err(GenFunError::OutOfRange { n, k });
    }
    let b1 = num_integer::binomial(BigInt::from(n), BigInt::from(k));
    let b2 = num_integer::binomial(BigInt::from(n), BigInt::from(k - 1));
    let (q, r) = num_integer::Integer::div_rem(&(b1 * b2), &BigInt::from(n));
    debug_assert!(r.is_zero(), "Narayana division is always exact");
    Ok(q)
}

/// The Narayana polynomial: the lrm distribution over avoiders at `q = 1`.
pub fn narayana_poly(n: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let mut p = MultiPoly::zero();
    for k in 1..=n {
        let c = narayana(n, k).expect("k is in range");
        p.add_term(ExpVec([0, k as i32, 0, 0]), &c);
    }
    p
}

fn inv_lrm_chain(n: usize) -> Vec<MultiPoly> {
    let t = MultiPoly::var(qtx::T);
    let mut seq = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut p = t.mul(&seq[m - 1]);
        for k in 0..m.saturating_sub(1) {
            // k runs 0..=m-2
            p = p.add(&q_pow(k as i32 + 1).mul(&seq[k]).mul(&seq[m - 1 - k]));
        }
        seq.push(p);
    }
    seq
}

/// The (inv, lrm) polynomial by the first-return recursion
/// `t I_{n-1} + sum_k q^{k+1} I_k I_{n-k-1}`.
pub fn inv_lrm_rec(n: usize) -> MultiPoly {
    inv_lrm_chain(n).pop().expect("chain is nonempty")
}

/// The (inv, lrm, fix) refinement: `tx I_{n-1}(x) + sum_k q^{k+1} I_k(1)
/// [I_{n-1-k}(x) - t(x-1) I_{n-2-k}(x)]`.
pub fn inv_lrm_fix_rec(n: usize) -> MultiPoly {
    let at_x1 = inv_lrm_chain(n);
    let tx = MultiPoly::monomial(1, ExpVec([0, 1, 1, 0]));
    // t(x-1) = tx - t
    let t_xm1 = tx.sub(&MultiPoly::var(qtx::T));
    let mut seq = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut p = tx.mul(&seq[m - 1]);
        for k in 0..m.saturating_sub(1) {
            let bracket = seq[m - 1 - k].sub(&t_xm1.mul(&seq[m - 2 - k]));
            p = p.add(&q_pow(k as i32 + 1).mul(&at_x1[k]).mul(&bracket));
        }
        seq.push(p);
    }
    seq.pop().expect("chain is nonempty")
}

/// The (inv, lrm) polynomial by the alternate recursion
/// `t I_{n-1}(q, t) + sum_k I_k(q, t) I_{n-1-k}(q, qt)`.
pub fn inv_lrm_alt_rec(n: usize) -> MultiPoly {
    let t = MultiPoly::var(qtx::T);
    let mut seq = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut p = t.mul(&seq[m - 1]);
        for k in 0..m.saturating_sub(1) {
            p = p.add(&seq[k].mul(&shift_t_by_q(&seq[m - 1 - k], 1)));
        }
        seq.push(p);
    }
    seq.pop().expect("chain is nonempty")
}

fn maj_des_chain(n: usize, first_form: bool) -> Vec<MultiPoly> {
    let t = MultiPoly::var(qtx::T);
    let mut seq = vec![MultiPoly::one()];
    for m in 1..=n {
        let p = if first_form {
            // M_m = M_{m-1}(q, qt)
            //     + sum_{k=2}^{m} [M_{k-1} + (q^{k-1} t - 1) M_{k-2}] M_{m-k}(q, q^k t)
            let mut p = shift_t_by_q(&seq[m - 1], 1);
            for k in 2..=m {
                let head = q_pow(k as i32 - 1).mul(&t).sub(&MultiPoly::one());
                let bracket = seq[k - 1].add(&head.mul(&seq[k - 2]));
                p = p.add(&bracket.mul(&shift_t_by_q(&seq[m - k], k as i32)));
            }
            p
        } else {
            // M_m = M_{m-1}(q, t)
            //     + sum_{k=0}^{m-2} M_k [M_{m-k-1}(q, q^k t)
            //                            + (q^{m-1} t - 1) M_{m-k-2}(q, q^k t)]
            let mut p = seq[m - 1].clone();
            let head = q_pow(m as i32 - 1).mul(&t).sub(&MultiPoly::one());
            for k in 0..m.saturating_sub(1) {
                let bracket = shift_t_by_q(&seq[m - k - 1], k as i32)
                    .add(&head.mul(&shift_t_by_q(&seq[m - k - 2], k as i32)));
                p = p.add(&seq[k].mul(&bracket));
            }
            p
        };
        seq.push(p);
    }
    seq
}

/// The (maj, des) polynomial via the first-intersection recursion.
pub fn maj_des_rec_first(n: usize) -> MultiPoly {
    maj_des_chain(n, true).pop().expect("chain is nonempty")
}

/// The (maj, des) polynomial via the last-intersection recursion.
pub fn maj_des_rec_second(n: usize) -> MultiPoly {
    maj_des_chain(n, false).pop().expect("chain is nonempty")
}

/// The Dyck-path (alpha, beta, des) polynomial via the first-peak
/// decomposition: `C_{n-1}(abt) + bt sum_k a^{k+1} C_k(abt)
/// C_{n-k-1}((ab)^{k+1} t)`.
pub fn alpha_beta_rec_first(n: usize) -> MultiPoly {
    let bt = MultiPoly::monomial(1, ExpVec([0, 1, 1, 0]));
    let mut seq = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut p = shift_t_by_ab(&seq[m - 1], 1);
        for k in 0..m.saturating_sub(1) {
            let a_k1 = MultiPoly::monomial(1, ExpVec([k as i32 + 1, 0, 0, 0]));
            let term = bt
                .mul(&a_k1)
                .mul(&shift_t_by_ab(&seq[k], 1))
                .mul(&shift_t_by_ab(&seq[m - 1 - k], k as i32 + 1));
            p = p.add(&term);
        }
        seq.push(p);
    }
    seq.pop().expect("chain is nonempty")
}

/// The companion recursion from the last-peak decomposition:
/// `C_{n-1}(t) + a^{n-1} t sum_{k>=1} b^k C_k(t) C_{n-k-1}((ab)^k t)`.
pub fn alpha_beta_rec_last(n: usize) -> MultiPoly {
    let mut seq = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut p = seq[m - 1].clone();
        let head = MultiPoly::monomial(1, ExpVec([m as i32 - 1, 0, 1, 0]));
        for k in 1..m {
            let b_k = MultiPoly::monomial(1, ExpVec([0, k as i32, 0, 0]));
            let term = head
                .mul(&b_k)
                .mul(&seq[k])
                .mul(&shift_t_by_ab(&seq[m - 1 - k], k as i32));
            p = p.add(&term);
        }
        seq.push(p);
    }
    seq.pop().expect("chain is nonempty")
}

/// Area/column polynomial of parallelogram polyominoes of size `n >= 1`,
/// via the labeling bijection: `P_n(q, t) = I_{n-1}(q, qt)`.  Size 1 is the
/// degenerate polyomino with area 0 and no columns, so `P_1 = 1`.
pub fn area_col_poly(n: usize) -> MultiPoly {
    assert!(n >= 1, "no parallelogram polyominoes of size 0");
    shift_t_by_q(&inv_lrm_rec(n - 1), 1)
}
