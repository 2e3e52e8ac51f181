//! Truncated continued fractions over the polynomial ring: Jacobi,
//! Stieltjes, and Thron shapes, bottom-up evaluation as truncated series,
//! the even/odd contraction of a unit-denominator fraction, and exact
//! convergents for validating the contractions.

use crate::polyarith::{ExpVec, MonomialSubst, MultiPoly, PolySeries};

use super::GenFunError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CfKind {
    /// `1 / (1 - b_0 z - l_1 z^2 / (1 - b_1 z - l_2 z^2 / ...))`
    Jacobi,
    /// `1 / (1 - l_1 z / (1 - l_2 z / ...))`
    Stieltjes,
    /// `1 / (1 - b_0 z - l_1 z / (1 - b_1 z - l_2 z / ...))`
    Thron,
}

/// A truncated continued fraction: `lambdas[k-1]` is the numerator
/// coefficient of level `k >= 1`, and for Jacobi/Thron shapes `bs[k]` is
/// the linear denominator coefficient of level `k >= 0`.
#[derive(Clone, Debug)]
pub struct CfSpec {
    kind: CfKind,
    lambdas: Vec<MultiPoly>,
    bs: Vec<MultiPoly>,
}

impl CfSpec {
    pub fn new(kind: CfKind, lambdas: Vec<MultiPoly>, bs: Vec<MultiPoly>) -> Result<CfSpec, GenFunError> {
        if lambdas.is_empty() {
            return Err(GenFunError::ZeroDepth);
        }
        let expected_bs = match kind {
            CfKind::Stieltjes => 0,
            _ => lambdas.len() + 1,
        };
        if bs.len() != expected_bs {
            return Err(GenFunError::BadSpecShape { expected: kind, expected_bs, got: bs.len() });
        }
        Ok(CfSpec { kind, lambdas, bs })
    }

    pub fn kind(&self) -> CfKind {
        self.kind
    }

    pub fn depth(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[MultiPoly] {
        &self.lambdas
    }

    pub fn bs(&self) -> &[MultiPoly] {
        &self.bs
    }

    /// Apply a slot substitution to every coefficient (e.g. `q -> -1`).
    pub fn subst_coeffs(&self, rules: &[Option<MonomialSubst>; 4]) -> Result<CfSpec, GenFunError> {
        let map = |ps: &[MultiPoly]| -> Result<Vec<MultiPoly>, GenFunError> {
            ps.iter().map(|p| Ok(p.subst(rules)?)).collect()
        };
        Ok(CfSpec {
            kind: self.kind,
            lambdas: map(&self.lambdas)?,
            bs: map(&self.bs)?,
        })
    }

    /// All-ones Stieltjes fraction: the Catalan generating function.
    pub fn catalan(depth: usize) -> CfSpec {
        CfSpec::new(CfKind::Stieltjes, vec![MultiPoly::one(); depth], vec![])
            .expect("a positive depth is supplied")
    }

    /// Stieltjes fraction for the (inv, lrm) series: numerators alternate
    /// `t q^{j-1}` and `q^j`.
    pub fn inv_lrm(depth: usize) -> CfSpec {
        let lambdas = (1..=depth)
            .map(|k| {
                let j = (k as i32 + 1) / 2;
                if k % 2 == 1 {
                    MultiPoly::monomial(1, ExpVec([j - 1, 1, 0, 0]))
                } else {
                    MultiPoly::monomial(1, ExpVec([j, 0, 0, 0]))
                }
            })
            .collect();
        CfSpec::new(CfKind::Stieltjes, lambdas, vec![]).expect("a positive depth is supplied")
    }

    /// Jacobi fraction for the (inv, lrm, fix) series: `b_0 = tx`,
    /// `l_k = t q^{2k-1}`, `b_k = (1+t) q^k`.
    pub fn inv_lrm_fix(depth: usize) -> CfSpec {
        let lambdas = (1..=depth as i32)
            .map(|k| MultiPoly::monomial(1, ExpVec([2 * k - 1, 1, 0, 0])))
            .collect();
        let mut bs = vec![MultiPoly::monomial(1, ExpVec([0, 1, 1, 0]))];
        for k in 1..=depth as i32 {
            let qk = MultiPoly::monomial(1, ExpVec([k, 0, 0, 0]));
            bs.push(qk.add(&MultiPoly::monomial(1, ExpVec([k, 1, 0, 0]))));
        }
        CfSpec::new(CfKind::Jacobi, lambdas, bs).expect("a positive depth is supplied")
    }

    /// Thron fraction for the (inv, lrm) series: unit numerators and
    /// `b_k = t q^k - 1`.
    pub fn inv_lrm_thron(depth: usize) -> CfSpec {
        let lambdas = vec![MultiPoly::one(); depth];
        let bs = (0..=depth as i32)
            .map(|k| MultiPoly::monomial(1, ExpVec([k, 1, 0, 0])).sub(&MultiPoly::one()))
            .collect();
        CfSpec::new(CfKind::Thron, lambdas, bs).expect("a positive depth is supplied")
    }

    fn z_power(&self) -> usize {
        match self.kind {
            CfKind::Jacobi => 2,
            _ => 1,
        }
    }

    /// Depth needed so that a truncated evaluation determines every series
    /// coefficient up to `order`: each Jacobi level contributes `z^2`, each
    /// Stieltjes or Thron level `z`.
    pub fn needed_depth(kind: CfKind, order: usize) -> usize {
        match kind {
            CfKind::Jacobi => order.div_ceil(2) + 1,
            _ => order + 1,
        }
    }

    /// Evaluate the fraction bottom-up with the tail set to zero, as a
    /// truncated series of the given order.  Going deeper than
    /// [`CfSpec::needed_depth`] never changes coefficients at or below the
    /// order; shallower specs are rejected.
    pub fn eval(&self, order: usize) -> Result<PolySeries, GenFunError> {
        let needed = CfSpec::needed_depth(self.kind, order);
        if self.depth() < needed {
            return Err(GenFunError::InsufficientDepth { depth: self.depth(), order, needed });
        }
        let m = self.z_power();
        let mut tail = PolySeries::zero(order);
        for k in (1..=self.depth()).rev() {
            let mut num_coeffs = vec![MultiPoly::zero(); m];
            num_coeffs.push(self.lambdas[k - 1].clone());
            let num = PolySeries::from_coeffs(num_coeffs, order);
            let den = self.denominator(k, order).sub(&tail)?;
            tail = num.div(&den)?;
        }
        let den = self.denominator(0, order).sub(&tail)?;
        Ok(PolySeries::one(order).div(&den)?)
    }

    /// `1 - b_k z` (or plain 1 for Stieltjes) as a series.
    fn denominator(&self, k: usize, order: usize) -> PolySeries {
        match self.kind {
            CfKind::Stieltjes => PolySeries::one(order),
            _ => PolySeries::from_coeffs(vec![MultiPoly::one(), self.bs[k].neg()], order),
        }
    }
}

/// Even part of a unit-denominator Stieltjes fraction: the Jacobi fraction
/// whose convergents match the even convergents of the input.
pub fn cf_even_part(s: &CfSpec) -> Result<CfSpec, GenFunError> {
    let lam = require_stieltjes(s)?;
    let d = lam.len();
    if d < 3 {
        return Err(GenFunError::ContractionTooShallow { needed: 3 });
    }
    // levels: l'_k = l_{2k-1} l_{2k}, b'_0 = l_1, b'_k = l_{2k} + l_{2k+1}
    let depth = (d - 1) / 2;
    let lambdas = (1..=depth)
        .map(|k| lam[2 * k - 2].mul(&lam[2 * k - 1]))
        .collect();
    let mut bs = vec![lam[0].clone()];
    for k in 1..=depth {
        bs.push(lam[2 * k - 1].add(&lam[2 * k]));
    }
    CfSpec::new(CfKind::Jacobi, lambdas, bs)
}

/// Odd part of a unit-denominator Stieltjes fraction, in the affine form
/// `constant + scale * z * J(tail)`.
#[derive(Clone, Debug)]
pub struct OddPartCf {
    pub constant: MultiPoly,
    pub scale: MultiPoly,
    pub tail: CfSpec,
}

impl OddPartCf {
    pub fn eval(&self, order: usize) -> Result<PolySeries, GenFunError> {
        let inner = self.tail.eval(order)?;
        let shifted = inner.scale(&self.scale).mul_z();
        Ok(shifted.add(&PolySeries::from_coeffs(vec![self.constant.clone()], order))?)
    }
}

/// Odd part of a unit-denominator Stieltjes fraction: convergent `n` of the
/// result matches convergent `2n + 1` of the input.
pub fn cf_odd_part(s: &CfSpec) -> Result<OddPartCf, GenFunError> {
    let lam = require_stieltjes(s)?;
    let d = lam.len();
    if d < 4 {
        return Err(GenFunError::ContractionTooShallow { needed: 4 });
    }
    // J': b'_0 = l_1 + l_2, l'_k = l_{2k} l_{2k+1}, b'_k = l_{2k+1} + l_{2k+2}
    let depth = (d - 2) / 2;
    let lambdas = (1..=depth)
        .map(|k| lam[2 * k - 1].mul(&lam[2 * k]))
        .collect();
    let mut bs = vec![lam[0].add(&lam[1])];
    for k in 1..=depth {
        bs.push(lam[2 * k].add(&lam[2 * k + 1]));
    }
    Ok(OddPartCf {
        constant: MultiPoly::one(),
        scale: lam[0].clone(),
        tail: CfSpec::new(CfKind::Jacobi, lambdas, bs)?,
    })
}

fn require_stieltjes(s: &CfSpec) -> Result<&[MultiPoly], GenFunError> {
    if s.kind != CfKind::Stieltjes {
        return Err(GenFunError::BadSpecShape {
            expected: CfKind::Stieltjes,
            expected_bs: 0,
            got: s.bs.len(),
        });
    }
    Ok(&s.lambdas)
}

/// The first `levels` partial numerators and denominators of the fraction
/// in plus-sign form, as exact polynomials in `z` of the given order:
/// level 1 is `(1, 1 - b_0 z)` and level `k >= 2` is
/// `(-l_{k-1} z^m, 1 - b_{k-1} z)`.
pub fn cf_terms(s: &CfSpec, levels: usize, order: usize) -> Vec<(PolySeries, PolySeries)> {
    assert!(levels <= s.depth() + 1, "not enough levels in the spec");
    let m = s.z_power();
    let mut terms = Vec::with_capacity(levels);
    for k in 0..levels {
        let num = if k == 0 {
            PolySeries::one(order)
        } else {
            let mut coeffs = vec![MultiPoly::zero(); m];
            coeffs.push(s.lambdas[k - 1].neg());
            PolySeries::from_coeffs(coeffs, order)
        };
        terms.push((num, s.denominator(k, order)));
    }
    terms
}

/// Exact convergent of a generic fraction `a_1/(b_1 + a_2/(b_2 + ...))`
/// given as a term list: returns the numerator/denominator polynomial pair.
pub fn convergent(terms: &[(PolySeries, PolySeries)], order: usize) -> (PolySeries, PolySeries) {
    let mut a_prev = PolySeries::one(order); // A_{-1}
    let mut a_cur = PolySeries::zero(order); // A_0
    let mut b_prev = PolySeries::zero(order); // B_{-1}
    let mut b_cur = PolySeries::one(order); // B_0
    for (a_k, b_k) in terms {
        let a_next = b_k.mul(&a_cur).and_then(|x| x.add(&a_k.mul(&a_prev)?)).unwrap();
        let b_next = b_k.mul(&b_cur).and_then(|x| x.add(&a_k.mul(&b_prev)?)).unwrap();
        a_prev = a_cur;
        a_cur = a_next;
        b_prev = b_cur;
        b_cur = b_next;
    }
    (a_cur, b_cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::VarContext;

    #[test]
    fn catalan_series() {
        let f = CfSpec::catalan(7).eval(6).unwrap();
        let values: Vec<String> = f.coeffs().iter().map(|c| c.render(VarContext::Qtx)).collect();
        assert_eq!(values, vec!["1", "1", "2", "5", "14", "42", "132"]);
    }

    #[test]
    fn insufficient_depth_is_rejected() {
        assert!(matches!(
            CfSpec::catalan(5).eval(6),
            Err(GenFunError::InsufficientDepth { .. })
        ));
        // Jacobi levels carry z^2, so depth 5 determines order 8
        assert!(CfSpec::inv_lrm_fix(5).eval(8).is_ok());
        assert!(CfSpec::inv_lrm_fix(4).eval(8).is_err());
    }

    #[test]
    fn depth_stability() {
        let shallow = CfSpec::inv_lrm(9).eval(8).unwrap();
        let deep = CfSpec::inv_lrm(30).eval(8).unwrap();
        assert_eq!(shallow, deep);
    }

    #[test]
    fn stieltjes_and_thron_agree() {
        let s = CfSpec::inv_lrm(11).eval(10).unwrap();
        let t = CfSpec::inv_lrm_thron(11).eval(10).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn even_part_reproduces_jacobi() {
        // even part of the Stieltjes fraction, with x absent, equals the
        // Jacobi fraction at x = 1
        let even = cf_even_part(&CfSpec::inv_lrm(25)).unwrap();
        let jac = CfSpec::inv_lrm_fix(25)
            .subst_coeffs(&[None, None, Some(MonomialSubst::one()), None])
            .unwrap();
        let order = 10;
        assert_eq!(even.eval(order).unwrap(), jac.eval(order).unwrap());
    }

    #[test]
    fn odd_part_of_signed_fraction_is_shifted_catalan() {
        // substitute q = -1, t = 1 into the Stieltjes numerators and take
        // the odd part: 1 + z C(z^2)
        let signed = CfSpec::inv_lrm(30)
            .subst_coeffs(&[
                Some(MonomialSubst::minus_one()),
                Some(MonomialSubst::one()),
                None,
                None,
            ])
            .unwrap();
        let odd = cf_odd_part(&signed).unwrap();
        let f = odd.eval(9).unwrap();
        let catalan_sq = CfSpec::catalan(12).eval(9).unwrap();
        // expect f(z) = 1 + z * C(z^2)
        for k in 0..=9usize {
            let want = if k == 0 {
                MultiPoly::one()
            } else if k % 2 == 1 {
                catalan_sq.coeff((k - 1) / 2).clone()
            } else {
                MultiPoly::zero()
            };
            // C(z^2) contributes only at even inner indices
            let got = f.coeff(k);
            if k % 2 == 0 && k > 0 {
                assert!(got.is_zero(), "even coefficient {k} should vanish");
            } else {
                assert_eq!(got, &want, "coefficient {k}");
            }
        }
    }

    #[test]
    fn convergents_match_contractions() {
        // all-ones numerators: compare c_{2n} with the even part's c_n and
        // c_{2n+1} with the odd part's affine convergent, cross-multiplied
        let s = CfSpec::catalan(12);
        let order = 30;
        let even = cf_even_part(&s).unwrap();
        let odd = cf_odd_part(&s).unwrap();
        for n in 1..=4usize {
            let (a, b) = convergent(&cf_terms(&s, 2 * n, order), order);
            let (ae, be) = convergent(&cf_terms(&even, n, order), order);
            assert_eq!(a.mul(&be).unwrap(), ae.mul(&b).unwrap(), "even contraction at {n}");

            let (a, b) = convergent(&cf_terms(&s, 2 * n + 1, order), order);
            // inner fraction of the odd part: first numerator -l_1 z
            let mut inner = cf_terms(&odd.tail, n, order);
            inner[0].0 = PolySeries::from_coeffs(
                vec![MultiPoly::zero(), odd.scale.neg()],
                order,
            );
            let (ai, bi) = convergent(&inner, order);
            // c_n(F_o) = 1 - ai/bi, so compare a/b with (bi - ai)/bi
            let lhs = a.mul(&bi).unwrap();
            let rhs = bi.sub(&ai).unwrap().mul(&b).unwrap();
            assert_eq!(lhs, rhs, "odd contraction at {n}");
        }
    }
}
