//! Truncated formal power series in `z` with [`MultiPoly`] coefficients.

use super::{MultiPoly, PolyError};

/// A power series truncated at a fixed order `N`: exactly the coefficients
/// of `z^0 .. z^N` are stored, and arithmetic never reads or writes beyond
/// index `N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolySeries {
    coeffs: Vec<MultiPoly>,
}

impl PolySeries {
    /// The zero series of the given truncation order.
    pub fn zero(order: usize) -> PolySeries {
        PolySeries { coeffs: vec![MultiPoly::zero(); order + 1] }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> PolySeries {
        PolySeries::from_coeffs(vec![MultiPoly::one()], order)
    }

    /// Build from low-order coefficients, padding with zeros up to `order`.
    /// The caller asserts the padded coefficients really are zero (true for
    /// polynomials in `z`).
    pub fn from_coeffs(mut coeffs: Vec<MultiPoly>, order: usize) -> PolySeries {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, MultiPoly::zero());
        PolySeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the lowest nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_order(&self, other: &PolySeries) -> Result<(), PolyError> {
        if self.order() != other.order() {
            return Err(PolyError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PolySeries) -> Result<PolySeries, PolyError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(PolySeries { coeffs })
    }

    pub fn sub(&self, other: &PolySeries) -> Result<PolySeries, PolyError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(PolySeries { coeffs })
    }

    /// Cauchy product cut at the common truncation order.
    pub fn mul(&self, other: &PolySeries) -> Result<PolySeries, PolyError> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![MultiPoly::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        Ok(PolySeries { coeffs })
    }

    /// Multiply every coefficient by a fixed polynomial.
    pub fn scale(&self, c: &MultiPoly) -> PolySeries {
        PolySeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiply by `z`, keeping the truncation order (the old top
    /// coefficient falls off the end).
    pub fn mul_z(&self) -> PolySeries {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(MultiPoly::zero());
        coeffs.extend(self.coeffs[..n].iter().cloned());
        PolySeries { coeffs }
    }

    /// Restrict to a smaller truncation order.
    pub fn truncated(&self, order: usize) -> PolySeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        PolySeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Termwise derivative with respect to `z`; the result has order `N-1`.
    pub fn derivative(&self) -> Result<PolySeries, PolyError> {
        if self.order() == 0 {
            return Err(PolyError::DerivativeOrderZero);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(i as i64 + 1))
            .collect();
        Ok(PolySeries { coeffs })
    }

    /// Series division.  The divisor's constant term must be the unit
    /// polynomial, which is all the continued-fraction machinery needs.
    pub fn div(&self, den: &PolySeries) -> Result<PolySeries, PolyError> {
        self.check_order(den)?;
        if !den.coeffs[0].is_one() {
            return Err(PolyError::NonUnitDivisor);
        }
        let n = self.order();
        let mut out = vec![MultiPoly::zero(); n + 1];
        for k in 0..=n {
            let mut c = self.coeffs[k].clone();
            for j in 1..=k {
                c = c.sub(&den.coeffs[j].mul(&out[k - j]));
            }
            out[k] = c;
        }
        Ok(PolySeries { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{qtx, ExpVec};

    fn z_plus_one(order: usize) -> PolySeries {
        PolySeries::from_coeffs(vec![MultiPoly::one(), MultiPoly::one()], order)
    }

    #[test]
    fn mul_truncates() {
        // (1+z)(1-z) at order 1 is 1: the z^2 term is cut
        let f = z_plus_one(1);
        let g = PolySeries::from_coeffs(vec![MultiPoly::one(), MultiPoly::constant(-1)], 1);
        let prod = f.mul(&g).unwrap();
        assert_eq!(prod, PolySeries::one(1));
    }

    #[test]
    fn mul_identity() {
        let f = z_plus_one(4);
        assert_eq!(f.mul(&PolySeries::one(4)).unwrap(), f);
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let f = z_plus_one(3);
        let g = z_plus_one(4);
        assert!(matches!(f.add(&g), Err(PolyError::OrderMismatch { .. })));
    }

    #[test]
    fn derivative_basics() {
        // d/dz (1 + z + z^2) = 1 + 2z
        let f = PolySeries::from_coeffs(
            vec![MultiPoly::one(), MultiPoly::one(), MultiPoly::one()],
            2,
        );
        let d = f.derivative().unwrap();
        assert_eq!(d.order(), 1);
        assert_eq!(d.coeff(0), &MultiPoly::one());
        assert_eq!(d.coeff(1), &MultiPoly::constant(2));

        let c = PolySeries::from_coeffs(vec![MultiPoly::constant(5)], 3);
        assert!(c.derivative().unwrap().is_zero());

        assert!(matches!(
            PolySeries::one(0).derivative(),
            Err(PolyError::DerivativeOrderZero)
        ));
    }

    #[test]
    fn division_inverts_multiplication() {
        let t = MultiPoly::var(qtx::T);
        let den = PolySeries::from_coeffs(
            vec![MultiPoly::one(), t.neg(), MultiPoly::var(qtx::Q)],
            6,
        );
        let num = PolySeries::from_coeffs(
            vec![MultiPoly::one(), MultiPoly::monomial(3, ExpVec([1, 1, 0, 0]))],
            6,
        );
        let quot = num.div(&den).unwrap();
        assert_eq!(quot.mul(&den).unwrap(), num);

        let bad = PolySeries::from_coeffs(vec![MultiPoly::constant(2)], 6);
        assert!(matches!(num.div(&bad), Err(PolyError::NonUnitDivisor)));
    }
}
