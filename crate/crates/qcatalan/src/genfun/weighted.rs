//! Weighted Motzkin path enumeration: the combinatorial side of the
//! continued-fraction correspondence.

use crate::paths::{gen_motzkin_plain, PlainMotzkinStep};
use crate::polyarith::{ExpVec, MultiPoly, PolySeries};

use super::GenFunError;

/// Step weights by start height: an up step at height `h` weighs `up[h]`,
/// a down step from `h` to `h-1` weighs `down[h]`, a level step `level[h]`.
#[derive(Clone, Debug)]
pub struct WeightTable {
    pub up: Vec<MultiPoly>,
    pub down: Vec<MultiPoly>,
    pub level: Vec<MultiPoly>,
}

impl WeightTable {
    /// Uniform weight 1 everywhere: plain Motzkin counting.
    pub fn ones(max_height: usize) -> WeightTable {
        let v = vec![MultiPoly::one(); max_height + 1];
        WeightTable { up: v.clone(), down: v.clone(), level: v }
    }

    /// The weights of the (inv, lrm, fix) model: `u_h = t q^h`,
    /// `d_h = q^h`, `l_0 = t x`, and `l_h = (1 + t) q^h` above the axis.
    pub fn inv_lrm_fix(max_height: usize) -> WeightTable {
        let mut up = Vec::with_capacity(max_height + 1);
        let mut down = Vec::with_capacity(max_height + 1);
        let mut level = Vec::with_capacity(max_height + 1);
        for h in 0..=max_height as i32 {
            up.push(MultiPoly::monomial(1, ExpVec([h, 1, 0, 0])));
            down.push(MultiPoly::monomial(1, ExpVec([h, 0, 0, 0])));
            if h == 0 {
                level.push(MultiPoly::monomial(1, ExpVec([0, 1, 1, 0])));
            } else {
                let qh = MultiPoly::monomial(1, ExpVec([h, 0, 0, 0]));
                level.push(qh.add(&MultiPoly::monomial(1, ExpVec([h, 1, 0, 0]))));
            }
        }
        WeightTable { up, down, level }
    }

    /// Weight of one path, or an error if the table is too short.
    pub fn weigh(&self, steps: &[PlainMotzkinStep]) -> Result<MultiPoly, GenFunError> {
        let mut w = MultiPoly::one();
        let mut h = 0usize;
        for s in steps {
            let table = match s {
                PlainMotzkinStep::Up => &self.up,
                PlainMotzkinStep::Down => &self.down,
                PlainMotzkinStep::Level => &self.level,
            };
            let entry = table.get(h).ok_or(GenFunError::TableTooShort { height: h })?;
            w = w.mul(entry);
            match s {
                PlainMotzkinStep::Up => h += 1,
                PlainMotzkinStep::Down => h -= 1,
                PlainMotzkinStep::Level => {}
            }
        }
        Ok(w)
    }
}

/// Sum of path weights over all Motzkin paths of each length up to `order`,
/// by exhaustive enumeration.
pub fn weighted_motzkin_series(w: &WeightTable, order: usize) -> Result<PolySeries, GenFunError> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut total = MultiPoly::zero();
        for path in gen_motzkin_plain(n) {
            total = total.add(&w.weigh(&path)?);
        }
        coeffs.push(total);
    }
    Ok(PolySeries::from_coeffs(coeffs, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::CfSpec;
    use num_bigint::BigInt;

    #[test]
    fn unit_weights_count_motzkin_paths() {
        let series = weighted_motzkin_series(&WeightTable::ones(8), 6).unwrap();
        let counts: Vec<BigInt> = series.coeffs().iter().map(|c| c.eval_all_ones()).collect();
        let want: Vec<BigInt> = [1, 1, 2, 4, 9, 21, 51].iter().map(|&v| v.into()).collect();
        assert_eq!(counts, want);
    }

    #[test]
    fn figure_path_weight() {
        use PlainMotzkinStep::{Down, Level, Up};
        // the colored figure path with colors dropped: u_0 l_1 l_1 u_1 l_2 d_2 l_1 d_1
        let steps = [Up, Level, Level, Up, Level, Down, Level, Down];
        let w = WeightTable::inv_lrm_fix(4);
        let got = w.weigh(&steps).unwrap();
        let mut want = MultiPoly::one();
        for p in [&w.up[0], &w.level[1], &w.level[1], &w.up[1], &w.level[2], &w.down[2], &w.level[1], &w.down[1]] {
            want = want.mul(p);
        }
        assert_eq!(got, want);
    }

    #[test]
    fn matches_jacobi_fraction() {
        let series = weighted_motzkin_series(&WeightTable::inv_lrm_fix(8), 7).unwrap();
        let jac = CfSpec::inv_lrm_fix(8).eval(7).unwrap();
        assert_eq!(series, jac);
    }

    #[test]
    fn short_table_is_rejected() {
        let err = weighted_motzkin_series(&WeightTable::ones(1), 6);
        assert!(matches!(err, Err(GenFunError::TableTooShort { .. })));
    }
}
