//! The bijections between 321-avoiding permutations and paths, each with
//! its statistic-transfer contract:
//!
//! - [`motzkin_encode`]: length `n-1` colored Motzkin path from the shifted
//!   val/pos pairing; `lrm = #U + #L1 + 1`, `inv = #D + #L0 + area`.
//! - [`motzkin_encode_fixed`]: length `n` restricted path from the aligned
//!   pairing; additionally `fix` = number of `L1` steps at height 0 and
//!   `inv` is the plain height sum.
//! - [`shadow_path`]: the Dyck path bounding the shadows cast from the
//!   northwest of the permutation diagram; `lrm = num_peaks`,
//!   `inv = sum_peaks`.
//!
//! Inverses reconstruct the val/pos vectors and resolve them through the
//! unique-avoider property of valid vector pairs, so each inverse is
//! constructive rather than a cardinality argument.  Non-avoiding inputs are rejected.

use crate::paths::{DyckPath, DyckStep, MotzkinStep, TwoMotzkinPath};
use crate::permstats::{Permutation, ValPosVectors};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("permutation must avoid 321")]
    NotAvoiding,
    #[error("the empty permutation has no length n-1 encoding")]
    EmptyPermutation,
    #[error("path must avoid L0 steps at height 0")]
    NotRestricted,
}

/// Encode an avoider of size `n >= 1` as a 2-Motzkin path of length `n-1`,
/// pairing `val_i` with `pos_{i+1}`.
pub fn motzkin_encode(p: &Permutation) -> Result<TwoMotzkinPath, MapError> {
    if !p.avoids_321() {
        return Err(MapError::NotAvoiding);
    }
    let n = p.n();
    if n == 0 {
        return Err(MapError::EmptyPermutation);
    }
    let ValPosVectors { val, pos } = p.val_pos();
    let steps = (0..n - 1)
        .map(|i| match (val[i], pos[i + 1]) {
            (false, true) => MotzkinStep::Up,
            (true, false) => MotzkinStep::Down,
            (false, false) => MotzkinStep::Level0,
            (true, true) => MotzkinStep::Level1,
        })
        .collect();
    Ok(TwoMotzkinPath::new(steps).expect("val/pos dominance yields a Motzkin path"))
}

/// Decode a 2-Motzkin path of length `n-1` back to the unique avoider of
/// size `n`.
pub fn motzkin_decode(m: &TwoMotzkinPath) -> Permutation {
    let n = m.len() + 1;
    let mut val = vec![false; n];
    let mut pos = vec![false; n];
    val[n - 1] = true;
    pos[0] = true;
    for (i, s) in m.steps().iter().enumerate() {
        let (v, p) = match s {
            MotzkinStep::Up => (false, true),
            MotzkinStep::Down => (true, false),
            MotzkinStep::Level0 => (false, false),
            MotzkinStep::Level1 => (true, true),
        };
        val[i] = v;
        pos[i + 1] = p;
    }
    ValPosVectors { val, pos }
        .to_permutation()
        .expect("a Motzkin path decodes to valid val/pos vectors")
}

/// Encode an avoider as a restricted 2-Motzkin path of length `n`, pairing
/// `val_i` with `pos_i`.  Fixed points surface as `L1` steps on the axis.
pub fn motzkin_encode_fixed(p: &Permutation) -> Result<TwoMotzkinPath, MapError> {
    if !p.avoids_321() {
        return Err(MapError::NotAvoiding);
    }
    let ValPosVectors { val, pos } = p.val_pos();
    let steps = (0..p.n())
        .map(|i| match (val[i], pos[i]) {
            (false, true) => MotzkinStep::Up,
            (true, false) => MotzkinStep::Down,
            (false, false) => MotzkinStep::Level0,
            (true, true) => MotzkinStep::Level1,
        })
        .collect();
    let path = TwoMotzkinPath::new(steps).expect("val/pos dominance yields a Motzkin path");
    debug_assert!(path.is_restricted());
    Ok(path)
}

/// Decode a restricted 2-Motzkin path of length `n` to the unique avoider
/// of size `n`.
pub fn motzkin_decode_fixed(m: &TwoMotzkinPath) -> Result<Permutation, MapError> {
    if !m.is_restricted() {
        return Err(MapError::NotRestricted);
    }
    let n = m.len();
    let mut val = vec![false; n];
    let mut pos = vec![false; n];
    for (i, s) in m.steps().iter().enumerate() {
        let (v, p) = match s {
            MotzkinStep::Up => (false, true),
            MotzkinStep::Down => (true, false),
            MotzkinStep::Level0 => (false, false),
            MotzkinStep::Level1 => (true, true),
        };
        val[i] = v;
        pos[i] = p;
    }
    Ok(ValPosVectors { val, pos }
        .to_permutation()
        .expect("a restricted Motzkin path decodes to valid val/pos vectors"))
}

/// The Dyck path formed by the boundary of the shadows the diagram's dots
/// cast under light from the northwest.  Built from the left-right maxima:
/// a maximum of value `v` at position `c` contributes the peak corner
/// `(c-1, v)`.
pub fn shadow_path(p: &Permutation) -> Result<DyckPath, MapError> {
    if !p.avoids_321() {
        return Err(MapError::NotAvoiding);
    }
    let n = p.n();
    let mut steps = Vec::with_capacity(2 * n);
    let mut prev_v = 0u32;
    let mut prev_c = 1usize;
    let maxima: Vec<(usize, u32)> = p
        .word()
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| {
            let is_max = p.word()[..i].iter().all(|&a| a < b);
            is_max.then_some((i + 1, b))
        })
        .collect();
    for (k, &(c, v)) in maxima.iter().enumerate() {
        if k > 0 {
            steps.extend(std::iter::repeat_n(DyckStep::Down, c - prev_c));
        }
        steps.extend(std::iter::repeat_n(DyckStep::Up, (v - prev_v) as usize));
        prev_v = v;
        prev_c = c;
    }
    if !maxima.is_empty() {
        steps.extend(std::iter::repeat_n(DyckStep::Down, n + 1 - prev_c));
    }
    DyckPath::new(steps).map_err(|_| MapError::NotAvoiding)
}

/// Invert [`shadow_path`]: peaks give the positions and values of the
/// left-right maxima.
pub fn shadow_path_inv(path: &DyckPath) -> Permutation {
    let n = path.semilength();
    let mut val = vec![false; n];
    let mut pos = vec![false; n];
    let mut ups = 0usize;
    let mut downs = 0usize;
    let steps = path.steps();
    for i in 0..steps.len() {
        match steps[i] {
            DyckStep::Up => {
                ups += 1;
                if i + 1 < steps.len() && steps[i + 1] == DyckStep::Down {
                    // peak: value = ups, position = downs + 1
                    val[ups - 1] = true;
                    pos[downs] = true;
                }
            }
            DyckStep::Down => downs += 1,
        }
    }
    ValPosVectors { val, pos }
        .to_permutation()
        .expect("peaks of a Dyck path give valid val/pos vectors")
}

/// Literal rasterization of the shadow construction, kept as an oracle for
/// [`shadow_path`]: mark every shadowed cell of the n-by-n grid, then trace
/// the boundary column by column.
pub fn shadow_path_raster(p: &Permutation) -> Result<DyckPath, MapError> {
    if !p.avoids_321() {
        return Err(MapError::NotAvoiding);
    }
    let n = p.n();
    // shadowed[x][y] marks the unit cell in column x+1, row y+1
    let mut shadowed = vec![vec![false; n]; n];
    for (i, &v) in p.word().iter().enumerate() {
        for col in shadowed.iter_mut().skip(i) {
            for cell in col.iter_mut().take(v as usize) {
                *cell = true;
            }
        }
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut height = 0usize;
    for col in &shadowed {
        let top = col.iter().filter(|&&c| c).count();
        steps.extend(std::iter::repeat_n(DyckStep::Up, top - height));
        steps.push(DyckStep::Down);
        height = top;
    }
    DyckPath::new(steps).map_err(|_| MapError::NotAvoiding)
}

/// Descent data read off the shadow path: each descent of the permutation
/// matches an `NEE` factor (here `UDD`), and the major index is the sum of
/// the x-coordinates reached after the first `E` of each factor.
pub fn nee_maj_des(path: &DyckPath) -> (usize, usize) {
    let steps = path.steps();
    let mut maj = 0usize;
    let mut des = 0usize;
    let mut downs = 0usize;
    for i in 0..steps.len() {
        if steps[i] == DyckStep::Down {
            downs += 1;
        }
        if i + 2 < steps.len()
            && steps[i] == DyckStep::Up
            && steps[i + 1] == DyckStep::Down
            && steps[i + 2] == DyckStep::Down
        {
            des += 1;
            maj += downs + 1;
        }
    }
    (maj, des)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permstats::gen_av321;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn motzkin_encoding_example() {
        let p = perm("361782495");
        let m = motzkin_encode(&p).unwrap();
        assert_eq!(m.to_string(), "UL0L1UL0DL1D");
        assert_eq!(motzkin_decode(&m), p);
        assert_eq!(p.lrm(), m.count(MotzkinStep::Up) + m.count(MotzkinStep::Level1) + 1);
        assert_eq!(
            p.inv(),
            m.count(MotzkinStep::Down) + m.count(MotzkinStep::Level0) + m.area_geometric()
        );
        assert!(motzkin_encode(&perm("1")).unwrap().is_empty());
        assert_eq!(motzkin_encode(&perm("321")), Err(MapError::NotAvoiding));
    }

    #[test]
    fn motzkin_transfer_exhaustive_small() {
        for n in 1..=6usize {
            for p in gen_av321(n) {
                let m = motzkin_encode(&p).unwrap();
                assert_eq!(p.lrm(), m.count(MotzkinStep::Up) + m.count(MotzkinStep::Level1) + 1);
                assert_eq!(
                    p.inv(),
                    m.count(MotzkinStep::Down) + m.count(MotzkinStep::Level0) + m.area_geometric()
                );
                assert_eq!(motzkin_decode(&m), p);
            }
        }
    }

    #[test]
    fn fixed_point_encoding_example() {
        let p = perm("361782495");
        let m = motzkin_encode_fixed(&p).unwrap();
        assert_eq!(m.to_string(), "UUDUUDDL1D");
        assert_eq!(m.level1_at_ground(), p.fix());
        assert_eq!(m.height_sum(), p.inv());
        assert_eq!(
            p.lrm(),
            m.count(MotzkinStep::Up) + m.count(MotzkinStep::Level1)
        );
        assert_eq!(motzkin_decode_fixed(&m).unwrap(), p);

        let id = Permutation::identity(5);
        assert_eq!(motzkin_encode_fixed(&id).unwrap().to_string(), "L1L1L1L1L1");

        let unrestricted: TwoMotzkinPath = "L0".parse().unwrap();
        assert_eq!(motzkin_decode_fixed(&unrestricted), Err(MapError::NotRestricted));
    }

    #[test]
    fn shadow_path_example() {
        let p = perm("341625978");
        let path = shadow_path(&p).unwrap();
        assert_eq!(path.to_string(), "UUUDUDDUUDDDUUUDDD");
        assert_eq!(path.num_peaks(), 4);
        assert_eq!(path.num_peaks(), p.lrm());
        assert_eq!(path.sum_peaks(), p.inv());
        assert_eq!(shadow_path_inv(&path), p);

        // the identity casts a staircase: n peaks of height 1
        let id = Permutation::identity(5);
        let stair = shadow_path(&id).unwrap();
        assert_eq!(stair.to_string(), "UDUDUDUDUD");
        assert_eq!(stair.sum_peaks(), 0);
    }

    #[test]
    fn raster_oracle_agrees() {
        for n in 0..=5usize {
            for p in gen_av321(n) {
                assert_eq!(shadow_path(&p).unwrap(), shadow_path_raster(&p).unwrap());
            }
        }
    }

    #[test]
    fn nee_descent_correspondence() {
        let p = perm("341625978");
        let path = shadow_path(&p).unwrap();
        let (maj, des) = nee_maj_des(&path);
        assert_eq!(maj, p.maj());
        assert_eq!(des, p.des());
        assert_eq!(p.maj(), 13);
    }
}
