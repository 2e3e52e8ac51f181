//! Parallelogram and shortened polyominoes: pairs of north/east paths with
//! containment constraints, their area/column statistics, the shortening
//! map between the two families, and the labeling bijection onto
//! 321-avoiding permutations.
//!
//! Geometry is checked on running coordinates: containment by column
//! heights, sharing by step segments.  Area is the column-height integral
//! of the upper path minus the lower path.

use crate::paths::{NePath, NeStep};
use crate::permstats::{Permutation, ValPosVectors};
use crate::polyarith::{ExpVec, MultiPoly};
use crate::OracleBounds;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyominoError {
    #[error("paths must have equal, positive length")]
    BadLength,
    #[error("paths must share start and end vertices")]
    EndpointMismatch,
    #[error("upper path fails to stay above the lower path")]
    NotAbove,
    #[error("paths share a north step")]
    SharedNorthStep,
    #[error("paths meet away from the endpoints")]
    InteriorContact,
    #[error("the only size-1 parallelogram polyomino is the doubled north step")]
    DegenerateSize,
    #[error("boundary step constraints violated (upper starts N/ends E, lower starts E/ends N)")]
    BoundarySteps,
    #[error("permutation must avoid 321")]
    NotAvoiding,
    #[error("n = {n} exceeds the oracle bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

/// A parallelogram polyomino: upper path strictly above the lower except at
/// the shared start and end.  Size 1 is admitted as the single degenerate
/// pair of doubled north steps, the image of the empty shortened polyomino
/// under lengthening.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParallelogramPolyomino {
    upper: NePath,
    lower: NePath,
}

/// A shortened polyomino: upper path weakly above the lower, east steps may
/// be shared but north steps may not.  Size 0 is the empty pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShortenedPolyomino {
    upper: NePath,
    lower: NePath,
}

fn check_endpoints(upper: &NePath, lower: &NePath) -> Result<(), PolyominoError> {
    if upper.len() != lower.len() {
        return Err(PolyominoError::BadLength);
    }
    if upper.endpoint() != lower.endpoint() {
        return Err(PolyominoError::EndpointMismatch);
    }
    Ok(())
}

fn weakly_above(upper: &NePath, lower: &NePath) -> bool {
    upper
        .column_heights()
        .iter()
        .zip(lower.column_heights())
        .all(|(&u, l)| u >= l)
}

impl ParallelogramPolyomino {
    pub fn new(upper: NePath, lower: NePath) -> Result<ParallelogramPolyomino, PolyominoError> {
        check_endpoints(&upper, &lower)?;
        let n = upper.len();
        if n == 0 {
            return Err(PolyominoError::BadLength);
        }
        if n == 1 {
            if upper.steps() == [NeStep::North] && lower.steps() == [NeStep::North] {
                return Ok(ParallelogramPolyomino { upper, lower });
            }
            return Err(PolyominoError::DegenerateSize);
        }
        if upper.steps()[0] != NeStep::North
            || upper.steps()[n - 1] != NeStep::East
            || lower.steps()[0] != NeStep::East
            || lower.steps()[n - 1] != NeStep::North
        {
            return Err(PolyominoError::BoundarySteps);
        }
        if !weakly_above(&upper, &lower) {
            return Err(PolyominoError::NotAbove);
        }
        let shared: Vec<(i32, i32)> = {
            let lower_pts: std::collections::HashSet<(i32, i32)> =
                lower.vertices().into_iter().collect();
            upper
                .vertices()
                .into_iter()
                .filter(|p| lower_pts.contains(p))
                .collect()
        };
        if shared.len() != 2 {
            return Err(PolyominoError::InteriorContact);
        }
        Ok(ParallelogramPolyomino { upper, lower })
    }

    pub fn upper(&self) -> &NePath {
        &self.upper
    }

    pub fn lower(&self) -> &NePath {
        &self.lower
    }

    pub fn size(&self) -> usize {
        self.upper.len()
    }

    /// Enclosed unit cells.
    pub fn area(&self) -> usize {
        area_between(&self.upper, &self.lower)
    }

    /// Columns spanned.
    pub fn col(&self) -> usize {
        self.upper.east_count()
    }

    /// Contract the first step of the upper path and the last step of the
    /// lower path (both norths), landing in the shortened family one size
    /// down.  Area drops by one per column; columns are preserved.
    pub fn shorten(&self) -> ShortenedPolyomino {
        let upper = NePath::new(self.upper.steps()[1..].to_vec());
        let mut lower_steps = self.lower.steps().to_vec();
        lower_steps.pop();
        let lower = NePath::new(lower_steps);
        ShortenedPolyomino::new(upper, lower)
            .expect("shortening a parallelogram polyomino is always valid")
    }
}

impl ShortenedPolyomino {
    pub fn new(upper: NePath, lower: NePath) -> Result<ShortenedPolyomino, PolyominoError> {
        check_endpoints(&upper, &lower)?;
        if !weakly_above(&upper, &lower) {
            return Err(PolyominoError::NotAbove);
        }
        let lower_norths: std::collections::HashSet<(i32, i32)> =
            lower.north_segments().into_iter().collect();
        if upper.north_segments().iter().any(|s| lower_norths.contains(s)) {
            return Err(PolyominoError::SharedNorthStep);
        }
        Ok(ShortenedPolyomino { upper, lower })
    }

    pub fn empty() -> ShortenedPolyomino {
        ShortenedPolyomino { upper: NePath::empty(), lower: NePath::empty() }
    }

    pub fn upper(&self) -> &NePath {
        &self.upper
    }

    pub fn lower(&self) -> &NePath {
        &self.lower
    }

    pub fn size(&self) -> usize {
        self.upper.len()
    }

    pub fn area(&self) -> usize {
        area_between(&self.upper, &self.lower)
    }

    pub fn col(&self) -> usize {
        self.upper.east_count()
    }

    /// Prepend a north step to the upper path and append one to the lower,
    /// recovering the parallelogram polyomino one size up.
    pub fn unshorten(&self) -> ParallelogramPolyomino {
        let mut upper_steps = vec![NeStep::North];
        upper_steps.extend_from_slice(self.upper.steps());
        let mut lower_steps = self.lower.steps().to_vec();
        lower_steps.push(NeStep::North);
        ParallelogramPolyomino::new(NePath::new(upper_steps), NePath::new(lower_steps))
            .expect("lengthening a shortened polyomino is always valid")
    }

    /// Descent data of the lower path in its bit view (`N` = 0, `E` = 1):
    /// each `EN` factor is a descent, and the positions match the descents
    /// of [`ShortenedPolyomino::to_permutation`] exactly.
    pub fn lower_maj_des(&self) -> (usize, usize) {
        (self.lower.maj(), self.lower.des())
    }

    /// Label the upper path's steps `1..n` in order, pair each with its
    /// projection on the lower path (east steps by column, north steps by
    /// horizontal strip), and read the lower path's labels in step order.
    /// The result is a 321-avoiding permutation with `inv` equal to the
    /// area and `lrm` equal to the column count.
    pub fn to_permutation(&self) -> Permutation {
        let mut east_label = Vec::new();
        let mut north_label = Vec::new();
        for (i, s) in self.upper.steps().iter().enumerate() {
            match s {
                NeStep::East => east_label.push(i as u32 + 1),
                NeStep::North => north_label.push(i as u32 + 1),
            }
        }
        let mut word = Vec::with_capacity(self.size());
        let mut col = 0usize;
        let mut strip = 0usize;
        for s in self.lower.steps() {
            match s {
                NeStep::East => {
                    word.push(east_label[col]);
                    col += 1;
                }
                NeStep::North => {
                    word.push(north_label[strip]);
                    strip += 1;
                }
            }
        }
        Permutation::new(word).expect("projection labels each value exactly once")
    }

    /// Inverse labeling: the upper path marks east steps at left-right
    /// maximum values, the lower path at left-right maximum positions.
    pub fn from_permutation(p: &Permutation) -> Result<ShortenedPolyomino, PolyominoError> {
        if !p.avoids_321() {
            return Err(PolyominoError::NotAvoiding);
        }
        let ValPosVectors { val, pos } = p.val_pos();
        let to_path = |flags: &[bool]| {
            NePath::new(
                flags
                    .iter()
                    .map(|&e| if e { NeStep::East } else { NeStep::North })
                    .collect(),
            )
        };
        ShortenedPolyomino::new(to_path(&val), to_path(&pos))
    }
}

fn area_between(upper: &NePath, lower: &NePath) -> usize {
    upper
        .column_heights()
        .iter()
        .zip(lower.column_heights())
        .map(|(&u, l)| (u - l) as usize)
        .sum()
}

fn all_ne_paths_by_east(n: usize) -> Vec<Vec<NePath>> {
    let mut buckets: Vec<Vec<NePath>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << n) {
        let steps: Vec<NeStep> = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    NeStep::East
                } else {
                    NeStep::North
                }
            })
            .collect();
        let path = NePath::new(steps);
        buckets[path.east_count()].push(path);
    }
    buckets
}

/// Every parallelogram polyomino of size `n`, duplicate-free.
pub fn gen_pp(n: usize, bounds: &OracleBounds) -> Result<Vec<ParallelogramPolyomino>, PolyominoError> {
    if n > bounds.catalan {
        return Err(PolyominoError::BoundExceeded { n, bound: bounds.catalan });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let buckets = all_ne_paths_by_east(n);
    let mut out = Vec::new();
    for bucket in &buckets {
        for lower in bucket {
            for upper in bucket {
                if let Ok(pp) = ParallelogramPolyomino::new(upper.clone(), lower.clone()) {
                    out.push(pp);
                }
            }
        }
    }
    Ok(out)
}

/// Every shortened polyomino of size `n`, duplicate-free.
pub fn gen_sp(n: usize, bounds: &OracleBounds) -> Result<Vec<ShortenedPolyomino>, PolyominoError> {
    if n > bounds.catalan {
        return Err(PolyominoError::BoundExceeded { n, bound: bounds.catalan });
    }
    if n == 0 {
        return Ok(vec![ShortenedPolyomino::empty()]);
    }
    let buckets = all_ne_paths_by_east(n);
    let mut out = Vec::new();
    for bucket in &buckets {
        for lower in bucket {
            for upper in bucket {
                if let Ok(sp) = ShortenedPolyomino::new(upper.clone(), lower.clone()) {
                    out.push(sp);
                }
            }
        }
    }
    Ok(out)
}

/// Area/column distribution over parallelogram polyominoes of size `n`, as
/// a polynomial in `q, t`.
pub fn brute_area_col(n: usize, bounds: &OracleBounds) -> Result<MultiPoly, PolyominoError> {
    let mut poly = MultiPoly::zero();
    let one = 1.into();
    for pp in gen_pp(n, bounds)? {
        poly.add_term(ExpVec([pp.area() as i32, pp.col() as i32, 0, 0]), &one);
    }
    Ok(poly)
}

/// Joint (maj, des) distribution of the lower path over shortened
/// polyominoes of size `n`.
pub fn brute_sp_maj_des(n: usize, bounds: &OracleBounds) -> Result<MultiPoly, PolyominoError> {
    let mut poly = MultiPoly::zero();
    let one = 1.into();
    for sp in gen_sp(n, bounds)? {
        let (maj, des) = sp.lower_maj_des();
        poly.add_term(ExpVec([maj as i32, des as i32, 0, 0]), &one);
    }
    Ok(poly)
}

/// Joint (maj, des) distribution of the lower path over parallelogram
/// polyominoes of size `n`: the restricted sum that bridges the two
/// families.
pub fn brute_pp_maj_des(n: usize, bounds: &OracleBounds) -> Result<MultiPoly, PolyominoError> {
    let mut poly = MultiPoly::zero();
    let one = 1.into();
    for pp in gen_pp(n, bounds)? {
        let lower = pp.lower();
        poly.add_term(ExpVec([lower.maj() as i32, lower.des() as i32, 0, 0]), &one);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(upper: &str, lower: &str) -> ParallelogramPolyomino {
        ParallelogramPolyomino::new(upper.parse().unwrap(), lower.parse().unwrap()).unwrap()
    }

    #[test]
    fn figure_polyomino_statistics() {
        let p = pp("NNNEENENNE", "EENENNENNN");
        assert_eq!(p.area(), 12);
        assert_eq!(p.col(), 4);
        let s = p.shorten();
        assert_eq!(s.area(), 8);
        assert_eq!(s.col(), 4);
        assert_eq!(s.unshorten(), p);
    }

    #[test]
    fn minimal_cases() {
        let p = pp("NE", "EN");
        assert_eq!((p.area(), p.col()), (1, 1));
        let s = p.shorten();
        assert_eq!(s.upper().to_string(), "E");
        assert_eq!(s.lower().to_string(), "E");
        let b = OracleBounds::default();
        assert_eq!(gen_sp(1, &b).unwrap().len(), 1);
        assert_eq!(gen_pp(1, &b).unwrap().len(), 1);
        assert_eq!(gen_pp(2, &b).unwrap().len(), 1);
    }

    #[test]
    fn invalid_pairs_rejected() {
        let err = ParallelogramPolyomino::new("NE".parse().unwrap(), "NE".parse().unwrap());
        assert!(err.is_err());
        // shared north step
        let err = ShortenedPolyomino::new("N".parse().unwrap(), "N".parse().unwrap());
        assert_eq!(err.unwrap_err(), PolyominoError::SharedNorthStep);
        // lower above upper
        let err = ShortenedPolyomino::new("EN".parse().unwrap(), "NE".parse().unwrap());
        assert_eq!(err.unwrap_err(), PolyominoError::NotAbove);
    }

    #[test]
    fn counts_are_catalan() {
        let b = OracleBounds::default();
        assert_eq!(gen_sp(3, &b).unwrap().len(), 5);
        assert_eq!(gen_pp(5, &b).unwrap().len(), 14);
        assert_eq!(gen_sp(0, &b).unwrap().len(), 1);
    }

    #[test]
    fn labeling_bijection_on_figure() {
        let s = pp("NNNEENENNE", "EENENNENNN").shorten();
        let sigma = s.to_permutation();
        assert_eq!(sigma.to_string(), "341625978");
        assert_eq!(s.area(), sigma.inv());
        assert_eq!(s.col(), sigma.lrm());
        assert_eq!(ShortenedPolyomino::from_permutation(&sigma).unwrap(), s);
        // descents of the permutation sit exactly at EN factors of the lower path
        assert_eq!(s.lower().descent_set(), sigma.descent_set());
    }

    #[test]
    fn trivial_bijection_cases() {
        let b = OracleBounds::default();
        let unique = &gen_sp(1, &b).unwrap()[0];
        assert_eq!(unique.to_permutation(), Permutation::identity(1));
        assert_eq!(
            ShortenedPolyomino::empty().to_permutation(),
            Permutation::empty()
        );
        let bad = "321".parse::<Permutation>().unwrap();
        assert_eq!(
            ShortenedPolyomino::from_permutation(&bad),
            Err(PolyominoError::NotAvoiding)
        );
    }

    #[test]
    fn area_col_polynomial_small() {
        let b = OracleBounds::default();
        // P_2 = qt from the single domino
        let p2 = brute_area_col(2, &b).unwrap();
        assert_eq!(p2, MultiPoly::monomial(1, ExpVec([1, 1, 0, 0])));
        // P_1 = 1 under the degenerate convention
        let p1 = brute_area_col(1, &b).unwrap();
        assert!(p1.is_one());
    }
}
