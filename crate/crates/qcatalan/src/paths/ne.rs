//! North/east lattice paths, the raw material of polyominoes.  Unlike Dyck
//! paths they carry no global constraint; geometry is checked by the
//! polyomino constructors.

use std::fmt;
use std::str::FromStr;

use super::{bit_descent_set, PathError};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NeStep {
    North,
    East,
}

/// A path of unit north and east steps starting at the origin.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NePath {
    steps: Vec<NeStep>,
}

impl NePath {
    pub fn new(steps: Vec<NeStep>) -> NePath {
        NePath { steps }
    }

    pub fn empty() -> NePath {
        NePath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[NeStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn east_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == NeStep::East).count()
    }

    pub fn north_count(&self) -> usize {
        self.len() - self.east_count()
    }

    pub fn endpoint(&self) -> (i32, i32) {
        (self.east_count() as i32, self.north_count() as i32)
    }

    /// For each column `x = 0, 1, ...`, the height at which the path's east
    /// step crosses it.
    pub fn column_heights(&self) -> Vec<i32> {
        let mut heights = Vec::with_capacity(self.east_count());
        let mut y = 0i32;
        for s in &self.steps {
            match s {
                NeStep::North => y += 1,
                NeStep::East => heights.push(y),
            }
        }
        heights
    }

    /// The north steps as `(x, lower y)` segments.
    pub fn north_segments(&self) -> Vec<(i32, i32)> {
        let mut segs = Vec::with_capacity(self.north_count());
        let (mut x, mut y) = (0i32, 0i32);
        for s in &self.steps {
            match s {
                NeStep::North => {
                    segs.push((x, y));
                    y += 1;
                }
                NeStep::East => x += 1,
            }
        }
        segs
    }

    /// Every lattice point visited, start and end included.
    pub fn vertices(&self) -> Vec<(i32, i32)> {
        let mut pts = Vec::with_capacity(self.len() + 1);
        let (mut x, mut y) = (0i32, 0i32);
        pts.push((x, y));
        for s in &self.steps {
            match s {
                NeStep::North => y += 1,
                NeStep::East => x += 1,
            }
            pts.push((x, y));
        }
        pts
    }

    /// Bit view with `N` as 0 and `E` as 1; a bit descent is an `EN` factor.
    pub fn bits(&self) -> Vec<bool> {
        self.steps.iter().map(|s| *s == NeStep::East).collect()
    }

    pub fn descent_set(&self) -> Vec<usize> {
        bit_descent_set(&self.bits())
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }
}

impl fmt::Display for NePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                NeStep::North => "N",
                NeStep::East => "E",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for NePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NePath({self})")
    }
}

impl FromStr for NePath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<NePath, PathError> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'N' => Ok(NeStep::North),
                'E' => Ok(NeStep::East),
                _ => Err(PathError::Parse { text: s.to_string() }),
            })
            .collect::<Result<_, _>>()?;
        Ok(NePath { steps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometry_of_figure_paths() {
        let u: NePath = "NNNEENENNE".parse().unwrap();
        assert_eq!(u.endpoint(), (4, 6));
        assert_eq!(u.column_heights(), vec![3, 3, 4, 6]);
        let v: NePath = "EENENNENNN".parse().unwrap();
        assert_eq!(v.column_heights(), vec![0, 0, 1, 3]);
        assert_eq!(v.north_segments()[0], (2, 0));
    }

    #[test]
    fn descents_count_en_factors() {
        // E at position 1 followed by N: one descent at 1
        let q: NePath = "EN".parse().unwrap();
        assert_eq!(q.descent_set(), vec![1]);
        assert_eq!(q.maj(), 1);
        let q: NePath = "NNEE".parse().unwrap();
        assert_eq!(q.des(), 0);
    }
}
