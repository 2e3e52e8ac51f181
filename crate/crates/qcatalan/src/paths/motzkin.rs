//! 2-Motzkin paths (level steps colored `L0`/`L1`) and the plain Motzkin
//! paths used for weighted enumeration.

use std::fmt;
use std::str::FromStr;

use crate::wordgen::WordGen;

use super::PathError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MotzkinStep {
    Up,
    Down,
    Level0,
    Level1,
}

impl MotzkinStep {
    fn rise(&self) -> i32 {
        match self {
            MotzkinStep::Up => 1,
            MotzkinStep::Down => -1,
            _ => 0,
        }
    }
}

/// A 2-Motzkin path: every prefix has at least as many `U`s as `D`s, with
/// equality at the end.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoMotzkinPath {
    steps: Vec<MotzkinStep>,
}

impl TwoMotzkinPath {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<TwoMotzkinPath, PathError> {
        let mut h = 0i32;
        for s in &steps {
            h += s.rise();
            if h < 0 {
                return Err(PathError::BelowAxis);
            }
        }
        if h != 0 {
            return Err(PathError::Unbalanced);
        }
        Ok(TwoMotzkinPath { steps })
    }

    pub fn empty() -> TwoMotzkinPath {
        TwoMotzkinPath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, kind: MotzkinStep) -> usize {
        self.steps.iter().filter(|&&s| s == kind).count()
    }

    /// Start heights of every step.
    pub fn start_heights(&self) -> Vec<i32> {
        let mut hs = Vec::with_capacity(self.steps.len());
        let mut h = 0i32;
        for s in &self.steps {
            hs.push(h);
            h += s.rise();
        }
        hs
    }

    /// Geometric area between the path and the x-axis, by trapezoids.
    pub fn area_geometric(&self) -> usize {
        let mut twice = 0i32;
        let mut h = 0i32;
        for s in &self.steps {
            let h2 = h + s.rise();
            twice += h + h2;
            h = h2;
        }
        debug_assert_eq!(twice % 2, 0);
        (twice / 2) as usize
    }

    /// Sum of step start heights.  Coincides with the geometric area on any
    /// path that returns to the axis; both forms are kept because each
    /// backs a different bijection identity.
    pub fn height_sum(&self) -> usize {
        self.start_heights().iter().map(|&h| h as usize).sum()
    }

    /// Number of `L1` steps at height 0.
    pub fn level1_at_ground(&self) -> usize {
        self.start_heights()
            .iter()
            .zip(&self.steps)
            .filter(|&(&h, &s)| h == 0 && s == MotzkinStep::Level1)
            .count()
    }

    /// True if no `L0` step sits on the x-axis (the restricted class).
    pub fn is_restricted(&self) -> bool {
        self.start_heights()
            .iter()
            .zip(&self.steps)
            .all(|(&h, &s)| !(h == 0 && s == MotzkinStep::Level0))
    }
}

impl fmt::Display for TwoMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                MotzkinStep::Up => "U",
                MotzkinStep::Down => "D",
                MotzkinStep::Level0 => "L0",
                MotzkinStep::Level1 => "L1",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for TwoMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoMotzkinPath({self})")
    }
}

impl FromStr for TwoMotzkinPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<TwoMotzkinPath, PathError> {
        let text = s.trim();
        let mut steps = Vec::new();
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            let step = match c {
                'U' => MotzkinStep::Up,
                'D' => MotzkinStep::Down,
                'L' => match chars.next() {
                    Some('0') => MotzkinStep::Level0,
                    Some('1') => MotzkinStep::Level1,
                    _ => return Err(PathError::Parse { text: s.to_string() }),
                },
                _ => return Err(PathError::Parse { text: s.to_string() }),
            };
            steps.push(step);
        }
        TwoMotzkinPath::new(steps)
    }
}

/// All 2-Motzkin paths of length `n`.
pub fn gen_motzkin2(n: usize) -> impl Iterator<Item = TwoMotzkinPath> {
    motzkin2_words(n, false).map(|steps| TwoMotzkinPath { steps })
}

/// All restricted 2-Motzkin paths of length `n` (no `L0` at height 0).
pub fn gen_motzkin2_restricted(n: usize) -> impl Iterator<Item = TwoMotzkinPath> {
    motzkin2_words(n, true).map(|steps| TwoMotzkinPath { steps })
}

fn motzkin2_words(n: usize, restricted: bool) -> impl Iterator<Item = Vec<MotzkinStep>> {
    let alphabet = vec![
        MotzkinStep::Up,
        MotzkinStep::Down,
        MotzkinStep::Level0,
        MotzkinStep::Level1,
    ];
    WordGen::new(
        n,
        alphabet,
        0i32,
        move |&h, s, pos, len| {
            if restricted && h == 0 && s == MotzkinStep::Level0 {
                return None;
            }
            let h2 = h + s.rise();
            let remaining = (len - pos - 1) as i32;
            (h2 >= 0 && h2 <= remaining).then_some(h2)
        },
        |&h| h == 0,
    )
}

/// Uncolored Motzkin steps, for weighted path enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlainMotzkinStep {
    Up,
    Down,
    Level,
}

/// All plain Motzkin paths of length `n`, as step words.
pub fn gen_motzkin_plain(n: usize) -> impl Iterator<Item = Vec<PlainMotzkinStep>> {
    let alphabet = vec![
        PlainMotzkinStep::Up,
        PlainMotzkinStep::Down,
        PlainMotzkinStep::Level,
    ];
    WordGen::new(
        n,
        alphabet,
        0i32,
        |&h, s, pos, len| {
            let h2 = h + match s {
                PlainMotzkinStep::Up => 1,
                PlainMotzkinStep::Down => -1,
                PlainMotzkinStep::Level => 0,
            };
            let remaining = (len - pos - 1) as i32;
            (h2 >= 0 && h2 <= remaining).then_some(h2)
        },
        |&h| h == 0,
    )
}
