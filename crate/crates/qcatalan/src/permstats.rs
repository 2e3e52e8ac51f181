//! Permutations, their statistics, 321-avoidance, exhaustive generation,
//! and the brute-force polynomial oracles that anchor every identity check.
//!
//! Positions and values are 1-based throughout.  The empty permutation is
//! admitted with every statistic equal to 0; it is the single element behind
//! the `n = 0` seeds of all the recursions.

use std::fmt;
use std::str::FromStr;

use crate::polyarith::{qtx, ExpVec, MonomialSubst, MultiPoly};
use crate::wordgen::WordGen;
use crate::OracleBounds;

/// Errors from permutation construction and the brute-force oracles.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("word is not a permutation of 1..n")]
    NotAPermutation,
    #[error("val/pos vectors have different lengths")]
    LengthMismatch,
    #[error("val and pos must have the same number of ones")]
    OnesCountMismatch,
    #[error("prefix dominance fails at index {index}")]
    PrefixDominance { index: usize },
    #[error("inflation needs one part per pattern entry")]
    InflationArity,
    #[error("cannot parse permutation from {text:?}")]
    Parse { text: String },
    #[error("n = {n} exceeds the oracle bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Permutation, PermError> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &b in &word {
            if b == 0 || b as usize > n || seen[b as usize - 1] {
                return Err(PermError::NotAPermutation);
            }
            seen[b as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { word: (1..=n as u32).collect() }
    }

    pub fn empty() -> Permutation {
        Permutation { word: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Number of pairs `i < j` with `b_i > b_j`.
    pub fn inv(&self) -> usize {
        let mut count = 0;
        for i in 0..self.word.len() {
            for j in i + 1..self.word.len() {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Descent positions: 1-based `i` with `b_i > b_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.word.len())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    /// Major index: the sum of the descent positions.
    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Left-right maxima flags by position.
    fn lrm_flags(&self) -> Vec<bool> {
        let mut max = 0;
        self.word
            .iter()
            .map(|&b| {
                if b > max {
                    max = b;
                    true
                } else {
                    false
                }
            })
            .collect()
    }

    pub fn lrm(&self) -> usize {
        self.lrm_flags().iter().filter(|&&f| f).count()
    }

    /// The left-right maximum values, in order of appearance (increasing).
    pub fn lrm_values(&self) -> Vec<u32> {
        self.lrm_flags()
            .iter()
            .zip(&self.word)
            .filter_map(|(&f, &b)| f.then_some(b))
            .collect()
    }

    pub fn fix(&self) -> usize {
        self.word
            .iter()
            .enumerate()
            .filter(|&(i, &b)| b as usize == i + 1)
            .count()
    }

    /// Number of excedances: positions `i` with `b_i > i`.
    pub fn exc(&self) -> usize {
        self.word
            .iter()
            .enumerate()
            .filter(|&(i, &b)| b as usize > i + 1)
            .count()
    }

    /// Indicator vectors of left-right-maximum values (`val`) and positions
    /// (`pos`).
    pub fn val_pos(&self) -> ValPosVectors {
        let n = self.n();
        let mut val = vec![false; n];
        let mut pos = vec![false; n];
        for (i, f) in self.lrm_flags().into_iter().enumerate() {
            if f {
                pos[i] = true;
                val[self.word[i] as usize - 1] = true;
            }
        }
        ValPosVectors { val, pos }
    }

    /// 321-avoidance via the structure of left-right maxima: the
    /// non-maxima must form an increasing subsequence.
    pub fn avoids_321(&self) -> bool {
        let flags = self.lrm_flags();
        let mut last = 0;
        for (i, &b) in self.word.iter().enumerate() {
            if !flags[i] {
                if b < last {
                    return false;
                }
                last = b;
            }
        }
        true
    }

    /// Direct cubic scan for a decreasing subsequence of length 3.  Kept as
    /// an independent oracle for [`Permutation::avoids_321`].
    pub fn contains_321_direct(&self) -> bool {
        let w = &self.word;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                for k in j + 1..w.len() {
                    if w[i] > w[j] && w[j] > w[k] {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Rotate the permutation diagram by 180 degrees: position `i` of the
    /// image holds `n+1 - b_{n+1-i}`.
    pub fn rotate180(&self) -> Permutation {
        let n = self.word.len() as u32;
        Permutation {
            word: self.word.iter().rev().map(|&b| n + 1 - b).collect(),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

// Text form: digits without separators up to n = 9, comma-separated beyond.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.len() <= 9 {
            for b in &self.word {
                write!(f, "{b}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|b| b.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Permutation, PermError> {
        let parse_err = || PermError::Parse { text: s.to_string() };
        let word: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().map_err(|_| parse_err()))
                .collect::<Result<_, _>>()?
        } else {
            s.trim()
                .chars()
                .map(|c| c.to_digit(10).ok_or_else(parse_err))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(word)
    }
}

/// The `val`/`pos` indicator pair of a 321-avoiding permutation.  Valid
/// vectors have equally many ones and satisfy prefix dominance: for every
/// `i`, ones in `p_1..p_i` exceed ones in `v_1..v_{i-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValPosVectors {
    pub val: Vec<bool>,
    pub pos: Vec<bool>,
}

impl ValPosVectors {
    pub fn validate(&self) -> Result<(), PermError> {
        if self.val.len() != self.pos.len() {
            return Err(PermError::LengthMismatch);
        }
        let ones = |v: &[bool]| v.iter().filter(|&&b| b).count();
        if ones(&self.val) != ones(&self.pos) {
            return Err(PermError::OnesCountMismatch);
        }
        let mut p_ones = 0usize;
        let mut v_ones = 0usize;
        for i in 0..self.val.len() {
            if self.pos[i] {
                p_ones += 1;
            }
            if p_ones <= v_ones {
                return Err(PermError::PrefixDominance { index: i + 1 });
            }
            if self.val[i] {
                v_ones += 1;
            }
        }
        Ok(())
    }

    /// The unique 321-avoider with these vectors: left-right-maximum values
    /// go to the marked positions in increasing order, the remaining values
    /// fill the remaining positions in increasing order.
    pub fn to_permutation(&self) -> Result<Permutation, PermError> {
        self.validate()?;
        let n = self.val.len();
        let mut word = vec![0u32; n];
        let max_vals = (1..=n as u32).filter(|&v| self.val[v as usize - 1]);
        let max_positions = (0..n).filter(|&i| self.pos[i]);
        for (v, i) in max_vals.zip(max_positions) {
            word[i] = v;
        }
        let rest_vals = (1..=n as u32).filter(|&v| !self.val[v as usize - 1]);
        let rest_positions = (0..n).filter(|&i| !self.pos[i]);
        for (v, i) in rest_vals.zip(rest_positions) {
            word[i] = v;
        }
        Ok(Permutation { word })
    }
}

/// Diagram substitution: replace the `i`th dot of `pattern` by a copy of
/// `parts[i]`.
pub fn inflate(pattern: &Permutation, parts: &[Permutation]) -> Result<Permutation, PermError> {
    if pattern.n() != parts.len() {
        return Err(PermError::InflationArity);
    }
    let mut offsets = vec![0u32; parts.len()];
    for (i, &a) in pattern.word().iter().enumerate() {
        for (j, &b) in pattern.word().iter().enumerate() {
            if b < a {
                offsets[i] += parts[j].n() as u32;
            }
        }
    }
    let mut word = Vec::with_capacity(parts.iter().map(|p| p.n()).sum());
    for (i, part) in parts.iter().enumerate() {
        word.extend(part.word().iter().map(|&b| b + offsets[i]));
    }
    Ok(Permutation { word })
}

/// Stream every element of `Av_n(321)` exactly once, built structurally
/// from valid val/pos pairs.  Counts are Catalan; practical up to n = 16.
pub fn gen_av321(n: usize) -> impl Iterator<Item = Permutation> {
    // Choices are (v_i, p_i) pairs; the running state is the surplus of
    // pos-ones over val-ones, which must stay positive where required and
    // return to zero.
    let alphabet = vec![(false, true), (true, false), (false, false), (true, true)];
    WordGen::new(
        n,
        alphabet,
        0i32,
        |&d, (v, p), pos, len| {
            if d == 0 && !p {
                return None;
            }
            let d2 = d + (p as i32) - (v as i32);
            let remaining = (len - pos - 1) as i32;
            (d2 >= 0 && d2 <= remaining).then_some(d2)
        },
        |&d| d == 0,
    )
    .map(|pairs| {
        let (val, pos): (Vec<bool>, Vec<bool>) = pairs.into_iter().unzip();
        ValPosVectors { val, pos }
            .to_permutation()
            .expect("generator only emits valid val/pos pairs")
    })
}

/// Filter-the-symmetric-group oracle for [`gen_av321`].  Factorial cost, so
/// only usable at small n; avoidance is tested with the direct cubic scan.
pub fn gen_av321_filter(n: usize) -> impl Iterator<Item = Permutation> {
    use itertools::Itertools;
    (1..=n as u32)
        .permutations(n)
        .map(|w| Permutation { word: w })
        .filter(|p| !p.contains_321_direct())
}

/// Joint distribution of (inv, lrm, fix) over `Av_n(321)`, as a polynomial
/// in `q, t, x`.
pub fn brute_inv_lrm_fix(n: usize, bounds: &OracleBounds) -> Result<MultiPoly, PermError> {
    if n > bounds.catalan {
        return Err(PermError::BoundExceeded { n, bound: bounds.catalan });
    }
    let mut poly = MultiPoly::zero();
    let one = 1.into();
    for p in gen_av321(n) {
        let exp = ExpVec([p.inv() as i32, p.lrm() as i32, p.fix() as i32, 0]);
        poly.add_term(exp, &one);
    }
    Ok(poly)
}

/// (inv, lrm) distribution: [`brute_inv_lrm_fix`] evaluated at `x = 1`.
pub fn brute_inv_lrm(n: usize, bounds: &OracleBounds) -> Result<MultiPoly, PermError> {
    let full = brute_inv_lrm_fix(n, bounds)?;
    Ok(full
        .subst(&[None, None, Some(MonomialSubst::one()), None])
        .expect("substituting 1 cannot fail"))
}

/// Joint distribution of (maj, des) over `Av_n(321)`, in `q, t`.
pub fn brute_maj_des(n: usize, bounds: &OracleBounds) -> Result<MultiPoly, PermError> {
    if n > bounds.catalan {
        return Err(PermError::BoundExceeded { n, bound: bounds.catalan });
    }
    let mut poly = MultiPoly::zero();
    let one = 1.into();
    for p in gen_av321(n) {
        let exp = ExpVec([p.maj() as i32, p.des() as i32, 0, 0]);
        poly.add_term(exp, &one);
    }
    Ok(poly)
}

/// Distribution of maj over avoiders with exactly `k` descents: the
/// coefficient of `t^k` in [`brute_maj_des`].
pub fn brute_maj_by_des(n: usize, k: usize, bounds: &OracleBounds) -> Result<MultiPoly, PermError> {
    Ok(brute_maj_des(n, bounds)?.coeff_of(qtx::T, k as i32))
}
