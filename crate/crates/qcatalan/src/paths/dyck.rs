//! Dyck paths and their statistics: peaks, valleys, descents of the bit
//! view, prefix-counted alpha/beta, sum-of-peaks and sum-of-tunnels, plus
//! the first-peak and last-peak decompositions and the bijection carrying
//! one statistic pair to the other.

use std::fmt;
use std::str::FromStr;

use crate::polyarith::{ExpVec, MultiPoly};
use crate::wordgen::WordGen;
use crate::OracleBounds;

use super::{bit_descent_set, PathError};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DyckStep {
    Up,
    Down,
}

/// A Dyck path: equally many `U` and `D` steps, every prefix having at
/// least as many `U`s.  The bit view maps `U` to 0 and `D` to 1, so a bit
/// descent is exactly a `DU` valley.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<DyckStep>,
}

impl DyckPath {
    pub fn new(steps: Vec<DyckStep>) -> Result<DyckPath, PathError> {
        let mut h = 0i32;
        for s in &steps {
            h += match s {
                DyckStep::Up => 1,
                DyckStep::Down => -1,
            };
            if h < 0 {
                return Err(PathError::BelowAxis);
            }
        }
        if h != 0 {
            return Err(PathError::Unbalanced);
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> DyckPath {
        DyckPath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Lattice-point heights `h_0 = 0, h_1, ..., h_{2n}`.
    pub fn heights(&self) -> Vec<i32> {
        let mut hs = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0i32;
        hs.push(h);
        for s in &self.steps {
            h += match s {
                DyckStep::Up => 1,
                DyckStep::Down => -1,
            };
            hs.push(h);
        }
        hs
    }

    /// Bit view: `U` is 0, `D` is 1.
    pub fn bits(&self) -> Vec<bool> {
        self.steps.iter().map(|s| *s == DyckStep::Down).collect()
    }

    /// Peaks as `(i, height)` where `s_i s_{i+1} = UD` (1-based) and height
    /// is the y-coordinate of the top.
    pub fn peaks(&self) -> Vec<(usize, i32)> {
        let hs = self.heights();
        (0..self.steps.len().saturating_sub(1))
            .filter(|&i| self.steps[i] == DyckStep::Up && self.steps[i + 1] == DyckStep::Down)
            .map(|i| (i + 1, hs[i + 1]))
            .collect()
    }

    /// Valleys as `(j, height)` where `s_j s_{j+1} = DU` (1-based) and
    /// height is the y-coordinate of the low point.
    pub fn valleys(&self) -> Vec<(usize, i32)> {
        let hs = self.heights();
        (0..self.steps.len().saturating_sub(1))
            .filter(|&i| self.steps[i] == DyckStep::Down && self.steps[i + 1] == DyckStep::Up)
            .map(|i| (i + 1, hs[i + 1]))
            .collect()
    }

    pub fn num_peaks(&self) -> usize {
        self.peaks().len()
    }

    /// Descent set of the bit view (1-based); each descent is a valley.
    pub fn descent_set(&self) -> Vec<usize> {
        bit_descent_set(&self.bits())
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Sum over bit descents of the number of `U` steps in the prefix.
    pub fn alpha(&self) -> usize {
        self.prefix_sum_over_descents(DyckStep::Up)
    }

    /// Sum over bit descents of the number of `D` steps in the prefix.
    pub fn beta(&self) -> usize {
        self.prefix_sum_over_descents(DyckStep::Down)
    }

    fn prefix_sum_over_descents(&self, kind: DyckStep) -> usize {
        let mut total = 0;
        for i in self.descent_set() {
            total += self.steps[..i].iter().filter(|&&s| s == kind).count();
        }
        total
    }

    /// Sum of `height - 1` over all peaks.
    pub fn sum_peaks(&self) -> usize {
        self.peaks().iter().map(|&(_, h)| (h - 1) as usize).sum()
    }

    /// Sum of tunnel semilengths.  The tunnel of a valley at height `h` and
    /// position `j` runs from the step after the previous visit to height
    /// `h` through the valley's down step; its step count is always even.
    pub fn sum_tunnels(&self) -> usize {
        let hs = self.heights();
        let mut total = 0;
        for (j, h) in self.valleys() {
            let m = (0..j)
                .rev()
                .find(|&m| hs[m] == h)
                .expect("a Dyck path revisits every level at or below a valley");
            assert_eq!((j - m) % 2, 0, "tunnel step count must be even");
            total += (j - m) / 2;
        }
        total
    }

    /// Palindrome test under reversal with `U`/`D` swapped.
    pub fn is_symmetric(&self) -> bool {
        let n = self.steps.len();
        (0..n).all(|i| self.steps[i] != self.steps[n - 1 - i])
    }

    /// Maximal-run form `U^{i_1} D^{j_1} ... U^{i_k} D^{j_k}` with all
    /// exponents positive.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs = Vec::new();
        let mut i = 0;
        while i < self.steps.len() {
            let mut ups = 0;
            while i < self.steps.len() && self.steps[i] == DyckStep::Up {
                ups += 1;
                i += 1;
            }
            let mut downs = 0;
            while i < self.steps.len() && self.steps[i] == DyckStep::Down {
                downs += 1;
                i += 1;
            }
            runs.push((ups, downs));
        }
        runs
    }

    fn from_runs(runs: &[(usize, usize)]) -> DyckPath {
        let mut steps = Vec::new();
        for &(u, d) in runs {
            steps.extend(std::iter::repeat_n(DyckStep::Up, u));
            steps.extend(std::iter::repeat_n(DyckStep::Down, d));
        }
        DyckPath::new(steps).expect("run list must describe a Dyck path")
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                DyckStep::Up => "U",
                DyckStep::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<DyckPath, PathError> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(DyckStep::Up),
                'D' => Ok(DyckStep::Down),
                _ => Err(PathError::Parse { text: s.to_string() }),
            })
            .collect::<Result<_, _>>()?;
        DyckPath::new(steps)
    }
}

/// All Dyck paths of semilength `n`, exactly once.
pub fn gen_dyck(n: usize) -> impl Iterator<Item = DyckPath> {
    WordGen::new(
        2 * n,
        vec![DyckStep::Up, DyckStep::Down],
        0i32,
        |&h, s, pos, len| {
            let h2 = h + if s == DyckStep::Up { 1 } else { -1 };
            let remaining = (len - pos - 1) as i32;
            (h2 >= 0 && h2 <= remaining).then_some(h2)
        },
        |&h| h == 0,
    )
    .map(|steps| DyckPath { steps })
}

/// Combine `Q` and `R` around a fresh first peak.  This is a bijection from
/// pairs in `D_k x D_{n-k-1}` (over all `k`) onto `D_n`; the inverse is
/// [`delta_inv`].
pub fn delta(q: &DyckPath, r: &DyckPath) -> DyckPath {
    if r.is_empty() {
        if q.is_empty() {
            return DyckPath::from_runs(&[(1, 1)]);
        }
        let mut runs = q.runs();
        runs[0].0 += 1;
        runs[0].1 += 1;
        return DyckPath::from_runs(&runs);
    }
    // Treat an empty Q as the single run (0, 0).
    let q_runs = if q.is_empty() { vec![(0, 0)] } else { q.runs() };
    let r_runs = r.runs();
    let s = q_runs.len();
    let mut runs = Vec::with_capacity(s + r_runs.len());
    runs.push((q_runs[0].0 + 1, 1));
    for m in 1..s {
        runs.push((q_runs[m].0, q_runs[m - 1].1));
    }
    runs.push((r_runs[0].0, q_runs[s - 1].1 + r_runs[0].1));
    runs.extend_from_slice(&r_runs[1..]);
    DyckPath::from_runs(&runs)
}

/// Inverse of [`delta`]: split off the pieces around the first peak.
pub fn delta_inv(p: &DyckPath) -> (DyckPath, DyckPath) {
    assert!(!p.is_empty(), "delta_inv needs a nonempty path");
    let runs = p.runs();
    let k = runs.len();
    if runs[0].1 >= 2 {
        let mut q_runs = runs.clone();
        q_runs[0].0 -= 1;
        q_runs[0].1 -= 1;
        let q_runs: Vec<_> = q_runs.into_iter().filter(|&(u, d)| u + d > 0).collect();
        return (DyckPath::from_runs(&q_runs), DyckPath::empty());
    }
    if k == 1 {
        // P = UD
        return (DyckPath::empty(), DyckPath::empty());
    }
    // j_1 = 1: find the smallest s with i_1+..+i_s <= j_2+..+j_{s+1}.
    let mut sum_i = 0usize;
    let mut sum_j = 0usize;
    let mut split = None;
    for s in 1..k {
        sum_i += runs[s - 1].0;
        sum_j += runs[s].1;
        if sum_i <= sum_j {
            split = Some((s, sum_j - sum_i));
            break;
        }
    }
    let (s, eps) = split.expect("a split index always exists when j_1 = 1");
    let mut q_runs = Vec::with_capacity(s);
    for m in 1..=s {
        let u = if m == 1 { runs[0].0 - 1 } else { runs[m - 1].0 };
        let d = if m == s { runs[s].1 - eps - 1 } else { runs[m].1 };
        q_runs.push((u, d));
    }
    let q_runs: Vec<_> = q_runs.into_iter().filter(|&(u, d)| u + d > 0).collect();
    let mut r_runs = vec![(runs[s].0, eps + 1)];
    r_runs.extend_from_slice(&runs[s + 1..]);
    (DyckPath::from_runs(&q_runs), DyckPath::from_runs(&r_runs))
}

/// Companion to [`delta`] built on the last peak instead of the first.
/// Also a bijection from `D_k x D_{n-k-1}` pairs onto `D_n` (checked
/// exhaustively rather than via an explicit inverse).
pub fn delta_last(r: &DyckPath, q: &DyckPath) -> DyckPath {
    if r.is_empty() {
        if q.is_empty() {
            return DyckPath::from_runs(&[(1, 1)]);
        }
        let mut runs = q.runs();
        let last = runs.len() - 1;
        runs[last].0 += 1;
        runs[last].1 += 1;
        return DyckPath::from_runs(&runs);
    }
    let q_runs = if q.is_empty() { vec![(0, 0)] } else { q.runs() };
    let r_runs = r.runs();
    let s = q_runs.len();
    let t = r_runs.len();
    let mut runs = Vec::with_capacity(t + s);
    runs.extend_from_slice(&r_runs[..t - 1]);
    runs.push((r_runs[t - 1].0 + q_runs[0].0, r_runs[t - 1].1));
    for m in 1..s {
        runs.push((q_runs[m].0, q_runs[m - 1].1));
    }
    runs.push((1, q_runs[s - 1].1 + 1));
    DyckPath::from_runs(&runs)
}

/// The bijection on `D_n` that carries `(sum_peaks, num_peaks)` to
/// `(sum_tunnels, n - des)`, defined recursively over [`delta_inv`].
pub fn peak_to_tunnel(p: &DyckPath) -> DyckPath {
    if p.is_empty() {
        return DyckPath::empty();
    }
    let (q, r) = delta_inv(p);
    let mut steps = Vec::with_capacity(p.len());
    if r.is_empty() {
        steps.push(DyckStep::Up);
        steps.push(DyckStep::Down);
        steps.extend_from_slice(peak_to_tunnel(&q).steps());
    } else if q.is_empty() {
        steps.push(DyckStep::Up);
        steps.extend_from_slice(peak_to_tunnel(&r).steps());
        steps.push(DyckStep::Down);
    } else {
        steps.push(DyckStep::Up);
        steps.extend_from_slice(peak_to_tunnel(&q).steps());
        steps.push(DyckStep::Down);
        steps.extend_from_slice(peak_to_tunnel(&r).steps());
    }
    DyckPath::new(steps).expect("image of a Dyck path is a Dyck path")
}

/// Inverse of [`peak_to_tunnel`].
pub fn peak_to_tunnel_inv(p: &DyckPath) -> DyckPath {
    if p.is_empty() {
        return DyckPath::empty();
    }
    let steps = p.steps();
    let n = steps.len();
    if steps[1] == DyckStep::Down {
        // UD h(Q)
        let q = DyckPath::new(steps[2..].to_vec()).expect("suffix after UD is a Dyck path");
        return delta(&peak_to_tunnel_inv(&q), &DyckPath::empty());
    }
    let hs = p.heights();
    if hs[1..n].iter().all(|&h| h > 0) {
        // U h(R) D
        let r = DyckPath::new(steps[1..n - 1].to_vec()).expect("interior is a Dyck path");
        return delta(&DyckPath::empty(), &peak_to_tunnel_inv(&r));
    }
    // U h(Q) D h(R) around the first return to the axis
    let ret = (1..n).find(|&i| hs[i] == 0).expect("path touches the axis in the interior");
    let x = DyckPath::new(steps[1..ret - 1].to_vec()).expect("first-return interior");
    let y = DyckPath::new(steps[ret..].to_vec()).expect("suffix after first return");
    delta(&peak_to_tunnel_inv(&x), &peak_to_tunnel_inv(&y))
}

/// Joint distribution of (alpha, beta, des) over all Dyck paths of
/// semilength `n`, as a polynomial in `a, b, t`.
pub fn brute_alpha_beta_des(n: usize, bounds: &OracleBounds) -> Result<MultiPoly, PathError> {
    if n > bounds.catalan {
        return Err(PathError::BoundExceeded { n, bound: bounds.catalan });
    }
    let mut poly = MultiPoly::zero();
    let one = 1.into();
    for p in gen_dyck(n) {
        let exp = ExpVec([p.alpha() as i32, p.beta() as i32, p.des() as i32, 0]);
        poly.add_term(exp, &one);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::VarContext;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn construction_checks() {
        assert_eq!("DU".parse::<DyckPath>(), Err(PathError::BelowAxis));
        assert_eq!("UUD".parse::<DyckPath>(), Err(PathError::Unbalanced));
        assert!(DyckPath::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn peaks_and_valleys() {
        let p = path("UD");
        assert_eq!(p.peaks(), vec![(1, 1)]);
        assert!(p.valleys().is_empty());

        assert_eq!(path("UUDD").num_peaks(), 1);
        let p = path("UDUD");
        assert_eq!(p.num_peaks(), 2);
        assert_eq!(p.valleys(), vec![(2, 0)]);

        // peak heights of the running decomposition example
        let p = path("UUUUDUDDUDDDUUDUDD");
        let heights: Vec<i32> = p.peaks().iter().map(|&(_, h)| h).collect();
        assert_eq!(heights, vec![4, 4, 3, 2, 2]);
        // npea = des + 1 on every nonempty path
        for q in gen_dyck(6) {
            assert_eq!(q.num_peaks(), q.des() + 1);
        }
    }

    #[test]
    fn bit_statistics() {
        let p = path("UUDD");
        assert_eq!((p.des(), p.alpha(), p.beta()), (0, 0, 0));
        let p = path("UDUD");
        assert_eq!(p.descent_set(), vec![2]);
        assert_eq!((p.alpha(), p.beta(), p.maj()), (1, 1, 2));
        for p in gen_dyck(6) {
            assert_eq!(p.alpha() + p.beta(), p.maj());
        }
    }

    #[test]
    fn sum_peaks_and_tunnels() {
        assert_eq!(path("UUDD").sum_peaks(), 1);
        assert_eq!(path("UDUD").sum_peaks(), 0);
        assert_eq!(path("UUUUDUDDUDDDUUDUDD").sum_peaks(), 10);

        assert_eq!(path("UUDD").sum_tunnels(), 0);
        assert_eq!(path("UDUD").sum_tunnels(), 1);
        // (12 + 6 + 2 + 2) / 2
        assert_eq!(path("UUUUDUDDUDDDUUDUDD").sum_tunnels(), 11);
    }

    #[test]
    fn delta_worked_example() {
        let q = path("UUUDDUDD");
        let r = path("UDUUDUDD");
        assert_eq!(delta(&q, &r), path("UUUUDUDDUDDDUUDUDD"));
        assert_eq!(delta(&DyckPath::empty(), &DyckPath::empty()), path("UD"));
        let (q2, r2) = delta_inv(&path("UUUUDUDDUDDDUUDUDD"));
        assert_eq!((q2, r2), (q, r));
    }

    #[test]
    fn delta_round_trips() {
        for n in 0..=6usize {
            for p in gen_dyck(n) {
                if p.is_empty() {
                    continue;
                }
                let (q, r) = delta_inv(&p);
                assert_eq!(delta(&q, &r), p, "delta round trip failed for {p}");
            }
        }
    }

    #[test]
    fn delta_last_cases() {
        assert_eq!(delta_last(&DyckPath::empty(), &path("UD")), path("UUDD"));
        assert_eq!(delta_last(&DyckPath::empty(), &DyckPath::empty()), path("UD"));
        assert_eq!(delta_last(&path("UD"), &DyckPath::empty()), path("UDUD"));
    }

    #[test]
    fn transfer_bijection_small() {
        assert_eq!(peak_to_tunnel(&path("UD")), path("UD"));
        assert_eq!(peak_to_tunnel(&path("UUDD")), path("UDUD"));
        assert_eq!(peak_to_tunnel(&path("UDUD")), path("UUDD"));
        for n in 0..=7usize {
            for p in gen_dyck(n) {
                let h = peak_to_tunnel(&p);
                assert_eq!(h.sum_tunnels(), p.sum_peaks());
                assert_eq!(n - h.des(), p.num_peaks());
                assert_eq!(peak_to_tunnel_inv(&h), p);
            }
        }
    }

    #[test]
    fn symmetric_paths() {
        assert!(path("UD").is_symmetric());
        assert!(path("UUDD").is_symmetric());
        assert!(path("UDUD").is_symmetric());
        assert!(!path("UUDDUD").is_symmetric());
    }

    #[test]
    fn generation_counts() {
        assert_eq!(gen_dyck(0).count(), 1);
        assert_eq!(gen_dyck(4).count(), 14);
        assert_eq!(gen_dyck(7).count(), 429);
    }

    #[test]
    fn alpha_beta_polynomial() {
        let b = OracleBounds::default();
        assert!(brute_alpha_beta_des(0, &b).unwrap().is_one());
        assert!(brute_alpha_beta_des(1, &b).unwrap().is_one());
        let c2 = brute_alpha_beta_des(2, &b).unwrap();
        assert_eq!(c2.render(VarContext::Abt), "a*b*t + 1");
        assert!(brute_alpha_beta_des(42, &b).is_err());
    }
}
