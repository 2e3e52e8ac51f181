//! Sparse Laurent polynomials in four positional variable slots with
//! arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::PolyError;

/// Exponent vector for the four variable slots.
///
/// Slots are positional; a [`VarContext`] gives them names for rendering.
/// Exponents are signed so Laurent monomials like `q^-1 t` are first-class.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct ExpVec(pub [i32; 4]);

impl ExpVec {
    pub const ZERO: ExpVec = ExpVec([0; 4]);

    /// Unit exponent in one slot: the monomial for that slot's variable.
    pub fn unit(slot: usize) -> ExpVec {
        let mut e = [0; 4];
        e[slot] = 1;
        ExpVec(e)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    fn add(&self, other: &ExpVec) -> ExpVec {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        ExpVec(e)
    }

    fn scaled(&self, k: i32) -> ExpVec {
        ExpVec([self.0[0] * k, self.0[1] * k, self.0[2] * k, self.0[3] * k])
    }
}

/// Names for the variable slots.  Contexts are rendering metadata only;
/// arithmetic never looks at them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarContext {
    /// Slots `(q, t, x, -)`: inversion-style polynomials.
    Qtx,
    /// Slots `(a, b, t, -)`: Dyck-path descent polynomials.
    Abt,
}

/// Slot indices for the `Qtx` context.
pub mod qtx {
    pub const Q: usize = 0;
    pub const T: usize = 1;
    pub const X: usize = 2;
}

/// Slot indices for the `Abt` context.
pub mod abt {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const T: usize = 2;
}

impl VarContext {
    pub fn names(&self) -> [&'static str; 4] {
        match self {
            VarContext::Qtx => ["q", "t", "x", "w"],
            VarContext::Abt => ["a", "b", "t", "w"],
        }
    }

    /// The slot holding this context's `t` variable (used for render order).
    pub fn t_slot(&self) -> usize {
        match self {
            VarContext::Qtx => qtx::T,
            VarContext::Abt => abt::T,
        }
    }
}

/// One substitution rule: replace a slot's variable by `coef * monomial`
/// where `coef` is -1, 0, or 1.
#[derive(Clone, Copy, Debug)]
pub struct MonomialSubst {
    pub coef: i8,
    pub exp: ExpVec,
}

impl MonomialSubst {
    pub fn new(coef: i8, exp: ExpVec) -> MonomialSubst {
        assert!((-1..=1).contains(&coef), "substitution coefficient must be -1, 0, or 1");
        MonomialSubst { coef, exp }
    }

    /// Substitute the constant 1 for the slot (e.g. evaluate at `x = 1`).
    pub fn one() -> MonomialSubst {
        MonomialSubst { coef: 1, exp: ExpVec::ZERO }
    }

    /// Substitute the constant -1 (e.g. evaluate at `q = -1`).
    pub fn minus_one() -> MonomialSubst {
        MonomialSubst { coef: -1, exp: ExpVec::ZERO }
    }

    /// Substitute 0 for the slot.
    pub fn zero() -> MonomialSubst {
        MonomialSubst { coef: 0, exp: ExpVec::ZERO }
    }

    /// Substitute a plain monomial (coefficient +1).
    pub fn monomial(exp: ExpVec) -> MonomialSubst {
        MonomialSubst { coef: 1, exp }
    }
}

/// A sparse multivariate Laurent polynomial in canonical form: no zero
/// coefficients and pairwise-distinct exponent vectors.  Terms are kept in
/// lexicographic order on `(e1, e2, e3, e4)` so equality and serialization
/// are deterministic.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<ExpVec, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> MultiPoly {
        MultiPoly::monomial(c, ExpVec::ZERO)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, exp: ExpVec) -> MultiPoly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MultiPoly { terms }
    }

    /// The variable of a single slot, e.g. `var(qtx::T)` is `t`.
    pub fn var(slot: usize) -> MultiPoly {
        MultiPoly::monomial(1, ExpVec::unit(slot))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExpVec::ZERO)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &BigInt)> {
        self.terms.iter()
    }

    /// The coefficient stored at one exponent vector (zero if absent).
    pub fn coefficient(&self, exp: &ExpVec) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: ExpVec, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &(-c));
        }
        out
    }

    /// Exact product; exponents add componentwise, so Laurent cancellation
    /// like `q^-1 t * q t = t^2` falls out of the arithmetic.
    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), &(ca * cb));
            }
        }
        out
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> MultiPoly {
        self.mul(&MultiPoly::constant(c))
    }

    /// Divide every coefficient by `d`, failing if any division is inexact.
    pub fn div_exact(&self, d: &BigInt) -> Result<MultiPoly, PolyError> {
        if d.is_zero() {
            return Err(PolyError::InexactDivision);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = num_integer::Integer::div_rem(c, d);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            if !q.is_zero() {
                terms.insert(*e, q);
            }
        }
        Ok(MultiPoly { terms })
    }

    /// Simultaneous per-slot monomial substitution.
    ///
    /// Slots without a rule keep their variable.  Substituting 0 into a slot
    /// that occurs with a negative exponent is a division by zero and is
    /// rejected.
    pub fn subst(&self, rules: &[Option<MonomialSubst>; 4]) -> Result<MultiPoly, PolyError> {
        let mut out = MultiPoly::zero();
        'term: for (e, c) in &self.terms {
            let mut exp = ExpVec::ZERO;
            let mut sign = 1i8;
            for (slot, slot_rule) in rules.iter().enumerate() {
                let k = e.0[slot];
                match slot_rule {
                    None => exp.0[slot] += k,
                    Some(rule) => {
                        if k == 0 {
                            continue;
                        }
                        match rule.coef {
                            0 => {
                                if k < 0 {
                                    return Err(PolyError::SubstDivisionByZero { slot });
                                }
                                continue 'term;
                            }
                            -1
                                if k.rem_euclid(2) == 1 => {
                                    sign = -sign;
                                }
                            _ => {}
                        }
                        exp = exp.add(&rule.exp.scaled(k));
                    }
                }
            }
            let coef = if sign < 0 { -c } else { c.clone() };
            out.add_term(exp, &coef);
        }
        Ok(out)
    }

    /// Coefficient of `(slot variable)^k`, as a polynomial in the remaining
    /// slots.
    pub fn coeff_of(&self, slot: usize, k: i32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            if e.0[slot] == k {
                let mut e2 = *e;
                e2.0[slot] = 0;
                out.add_term(e2, c);
            }
        }
        out
    }

    /// Smallest and largest exponent of the slot over the support, or `None`
    /// for the zero polynomial.
    pub fn degree_range(&self, slot: usize) -> Option<(i32, i32)> {
        let mut range: Option<(i32, i32)> = None;
        for e in self.terms.keys() {
            let d = e.0[slot];
            range = Some(match range {
                None => (d, d),
                Some((lo, hi)) => (lo.min(d), hi.max(d)),
            });
        }
        range
    }

    /// True iff the coefficients of the slot satisfy `a_i = a_{r+s-i}`
    /// between the minimum degree `r` and maximum degree `s`.  The
    /// coefficients may themselves be polynomials in the other slots.
    pub fn is_symmetric_in(&self, slot: usize) -> bool {
        let Some((lo, hi)) = self.degree_range(slot) else {
            return true;
        };
        let mut i = lo;
        let mut j = hi;
        while i < j {
            if self.coeff_of(slot, i) != self.coeff_of(slot, j) {
                return false;
            }
            i += 1;
            j -= 1;
        }
        true
    }

    /// Dense coefficient list of a univariate view in `slot`, from the
    /// minimum to the maximum degree.  Fails if any other slot occurs.
    pub fn univariate_coeffs(&self, slot: usize) -> Result<Vec<BigInt>, PolyError> {
        for e in self.terms.keys() {
            for s in 0..4 {
                if s != slot && e.0[s] != 0 {
                    return Err(PolyError::NotUnivariate { slot });
                }
            }
        }
        let Some((lo, hi)) = self.degree_range(slot) else {
            return Ok(Vec::new());
        };
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[(e.0[slot] - lo) as usize] = c.clone();
        }
        Ok(coeffs)
    }

    /// Unimodality of the univariate view: coefficients rise weakly then
    /// fall weakly.  Requires all coefficients nonnegative.
    pub fn is_unimodal(&self, slot: usize) -> Result<bool, PolyError> {
        let coeffs = self.univariate_coeffs(slot)?;
        if coeffs.iter().any(|c| c.is_negative()) {
            return Err(PolyError::NegativeCoefficients);
        }
        let mut rising = true;
        for w in coeffs.windows(2) {
            if rising {
                if w[0] > w[1] {
                    rising = false;
                }
            } else if w[0] < w[1] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Log concavity of the univariate view: `a_i^2 >= a_{i-1} a_{i+1}` for
    /// every interior index of the dense coefficient list.  Mixed-sign
    /// coefficient lists are rejected.
    pub fn is_log_concave(&self, slot: usize) -> Result<bool, PolyError> {
        let coeffs = self.univariate_coeffs(slot)?;
        if coeffs.iter().any(|c| c.is_negative()) {
            return Err(PolyError::NegativeCoefficients);
        }
        for i in 1..coeffs.len().saturating_sub(1) {
            if &coeffs[i] * &coeffs[i] < &coeffs[i - 1] * &coeffs[i + 1] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Evaluate with every slot set to 1, collapsing to a single integer.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Render with the context's variable names, ordered by descending
    /// `t`-degree and then descending exponents on the remaining slots.
    pub fn render(&self, ctx: VarContext) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let names = ctx.names();
        let t = ctx.t_slot();
        let others: Vec<usize> = (0..4).filter(|&s| s != t).collect();
        let mut terms: Vec<(&ExpVec, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            let ka = (ea.0[t], ea.0[others[0]], ea.0[others[1]], ea.0[others[2]]);
            let kb = (eb.0[t], eb.0[others[0]], eb.0[others[1]], eb.0[others[2]]);
            kb.cmp(&ka)
        });
        let mut out = String::new();
        for (idx, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || e.is_zero() {
                factors.push(mag.to_string());
            }
            for (name, &d) in names.iter().zip(&e.0) {
                if d == 1 {
                    factors.push(name.to_string());
                } else if d != 0 {
                    factors.push(format!("{name}^{d}"));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]", self.render(VarContext::Qtx))
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

// Wire format: a JSON array of {"exp": [e1,e2,e3,e4], "coef": "<decimal>"}
// in canonical order.  Coefficients travel as decimal strings so values
// beyond 64 bits survive any JSON reader.
impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exp: &'a [i32; 4],
            coef: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&Term { exp: &e.0, coef: c.to_string() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<MultiPoly, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            exp: [i32; 4],
            coef: String,
        }
        struct SeqVisitor;
        impl<'de> Visitor<'de> for SeqVisitor {
            type Value = MultiPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a sequence of {exp, coef} terms")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<MultiPoly, A::Error> {
                let mut poly = MultiPoly::zero();
                while let Some(term) = seq.next_element::<Term>()? {
                    let coef: BigInt = term
                        .coef
                        .parse()
                        .map_err(|_| de::Error::custom("invalid decimal coefficient"))?;
                    poly.add_term(ExpVec(term.exp), &coef);
                }
                Ok(poly)
            }
        }
        deserializer.deserialize_seq(SeqVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MultiPoly {
        MultiPoly::var(qtx::Q)
    }

    fn t() -> MultiPoly {
        MultiPoly::var(qtx::T)
    }

    #[test]
    fn add_disjoint_and_cancelling() {
        let qt = &q() * &t();
        assert_eq!((&t() + &qt).num_terms(), 2);
        assert!((&qt + &qt.neg()).is_zero());
    }

    #[test]
    fn mul_identity_and_laurent_cancellation() {
        let p = &(&q() * &q()) + &t();
        assert_eq!(&p * &MultiPoly::one(), p);
        // q^-1 t * q t = t^2
        let a = MultiPoly::monomial(1, ExpVec([-1, 1, 0, 0]));
        let b = MultiPoly::monomial(1, ExpVec([1, 1, 0, 0]));
        assert_eq!(&a * &b, MultiPoly::monomial(1, ExpVec([0, 2, 0, 0])));
    }

    #[test]
    fn subst_shift_and_sign() {
        // t -> qt in 1 + qt gives 1 + q^2 t
        let p = &MultiPoly::one() + &(&q() * &t());
        let rule = MonomialSubst::monomial(ExpVec([1, 1, 0, 0]));
        let got = p.subst(&[None, Some(rule), None, None]).unwrap();
        let want = &MultiPoly::one() + &MultiPoly::monomial(1, ExpVec([2, 1, 0, 0]));
        assert_eq!(got, want);

        // q -> -1 in t^3 + 2qt^2 + q^2 t^2 + q^2 t gives t^3 - t^2 + t
        let mut p = MultiPoly::zero();
        p.add_term(ExpVec([0, 3, 0, 0]), &2.into());
        p.add_term(ExpVec([0, 3, 0, 0]), &(-1).into());
        p.add_term(ExpVec([1, 2, 0, 0]), &2.into());
        p.add_term(ExpVec([2, 2, 0, 0]), &1.into());
        p.add_term(ExpVec([2, 1, 0, 0]), &1.into());
        let got = p
            .subst(&[Some(MonomialSubst::minus_one()), None, None, None])
            .unwrap();
        let mut want = MultiPoly::zero();
        want.add_term(ExpVec([0, 3, 0, 0]), &1.into());
        want.add_term(ExpVec([0, 2, 0, 0]), &(-1).into());
        want.add_term(ExpVec([0, 1, 0, 0]), &1.into());
        assert_eq!(got, want);
    }

    #[test]
    fn subst_zero_rejects_negative_exponent() {
        let p = MultiPoly::monomial(1, ExpVec([-1, 0, 0, 0]));
        let err = p
            .subst(&[Some(MonomialSubst::zero()), None, None, None])
            .unwrap_err();
        assert!(matches!(err, PolyError::SubstDivisionByZero { slot: 0 }));
        // but x^0 at a slot substituted by zero is fine
        let p = t();
        assert_eq!(
            p.subst(&[Some(MonomialSubst::zero()), None, None, None]).unwrap(),
            t()
        );
    }

    #[test]
    fn coeff_extraction() {
        // [t^1] of 1 + 2qt + 2q^2 t = 2q + 2q^2
        let mut m3 = MultiPoly::one();
        m3.add_term(ExpVec([1, 1, 0, 0]), &2.into());
        m3.add_term(ExpVec([2, 1, 0, 0]), &2.into());
        let c = m3.coeff_of(qtx::T, 1);
        let mut want = MultiPoly::zero();
        want.add_term(ExpVec([1, 0, 0, 0]), &2.into());
        want.add_term(ExpVec([2, 0, 0, 0]), &2.into());
        assert_eq!(c, want);
        assert!(m3.coeff_of(qtx::T, 5).is_zero());
    }

    #[test]
    fn symmetry_checks() {
        let mut p = MultiPoly::zero();
        p.add_term(ExpVec([1, 0, 0, 0]), &2.into());
        p.add_term(ExpVec([2, 0, 0, 0]), &2.into());
        assert!(p.is_symmetric_in(qtx::Q));

        let one_plus_q = &MultiPoly::one() + &q();
        assert!(one_plus_q.is_symmetric_in(qtx::Q));

        let mut p = MultiPoly::one();
        p.add_term(ExpVec([1, 0, 0, 0]), &2.into());
        p.add_term(ExpVec([3, 0, 0, 0]), &1.into());
        assert!(!p.is_symmetric_in(qtx::Q));
    }

    #[test]
    fn unimodal_and_log_concave() {
        // 1 + 3q + q^2: unimodal and log concave (9 >= 1)
        let mut p = MultiPoly::one();
        p.add_term(ExpVec([1, 0, 0, 0]), &3.into());
        p.add_term(ExpVec([2, 0, 0, 0]), &1.into());
        assert!(p.is_unimodal(qtx::Q).unwrap());
        assert!(p.is_log_concave(qtx::Q).unwrap());

        // 1 + q + 3q^2 + q^3: unimodal but not log concave (1 < 3)
        let mut p = MultiPoly::one();
        p.add_term(ExpVec([1, 0, 0, 0]), &1.into());
        p.add_term(ExpVec([2, 0, 0, 0]), &3.into());
        p.add_term(ExpVec([3, 0, 0, 0]), &1.into());
        assert!(p.is_unimodal(qtx::Q).unwrap());
        assert!(!p.is_log_concave(qtx::Q).unwrap());

        // 2 + q + 3q^2 has a valley: not unimodal
        let mut p = MultiPoly::constant(2);
        p.add_term(ExpVec([1, 0, 0, 0]), &1.into());
        p.add_term(ExpVec([2, 0, 0, 0]), &3.into());
        assert!(!p.is_unimodal(qtx::Q).unwrap());

        // constant polynomial: both trivially true
        let c = MultiPoly::constant(7);
        assert!(c.is_unimodal(qtx::Q).unwrap());
        assert!(c.is_log_concave(qtx::Q).unwrap());

        // negative coefficients are rejected
        let p = MultiPoly::constant(-1);
        assert!(matches!(p.is_log_concave(qtx::Q), Err(PolyError::NegativeCoefficients)));
    }

    #[test]
    fn render_ordering() {
        // t^3 + q^2 t^2 + 2qt^2 + q^2 t, descending (t, q)
        let mut p = MultiPoly::zero();
        p.add_term(ExpVec([0, 3, 0, 0]), &1.into());
        p.add_term(ExpVec([1, 2, 0, 0]), &2.into());
        p.add_term(ExpVec([2, 2, 0, 0]), &1.into());
        p.add_term(ExpVec([2, 1, 0, 0]), &1.into());
        assert_eq!(p.render(VarContext::Qtx), "t^3 + q^2*t^2 + 2*q*t^2 + q^2*t");
        assert_eq!(MultiPoly::zero().render(VarContext::Qtx), "0");
        let neg = MultiPoly::monomial(-2, ExpVec([0, 1, 0, 0]));
        assert_eq!(neg.render(VarContext::Qtx), "-2*t");
    }

    #[test]
    fn json_round_trip() {
        let mut p = MultiPoly::zero();
        p.add_term(ExpVec([2, 1, 0, 0]), &BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap());
        p.add_term(ExpVec([-1, 0, 0, 0]), &(-7).into());
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains("123456789012345678901234567890"));
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
