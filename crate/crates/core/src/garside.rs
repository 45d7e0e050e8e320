//! Left normal forms `Δ^p x₁⋯x_l` and the word problem.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Result;
use crate::simple::PermutationBraid;
use crate::word::{same_strands, BraidWord};

/// Left normal form `Δ^p x₁⋯x_l`: every `x_i` is a permutation braid other
/// than `1` and `Δ`, and each adjacent pair is left-weighted. Two braids are
/// equal iff their normal forms are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    n: usize,
    delta_power: i64,
    factors: Vec<PermutationBraid>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm { n, delta_power: 0, factors: Vec::new() }
    }

    pub fn delta_power_of(n: usize, p: i64) -> Self {
        NormalForm { n, delta_power: p, factors: Vec::new() }
    }

    pub fn from_simple(s: &PermutationBraid) -> Self {
        let mut nf = Self::identity(s.strands());
        nf.push(s.clone());
        nf.tidy();
        nf
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// `inf ≥ 0`.
    pub fn is_positive(&self) -> bool {
        self.delta_power >= 0
    }

    /// Appends a simple element on the right and repairs left-weightedness
    /// from right to left. Leading `Δ`s and trailing identities are left in
    /// place; call [`Self::tidy`] afterwards.
    fn push(&mut self, s: PermutationBraid) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let (left, right) = self.factors.split_at_mut(i);
            if !PermutationBraid::left_weight(&mut left[i - 1], &mut right[0]) {
                break;
            }
            i -= 1;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    fn tidy(&mut self) {
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.delta_power += leading as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    /// Normal form of a word.
    pub fn of_word(u: &BraidWord) -> Self {
        let n = u.strands();
        let letters = u.letters();
        // σ_i⁻¹ = (σ_i⁻¹Δ)·Δ⁻¹; every Δ⁻¹ is pushed to the front, flipping
        // each factor it passes.
        let mut negatives_after = letters.iter().filter(|&&l| l < 0).count() as i64;
        let mut nf = NormalForm { n, delta_power: -negatives_after, factors: Vec::new() };
        for &l in letters {
            let i = l.unsigned_abs() as usize;
            let g = PermutationBraid::generator(n, i);
            let factor = if l > 0 {
                g.flip_pow(negatives_after)
            } else {
                let f = g.right_complement().flip_pow(negatives_after);
                negatives_after -= 1;
                f
            };
            nf.push(factor);
        }
        nf.tidy();
        nf
    }

    /// `self · other`.
    pub fn mul(&self, other: &NormalForm) -> Result<NormalForm> {
        same_strands(self.n, other.n)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &NormalForm) -> NormalForm {
        // Δ^p X Δ^q Y = Δ^{p+q} τ^q(X) Y
        let q = other.delta_power;
        let mut out = NormalForm {
            n: self.n,
            delta_power: self.delta_power + q,
            factors: if q.rem_euclid(2) == 1 {
                self.factors.iter().map(|f| f.flip()).collect()
            } else {
                self.factors.clone()
            },
        };
        for f in &other.factors {
            out.push(f.clone());
        }
        out.tidy();
        out
    }

    pub fn inverse(&self) -> NormalForm {
        // (Δ^p x₁⋯x_l)⁻¹ = Δ^{-p-l} τ^{p+l}(∂x_l) ⋯ τ^{p+1}(∂x₁)
        let l = self.factors.len() as i64;
        let mut out = NormalForm::identity(self.n);
        out.delta_power = -self.delta_power - l;
        for (j, f) in self.factors.iter().enumerate().rev() {
            out.push(f.right_complement().flip_pow(self.delta_power + j as i64 + 1));
        }
        out.tidy();
        out
    }

    /// `x⁻¹ · self · x`.
    pub fn conjugate(&self, x: &NormalForm) -> NormalForm {
        x.inverse().mul_unchecked(self).mul_unchecked(x)
    }

    /// `s⁻¹ · self · s` for a simple `s`.
    pub fn conjugate_by_simple(&self, s: &PermutationBraid) -> NormalForm {
        // s⁻¹ = Δ⁻¹ · (Δ s⁻¹)
        let mut left = NormalForm::delta_power_of(self.n, -1);
        left.push(s.left_complement());
        left.tidy();
        let mut out = left.mul_unchecked(self);
        out.push(s.clone());
        out.tidy();
        out
    }

    /// A word for this element: `Δ^p` written out, then the factors.
    pub fn to_word(&self) -> BraidWord {
        let n = self.n;
        let d = delta_word(n);
        let mut letters: Vec<i32> = Vec::new();
        let dp = if self.delta_power < 0 { d.invert() } else { d };
        for _ in 0..self.delta_power.unsigned_abs() {
            letters.extend_from_slice(dp.letters());
        }
        for f in &self.factors {
            letters.extend_from_slice(f.to_word().letters());
        }
        BraidWord::from_raw(n, letters)
    }

    /// Checks the structural invariants of a left normal form.
    pub fn is_well_formed(&self) -> bool {
        self.factors.iter().all(|f| !f.is_identity() && !f.is_delta())
            && self.factors.windows(2).all(|w| PermutationBraid::is_left_weighted(&w[0], &w[1]))
    }

    /// First simple factor of a positive element (`Δ` when `inf > 0`).
    pub(crate) fn first_simple(&self) -> PermutationBraid {
        debug_assert!(self.delta_power >= 0);
        if self.delta_power > 0 {
            PermutationBraid::delta(self.n)
        } else {
            self.factors.first().cloned().unwrap_or_else(|| PermutationBraid::identity(self.n))
        }
    }

    /// Writes `self = a⁻¹ b` with `a`, `b` positive and without nontrivial
    /// common left divisor.
    pub fn irreducible_fraction(&self) -> (NormalForm, NormalForm) {
        if self.delta_power >= 0 {
            return (NormalForm::identity(self.n), self.clone());
        }
        let mut a = NormalForm::delta_power_of(self.n, -self.delta_power);
        let mut b = NormalForm { n: self.n, delta_power: 0, factors: self.factors.clone() };
        loop {
            let c = a.first_simple().left_meet(&b.first_simple());
            if c.is_identity() {
                return (a, b);
            }
            let c_inv = NormalForm::from_simple(&c).inverse();
            a = c_inv.mul_unchecked(&a);
            b = c_inv.mul_unchecked(&b);
        }
    }
}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NormalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.delta_power, self.factors.len(), &self.factors).cmp(&(
            other.n,
            other.delta_power,
            other.factors.len(),
            &other.factors,
        ))
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF(n={}, Δ^{}", self.n, self.delta_power)?;
        for x in &self.factors {
            write!(f, " [{}]", x.to_word())?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for x in &self.factors {
            write!(f, " . [{}]", x.to_word())?;
        }
        Ok(())
    }
}

/// Positive word `(σ₁⋯σ_{n-1})(σ₁⋯σ_{n-2})⋯σ₁` for `Δ_n`; empty for `n = 1`.
pub fn delta_word(n: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for top in (1..n).rev() {
        letters.extend(1..=top as i32);
    }
    BraidWord::from_raw(n, letters)
}

pub fn delta(n: usize) -> BraidWord {
    delta_word(n)
}

/// `Δ_n^p` as an explicit word.
pub fn fundamental_power(n: usize, p: i64) -> BraidWord {
    delta_word(n).pow(p)
}

pub fn normal_form(u: &BraidWord) -> NormalForm {
    NormalForm::of_word(u)
}

pub fn is_trivial(u: &BraidWord) -> bool {
    NormalForm::of_word(u).is_trivial()
}

pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    same_strands(u.strands(), v.strands())?;
    Ok(NormalForm::of_word(u) == NormalForm::of_word(v))
}

pub fn inf(u: &BraidWord) -> i64 {
    NormalForm::of_word(u).inf()
}

pub fn sup(u: &BraidWord) -> i64 {
    NormalForm::of_word(u).sup()
}

pub fn canonical_length(u: &BraidWord) -> usize {
    NormalForm::of_word(u).canonical_length()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    #[test]
    fn delta_three_is_pure_power() {
        let nf = normal_form(&w("1 2 1", 3));
        assert_eq!(nf.delta_power(), 1);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn b2_inverse_generator() {
        let nf = normal_form(&w("-1", 2));
        assert_eq!(nf.delta_power(), -1);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn sigma1_squared_in_b3() {
        let nf = normal_form(&w("1 1", 3));
        assert_eq!(nf.delta_power(), 0);
        assert_eq!(nf.factors().len(), 2);
        for f in nf.factors() {
            assert_eq!(f, &PermutationBraid::generator(3, 1));
        }
        assert_eq!((nf.inf(), nf.sup(), nf.canonical_length()), (0, 2, 2));
    }

    #[test]
    fn invariants_of_identity_and_full_twist() {
        let id = BraidWord::identity(3);
        assert_eq!((inf(&id), sup(&id), canonical_length(&id)), (0, 0, 0));
        let d2 = fundamental_power(3, 2);
        assert_eq!((inf(&d2), sup(&d2), canonical_length(&d2)), (2, 2, 0));
    }

    #[test]
    fn delta_words() {
        assert_eq!(delta(2).letters(), &[1]);
        assert!(delta(1).is_empty());
        assert_eq!(delta(3).letters(), &[1, 2, 1]);
    }

    #[test]
    fn braid_relations() {
        assert!(equal(&w("1 2 1", 3), &w("2 1 2", 3)).unwrap());
        assert!(equal(&w("1 3", 4), &w("3 1", 4)).unwrap());
        assert!(!equal(&w("1", 3), &w("2", 3)).unwrap());
        assert!(is_trivial(&w("1 -1", 3)));
        assert!(equal(&w("1", 3), &w("1", 4)).is_err());
    }

    #[test]
    fn full_twist_is_central() {
        for n in 2..=6 {
            let d2 = fundamental_power(n, 2);
            for i in 1..n {
                let g = BraidWord::generator(n, i).unwrap();
                assert!(equal(&d2.multiply(&g).unwrap(), &g.multiply(&d2).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn inverse_and_product_agree_with_words() {
        let u = w("1 -2 3 3 -1 2 -3", 4);
        let v = w("2 2 -1 3", 4);
        let nu = normal_form(&u);
        let nv = normal_form(&v);
        assert_eq!(nu.inverse(), normal_form(&u.invert()));
        assert_eq!(nu.mul(&nv).unwrap(), normal_form(&u.multiply(&v).unwrap()));
        assert!(nu.mul(&nu.inverse()).unwrap().is_trivial());
    }

    #[test]
    fn fraction_is_irreducible() {
        let u = w("-1 -2 3 2 -3", 4);
        let (a, b) = normal_form(&u).irreducible_fraction();
        assert!(a.is_positive() && b.is_positive());
        assert!(a.first_simple().left_meet(&b.first_simple()).is_identity());
        assert_eq!(a.inverse().mul(&b).unwrap(), normal_form(&u));
    }

    #[test]
    fn conjugate_by_simple_matches_generic() {
        let u = normal_form(&w("1 -2 3 -1 2", 4));
        for s in PermutationBraid::all(4) {
            assert_eq!(u.conjugate_by_simple(&s), u.conjugate(&NormalForm::from_simple(&s)));
        }
    }
}
