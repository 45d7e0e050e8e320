//! Permutation braids (simple elements of the Garside structure of `B_n`).
//!
//! A permutation braid is the positive braid in which every pair of strands
//! crosses at most once; it is determined by its permutation. All lattice
//! operations below work directly on permutation tables.

use std::fmt;

use crate::perm::Permutation;
use crate::word::BraidWord;

/// `perm[i]` is the final position of the strand starting at position `i`
/// (both 0-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationBraid {
    perm: Vec<u8>,
}

impl PermutationBraid {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize + 1, "too many strands");
        PermutationBraid { perm: (0..n).map(|i| i as u8).collect() }
    }

    /// The half twist `Δ_n`.
    pub fn delta(n: usize) -> Self {
        PermutationBraid { perm: (0..n).rev().map(|i| i as u8).collect() }
    }

    /// `σ_i` for a 1-based generator index.
    pub fn generator(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.perm.swap(i - 1, i);
        s
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        PermutationBraid { perm: p.images().iter().map(|&i| (i - 1) as u8).collect() }
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::from_zero_based(self.perm.iter().map(|&i| i as usize).collect())
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    /// 0-based image table.
    pub fn table(&self) -> &[u8] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.perm.len();
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == n - 1 - i)
    }

    /// Number of crossings, i.e. inversions of the permutation.
    pub fn length(&self) -> usize {
        let n = self.perm.len();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.perm[i] > self.perm[j] {
                    c += 1;
                }
            }
        }
        c
    }

    fn inverse_table(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        inv
    }

    /// Product `self · other` as permutations; only a permutation braid when
    /// no pair of strands crosses twice (see [`Self::try_mul`]).
    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        PermutationBraid { perm: self.perm.iter().map(|&i| other.perm[i as usize]).collect() }
    }

    pub fn try_mul(&self, other: &Self) -> Option<Self> {
        let prod = self.mul_unchecked(other);
        (prod.length() == self.length() + other.length()).then_some(prod)
    }

    /// `σ_i` (0-based `i`) is a left divisor.
    #[inline]
    pub(crate) fn starts_with(&self, i: usize) -> bool {
        self.perm[i] > self.perm[i + 1]
    }

    /// 0-based indices `i` such that `σ_{i+1}` is a left divisor.
    pub fn starting_set(&self) -> Vec<usize> {
        (0..self.perm.len().saturating_sub(1)).filter(|&i| self.starts_with(i)).collect()
    }

    /// 0-based indices `i` such that `σ_{i+1}` is a right divisor.
    pub fn finishing_set(&self) -> Vec<usize> {
        let inv = self.inverse_table();
        (0..inv.len().saturating_sub(1)).filter(|&i| inv[i] > inv[i + 1]).collect()
    }

    /// Right complement `self⁻¹ Δ`.
    pub fn right_complement(&self) -> Self {
        let n = self.perm.len() as u8;
        let inv = self.inverse_table();
        PermutationBraid { perm: inv.iter().map(|&a| n - 1 - a).collect() }
    }

    /// Left complement `Δ self⁻¹`.
    pub fn left_complement(&self) -> Self {
        let n = self.perm.len();
        let inv = self.inverse_table();
        PermutationBraid { perm: (0..n).map(|i| inv[n - 1 - i]).collect() }
    }

    /// Conjugation by `Δ`, which sends `σ_i` to `σ_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.perm.len();
        PermutationBraid { perm: (0..n).map(|i| (n - 1) as u8 - self.perm[n - 1 - i]).collect() }
    }

    pub fn flip_pow(&self, e: i64) -> Self {
        if e.rem_euclid(2) == 1 {
            self.flip()
        } else {
            self.clone()
        }
    }

    /// Greatest common left divisor.
    pub fn left_meet(&self, other: &Self) -> Self {
        let n = self.perm.len();
        let mut a = self.perm.clone();
        let mut b = other.perm.clone();
        let mut c = Self::identity(n).perm;
        let mut c_inv = c.clone();
        'outer: loop {
            for i in 0..n.saturating_sub(1) {
                if a[i] > a[i + 1] && b[i] > b[i + 1] {
                    a.swap(i, i + 1);
                    b.swap(i, i + 1);
                    // c ← c·σ_i swaps the values i and i+1
                    let (x, y) = (c_inv[i] as usize, c_inv[i + 1] as usize);
                    c[x] = (i + 1) as u8;
                    c[y] = i as u8;
                    c_inv.swap(i, i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        PermutationBraid { perm: c }
    }

    /// `c⁻¹ · self`, assuming `c` is a left divisor of `self`.
    pub fn left_quotient(&self, c: &Self) -> Self {
        let inv = c.inverse_table();
        PermutationBraid { perm: inv.iter().map(|&k| self.perm[k as usize]).collect() }
    }

    /// Whether `c` is a left divisor of `self`.
    pub fn has_left_divisor(&self, c: &Self) -> bool {
        self.left_meet(c) == *c
    }

    /// `(a, b)` is left-weighted iff every left divisor generator of `b` is a
    /// right divisor generator of `a`.
    pub fn is_left_weighted(a: &Self, b: &Self) -> bool {
        let inv = a.inverse_table();
        (0..inv.len().saturating_sub(1)).all(|i| !b.starts_with(i) || inv[i] > inv[i + 1])
    }

    /// Makes the pair `(a, b)` left-weighted, returning whether anything moved.
    pub(crate) fn left_weight(a: &mut Self, b: &mut Self) -> bool {
        if Self::is_left_weighted(a, b) {
            return false;
        }
        let c = a.right_complement().left_meet(b);
        *a = a.mul_unchecked(&c);
        *b = b.left_quotient(&c);
        true
    }

    /// Whether this element only moves positions inside `[lo, hi]` (1-based,
    /// inclusive), i.e. is a product of `σ_lo, …, σ_{hi-1}`.
    pub fn supported_in(&self, lo: usize, hi: usize) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| (lo - 1..hi).contains(&i) || p as usize == i)
    }

    /// A positive word for this element: repeatedly strips the smallest
    /// starting generator.
    pub fn to_word(&self) -> BraidWord {
        let n = self.perm.len();
        let mut a = self.perm.clone();
        let mut letters = Vec::new();
        'outer: loop {
            for i in 0..n.saturating_sub(1) {
                if a[i] > a[i + 1] {
                    a.swap(i, i + 1);
                    letters.push(i as i32 + 1);
                    continue 'outer;
                }
            }
            break;
        }
        BraidWord::from_raw(n, letters)
    }

    /// All `n!` permutation braids, identity first.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(PermutationBraid { perm: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Debug for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple{:?}", self.perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutation_of;

    fn simples(n: usize) -> Vec<PermutationBraid> {
        PermutationBraid::all(n)
    }

    #[test]
    fn enumerates_n_factorial() {
        assert_eq!(simples(1).len(), 1);
        assert_eq!(simples(3).len(), 6);
        assert_eq!(simples(5).len(), 120);
        assert!(simples(4)[0].is_identity());
    }

    #[test]
    fn word_has_matching_permutation_and_length() {
        for s in simples(5) {
            let w = s.to_word();
            assert_eq!(w.len(), s.length());
            assert_eq!(permutation_of(&w), s.permutation());
        }
    }

    #[test]
    fn complements_multiply_to_delta() {
        for n in 1..=5 {
            let d = PermutationBraid::delta(n);
            for s in simples(n) {
                assert_eq!(s.try_mul(&s.right_complement()), Some(d.clone()));
                assert_eq!(s.left_complement().try_mul(&s), Some(d.clone()));
                assert_eq!(s.flip().flip(), s);
            }
        }
    }

    #[test]
    fn flip_maps_generators() {
        let n = 5;
        for i in 1..n {
            assert_eq!(PermutationBraid::generator(n, i).flip(), PermutationBraid::generator(n, n - i));
        }
    }

    // Brute force: c ≼ a iff c·x = a for some simple x.
    fn divides(c: &PermutationBraid, a: &PermutationBraid, all: &[PermutationBraid]) -> bool {
        all.iter().any(|x| c.try_mul(x).as_ref() == Some(a))
    }

    #[test]
    fn left_meet_matches_brute_force() {
        let all = simples(4);
        for a in &all {
            for b in &all {
                let m = a.left_meet(b);
                assert!(divides(&m, a, &all) && divides(&m, b, &all));
                // maximality: every common divisor divides m
                for c in &all {
                    if divides(c, a, &all) && divides(c, b, &all) {
                        assert!(divides(c, &m, &all), "{c:?} common divisor of {a:?},{b:?} not under {m:?}");
                    }
                }
                assert_eq!(m.try_mul(&a.left_quotient(&m)).as_ref(), Some(a));
            }
        }
    }

    #[test]
    fn starting_and_finishing_sets() {
        let n = 4;
        let all = simples(n);
        for a in &all {
            for i in 0..n - 1 {
                let g = PermutationBraid::generator(n, i + 1);
                assert_eq!(a.starting_set().contains(&i), divides(&g, a, &all));
                let right = all.iter().any(|x| x.try_mul(&g).as_ref() == Some(a));
                assert_eq!(a.finishing_set().contains(&i), right);
            }
        }
    }

    #[test]
    fn left_weighting_produces_left_weighted_pair() {
        let all = simples(4);
        for a in &all {
            for b in &all {
                let (mut x, mut y) = (a.clone(), b.clone());
                PermutationBraid::left_weight(&mut x, &mut y);
                assert!(PermutationBraid::is_left_weighted(&x, &y));
                assert_eq!(x.length() + y.length(), a.length() + b.length());
                assert_eq!(x.mul_unchecked(&y).permutation(), a.mul_unchecked(b).permutation());
                // equivalent gcd formulation
                assert_eq!(
                    PermutationBraid::is_left_weighted(&x, &y),
                    x.right_complement().left_meet(&y).is_identity()
                );
            }
        }
    }

    #[test]
    fn support_check() {
        let s = PermutationBraid::generator(5, 2);
        assert!(s.supported_in(2, 3));
        assert!(!s.supported_in(3, 4));
        assert!(PermutationBraid::delta(5).supported_in(1, 5));
    }
}
