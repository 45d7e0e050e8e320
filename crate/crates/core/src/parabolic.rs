//! Standard parabolic subgroups `B_[k,l] = ⟨σ_k, …, σ_{l-1}⟩` and their
//! conjugates.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::garside::{delta_word, NormalForm};
use crate::strands::delete_strands;
use crate::word::{same_strands, BraidWord};

/// A block of consecutive positions `k..=l` (1-based), `k < l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    k: usize,
    l: usize,
}

impl Interval {
    pub fn new(k: usize, l: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= l || l > n {
            return Err(BraidError::InvalidInterval { k, l, n });
        }
        Ok(Interval { k, l })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Number of strands in the block, `l - k + 1`.
    pub fn size(&self) -> usize {
        self.l - self.k + 1
    }

    pub fn is_proper(&self, n: usize) -> bool {
        self.size() < n
    }

    /// Generator indices `k..l`.
    pub fn generator_indices(&self) -> std::ops::Range<usize> {
        self.k..self.l
    }

    pub fn generators(&self, n: usize) -> Vec<BraidWord> {
        self.generator_indices().map(|i| BraidWord::from_raw(n, vec![i as i32])).collect()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.k, self.l)
    }
}

/// The subgroup `α · B_[k,l] · α⁻¹` of `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicSpec {
    pub n: usize,
    pub alpha: BraidWord,
    pub interval: Interval,
}

impl ParabolicSpec {
    pub fn new(n: usize, alpha: BraidWord, interval: Interval) -> Result<Self> {
        same_strands(n, alpha.strands())?;
        Interval::new(interval.k, interval.l, n)?;
        Ok(ParabolicSpec { n, alpha, interval })
    }

    pub fn standard(n: usize, interval: Interval) -> Self {
        ParabolicSpec { n, alpha: BraidWord::identity(n), interval }
    }

    /// Block size `m = l - k + 1`.
    pub fn block_size(&self) -> usize {
        self.interval.size()
    }

    /// Generators `α σ_i α⁻¹`.
    pub fn generators(&self) -> Vec<BraidWord> {
        let a_inv = self.alpha.invert();
        self.interval
            .generators(self.n)
            .into_iter()
            .map(|g| BraidWord::from_raw(self.n, [self.alpha.letters(), g.letters(), a_inv.letters()].concat()))
            .collect()
    }

    pub fn contains(&self, u: &BraidWord) -> Result<bool> {
        same_strands(self.n, u.strands())?;
        let conj = u.conjugate_by(&self.alpha)?; // α⁻¹ u α
        Ok(parabolic_membership(&conj, self.interval))
    }
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {} {}; {}", self.n, self.interval.k, self.interval.l, self.alpha)
    }
}

/// Text form `"n; k l; <alpha word>"`.
impl FromStr for ParabolicSpec {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(BraidError::Parse(format!("expected `n; k l; alpha`, got `{s}`")));
        }
        let n: usize = parts[0]
            .trim()
            .parse()
            .map_err(|_| BraidError::Parse(format!("bad strand count `{}`", parts[0].trim())))?;
        let kl: Vec<usize> = parts[1]
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| BraidError::Parse(format!("bad interval bound `{t}`"))))
            .collect::<Result<_>>()?;
        if kl.len() != 2 {
            return Err(BraidError::Parse(format!("interval needs two bounds, got `{}`", parts[1].trim())));
        }
        let interval = Interval::new(kl[0], kl[1], n)?;
        let alpha = BraidWord::parse(parts.get(2).copied().unwrap_or(""), n)?;
        ParabolicSpec::new(n, alpha, interval)
    }
}

/// `δ_r = σ_{r-1} ⋯ σ_2 σ_1` in `B_n` (`δ_1` is the identity).
pub fn small_delta(r: usize, n: usize) -> Result<BraidWord> {
    if r == 0 || r > n {
        return Err(BraidError::InvalidStrandCount(r));
    }
    Ok(BraidWord::from_raw(n, (1..r as i32).rev().collect()))
}

/// Applies the shift `σ_i ↦ σ_{i+s}` and reinterprets the result in `B_{target_n}`.
pub fn shift(u: &BraidWord, s: usize, target_n: usize) -> Result<BraidWord> {
    let letters: Vec<i32> = u.letters().iter().map(|&l| l.signum() * (l.abs() + s as i32)).collect();
    if letters.iter().any(|l| l.unsigned_abs() as usize >= target_n) {
        return Err(BraidError::ShiftOverflow { shift: s, n: target_n });
    }
    BraidWord::new(target_n, letters)
}

/// `τ_{p,q} = δ_{p+1} ∂(δ_{p+1}) ⋯ ∂^{q-1}(δ_{p+1})`: the block of strands
/// `p+1, …, p+q` moves to the front past the strands `1, …, p`, each pair
/// crossing once positively. `τ_{p,0}` is the identity.
pub fn tau(p: usize, q: usize, n: usize) -> Result<BraidWord> {
    if p == 0 || p + q > n {
        return Err(BraidError::InvalidTau { p, q, n });
    }
    let base = small_delta(p + 1, n.max(p + 1))?;
    let mut letters = Vec::with_capacity(p * q);
    for t in 0..q {
        letters.extend(base.letters().iter().map(|&l| l + t as i32));
    }
    BraidWord::new(n, letters)
}

fn positive_in_block(x: &NormalForm, interval: Interval) -> bool {
    let whole = interval.k == 1 && interval.l == x.strands();
    (x.delta_power() == 0 || whole) && x.factors().iter().all(|f| f.supported_in(interval.k, interval.l))
}

/// Whether `u ∈ B_[k,l]`, decided on the irreducible fraction `u = x⁻¹ y`.
pub fn parabolic_membership(u: &BraidWord, interval: Interval) -> bool {
    nf_in_parabolic(&NormalForm::of_word(u), interval)
}

pub fn nf_in_parabolic(u: &NormalForm, interval: Interval) -> bool {
    if interval.l > u.strands() {
        return false;
    }
    let (x, y) = u.irreducible_fraction();
    positive_in_block(&x, interval) && positive_in_block(&y, interval)
}

/// Failure of [`decompose_center_times_parabolic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotInZH;

/// Writes `u = Δ_n^{2q} · h` with `h ∈ B_[k,l]`, or reports that `u` is not
/// in `⟨Δ_n²⟩ · B_[k,l]`. The interval must be proper.
///
/// Deleting all block strands but the last one kills `h` and leaves
/// `Δ_{n-m+1}^{2q}`, which fixes `q`.
pub fn decompose_center_times_parabolic(
    u: &BraidWord,
    interval: Interval,
) -> std::result::Result<(i64, BraidWord), NotInZH> {
    let (q, h) = decompose_nf(&NormalForm::of_word(u), u, interval)?;
    let from_nf = h.to_word();
    let direct = full_twist(u.strands()).pow(-q).multiply(u).expect("same strands").free_reduce();
    Ok((q, if direct.len() < from_nf.len() { direct } else { from_nf }))
}

pub(crate) fn decompose_nf(
    nf: &NormalForm,
    u: &BraidWord,
    interval: Interval,
) -> std::result::Result<(i64, NormalForm), NotInZH> {
    let n = u.strands();
    assert!(interval.is_proper(n), "decomposition needs a proper block");
    let remove: Vec<usize> = (interval.k..interval.l).collect();
    let image = delete_strands(u, &remove).map_err(|_| NotInZH)?;
    let image_nf = NormalForm::of_word(&image);
    let m = image.strands();
    if !image_nf.factors().is_empty() {
        return Err(NotInZH);
    }
    // Δ_2 = σ_1, so in B_2 the exponent itself must be even; in larger
    // groups an odd Δ-power is not pure and cannot arise from Z·H.
    let p = image_nf.delta_power();
    if m < 2 || p % 2 != 0 {
        return Err(NotInZH);
    }
    let q = p / 2;
    let h = NormalForm::delta_power_of(n, -2 * q).mul_unchecked(nf);
    if nf_in_parabolic(&h, interval) {
        Ok((q, h))
    } else {
        Err(NotInZH)
    }
}

pub fn membership_in_center_times_parabolic(u: &BraidWord, interval: Interval) -> bool {
    decompose_center_times_parabolic(u, interval).is_ok()
}

/// A double coset instance rewritten for standard blocks `B_[1,m_A]`, `B_[1,m_B]`.
#[derive(Clone, Debug, Serialize)]
pub struct StandardizedDcp {
    pub n: usize,
    pub m_a: usize,
    pub m_b: usize,
    pub g1: BraidWord,
    pub g1_prime: BraidWord,
    /// `α τ_A⁻¹`: a standardized `a₁` maps back to `back_a · a₁ · back_a⁻¹`.
    pub back_a: BraidWord,
    /// `β τ_B⁻¹`.
    pub back_b: BraidWord,
}

impl StandardizedDcp {
    /// Maps a solution `(a₁, b₁)` of the standardized instance to the original one.
    pub fn transport(&self, a1: &BraidWord, b1: &BraidWord) -> Result<(BraidWord, BraidWord)> {
        let a = BraidWord::product(self.n, [&self.back_a, a1, &self.back_a.invert()])?;
        let b = BraidWord::product(self.n, [&self.back_b, b1, &self.back_b.invert()])?;
        Ok((a, b))
    }
}

/// `g₁ = τ_A α⁻¹ g β τ_B⁻¹` and `g₁′ = τ_A α⁻¹ g′ β τ_B⁻¹` with
/// `τ_A = τ_{m_A, k_A - 1}`, `τ_B = τ_{m_B, k_B - 1}`.
pub fn standardize_instance(
    a: &ParabolicSpec,
    b: &ParabolicSpec,
    g: &BraidWord,
    g_prime: &BraidWord,
) -> Result<StandardizedDcp> {
    let n = a.n;
    same_strands(n, b.n)?;
    same_strands(n, g.strands())?;
    same_strands(n, g_prime.strands())?;
    let (m_a, m_b) = (a.block_size(), b.block_size());
    let tau_a = tau(m_a, a.interval.k - 1, n)?;
    let tau_b = tau(m_b, b.interval.k - 1, n)?;
    let left = tau_a.multiply(&a.alpha.invert())?;
    let right = b.alpha.multiply(&tau_b.invert())?;
    Ok(StandardizedDcp {
        n,
        m_a,
        m_b,
        g1: BraidWord::product(n, [&left, g, &right])?,
        g1_prime: BraidWord::product(n, [&left, g_prime, &right])?,
        back_a: a.alpha.multiply(&tau_a.invert())?,
        back_b: right,
    })
}

/// `Δ_n²` as a word.
pub(crate) fn full_twist(n: usize) -> BraidWord {
    delta_word(n).pow(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::{equal, fundamental_power};
    use crate::perm::permutation_of;

    fn w(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    #[test]
    fn conjugated_spec_membership() {
        let spec: ParabolicSpec = "4; 1 2; 2 3".parse().unwrap();
        for g in spec.generators() {
            assert!(spec.contains(&g).unwrap());
        }
        // conjugating the wrong way round leaves the subgroup
        assert!(!spec.contains(&w("-3 -2 1 2 3", 4)).unwrap());
    }

    #[test]
    fn small_deltas() {
        assert_eq!(small_delta(2, 2).unwrap().letters(), &[1]);
        assert_eq!(small_delta(4, 4).unwrap().letters(), &[3, 2, 1]);
        assert!(small_delta(1, 3).unwrap().is_empty());
    }

    #[test]
    fn shifts() {
        assert_eq!(shift(&w("1", 2), 1, 3).unwrap(), w("2", 3));
        assert!(shift(&BraidWord::identity(2), 5, 8).unwrap().is_empty());
        assert_eq!(shift(&w("1 2", 3), 2, 5).unwrap(), w("3 4", 5));
        assert!(shift(&w("2", 3), 1, 3).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(1, 1, 2).unwrap(), w("1", 2));
        assert_eq!(tau(1, 2, 3).unwrap(), w("1 2", 3));
        assert!(tau(3, 0, 4).unwrap().is_empty());
        assert_eq!(tau(2, 1, 3).unwrap(), w("2 1", 3));
        assert!(tau(3, 2, 4).is_err());
    }

    #[test]
    fn tau_is_product_of_shifted_small_deltas() {
        for n in 2..=6 {
            for p in 1..n {
                for q in 0..=n - p {
                    let expected: Vec<i32> = (0..q)
                        .flat_map(|t| shift(&small_delta(p + 1, n).unwrap(), t, n).unwrap().letters().to_vec())
                        .collect();
                    assert_eq!(tau(p, q, n).unwrap().letters(), &expected[..]);
                }
            }
        }
    }

    #[test]
    fn tau_block_swap() {
        let t = tau(2, 3, 6).unwrap();
        let perm = permutation_of(&t);
        assert_eq!(perm.images(), vec![4, 5, 1, 2, 3, 6]);
    }

    #[test]
    fn membership_examples() {
        let i23 = Interval::new(2, 3, 4).unwrap();
        assert!(parabolic_membership(&w("2", 4), i23));
        assert!(!parabolic_membership(&w("1", 4), i23));
        let i12 = Interval::new(1, 2, 3).unwrap();
        assert!(!parabolic_membership(&w("2 1 -2", 3), i12));
        assert!(parabolic_membership(&w("2 1 -2 -1 2 1", 3), Interval::new(1, 3, 3).unwrap()));
        // Δ₃ σ₂ Δ₃⁻¹ = σ₁
        let disguised = w("1 2 1 2 -1 -2 -1", 4);
        assert!(parabolic_membership(&disguised, Interval::new(1, 2, 4).unwrap()));
        assert!(!parabolic_membership(&disguised, Interval::new(2, 3, 4).unwrap()));
    }

    #[test]
    fn decomposition_examples() {
        let i12 = Interval::new(1, 2, 3).unwrap();
        let (q, h) = decompose_center_times_parabolic(&fundamental_power(3, 2), i12).unwrap();
        assert_eq!(q, 1);
        assert!(h.is_empty() || crate::garside::is_trivial(&h));
        let u = fundamental_power(3, 2).multiply(&w("1", 3)).unwrap();
        let (q, h) = decompose_center_times_parabolic(&u, i12).unwrap();
        assert_eq!(q, 1);
        assert!(equal(&h, &w("1", 3)).unwrap());
        assert_eq!(decompose_center_times_parabolic(&w("2", 3), i12), Err(NotInZH));
        assert!(membership_in_center_times_parabolic(&BraidWord::identity(3), i12));
        assert!(!membership_in_center_times_parabolic(&w("2", 3), i12));
    }

    #[test]
    fn spec_text_form() {
        let s: ParabolicSpec = "4; 2 3; 1 -2".parse().unwrap();
        assert_eq!(s.n, 4);
        assert_eq!(s.interval, Interval::new(2, 3, 4).unwrap());
        assert_eq!(s.alpha, w("1 -2", 4));
        let t: ParabolicSpec = "3; 1 2;".parse().unwrap();
        assert!(t.alpha.is_empty());
        assert!("3; 2 2;".parse::<ParabolicSpec>().is_err());
        assert!("3; 1 4;".parse::<ParabolicSpec>().is_err());
        assert!("x; 1 2;".parse::<ParabolicSpec>().is_err());
        assert_eq!(s.to_string().parse::<ParabolicSpec>().unwrap(), s);
    }

    #[test]
    fn standardize_trivial_case() {
        let n = 4;
        let a = ParabolicSpec::standard(n, Interval::new(1, 3, n).unwrap());
        let b = ParabolicSpec::standard(n, Interval::new(1, 2, n).unwrap());
        let g = w("1 -3 2", n);
        let gp = w("2 2 -1", n);
        let st = standardize_instance(&a, &b, &g, &gp).unwrap();
        assert_eq!((st.m_a, st.m_b), (3, 2));
        assert_eq!(st.g1, g);
        assert_eq!(st.g1_prime, gp);
    }

    #[test]
    fn standardize_concrete_substitution() {
        let n = 3;
        let a = ParabolicSpec::new(n, w("1", n), Interval::new(2, 3, n).unwrap()).unwrap();
        let b = ParabolicSpec::standard(n, Interval::new(1, 2, n).unwrap());
        let g = w("2 -1", n);
        let st = standardize_instance(&a, &b, &g, &g).unwrap();
        // τ_{2,1} σ₁⁻¹ g β τ_B⁻¹ with τ_{2,1} = σ₂σ₁, β = τ_B = 1
        assert_eq!(st.g1, w("2 1 -1 2 -1", n));
        assert_eq!(st.back_a, w("1 -1 -2", n));
    }

    #[test]
    fn conjugation_by_tau_normalizes_blocks() {
        for n in 2..=6 {
            for k in 1..n {
                for l in k + 1..=n {
                    let iv = Interval::new(k, l, n).unwrap();
                    let m = iv.size();
                    let t = tau(m, k - 1, n).unwrap();
                    let target = Interval::new(1, m, n).unwrap();
                    for gen in iv.generators(n) {
                        let c = BraidWord::product(n, [&t, &gen, &t.invert()]).unwrap();
                        assert!(parabolic_membership(&c, target), "n={n} [{k},{l}] {gen}");
                    }
                }
            }
        }
    }
}
