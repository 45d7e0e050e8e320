//! Bounded brute-force deciders used as ground truth in tests.
//!
//! These only use `BraidWord`, the word problem and the membership tests they
//! are meant to exercise. `artin_key` is a second, independent solution of
//! the word problem through the faithful action on the free group.

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::centralizer::centralizer_generators;
use crate::error::{BraidError, Result};
use crate::garside::{fundamental_power, NormalForm};
use crate::parabolic::{membership_in_center_times_parabolic, Interval, ParabolicSpec};
use crate::word::{same_strands, BraidWord};

pub const MAX_ENUM_LEN: usize = 12;
pub const DEFAULT_ORACLE_BUDGET: usize = 2_000_000;

/// Free-group words over `x_1..x_n`, letters `±j`.
type FreeWord = Vec<i32>;

fn free_push(w: &mut FreeWord, x: i32) {
    if w.last() == Some(&-x) {
        w.pop();
    } else {
        w.push(x);
    }
}

fn free_concat(parts: &[&FreeWord], inverted: &[bool]) -> FreeWord {
    let mut out = Vec::new();
    for (p, &inv) in parts.iter().zip(inverted) {
        if inv {
            p.iter().rev().for_each(|&x| free_push(&mut out, -x));
        } else {
            p.iter().for_each(|&x| free_push(&mut out, x));
        }
    }
    out
}

/// Images of the free generators under the Artin automorphism of `u`.
/// Two braids are equal iff their keys are equal.
pub fn artin_key(u: &BraidWord) -> Vec<FreeWord> {
    let n = u.strands();
    let mut img: Vec<FreeWord> = (1..=n as i32).map(|j| vec![j]).collect();
    for &g in u.letters() {
        let i = g.unsigned_abs() as usize - 1;
        let (a, b) = (img[i].clone(), img[i + 1].clone());
        if g > 0 {
            img[i] = free_concat(&[&a, &b, &a], &[false, false, true]);
            img[i + 1] = a;
        } else {
            img[i] = b.clone();
            img[i + 1] = free_concat(&[&b, &a, &b], &[true, false, false]);
        }
    }
    img
}

/// Word problem through the Artin action.
pub fn artin_equal(u: &BraidWord, v: &BraidWord) -> bool {
    u.strands() == v.strands() && artin_key(u) == artin_key(v)
}

/// All distinct elements that are products of at most `max_len` factors from
/// `gens ∪ gens⁻¹`, shortest first, each represented by its first-found word.
pub fn enumerate_words(n: usize, gens: &[BraidWord], max_len: usize, budget: usize) -> Result<Vec<BraidWord>> {
    if max_len > MAX_ENUM_LEN {
        return Err(BraidError::BudgetExceeded(max_len));
    }
    let mut alphabet = Vec::new();
    for g in gens {
        same_strands(n, g.strands())?;
        alphabet.push(g.clone());
        alphabet.push(g.invert());
    }
    let id = BraidWord::identity(n);
    let mut seen: HashSet<NormalForm> = HashSet::from([NormalForm::of_word(&id)]);
    let mut out = vec![id];
    let mut frontier = 0..1;
    for _ in 0..max_len {
        let start = out.len();
        for idx in frontier.clone() {
            for a in &alphabet {
                let w = out[idx].multiply(a)?;
                if seen.insert(NormalForm::of_word(&w)) {
                    if out.len() >= budget {
                        return Err(BraidError::BudgetExceeded(budget));
                    }
                    out.push(w);
                }
            }
        }
        if out.len() == start {
            break;
        }
        frontier = start..out.len();
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BruteOutcome<W> {
    Yes(W),
    /// No witness within the search bound.
    NoWithin(usize),
}

impl<W> BruteOutcome<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, BruteOutcome::Yes(_))
    }
}

/// Searches `a ∈ A`, `b ∈ B` of length at most `max_len` in the subgroup
/// generators with `a·g·b = g′`.
pub fn brute_dcp(
    a_spec: &ParabolicSpec,
    b_spec: &ParabolicSpec,
    g: &BraidWord,
    g_prime: &BraidWord,
    max_len: usize,
    budget: usize,
) -> Result<BruteOutcome<(BraidWord, BraidWord)>> {
    let n = g.strands();
    same_strands(n, g_prime.strands())?;
    same_strands(n, a_spec.n)?;
    same_strands(n, b_spec.n)?;
    let a_ball = enumerate_words(n, &a_spec.generators(), max_len, budget)?;
    let b_ball = enumerate_words(n, &b_spec.generators(), max_len, budget)?;
    let b_index: std::collections::HashMap<NormalForm, usize> =
        b_ball.iter().enumerate().rev().map(|(i, b)| (NormalForm::of_word(b), i)).collect();
    let g_inv = g.invert();
    for a in &a_ball {
        // b = g⁻¹ a⁻¹ g′
        let b = BraidWord::product(n, [&g_inv, &a.invert(), g_prime])?;
        if let Some(&i) = b_index.get(&NormalForm::of_word(&b)) {
            return Ok(BruteOutcome::Yes((a.clone(), b_ball[i].clone())));
        }
    }
    Ok(BruteOutcome::NoWithin(max_len))
}

/// Searches `x` of length at most `max_len` with `x⁻¹ s_i x = t_i` for all `i`.
pub fn brute_tuple_conjugator(
    s: &[BraidWord],
    t: &[BraidWord],
    max_len: usize,
    budget: usize,
) -> Result<BruteOutcome<BraidWord>> {
    if s.len() != t.len() {
        return Err(BraidError::TupleMismatch { left: s.len(), right: t.len() });
    }
    let n = s.first().ok_or(BraidError::EmptyTuple)?.strands();
    for w in s.iter().chain(t) {
        same_strands(n, w.strands())?;
    }
    let targets: Vec<NormalForm> = t.iter().map(NormalForm::of_word).collect();
    let gens: Vec<BraidWord> = (1..n).map(|i| BraidWord::from_raw(n, vec![i as i32])).collect();
    for x in enumerate_words(n, &gens, max_len, budget)? {
        let ok = s
            .iter()
            .zip(&targets)
            .all(|(si, ti)| NormalForm::of_word(&si.conjugate_by(&x).expect("same strands")) == *ti);
        if ok {
            return Ok(BruteOutcome::Yes(x));
        }
    }
    Ok(BruteOutcome::NoWithin(max_len))
}

pub fn brute_conjugator(
    u: &BraidWord,
    v: &BraidWord,
    max_len: usize,
    budget: usize,
) -> Result<BruteOutcome<BraidWord>> {
    brute_tuple_conjugator(std::slice::from_ref(u), std::slice::from_ref(v), max_len, budget)
}

/// Searches for a word of length at most `max_len` in `gens` equal to `u`.
pub fn brute_membership(
    u: &BraidWord,
    gens: &[BraidWord],
    max_len: usize,
    budget: usize,
) -> Result<BruteOutcome<BraidWord>> {
    let target = NormalForm::of_word(u);
    Ok(enumerate_words(u.strands(), gens, max_len, budget)?
        .into_iter()
        .find(|w| NormalForm::of_word(w) == target)
        .map_or(BruteOutcome::NoWithin(max_len), BruteOutcome::Yes))
}

#[derive(Clone, Debug, Serialize)]
pub struct DoubleCentralizerReport {
    pub n: usize,
    pub interval: Interval,
    pub samples: usize,
    /// Sampled words commuting with every centralizer generator.
    pub commuting: usize,
    /// Commuting words outside `⟨Δ²⟩·H`.
    pub violations: Vec<BraidWord>,
    /// Sampled words in `⟨Δ²⟩·H` that failed to commute.
    pub non_commuting_members: Vec<BraidWord>,
}

/// Samples words of at most `max_len` tokens and checks that commuting with
/// the centralizer of `H = B_interval` is the same as lying in `⟨Δ²⟩·H`.
///
/// Uniform random braids almost never commute with anything, so tokens are
/// drawn from block generators, `Δ²` and all `σ_i` in equal parts.
pub fn brute_double_centralizer(
    n: usize,
    interval: Interval,
    samples: usize,
    max_len: usize,
    seed: u64,
) -> Result<DoubleCentralizerReport> {
    Interval::new(interval.k(), interval.l(), n)?;
    let cgens: Vec<NormalForm> = centralizer_generators(n, interval)?.gens.iter().map(NormalForm::of_word).collect();
    let block = interval.generators(n);
    let all: Vec<BraidWord> = (1..n).map(|i| BraidWord::from_raw(n, vec![i as i32])).collect();
    let twist = fundamental_power(n, 2);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut report = DoubleCentralizerReport {
        n,
        interval,
        samples,
        commuting: 0,
        violations: Vec::new(),
        non_commuting_members: Vec::new(),
    };
    for _ in 0..samples {
        let len = rng.gen_range(0..=max_len);
        let mut letters = Vec::new();
        for _ in 0..len {
            let tok = match rng.gen_range(0..3) {
                0 => &block[rng.gen_range(0..block.len())],
                1 => &twist,
                _ => &all[rng.gen_range(0..all.len())],
            };
            let tok = if rng.gen_bool(0.5) { tok.clone() } else { tok.invert() };
            letters.extend_from_slice(tok.letters());
        }
        let x = BraidWord::from_raw(n, letters);
        let xn = NormalForm::of_word(&x);
        let commutes = cgens.iter().all(|c| xn.mul_unchecked(c) == c.mul_unchecked(&xn));
        let member = membership_in_center_times_parabolic(&x, interval);
        if commutes {
            report.commuting += 1;
            if !member {
                report.violations.push(x);
            }
        } else if member {
            report.non_commuting_members.push(x);
        }
    }
    Ok(report)
}
