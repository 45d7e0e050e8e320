//! Conjugacy and simultaneous conjugacy of tuples via summit sets.
//!
//! Orientation: a solution of `s ~ t` is `x` with `x⁻¹ s_i x = t_i` for all `i`.
//!
//! The search has two phases. First each tuple is pushed down to a local
//! minimum of the complexity `(-Σ inf, Σ sup)` by conjugating with permutation
//! braids (the summit). Then, with bounds `inf ≥ a_i`, `sup ≤ b_i` taken
//! componentwise from both summits, the finite set of conjugate tuples inside
//! those bounds is explored from one summit. For fixed bounds the set of
//! conjugators landing inside is closed under left gcds and contains `Δ`, so
//! the set is connected under conjugation by permutation braids: exhausting it
//! without meeting the other summit proves the tuples are not conjugate.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::garside::NormalForm;
use crate::perm::permutation_of;
use crate::simple::PermutationBraid;
use crate::word::{same_strands, BraidWord};

pub const DEFAULT_BUDGET: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjTuple {
    n: usize,
    components: Vec<BraidWord>,
}

impl ConjTuple {
    pub fn new(components: Vec<BraidWord>) -> Result<Self> {
        let n = components.first().ok_or(BraidError::EmptyTuple)?.strands();
        for c in &components {
            same_strands(n, c.strands())?;
        }
        Ok(ConjTuple { n, components })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[BraidWord] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    fn normal_forms(&self) -> Vec<NormalForm> {
        self.components.iter().map(NormalForm::of_word).collect()
    }
}

/// A conjugate of a seed tuple with the conjugator that produced it:
/// `conjugator⁻¹ · seed_i · conjugator = tuple_i`.
#[derive(Clone, Debug, Serialize)]
pub struct SummitNode {
    pub tuple: ConjTuple,
    pub conjugator: BraidWord,
    /// `(-Σ inf, Σ sup)` of the tuple.
    pub complexity: (i64, i64),
    /// False when the node budget ran out before the level was exhausted.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ConjOutcome {
    Found(BraidWord),
    NoSolution,
    Inconclusive { budget: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Maximum number of tuples expanded over the whole search.
    pub budget: usize,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, threads: 1 }
    }
}

/// Conjugation by the first factor `τ^{-p}(x₁)`; returns the new word.
pub fn cycling(u: &BraidWord) -> BraidWord {
    cycle_nf(&NormalForm::of_word(u)).0.to_word()
}

/// Conjugation by the inverse of the last factor.
pub fn decycling(u: &BraidWord) -> BraidWord {
    decycle_nf(&NormalForm::of_word(u)).0.to_word()
}

/// Returns the cycled element and the conjugator `c` (`c⁻¹ u c`).
pub(crate) fn cycle_nf(u: &NormalForm) -> (NormalForm, NormalForm) {
    match u.factors().first() {
        None => (u.clone(), NormalForm::identity(u.strands())),
        Some(x1) => {
            let c = NormalForm::from_simple(&x1.flip_pow(u.delta_power()));
            (u.conjugate(&c), c)
        }
    }
}

pub(crate) fn decycle_nf(u: &NormalForm) -> (NormalForm, NormalForm) {
    match u.factors().last() {
        None => (u.clone(), NormalForm::identity(u.strands())),
        Some(xl) => {
            let c = NormalForm::from_simple(xl).inverse();
            (u.conjugate(&c), c)
        }
    }
}

type Tuple = Vec<NormalForm>;

fn complexity(t: &Tuple) -> (i64, i64) {
    t.iter().fold((0, 0), |(a, b), x| (a - x.inf(), b + x.sup()))
}

fn conj_tuple(t: &Tuple, s: &PermutationBraid) -> Tuple {
    t.iter().map(|x| x.conjugate_by_simple(s)).collect()
}

struct Budget {
    limit: usize,
    used: usize,
}

impl Budget {
    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}

/// All conjugates of `t` by the nontrivial permutation braids, in a fixed order.
fn neighbours(t: &Tuple, simples: &[PermutationBraid], threads: usize) -> Vec<Tuple> {
    if threads <= 1 || simples.len() < 2 * threads {
        return simples.iter().map(|s| conj_tuple(t, s)).collect();
    }
    let chunk = simples.len().div_ceil(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = simples
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|s| conj_tuple(t, s)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

struct Climbed {
    tuple: Tuple,
    conjugator: NormalForm,
    complexity: (i64, i64),
    complete: bool,
}

/// Descends to a local minimum of the complexity. At each level every tuple
/// of equal complexity reachable by permutation-braid conjugation is visited;
/// meeting a strictly smaller one restarts the level from there. The
/// representative returned is the smallest tuple of the final level.
fn climb(start: Tuple, simples: &[PermutationBraid], budget: &mut Budget, threads: usize) -> Climbed {
    let n = start[0].strands();
    let mut cur = start;
    let mut cur_conj = NormalForm::identity(n);
    'restart: loop {
        let level = complexity(&cur);
        let mut seen: HashMap<Tuple, NormalForm> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(cur.clone(), cur_conj.clone());
        queue.push_back(cur.clone());
        while let Some(node) = queue.pop_front() {
            if !budget.tick() {
                return Climbed { tuple: cur, conjugator: cur_conj, complexity: level, complete: false };
            }
            let node_conj = seen[&node].clone();
            for (s, nb) in simples.iter().zip(neighbours(&node, simples, threads)) {
                let c = complexity(&nb);
                if c < level {
                    cur_conj = node_conj.mul_unchecked(&NormalForm::from_simple(s));
                    cur = nb;
                    continue 'restart;
                }
                if c == level && !seen.contains_key(&nb) {
                    seen.insert(nb.clone(), node_conj.mul_unchecked(&NormalForm::from_simple(s)));
                    queue.push_back(nb);
                }
            }
        }
        let (rep, conj) = seen.into_iter().min_by(|a, b| a.0.cmp(&b.0)).expect("level is nonempty");
        return Climbed { tuple: rep, conjugator: conj, complexity: level, complete: true };
    }
}

fn nontrivial_simples(n: usize) -> Vec<PermutationBraid> {
    PermutationBraid::all(n).into_iter().skip(1).collect()
}

/// Conjugates the tuple, with one common conjugator, to a summit of the
/// complexity `(-Σ inf, Σ sup)`.
pub fn summit_tuple(t: &ConjTuple, opts: SearchOptions) -> SummitNode {
    let simples = nontrivial_simples(t.n);
    let mut budget = Budget { limit: opts.budget, used: 0 };
    let c = climb(t.normal_forms(), &simples, &mut budget, opts.threads);
    SummitNode {
        tuple: ConjTuple { n: t.n, components: c.tuple.iter().map(NormalForm::to_word).collect() },
        conjugator: c.conjugator.to_word(),
        complexity: c.complexity,
        complete: c.complete,
    }
}

/// Cheap necessary conditions: exponent sums and permutation cycle types.
fn invariants_differ(s: &ConjTuple, t: &ConjTuple) -> bool {
    s.components.iter().zip(&t.components).any(|(a, b)| {
        a.exponent_sum() != b.exponent_sum() || permutation_of(a).cycle_type() != permutation_of(b).cycle_type()
    })
}

fn in_box(t: &Tuple, bounds: &[(i64, i64)]) -> bool {
    t.iter().zip(bounds).all(|(x, &(lo, hi))| x.inf() >= lo && x.sup() <= hi)
}

/// Finds `x` with `x⁻¹ s_i x = t_i` for every `i`, proves there is none, or
/// gives up after the node budget.
pub fn solve_simultaneous_conjugacy(s: &ConjTuple, t: &ConjTuple, opts: SearchOptions) -> Result<ConjOutcome> {
    same_strands(s.n, t.n)?;
    if s.len() != t.len() {
        return Err(BraidError::TupleMismatch { left: s.len(), right: t.len() });
    }
    if invariants_differ(s, t) {
        return Ok(ConjOutcome::NoSolution);
    }
    let n = s.n;
    let s_nf = s.normal_forms();
    let t_nf = t.normal_forms();
    if s_nf == t_nf {
        return Ok(ConjOutcome::Found(BraidWord::identity(n)));
    }
    let simples = nontrivial_simples(n);
    let mut budget = Budget { limit: opts.budget, used: 0 };
    let inconclusive = ConjOutcome::Inconclusive { budget: opts.budget };

    let cs = climb(s_nf.clone(), &simples, &mut budget, opts.threads);
    if !cs.complete {
        return Ok(inconclusive);
    }
    let ct = climb(t_nf.clone(), &simples, &mut budget, opts.threads);
    if !ct.complete {
        return Ok(inconclusive);
    }

    let bounds: Vec<(i64, i64)> =
        cs.tuple.iter().zip(&ct.tuple).map(|(a, b)| (a.inf().min(b.inf()), a.sup().max(b.sup()))).collect();

    // Breadth-first search of the bounded set from the summit of s.
    let mut seen: HashMap<Tuple, NormalForm> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(cs.tuple.clone(), NormalForm::identity(n));
    queue.push_back(cs.tuple.clone());
    let path = loop {
        let Some(node) = queue.pop_front() else {
            return Ok(ConjOutcome::NoSolution);
        };
        if node == ct.tuple {
            break seen[&node].clone();
        }
        if !budget.tick() {
            return Ok(inconclusive);
        }
        let node_conj = seen[&node].clone();
        for (sm, nb) in simples.iter().zip(neighbours(&node, &simples, opts.threads)) {
            if in_box(&nb, &bounds) && !seen.contains_key(&nb) {
                seen.insert(nb.clone(), node_conj.mul_unchecked(&NormalForm::from_simple(sm)));
                queue.push_back(nb);
            }
        }
    };

    let x = cs.conjugator.mul_unchecked(&path).mul_unchecked(&ct.conjugator.inverse());
    if !verify_nf(&s_nf, &t_nf, &x) {
        return Err(BraidError::InvariantViolation(format!("conjugator {} failed verification", x.to_word())));
    }
    Ok(ConjOutcome::Found(x.to_word()))
}

fn verify_nf(s: &Tuple, t: &Tuple, x: &NormalForm) -> bool {
    s.iter().zip(t).all(|(a, b)| a.conjugate(x) == *b)
}

/// Checks `x⁻¹ s_i x = t_i` componentwise with the word problem.
pub fn verify_conjugator(s: &ConjTuple, t: &ConjTuple, x: &BraidWord) -> bool {
    s.len() == t.len()
        && s.n == x.strands()
        && t.n == x.strands()
        && verify_nf(&s.normal_forms(), &t.normal_forms(), &NormalForm::of_word(x))
}

/// Finds `x` with `x⁻¹ u x = v`.
pub fn solve_conjugacy(u: &BraidWord, v: &BraidWord, opts: SearchOptions) -> Result<ConjOutcome> {
    solve_simultaneous_conjugacy(&ConjTuple::new(vec![u.clone()])?, &ConjTuple::new(vec![v.clone()])?, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::{fundamental_power, inf, sup};

    fn w(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    fn tuple(ws: &[&str], n: usize) -> ConjTuple {
        ConjTuple::new(ws.iter().map(|s| w(s, n)).collect()).unwrap()
    }

    #[test]
    fn cycling_fixes_delta_powers() {
        let d = fundamental_power(3, 2);
        assert_eq!(NormalForm::of_word(&cycling(&d)), NormalForm::of_word(&d));
        assert_eq!(NormalForm::of_word(&decycling(&d)), NormalForm::of_word(&d));
    }

    #[test]
    fn cycling_does_not_lower_inf() {
        let u = w("1 2", 3);
        assert!(inf(&cycling(&u)) >= inf(&u));
        let v = w("-1 2 2 1 -2 3 1", 4);
        assert!(inf(&cycling(&v)) >= inf(&v));
        assert!(sup(&decycling(&v)) <= sup(&v));
    }

    #[test]
    fn cycling_reaches_short_representative() {
        // σ₂σ₁σ₂⁻¹ is conjugate to σ₁
        let mut u = NormalForm::of_word(&w("2 1 -2", 3));
        for _ in 0..6 {
            u = cycle_nf(&u).0;
            u = decycle_nf(&u).0;
        }
        assert_eq!(u.canonical_length(), 1);
        assert_eq!(u.inf(), 0);
    }

    #[test]
    fn summit_of_central_element() {
        let node = summit_tuple(&tuple(&["1 2 1 1 2 1"], 3), SearchOptions::default());
        assert!(node.complete);
        assert!(crate::garside::is_trivial(&node.conjugator));
        assert_eq!(node.complexity, (-2, 2));
    }

    #[test]
    fn summits_of_generators_have_length_one() {
        for g in ["1", "2", "2 1 -2", "-1 -1 2 1 1"] {
            let node = summit_tuple(&tuple(&[g], 3), SearchOptions::default());
            assert_eq!(node.complexity, (0, 1), "{g}");
        }
    }

    #[test]
    fn summit_node_conjugator_is_consistent() {
        let t = tuple(&["1 -2 1", "2 2 -1"], 3);
        let node = summit_tuple(&t, SearchOptions::default());
        assert!(verify_conjugator(&t, &node.tuple, &node.conjugator));
    }

    #[test]
    fn conjugacy_examples() {
        let opts = SearchOptions::default();
        let x = match solve_conjugacy(&w("1", 3), &w("2", 3), opts).unwrap() {
            ConjOutcome::Found(x) => x,
            other => panic!("{other:?}"),
        };
        assert!(verify_conjugator(&tuple(&["1"], 3), &tuple(&["2"], 3), &x));
        assert_eq!(solve_conjugacy(&w("1", 3), &w("-1", 3), opts).unwrap(), ConjOutcome::NoSolution);
        let u = w("1 -2 2 1", 3);
        assert_eq!(solve_conjugacy(&u, &u, opts).unwrap(), ConjOutcome::Found(BraidWord::identity(3)));
    }

    #[test]
    fn non_conjugate_with_equal_cheap_invariants() {
        // σ₁σ₂²σ₁⁻¹ is a conjugate of σ₂², hence of σ₁²
        let u = w("1 1", 3);
        let v = w("1 2 2 -1", 3);
        assert!(matches!(solve_conjugacy(&u, &v, SearchOptions::default()).unwrap(), ConjOutcome::Found(_)));
        // same exponent sum and permutation, different conjugacy classes
        let a = w("1 1 2 2", 3);
        let b = w("1 1 1 1", 3);
        assert_eq!(solve_conjugacy(&a, &b, SearchOptions::default()).unwrap(), ConjOutcome::NoSolution);
    }

    #[test]
    fn simultaneous_examples() {
        let opts = SearchOptions::default();
        let s = tuple(&["1", "2"], 3);
        assert_eq!(solve_simultaneous_conjugacy(&s, &s, opts).unwrap(), ConjOutcome::Found(BraidWord::identity(3)));
        let t = tuple(&["2", "1"], 3);
        match solve_simultaneous_conjugacy(&s, &t, opts).unwrap() {
            ConjOutcome::Found(x) => assert!(verify_conjugator(&s, &t, &x)),
            other => panic!("{other:?}"),
        }
        let delta = crate::garside::delta(3);
        assert!(verify_conjugator(&s, &t, &delta));
        let t2 = tuple(&["1", "-2"], 3);
        assert_eq!(solve_simultaneous_conjugacy(&s, &t2, opts).unwrap(), ConjOutcome::NoSolution);
        assert!(solve_simultaneous_conjugacy(&s, &tuple(&["1"], 3), opts).is_err());
    }

    #[test]
    fn simultaneous_no_solution_with_conjugate_components() {
        // (σ₁, σ₁) vs (σ₁, σ₂): components pairwise conjugate, tuples are not
        let s = tuple(&["1", "1"], 3);
        let t = tuple(&["1", "2"], 3);
        assert_eq!(solve_simultaneous_conjugacy(&s, &t, SearchOptions::default()).unwrap(), ConjOutcome::NoSolution);
    }

    #[test]
    fn threaded_search_matches_sequential() {
        let s = tuple(&["1 2 -1", "2 2 1"], 4);
        let x = w("3 -1 2 2 -3", 4);
        let t = ConjTuple::new(s.components().iter().map(|c| c.conjugate_by(&x).unwrap()).collect()).unwrap();
        let seq = solve_simultaneous_conjugacy(&s, &t, SearchOptions { budget: 100_000, threads: 1 }).unwrap();
        let par = solve_simultaneous_conjugacy(&s, &t, SearchOptions { budget: 100_000, threads: 4 }).unwrap();
        assert_eq!(seq, par);
        match seq {
            ConjOutcome::Found(y) => assert!(verify_conjugator(&s, &t, &y)),
            other => panic!("{other:?}"),
        }
    }
}
