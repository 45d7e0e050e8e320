//! Generating sets for centralizers of standard parabolic subgroups.
//!
//! Collapse the block `k..=l` into one fat strand. A braid centralizes
//! `B_[k,l]` iff it is a braid of the collapsed strands in which the fat
//! strand returns to its slot, times a central element of the block. The
//! collapsed braids fixing the fat slot are generated by the far generators,
//! the two loops of the fat strand around its neighbours, and the swap of
//! the two neighbours passing around the fat strand.

use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::garside::NormalForm;
use crate::parabolic::{full_twist, Interval};
use crate::word::BraidWord;

#[derive(Clone, Debug, Serialize)]
pub struct CentralizerGens {
    pub n: usize,
    pub interval: Interval,
    pub gens: Vec<BraidWord>,
}

fn word(n: usize, letters: impl IntoIterator<Item = i32>) -> BraidWord {
    BraidWord::from_raw(n, letters.into_iter().collect())
}

/// Block full twist `(σ_k ⋯ σ_{l-1})^{l-k+1}`.
pub fn block_twist(n: usize, interval: Interval) -> BraidWord {
    let (k, l) = (interval.k() as i32, interval.l() as i32);
    let cycle: Vec<i32> = (k..l).collect();
    word(n, std::iter::repeat_n(cycle, interval.size()).flatten())
}

/// Loop of the strand at `l+1` around the block:
/// `(σ_l σ_{l-1} ⋯ σ_k)(σ_k ⋯ σ_{l-1} σ_l)`. Needs `l ≤ n - 1`.
pub fn loop_right(n: usize, interval: Interval) -> BraidWord {
    let (k, l) = (interval.k() as i32, interval.l() as i32);
    word(n, (k..=l).rev().chain(k..=l))
}

/// Loop of the strand at `k-1` around the block:
/// `(σ_{k-1} σ_k ⋯ σ_{l-1})(σ_{l-1} ⋯ σ_k σ_{k-1})`. Needs `k ≥ 2`.
pub fn loop_left(n: usize, interval: Interval) -> BraidWord {
    let (k, l) = (interval.k() as i32, interval.l() as i32);
    word(n, (k - 1..l).chain((k - 1..l).rev()))
}

/// The strands at `k-1` and `l+1` trade places, one passing over the block
/// and one under: `w σ_l w⁻¹` with `w = σ_{k-1} σ_k ⋯ σ_{l-1}`.
/// Needs `k ≥ 2` and `l ≤ n - 1`.
pub fn neighbour_swap(n: usize, interval: Interval) -> BraidWord {
    let (k, l) = (interval.k() as i32, interval.l() as i32);
    word(n, (k - 1..l).chain(std::iter::once(l)).chain((k - 1..l).rev().map(|i| -i)))
}

pub fn centralizer_generators(n: usize, interval: Interval) -> Result<CentralizerGens> {
    Interval::new(interval.k(), interval.l(), n)?;
    let (k, l) = (interval.k(), interval.l());
    let mut gens = Vec::new();
    if interval.size() == n {
        gens.push(full_twist(n));
    } else {
        gens.push(block_twist(n, interval));
        for i in (1..k.saturating_sub(1)).chain(l + 1..n) {
            gens.push(word(n, [i as i32]));
        }
        if k >= 2 {
            gens.push(loop_left(n, interval));
        }
        if l < n {
            gens.push(loop_right(n, interval));
        }
        if k >= 2 && l < n {
            gens.push(neighbour_swap(n, interval));
        }
        if interval.size() == 2 {
            gens.push(word(n, [k as i32]));
        }
    }
    let out = CentralizerGens { n, interval, gens };
    if !verify_centralizing(&out) {
        return Err(BraidError::InvariantViolation(format!(
            "centralizer generators of B_{interval} in B_{n} fail to commute with the block"
        )));
    }
    Ok(out)
}

/// Whether every generator commutes with every `σ_i`, `k ≤ i < l`.
pub fn verify_centralizing(gens: &CentralizerGens) -> bool {
    let block: Vec<NormalForm> = gens.interval.generators(gens.n).iter().map(NormalForm::of_word).collect();
    gens.gens.iter().all(|g| {
        if g.strands() != gens.n {
            return false;
        }
        let gn = NormalForm::of_word(g);
        block.iter().all(|s| gn.mul_unchecked(s) == s.mul_unchecked(&gn))
    })
}
