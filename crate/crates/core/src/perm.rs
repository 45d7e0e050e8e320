//! Permutations of strand positions.
//!
//! Convention: a braid acts on the right on the labels `1..=n` of its left
//! end points. The permutation of a braid sends `i` to the position where
//! the strand starting at position `i` ends, so the permutation of `u·v` is
//! "first `u`, then `v`".

use std::fmt;

use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::word::BraidWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds from 1-based images; fails unless `images` is a bijection of `1..=n`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &im in images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(BraidError::Parse(format!("not a permutation: {images:?}")));
            }
            seen[im - 1] = true;
            out.push(im - 1);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based label `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// Sorted cycle lengths, a conjugacy invariant of `S_n`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

/// The permutation induced by a braid word.
pub fn permutation_of(u: &BraidWord) -> Permutation {
    // pos_of[s] = current position of the strand that started at s
    let n = u.strands();
    let mut at: Vec<usize> = (0..n).collect(); // at[p] = strand label at position p
    for &l in u.letters() {
        let i = l.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    let mut images = vec![0; n];
    for (p, &s) in at.iter().enumerate() {
        images[s] = p;
    }
    Permutation { images }
}
