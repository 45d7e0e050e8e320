//! Strand bookkeeping: algebraic crossing numbers and strand deletion.
//!
//! Strands are labelled by their left end points (`1..=n`). `σ_i` crosses the
//! strand at position `i` over the strand at position `i+1` and counts `+1`;
//! `σ_i⁻¹` counts `-1`.

use std::collections::BTreeSet;

use crate::error::{BraidError, Result};
use crate::word::BraidWord;

/// Signed number of crossings between the strands starting at `i` and `j`.
pub fn crossing_number(u: &BraidWord, i: usize, j: usize) -> Result<i64> {
    let n = u.strands();
    for label in [i, j] {
        if label == 0 || label > n {
            return Err(BraidError::LabelOutOfRange { label, n });
        }
    }
    if i == j {
        return Err(BraidError::InvalidPair { i, j });
    }
    let (mut pi, mut pj) = (i, j);
    let mut cr = 0i64;
    for &l in u.letters() {
        let k = l.unsigned_abs() as usize;
        let hits_i = pi == k || pi == k + 1;
        let hits_j = pj == k || pj == k + 1;
        if hits_i && hits_j {
            cr += l.signum() as i64;
        }
        for p in [&mut pi, &mut pj] {
            if *p == k {
                *p = k + 1;
            } else if *p == k + 1 {
                *p = k;
            }
        }
    }
    Ok(cr)
}

/// All pairwise crossing numbers; entry `[i-1][j-1]` is `cr(u)(i, j)`.
pub fn crossing_matrix(u: &BraidWord) -> Vec<Vec<i64>> {
    let n = u.strands();
    let mut m = vec![vec![0i64; n]; n];
    let mut at: Vec<usize> = (0..n).collect();
    for &l in u.letters() {
        let k = l.unsigned_abs() as usize - 1;
        let (a, b) = (at[k], at[k + 1]);
        m[a][b] += l.signum() as i64;
        m[b][a] += l.signum() as i64;
        at.swap(k, k + 1);
    }
    m
}

/// Geometric deletion of the strands whose left end points are in `remove`.
/// Crossings involving a removed strand disappear and the survivors are
/// renumbered; the result lives in `B_{n - |remove|}`.
pub fn delete_strands(u: &BraidWord, remove: &[usize]) -> Result<BraidWord> {
    let n = u.strands();
    let removed: BTreeSet<usize> = remove.iter().copied().collect();
    if let Some(&bad) = removed.iter().find(|&&r| r == 0 || r > n) {
        return Err(BraidError::LabelOutOfRange { label: bad, n });
    }
    if removed.len() >= n {
        return Err(BraidError::RemoveAll);
    }
    let m = n - removed.len();
    // at[p] = whether the strand currently at position p is kept
    let mut kept: Vec<bool> = (1..=n).map(|s| !removed.contains(&s)).collect();
    let mut letters = Vec::new();
    for &l in u.letters() {
        let k = l.unsigned_abs() as usize - 1;
        if kept[k] && kept[k + 1] {
            let rank = kept[..k].iter().filter(|&&x| x).count() + 1;
            letters.push(l.signum() * rank as i32);
        }
        kept.swap(k, k + 1);
    }
    BraidWord::new(m, letters)
}
