//! Braid words over the Artin generators.
//!
//! A letter is a nonzero signed integer: `i` stands for `σ_i` and `-i` for
//! `σ_i⁻¹`. Words are products read left to right.

use std::fmt;

use serde::Serialize;

use crate::error::{BraidError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// The empty word of `B_n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "braid groups need at least one strand");
        BraidWord { n, letters: Vec::new() }
    }

    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(BraidError::InvalidStrandCount(n));
        }
        for &l in &letters {
            check_letter(l, n)?;
        }
        Ok(BraidWord { n, letters })
    }

    /// Internal constructor for letters already known to be in range.
    pub(crate) fn from_raw(n: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&l| check_letter(l, n).is_ok()));
        BraidWord { n, letters }
    }

    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Self::new(n, vec![i as i32])
    }

    /// Parses whitespace-separated tokens: signed integers (`2`, `-1`) or
    /// `sK` / `sK^-1` forms.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            letters.push(parse_token(tok)?);
        }
        Self::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        same_strands(self.n, other.n)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Concatenation of several words; all must live in the same `B_n`.
    pub fn product<'a, I>(n: usize, words: I) -> Result<BraidWord>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut letters = Vec::new();
        for w in words {
            same_strands(n, w.n)?;
            letters.extend_from_slice(&w.letters);
        }
        Ok(BraidWord { n, letters })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// `x⁻¹ · self · x`.
    pub fn conjugate_by(&self, x: &BraidWord) -> Result<BraidWord> {
        BraidWord::product(self.n, [&x.invert(), self, x])
    }

    /// Reinterprets the word in `B_m` for `m ≥` the largest index used + 1.
    pub fn embed(&self, m: usize) -> Result<BraidWord> {
        Self::new(m, self.letters.clone())
    }

    /// Removes adjacent `σ_i σ_i⁻¹` pairs; purely cosmetic.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { n: self.n, letters: out }
    }
}

/// Serialized as its display string, e.g. `"1 -2 3"`.
impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

pub(crate) fn same_strands(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(BraidError::StrandMismatch { left: a, right: b })
    }
}

fn check_letter(l: i32, n: usize) -> Result<()> {
    let i = l.unsigned_abs() as usize;
    if l == 0 || i >= n {
        Err(BraidError::IndexOutOfRange { index: l as i64, n })
    } else {
        Ok(())
    }
}

fn parse_token(tok: &str) -> Result<i32> {
    let bad = || BraidError::MalformedToken(tok.to_string());
    if let Some(rest) = tok.strip_prefix('s').or_else(|| tok.strip_prefix('S')) {
        let (idx, sign) = match rest.split_once('^') {
            Some((idx, "-1")) => (idx, -1),
            Some((idx, "1")) => (idx, 1),
            Some(_) => return Err(bad()),
            None => (rest, 1),
        };
        if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let i: i32 = idx.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        return Ok(sign * i);
    }
    let v: i32 = tok.parse().map_err(|_| bad())?;
    if v == 0 {
        return Err(BraidError::IndexOutOfRange { index: 0, n: 0 });
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_signed_tokens() {
        let w = BraidWord::parse("1 2 -1", 3).unwrap();
        assert_eq!(w.letters(), &[1, 2, -1]);
        assert!(BraidWord::parse("", 4).unwrap().is_empty());
    }

    #[test]
    fn parse_s_forms() {
        let w = BraidWord::parse("s1 s2^-1 S3^1", 4).unwrap();
        assert_eq!(w.letters(), &[1, -2, 3]);
    }

    #[test]
    fn parse_rejects_out_of_range_and_garbage() {
        assert!(matches!(BraidWord::parse("3", 3), Err(BraidError::IndexOutOfRange { index: 3, n: 3 })));
        assert!(matches!(BraidWord::parse("-3", 3), Err(BraidError::IndexOutOfRange { .. })));
        assert!(matches!(BraidWord::parse("0", 3), Err(BraidError::IndexOutOfRange { .. })));
        assert!(matches!(BraidWord::parse("x2", 3), Err(BraidError::MalformedToken(_))));
        assert!(matches!(BraidWord::parse("s2^3", 3), Err(BraidError::MalformedToken(_))));
        assert!(matches!(BraidWord::parse("s", 3), Err(BraidError::MalformedToken(_))));
    }

    #[test]
    fn multiply_and_invert() {
        let a = BraidWord::parse("1 2", 3).unwrap();
        assert_eq!(a.invert().letters(), &[-2, -1]);
        let id = BraidWord::identity(3);
        assert_eq!(id.multiply(&a).unwrap(), a);
        let b = BraidWord::parse("1", 4).unwrap();
        assert!(a.multiply(&b).is_err());
    }

    #[test]
    fn display_round_trips() {
        let w = BraidWord::parse("1 -2 3", 4).unwrap();
        assert_eq!(w.to_string(), "1 -2 3");
        assert_eq!(BraidWord::parse(&w.to_string(), 4).unwrap(), w);
    }
}
