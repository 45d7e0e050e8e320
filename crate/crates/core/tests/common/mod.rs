#![allow(dead_code)]

use braid_dcp::parabolic::{Interval, ParabolicSpec};
use braid_dcp::BraidWord;
use rand::rngs::StdRng;
use rand::Rng;

pub fn word(s: &str, n: usize) -> BraidWord {
    BraidWord::parse(s, n).unwrap()
}

pub fn random_word(rng: &mut StdRng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// Word in the letters `σ_k..σ_{l-1}` only.
pub fn random_block_word(rng: &mut StdRng, n: usize, interval: Interval, len: usize) -> BraidWord {
    let (k, l) = (interval.k() as i32, interval.l() as i32);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(k..l);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn random_interval(rng: &mut StdRng, n: usize, min_size: usize, max_size: usize) -> Interval {
    let m = rng.gen_range(min_size..=max_size.min(n));
    let k = rng.gen_range(1..=n - m + 1);
    Interval::new(k, k + m - 1, n).unwrap()
}

pub fn random_proper_interval(rng: &mut StdRng, n: usize) -> Interval {
    random_interval(rng, n, 2, n - 1)
}

pub fn random_spec(rng: &mut StdRng, n: usize, max_block: usize, alpha_len: usize) -> ParabolicSpec {
    let interval = random_interval(rng, n, 2, max_block);
    let len = rng.gen_range(0..=alpha_len);
    ParabolicSpec::new(n, random_word(rng, n, len), interval).unwrap()
}

/// Random product of at most `len` subgroup generators and their inverses.
pub fn random_element(rng: &mut StdRng, spec: &ParabolicSpec, len: usize) -> BraidWord {
    let gens = spec.generators();
    let count = rng.gen_range(0..=len);
    let parts: Vec<BraidWord> = (0..count)
        .map(|_| {
            let g = &gens[rng.gen_range(0..gens.len())];
            if rng.gen_bool(0.5) {
                g.clone()
            } else {
                g.invert()
            }
        })
        .collect();
    BraidWord::product(spec.n, &parts).unwrap()
}
