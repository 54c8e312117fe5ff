//! Fixtures shared by the benchmarks.

use affvoa::{Generator, Uea};

/// A word whose normal ordering needs many commutator steps: raising
/// generators first, lowering generators last.
pub fn reversed_word(l: usize, exp: u32) -> Vec<(Generator, u32)> {
    let mut word = Vec::new();
    for i in 1..=l {
        for j in i + 1..=l + 1 {
            word.push((Generator::e(i, j), exp));
        }
    }
    for i in 1..=l {
        word.push((Generator::h(i), 1));
    }
    for i in 1..=l {
        for j in i + 1..=l + 1 {
            word.push((Generator::f(i, j), exp));
        }
    }
    word
}

/// A fresh algebra, so no memoized products survive between iterations.
pub fn cold_uea(l: usize) -> Uea {
    Uea::new(l).expect("rank is positive")
}
