//! Shared helpers and independent oracles for the integration tests. The
//! oracles go through truth tables and exhaustive enumeration only, never
//! through the transform or solver paths they are checking.
#![allow(dead_code)] // each test target uses a different helper subset

use nlcore::{AffineCoefficients, BitVec, BooleanFunction};

/// Builds a function on `n <= 6` variables from the truth-table bits of a
/// word.
pub fn from_word(n: usize, tt: u64) -> BooleanFunction {
    assert!(n <= 6);
    BooleanFunction::new(n, BitVec::from_words(1 << n, vec![tt]))
}

/// All `2^(2^n)` functions on `n <= 4` variables.
pub fn all_functions(n: usize) -> impl Iterator<Item = BooleanFunction> {
    assert!(n <= 4);
    (0..1u64 << (1 << n)).map(move |tt| from_word(n, tt))
}

/// Exhaustive distance minimum over every affine function.
pub fn exhaustive_nonlinearity(f: &BooleanFunction) -> u32 {
    AffineCoefficients::enumerate(f.n())
        .map(|a| f.distance(&BooleanFunction::affine(&a)) as u32)
        .min()
        .unwrap()
}

/// All affine distances of `f`, indexed by coefficient mask.
pub fn distance_table(f: &BooleanFunction) -> Vec<i64> {
    AffineCoefficients::enumerate(f.n())
        .map(|a| f.distance(&BooleanFunction::affine(&a)) as i64)
        .collect()
}
