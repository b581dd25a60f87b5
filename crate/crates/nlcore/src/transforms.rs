//! The three butterfly transforms: fast Möbius over F2, fast Walsh over the
//! integers, and the pair converting between integer evaluation vectors and
//! multilinear coefficient vectors.
//!
//! All integer transforms are exact; values stay within `i64` for the
//! supported variable counts (see [`crate::bf::MAX_VARS`]). The integer
//! butterflies report how many additions and subtractions they performed,
//! which feeds the operation-count instrumentation.

use crate::bf::BooleanFunction;
use crate::bits::{BitVec, LO_MASKS};

/// In-place fast Möbius transform on a bit vector whose length is a power of
/// two: for each variable `j` and each index pair `(i, i + 2^j)` within a
/// block, the high entry absorbs the low one. It converts a truth table into
/// ANF coefficients and back; the transform is an involution.
pub fn mobius_in_place(v: &mut BitVec) {
    let len = v.len();
    assert!(len.is_power_of_two(), "length {len} is not a power of two");
    let levels = len.trailing_zeros() as usize;
    let words = v.words_mut();
    for (j, &mask) in LO_MASKS.iter().enumerate().take(levels.min(6)) {
        for w in words.iter_mut() {
            *w ^= (*w & mask) << (1 << j);
        }
    }
    for j in 6..levels {
        let stride = 1 << (j - 6);
        let mut base = 0;
        while base < words.len() {
            for k in 0..stride {
                words[base + stride + k] ^= words[base + k];
            }
            base += 2 * stride;
        }
    }
}

/// In-place fast Walsh–Hadamard butterfly: each pair `(a, b)` becomes
/// `(a + b, a - b)`. Returns the number of additions performed, `n * 2^n`
/// for a vector of length `2^n`.
pub fn walsh_in_place(values: &mut [i64]) -> u64 {
    let len = values.len();
    assert!(len.is_power_of_two(), "length {len} is not a power of two");
    let mut stride = 1;
    while stride < len {
        for block in values.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let diff = *a - *b;
                *a += *b;
                *b = diff;
            }
        }
        stride <<= 1;
    }
    (len.trailing_zeros() as u64) * len as u64
}

/// In-place evaluation-to-coefficient butterfly: the high entry of each pair
/// has the low one subtracted. Returns the subtraction count, `m * 2^(m-1)`.
pub fn nnf_in_place(values: &mut [i64]) -> u64 {
    nnf_butterfly(values, |lo, hi| *hi -= *lo)
}

/// In-place coefficient-to-evaluation butterfly, the inverse of
/// [`nnf_in_place`]: the high entry absorbs the low one. Returns the
/// addition count, `m * 2^(m-1)`.
pub fn nnf_inverse_in_place(values: &mut [i64]) -> u64 {
    nnf_butterfly(values, |lo, hi| *hi += *lo)
}

fn nnf_butterfly(values: &mut [i64], op: impl Fn(&i64, &mut i64)) -> u64 {
    let len = values.len();
    assert!(len.is_power_of_two(), "length {len} is not a power of two");
    let mut stride = 1;
    while stride < len {
        for block in values.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (a, b) in lo.iter().zip(hi.iter_mut()) {
                op(a, b);
            }
        }
        stride <<= 1;
    }
    (len.trailing_zeros() as u64) * (len as u64 / 2)
}

/// Walsh spectrum of a Boolean function: entry `v` is
/// `sum_y (-1)^(v.y + f(y))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i64>,
    additions: u64,
}

impl WalshSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, v: usize) -> i64 {
        self.values[v]
    }

    /// Largest absolute spectrum value.
    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|x| x.abs()).max().unwrap()
    }

    /// Integer additions spent computing the spectrum.
    pub fn additions(&self) -> u64 {
        self.additions
    }
}

/// Computes the Walsh spectrum in `O(n 2^n)` integer additions by running
/// the Walsh butterfly on the sign vector `(-1)^f`, rather than the `O(4^n)`
/// double sum of the definition.
pub fn walsh_spectrum(f: &BooleanFunction) -> WalshSpectrum {
    let n = f.n();
    let mut values: Vec<i64> = (0..1usize << n)
        .map(|p| if f.value(p) { -1 } else { 1 })
        .collect();
    let additions = walsh_in_place(&mut values);
    WalshSpectrum {
        n,
        values,
        additions,
    }
}

/// Nonlinearity via the Walsh spectrum:
/// `N(f) = 2^(n-1) - max_v |F(v)| / 2`.
///
/// The absolute value matters: the best affine approximation may be the
/// complement of a linear function, which shows up as a large negative
/// spectrum value.
pub fn nonlinearity_fwt(f: &BooleanFunction) -> u32 {
    let spectrum = walsh_spectrum(f);
    ((1i64 << (f.n() - 1)) - spectrum.max_abs() / 2) as u32
}

/// An integer-valued function on F2^m, listed in point order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerEvaluationVector {
    m: usize,
    values: Vec<i64>,
}

impl IntegerEvaluationVector {
    pub fn new(m: usize, values: Vec<i64>) -> Self {
        assert_eq!(values.len(), 1 << m, "evaluation vector length must be 2^m");
        IntegerEvaluationVector { m, values }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, point: u64) -> i64 {
        self.values[point as usize]
    }

    pub fn min(&self) -> i64 {
        *self.values.iter().min().unwrap()
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }
}

/// A multilinear polynomial with integer coefficients, indexed by monomial
/// mask: entry `u` is the coefficient of the monomial with variable mask `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMultilinearPoly {
    m: usize,
    coeffs: Vec<i64>,
}

impl IntegerMultilinearPoly {
    pub fn new(m: usize, coeffs: Vec<i64>) -> Self {
        assert_eq!(
            coeffs.len(),
            1 << m,
            "coefficient vector length must be 2^m"
        );
        IntegerMultilinearPoly { m, coeffs }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, mask: u64) -> i64 {
        self.coeffs[mask as usize]
    }

    /// Nonzero terms as `(mask, coefficient)` pairs, ascending by mask.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(u, &c)| (u as u64, c))
    }

    /// Value at a binary point: the sum of the coefficients of the monomials
    /// contained in the point mask.
    pub fn evaluate(&self, point: u64) -> i64 {
        assert!(point < 1 << self.m, "point {point} out of range");
        self.terms()
            .filter(|(u, _)| u & point == *u)
            .map(|(_, c)| c)
            .sum()
    }
}

/// Coefficients of the unique multilinear polynomial interpolating an
/// integer-valued function on the binary cube. Exact, `O(m 2^m)` integer
/// subtractions via the signed butterfly.
pub fn nnf_from_evaluations(v: &IntegerEvaluationVector) -> IntegerMultilinearPoly {
    let mut coeffs = v.values().to_vec();
    nnf_in_place(&mut coeffs);
    IntegerMultilinearPoly::new(v.m(), coeffs)
}

/// Evaluations of a multilinear polynomial over the whole binary cube; the
/// inverse of [`nnf_from_evaluations`].
pub fn evaluations_from_nnf(p: &IntegerMultilinearPoly) -> IntegerEvaluationVector {
    let mut values = p.coeffs().to_vec();
    nnf_inverse_in_place(&mut values);
    IntegerEvaluationVector::new(p.m(), values)
}
