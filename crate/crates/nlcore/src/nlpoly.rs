//! The integer nonlinearity polynomial: a multilinear polynomial in the
//! affine coefficients `a_0..a_n` whose value at a binary point is the
//! distance from `f` to the affine function with those coefficients.
//!
//! Everything about affine distances can be read off it: the minimum of its
//! evaluations is the nonlinearity, the set of its evaluation values is the
//! distance spectrum, and "is some affine function at distance exactly t"
//! is membership of `t` in the evaluations.

use crate::bf::BooleanFunction;
use crate::transforms::{
    evaluations_from_nnf, nnf_in_place, walsh_in_place, IntegerEvaluationVector,
    IntegerMultilinearPoly,
};

/// The nonlinearity polynomial of a Boolean function on `n` variables, a
/// multilinear integer polynomial over the `n + 1` variables `a_0..a_n`
/// (`a_0` at mask bit 0). Coefficient magnitudes are bounded by `2^n` and
/// every evaluation at a binary point lies in `[0, 2^n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NlPolynomial {
    n: usize,
    poly: IntegerMultilinearPoly,
    additions: u64,
}

impl NlPolynomial {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &IntegerMultilinearPoly {
        &self.poly
    }

    /// Integer additions and subtractions spent building the polynomial.
    /// Bounded by `(3/2) n 2^n + 1`: `n 2^n` for the Walsh butterfly plus
    /// `n 2^(n-1)` for the coefficient butterfly plus one constant fix-up;
    /// sign flips and exact halvings are not additions.
    pub fn additions(&self) -> u64 {
        self.additions
    }

    /// Distances from `f` to every affine function: entry `a` is the
    /// distance to the affine function with coefficient mask `a`.
    pub fn evaluations(&self) -> IntegerEvaluationVector {
        evaluations_from_nnf(&self.poly)
    }
}

/// Builds the nonlinearity polynomial of `f` in `O(n 2^n)` integer
/// operations.
///
/// The distance evaluation vector splits by `a_0`: against the linear
/// function with mask `v` the distance is `2^(n-1) - F(v)/2`, and against
/// its complement `2^(n-1) + F(v)/2`, where `F` is the Walsh spectrum. The
/// coefficient butterfly over `a_0` maps the two halves to
/// `2^(n-1) - F(v)/2` and `F(v)`, so running the remaining levels on the
/// spectrum itself yields the odd-mask (with `a_0`) coefficients directly,
/// and the even-mask coefficients follow by linearity as
/// `2^(n-1) [v = 0] - U(v)/2` with `U` that transform.
pub fn build_nl_poly(f: &BooleanFunction) -> NlPolynomial {
    let n = f.n();
    let size = 1usize << n;
    let mut spectrum: Vec<i64> = (0..size).map(|p| if f.value(p) { -1 } else { 1 }).collect();
    let mut additions = walsh_in_place(&mut spectrum);
    additions += nnf_in_place(&mut spectrum);

    let mut coeffs = vec![0i64; 2 * size];
    for (vm, &u) in spectrum.iter().enumerate() {
        debug_assert_eq!(u & 1, 0);
        coeffs[(vm << 1) | 1] = u;
        coeffs[vm << 1] = -(u / 2);
    }
    coeffs[0] += 1 << (n - 1);
    additions += 1;

    NlPolynomial {
        n,
        poly: IntegerMultilinearPoly::new(n + 1, coeffs),
        additions,
    }
}

/// Nonlinearity as the minimum evaluation of the nonlinearity polynomial,
/// with an explicit shortcut for affine inputs.
pub fn nonlinearity_nnf(f: &BooleanFunction) -> u32 {
    if f.is_affine() {
        return 0;
    }
    build_nl_poly(f).evaluations().min() as u32
}

/// True when some affine function is at distance exactly `t` from `f`,
/// i.e. when `t` occurs among the evaluations of the nonlinearity
/// polynomial. This decides emptiness of the distance-`t` variety without
/// any ideal machinery.
pub fn variety_nonempty_q(f: &BooleanFunction, t: u64) -> bool {
    build_nl_poly(f)
        .evaluations()
        .values()
        .contains(&(t as i64))
}

/// Nonlinearity by increasing-distance search: the first `t >= 0` for which
/// the distance-`t` variety is nonempty. The search starts at 0 rather than
/// 1 so that affine inputs report 0.
pub fn nonlinearity_q_loop(f: &BooleanFunction) -> u32 {
    let evals = build_nl_poly(f).evaluations();
    let mut present = vec![false; (1 << f.n()) + 1];
    for &d in evals.values() {
        present[d as usize] = true;
    }
    let mut t = 0;
    loop {
        if present[t] {
            return t as u32;
        }
        t += 1;
    }
}

/// Sorted distinct distances from `f` to the affine functions. The minimum
/// is the nonlinearity; 0 occurs exactly when `f` is affine.
pub fn distance_spectrum(f: &BooleanFunction) -> Vec<u64> {
    let evals = build_nl_poly(f).evaluations();
    let set: std::collections::BTreeSet<u64> = evals.values().iter().map(|&d| d as u64).collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bf::{AffineCoefficients, MultilinearPolyF2};
    use crate::bits::BitVec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn x1x2_plus_one() -> BooleanFunction {
        BooleanFunction::new(2, BitVec::from_bits(&[1, 1, 1, 0]))
    }

    /// Independent oracle: distance to every affine function by direct
    /// truth-table comparison.
    fn distance_table(f: &BooleanFunction) -> Vec<i64> {
        AffineCoefficients::enumerate(f.n())
            .map(|a| f.distance(&BooleanFunction::affine(&a)) as i64)
            .collect()
    }

    #[test]
    fn golden_polynomial() {
        let p = build_nl_poly(&x1x2_plus_one());
        let mut expected = vec![0i64; 8];
        expected[0b000] = 3;
        expected[0b001] = -2;
        expected[0b110] = -2;
        expected[0b111] = 4;
        assert_eq!(p.poly().coeffs(), expected.as_slice());
        assert_eq!(p.evaluations().values(), &[3, 1, 3, 1, 3, 1, 1, 3]);
    }

    #[test]
    fn zero_function_n1() {
        let p = build_nl_poly(&BooleanFunction::zero(1));
        // 2*a_0 + a_1 - 2*a_0*a_1
        assert_eq!(p.poly().coeffs(), &[0, 2, 1, -2]);
        assert_eq!(p.evaluations().values(), &[0, 2, 1, 1]);
    }

    #[test]
    fn evaluations_match_distance_table() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..=5 {
            for _ in 0..20 {
                let f = BooleanFunction::random(n, &mut rng);
                let evals = build_nl_poly(&f).evaluations();
                assert_eq!(evals.values(), distance_table(&f).as_slice());
            }
        }
    }

    #[test]
    fn constant_term_is_weight() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..20 {
            let f = BooleanFunction::random(4, &mut rng);
            assert_eq!(build_nl_poly(&f).poly().coefficient(0), f.weight() as i64);
        }
    }

    #[test]
    fn evaluation_at_zero_of_zero_function() {
        for n in 1..=5 {
            let evals = build_nl_poly(&BooleanFunction::zero(n)).evaluations();
            assert_eq!(evals.get(0), 0);
        }
    }

    #[test]
    fn poly_roundtrips_through_evaluations() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for n in 1..=6 {
            let p = build_nl_poly(&BooleanFunction::random(n, &mut rng));
            assert_eq!(
                &crate::transforms::nnf_from_evaluations(&p.evaluations()),
                p.poly()
            );
        }
    }

    #[test]
    fn nonlinearity_examples() {
        assert_eq!(nonlinearity_nnf(&x1x2_plus_one()), 1);
        assert_eq!(nonlinearity_q_loop(&x1x2_plus_one()), 1);
        let affine = BooleanFunction::affine(&AffineCoefficients::from_bits(&[1, 1, 0]));
        assert_eq!(nonlinearity_nnf(&affine), 0);
        assert_eq!(nonlinearity_q_loop(&affine), 0);
        let bent = MultilinearPolyF2::from_masks(4, &[0b0011, 0b1100]).to_function();
        assert_eq!(nonlinearity_nnf(&bent), 6);
        assert_eq!(nonlinearity_q_loop(&bent), 6);
    }

    #[test]
    fn variety_examples() {
        let f = x1x2_plus_one();
        assert!(variety_nonempty_q(&f, 3));
        assert!(!variety_nonempty_q(&f, 0));
        assert!(!variety_nonempty_q(&f, (1 << 2) + 1));
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(distance_spectrum(&x1x2_plus_one()), vec![1, 3]);
        assert_eq!(distance_spectrum(&BooleanFunction::zero(1)), vec![0, 1, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let f = BooleanFunction::random(5, &mut rng);
            let spectrum = distance_spectrum(&f);
            assert!(spectrum.len() <= 1 << 6);
            assert_eq!(spectrum.contains(&0), f.is_affine());
            if !f.is_affine() {
                assert_eq!(spectrum[0] as u32, nonlinearity_nnf(&f));
            }
        }
    }

    #[test]
    fn addition_budget() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for n in 3..=12 {
            let f = BooleanFunction::random(n, &mut rng);
            let p = build_nl_poly(&f);
            let budget = 3 * (n as u64) * (1 << n) / 2 + (1 << (n + 1));
            assert!(
                p.additions() <= budget,
                "n={n}: {} > {budget}",
                p.additions()
            );
        }
    }

    #[test]
    fn coefficient_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in 1..=8 {
            let f = BooleanFunction::random(n, &mut rng);
            let p = build_nl_poly(&f);
            assert!(p.poly().coeffs().iter().all(|c| c.abs() <= 1 << n));
            assert!(p
                .evaluations()
                .values()
                .iter()
                .all(|&d| (0..=1 << n).contains(&d)));
        }
    }
}
