//! Properties of the incremental solver: agreement with the evaluation
//! oracle, independence from generator order, monotonicity, and closure.

mod common;

use common::{all_functions, distance_table};
use nlcore::{distance_ideal, generator, monomial_stream, BooleanFunction, LinearRep};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Oracle for the solution count: affine coefficient vectors whose distance
/// to `f` is below the threshold.
fn count_within(f: &BooleanFunction, t: usize) -> usize {
    distance_table(f).iter().filter(|&&d| d < t as i64).count()
}

#[test]
fn solution_count_matches_distance_oracle_n3_exhaustive() {
    for f in all_functions(3) {
        for t in 1..=8 {
            assert_eq!(
                distance_ideal(&f, t).solution_count(),
                count_within(&f, t),
                "tt={:?} t={t}",
                f.truth_table()
            );
        }
    }
}

#[test]
fn solution_count_matches_distance_oracle_n4_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for _ in 0..200 {
        let f = BooleanFunction::random(4, &mut rng);
        for t in 1..=16 {
            assert_eq!(distance_ideal(&f, t).solution_count(), count_within(&f, t));
        }
    }
}

#[test]
fn solution_count_is_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(201);
    let mut shuffles = 0;
    while shuffles < 50 {
        let n = 3;
        let f = BooleanFunction::random(n, &mut rng);
        for t in [1usize, 2, 3] {
            let mut generators: Vec<_> = monomial_stream(1 << n, t)
                .map(|mono| generator(&f, &mono))
                .collect();
            let baseline = {
                let mut rep = LinearRep::new(n + 1);
                for g in &generators {
                    rep.add_generator(g);
                }
                rep.solution_count()
            };
            generators.shuffle(&mut rng);
            let mut rep = LinearRep::new(n + 1);
            for g in &generators {
                rep.add_generator(g);
            }
            assert_eq!(rep.solution_count(), baseline);
            shuffles += 1;
        }
    }
}

#[test]
fn solution_count_monotone_in_t() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for n in 2..=4 {
        for _ in 0..20 {
            let f = BooleanFunction::random(n, &mut rng);
            let counts: Vec<usize> = (1..=1 << n)
                .map(|t| distance_ideal(&f, t).solution_count())
                .collect();
            assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{counts:?}");
            // at t = 2^n only the complement of an affine f can still be
            // missing (it sits at distance exactly 2^n)
            assert_eq!(counts[(1 << n) - 1], count_within(&f, 1 << n));
            assert!(counts[(1 << n) - 1] >= (1 << (n + 1)) - 1);
        }
    }
}

#[test]
fn closure_holds_after_every_load() {
    let mut rng = ChaCha8Rng::seed_from_u64(203);
    for n in 2..=4 {
        for _ in 0..10 {
            let f = BooleanFunction::random(n, &mut rng);
            for t in 1..=1 << n {
                assert!(distance_ideal(&f, t).check_closure());
            }
        }
    }
}

/// The escalier need not be divisor-closed under the deglex pivot rule;
/// this records how often that happens rather than asserting it away.
#[test]
fn order_ideal_violations_are_logged_only() {
    let mut violations = 0u32;
    let mut loads = 0u32;
    for f in all_functions(3) {
        for t in 1..=4 {
            let rep = distance_ideal(&f, t);
            loads += 1;
            if !rep.escalier_is_order_ideal() {
                violations += 1;
            }
        }
    }
    eprintln!("escalier order-ideal violations: {violations}/{loads} loads");
}

#[test]
fn counters_sane_on_exhaustive_n3() {
    for f in all_functions(3) {
        for t in 1..=8 {
            let rep = distance_ideal(&f, t);
            let c = rep.counters();
            assert!(c.generators_sufficient <= c.generators_checked);
            // never more checks than there are monomials
            let total: u64 = binomial(8, t);
            assert!(c.generators_checked <= total);
        }
    }
}

fn binomial(s: u64, t: usize) -> u64 {
    let mut acc = 1u64;
    for i in 0..t as u64 {
        acc = acc * (s - i) / (i + 1);
    }
    acc
}
