//! Distance ideals over F2 and the incremental quotient-algebra solver that
//! decides whether they have solutions, without computing a Gröbner basis.
//!
//! For a function `f` on n variables and a threshold `t`, the distance ideal
//! is generated by all products of `t` distinct coordinates of the vector
//! `g(A) + f` of affine-residual polynomials in the coefficient variables
//! `a_0..a_n`, together with the field equations. Its variety is exactly the
//! set of affine functions within distance `t - 1` of `f`, so the
//! nonlinearity is found by growing `t` until a solution appears.
//!
//! The solver keeps a linear representation of the quotient algebra: the
//! surviving monomial basis (escalier) plus, for each eliminated monomial, a
//! substitution row over the survivors. Adjoining a generator reduces it,
//! eliminates its leading surviving monomial, rewrites every stored row, and
//! propagates the products of the new relation by each variable through a
//! FIFO queue until closure. Working modulo the field equations keeps
//! multiplication by a variable a mere mask union, so no multiplication
//! matrices are ever stored.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::bf::{AffineCoefficients, BooleanFunction, MultilinearPolyF2};
use crate::bits::{BitVec, LO_MASKS};
use crate::transforms::mobius_in_place;

/// A square-free monomial in `s` ambient variables, stored as its sorted
/// support of 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeMonomial {
    s: usize,
    support: Vec<u32>,
}

impl SquareFreeMonomial {
    pub fn new(s: usize, mut support: Vec<u32>) -> Self {
        support.sort_unstable();
        assert!(!support.is_empty(), "support must be nonempty");
        assert!(
            support.windows(2).all(|w| w[0] < w[1]),
            "indices must be distinct"
        );
        assert!(
            *support.last().unwrap() as usize <= s && support[0] >= 1,
            "indices must lie in 1..=s"
        );
        SquareFreeMonomial { s, support }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }
}

/// Streams all `C(s, t)` square-free monomials of degree `t` in `s`
/// variables, in lexicographic order of their sorted supports, without
/// materializing the set.
pub fn monomial_stream(s: usize, t: usize) -> impl Iterator<Item = SquareFreeMonomial> {
    assert!(
        1 <= t && t <= s,
        "degree {t} out of range for {s} variables"
    );
    let mut next: Option<Vec<u32>> = Some((1..=t as u32).collect());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        // rightmost index that can still advance
        let mut i = t;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < (s - (t - 1 - i)) as u32 {
                succ[i] += 1;
                for j in i + 1..t {
                    succ[j] = succ[j - 1] + 1;
                }
                next = Some(succ);
                break;
            }
        }
        Some(SquareFreeMonomial {
            s,
            support: current,
        })
    })
}

/// Truth table over the `n + 1` coefficient variables of the affine residual
/// at point `h`: `a_0 + <point_h, (a_1..a_n)> + f(point_h)`.
fn affine_factor(f: &BooleanFunction, h: usize) -> BitVec {
    let m = f.n() + 1;
    let coeff_mask = ((((h as u64) << 1) | 1) << 1) | u64::from(f.value(h));
    let factor = BooleanFunction::affine(&AffineCoefficients::from_mask(m, coeff_mask));
    factor.truth_table().clone()
}

fn generator_from_factors(
    m: usize,
    factors: &[BitVec],
    mono: &SquareFreeMonomial,
) -> MultilinearPolyF2 {
    let mut acc = factors[(mono.support()[0] - 1) as usize].clone();
    for &h in &mono.support()[1..] {
        acc.and_with(&factors[(h - 1) as usize]);
    }
    mobius_in_place(&mut acc);
    MultilinearPolyF2::from_coeff_bits(m, acc)
}

/// The generator of the distance ideal for one monomial: the product over
/// the monomial's support of the affine residuals at those points, reduced
/// to a multilinear polynomial in `a_0..a_n`. The product is taken on
/// evaluation vectors over the binary cube and converted back with the
/// Möbius transform.
pub fn generator(f: &BooleanFunction, mono: &SquareFreeMonomial) -> MultilinearPolyF2 {
    assert_eq!(
        mono.s(),
        1 << f.n(),
        "monomial has wrong ambient variable count"
    );
    let factors: Vec<BitVec> = mono
        .support()
        .iter()
        .map(|&h| affine_factor(f, (h - 1) as usize))
        .collect();
    let mut acc = factors[0].clone();
    for factor in &factors[1..] {
        acc.and_with(factor);
    }
    mobius_in_place(&mut acc);
    MultilinearPolyF2::from_coeff_bits(f.n() + 1, acc)
}

/// Generator instrumentation: a generator is *checked* when it is handed to
/// the solver, and *sufficient* when its reduction was nonzero (it caused an
/// elimination or proved the ideal trivial).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolverCounters {
    pub generators_checked: u64,
    pub generators_sufficient: u64,
}

/// Mutable state of the incremental solver over `m` variables.
///
/// Invariants: every substitution row references only masks currently in the
/// escalier; the escalier and the eliminated set partition the `2^m`
/// multilinear monomials; once trivial, the escalier counts as empty.
pub struct LinearRep {
    m: usize,
    in_escalier: BitVec,
    escalier_size: usize,
    rows: HashMap<u64, BitVec>,
    pending: VecDeque<BitVec>,
    pending_set: HashSet<BitVec>,
    trivial: bool,
    counters: SolverCounters,
}

impl LinearRep {
    /// Fresh state: the escalier is all `2^m` multilinear monomials, the
    /// basis of the algebra cut out by the field equations alone.
    pub fn new(m: usize) -> Self {
        assert!(
            (1..=crate::bf::MAX_VARS + 1).contains(&m),
            "variable count {m} out of range"
        );
        LinearRep {
            m,
            in_escalier: BitVec::ones(1 << m),
            escalier_size: 1 << m,
            rows: HashMap::new(),
            pending: VecDeque::new(),
            pending_set: HashSet::new(),
            trivial: false,
            counters: SolverCounters::default(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn counters(&self) -> SolverCounters {
        self.counters
    }

    /// Surviving monomial masks, ascending.
    pub fn escalier_masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.in_escalier.iter_ones().map(|i| i as u64)
    }

    /// Adjoins a generator. A zero reduction leaves the state unchanged; a
    /// reduction to the constant 1 proves the ideal trivial; anything else
    /// eliminates a monomial and propagates variable products to closure.
    /// Adding to a trivial state is a no-op.
    pub fn add_generator(&mut self, g: &MultilinearPolyF2) {
        assert_eq!(g.m(), self.m, "generator has wrong variable count");
        if self.trivial {
            return;
        }
        self.counters.generators_checked += 1;
        let reduced = self.reduce_bits(g.coeff_bits());
        if reduced.is_zero() {
            return;
        }
        self.counters.generators_sufficient += 1;
        if is_constant_one(&reduced) {
            self.make_trivial();
            return;
        }
        self.eliminate(reduced);
        self.drain();
    }

    /// Number of points in the variety of the ideal adjoined so far, which
    /// for these radical zero-dimensional ideals equals the dimension of the
    /// quotient algebra, i.e. the escalier size. Requires the propagation
    /// queue to be empty, which holds between `add_generator` calls.
    pub fn solution_count(&self) -> usize {
        assert!(self.pending.is_empty(), "propagation queue not drained");
        if self.trivial {
            0
        } else {
            self.escalier_size
        }
    }

    /// Verifies the row invariant behind well-defined multiplication: every
    /// substitution row references only surviving masks, so the reduction of
    /// any `x_h * b` with `b` surviving lands back in the escalier span.
    pub fn check_closure(&self) -> bool {
        if self.trivial {
            return true;
        }
        if self.escalier_size + self.rows.len() != 1 << self.m {
            return false;
        }
        self.rows
            .values()
            .all(|row| row.iter_ones().all(|mask| self.in_escalier.get(mask)))
    }

    /// Whether the escalier is closed under divisors. Not guaranteed by the
    /// pivot rule; exposed so callers can log violations.
    pub fn escalier_is_order_ideal(&self) -> bool {
        self.escalier_masks().all(|mask| {
            let mut sub = mask;
            loop {
                if sub == 0 {
                    return true;
                }
                sub = (sub - 1) & mask;
                if !self.in_escalier.get(sub as usize) {
                    return false;
                }
            }
        })
    }

    /// Projects a polynomial onto the escalier span: each eliminated mask is
    /// replaced by its substitution row. One pass suffices because rows only
    /// reference surviving masks.
    fn reduce_bits(&self, p: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(p.len());
        for mask in p.iter_ones() {
            if self.in_escalier.get(mask) {
                out.toggle(mask);
            } else {
                out.xor_with(&self.rows[&(mask as u64)]);
            }
        }
        out
    }

    /// Eliminates the pivot of a nonzero, non-constant reduced polynomial
    /// and enqueues the variable products of the new relation.
    fn eliminate(&mut self, reduced: BitVec) {
        let pivot = deglex_max(&reduced);
        debug_assert!(self.in_escalier.get(pivot));
        self.in_escalier.set(pivot, false);
        self.escalier_size -= 1;

        let mut row = reduced.clone();
        row.toggle(pivot);

        // substitute pivot -> row everywhere it occurs; xor-ing the full
        // relation removes the pivot and adds the row in one step
        for r in self.rows.values_mut() {
            if r.get(pivot) {
                r.xor_with(&reduced);
            }
        }
        let mut touched = false;
        for q in self.pending.iter_mut() {
            if q.get(pivot) {
                q.xor_with(&reduced);
                touched = true;
            }
        }
        if touched {
            self.rebuild_pending();
        }
        self.rows.insert(pivot as u64, row);

        for h in 0..self.m {
            let product = mul_by_var(&reduced, h);
            let product = self.reduce_bits(&product);
            self.enqueue(product);
        }
    }

    fn drain(&mut self) {
        while let Some(q) = self.pending.pop_front() {
            self.pending_set.remove(&q);
            if q.is_zero() {
                continue;
            }
            if is_constant_one(&q) {
                self.make_trivial();
                return;
            }
            self.eliminate(q);
        }
    }

    fn enqueue(&mut self, p: BitVec) {
        if p.is_zero() || self.pending_set.contains(&p) {
            return;
        }
        self.pending_set.insert(p.clone());
        self.pending.push_back(p);
    }

    fn rebuild_pending(&mut self) {
        let old = std::mem::take(&mut self.pending);
        self.pending_set.clear();
        for q in old {
            if !q.is_zero() && self.pending_set.insert(q.clone()) {
                self.pending.push_back(q);
            }
        }
    }

    fn make_trivial(&mut self) {
        self.trivial = true;
        self.pending.clear();
        self.pending_set.clear();
        self.rows.clear();
    }
}

fn is_constant_one(p: &BitVec) -> bool {
    p.get(0) && p.count_ones() == 1
}

/// Largest mask by degree, ties by mask value.
fn deglex_max(p: &BitVec) -> usize {
    p.iter_ones()
        .max_by_key(|&mask| (mask.count_ones(), mask))
        .expect("polynomial is zero")
}

/// Multiplication by variable `h` modulo the field equations: every monomial
/// mask gains bit `h`, colliding pairs cancelling over F2.
fn mul_by_var(p: &BitVec, h: usize) -> BitVec {
    let mut out = p.clone();
    let words = out.words_mut();
    if h < 6 {
        let mask = LO_MASKS[h];
        for w in words.iter_mut() {
            *w = (*w & !mask) ^ ((*w & mask) << (1 << h));
        }
    } else {
        let stride = 1 << (h - 6);
        let mut base = 0;
        while base < words.len() {
            for k in 0..stride {
                words[base + stride + k] ^= words[base + k];
                words[base + k] = 0;
            }
            base += 2 * stride;
        }
    }
    out
}

/// Loads the distance-`t` ideal of `f` into a fresh solver, streaming the
/// generators and stopping as soon as the ideal is proved trivial.
pub fn distance_ideal(f: &BooleanFunction, t: usize) -> LinearRep {
    let n = f.n();
    let size = 1usize << n;
    assert!((1..=size).contains(&t), "threshold {t} out of range");
    let m = n + 1;
    let factors: Vec<BitVec> = (0..size).map(|h| affine_factor(f, h)).collect();
    let mut rep = LinearRep::new(m);
    for mono in monomial_stream(size, t) {
        rep.add_generator(&generator_from_factors(m, &factors, &mono));
        if rep.is_trivial() {
            break;
        }
    }
    rep
}

/// True when no affine function is within distance `t - 1` of `f`.
pub fn variety_empty_f2(f: &BooleanFunction, t: usize) -> bool {
    distance_ideal(f, t).solution_count() == 0
}

/// Per-threshold record of a nonlinearity search.
#[derive(Clone, Copy, Debug)]
pub struct IdealStats {
    pub t: usize,
    pub counters: SolverCounters,
    pub solutions: usize,
}

/// Nonlinearity by the ideal route, returning the per-threshold counters:
/// grow `t` from 1 until the distance ideal acquires a solution, then report
/// `t - 1`.
pub fn nonlinearity_f2_trace(f: &BooleanFunction) -> (u32, Vec<IdealStats>) {
    let mut stats = Vec::new();
    let mut t = 1;
    loop {
        let rep = distance_ideal(f, t);
        let solutions = rep.solution_count();
        stats.push(IdealStats {
            t,
            counters: rep.counters(),
            solutions,
        });
        if solutions > 0 {
            return ((t - 1) as u32, stats);
        }
        t += 1;
        assert!(t <= 1 << f.n(), "distance search ran past 2^n");
    }
}

/// Nonlinearity by the ideal route.
pub fn nonlinearity_f2(f: &BooleanFunction) -> u32 {
    nonlinearity_f2_trace(f).0
}

/// Normal form modulo the vanishing ideal of the points of weight at most
/// `w`: every monomial of degree `w + 1` or more is dropped. The input
/// vanishes on all those points exactly when the result is zero.
pub fn weight_ideal_normal_form(p: &MultilinearPolyF2, w: usize) -> MultilinearPolyF2 {
    assert!(w <= p.m(), "weight bound {w} out of range");
    let mut out = MultilinearPolyF2::zero(p.m());
    for mask in p.terms() {
        if (mask.count_ones() as usize) <= w {
            out.toggle(mask);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BitVec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn x1x2_plus_one() -> BooleanFunction {
        BooleanFunction::new(2, BitVec::from_bits(&[1, 1, 1, 0]))
    }

    #[test]
    fn monomial_stream_counts() {
        assert_eq!(monomial_stream(4, 2).count(), 6);
        let singles: Vec<_> = monomial_stream(8, 1).collect();
        assert_eq!(singles.len(), 8);
        assert_eq!(singles[3].support(), &[4]);
        let first = monomial_stream(8, 3).next().unwrap();
        assert_eq!(first.support(), &[1, 2, 3]);
    }

    #[test]
    fn monomial_stream_full_lex_order() {
        let all: Vec<Vec<u32>> = monomial_stream(5, 3)
            .map(|m| m.support().to_vec())
            .collect();
        assert_eq!(all.len(), 10);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
        assert_eq!(all.last().unwrap(), &vec![3, 4, 5]);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn monomial_stream_rejects_bad_degree() {
        let _ = monomial_stream(4, 5).count();
    }

    #[test]
    fn generator_single_point_examples() {
        let f = x1x2_plus_one();
        let g1 = generator(&f, &SquareFreeMonomial::new(4, vec![1]));
        // a_0 + 1
        assert_eq!(g1, MultilinearPolyF2::from_masks(3, &[0b000, 0b001]));
        let g2 = generator(&f, &SquareFreeMonomial::new(4, vec![2]));
        // a_0 + a_1 + 1
        assert_eq!(g2, MultilinearPolyF2::from_masks(3, &[0b000, 0b001, 0b010]));
    }

    #[test]
    fn generator_product_semantics() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for _ in 0..10 {
            let f = BooleanFunction::random(3, &mut rng);
            for (i, j) in [(1u32, 4u32), (2, 3), (5, 8)] {
                let g = generator(&f, &SquareFreeMonomial::new(8, vec![i, j]));
                let gi = generator(&f, &SquareFreeMonomial::new(8, vec![i]));
                let gj = generator(&f, &SquareFreeMonomial::new(8, vec![j]));
                for a in 0..16u64 {
                    assert_eq!(g.evaluate(a), gi.evaluate(a) && gj.evaluate(a));
                }
            }
        }
    }

    #[test]
    fn fresh_state() {
        let rep = LinearRep::new(3);
        assert_eq!(rep.solution_count(), 8);
        let rep1 = LinearRep::new(1);
        assert_eq!(rep1.escalier_masks().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(LinearRep::new(2).solution_count(), 4);
    }

    #[test]
    fn add_single_linear_relation() {
        // a_0 + 1 over three variables: half of the cube satisfies a_0 = 1
        let mut rep = LinearRep::new(3);
        rep.add_generator(&MultilinearPolyF2::from_masks(3, &[0b000, 0b001]));
        assert_eq!(rep.solution_count(), 4);
        assert!(!rep.escalier_masks().any(|m| m & 1 == 1));
        assert!(rep.check_closure());
        assert_eq!(rep.counters().generators_sufficient, 1);
    }

    #[test]
    fn add_constant_one_is_trivial() {
        let mut rep = LinearRep::new(3);
        rep.add_generator(&MultilinearPolyF2::one(3));
        assert!(rep.is_trivial());
        assert_eq!(rep.solution_count(), 0);
        // further generators are no-ops
        rep.add_generator(&MultilinearPolyF2::from_masks(3, &[0b010]));
        assert_eq!(rep.counters().generators_checked, 1);
    }

    #[test]
    fn add_zero_is_noop() {
        let mut rep = LinearRep::new(3);
        rep.add_generator(&MultilinearPolyF2::zero(3));
        assert_eq!(rep.solution_count(), 8);
        assert_eq!(rep.counters().generators_checked, 1);
        assert_eq!(rep.counters().generators_sufficient, 0);
    }

    /// Brute-force variety count over the binary cube.
    fn variety_count(m: usize, polys: &[MultilinearPolyF2]) -> usize {
        (0..1u64 << m)
            .filter(|&a| polys.iter().all(|p| !p.evaluate(a)))
            .count()
    }

    #[test]
    fn solution_count_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..50 {
            let m = 4;
            let polys: Vec<MultilinearPolyF2> = (0..4)
                .map(|_| {
                    let mut tt = BitVec::zeros(1 << m);
                    tt.randomize(&mut rng);
                    MultilinearPolyF2::from_coeff_bits(m, tt)
                })
                .collect();
            let mut rep = LinearRep::new(m);
            for p in &polys {
                rep.add_generator(p);
            }
            assert_eq!(rep.solution_count(), variety_count(m, &polys));
            assert!(rep.check_closure());
        }
    }

    #[test]
    fn distance_ideal_small_counts() {
        let f = x1x2_plus_one();
        assert_eq!(distance_ideal(&f, 2).solution_count(), 4);
        assert_eq!(distance_ideal(&f, 1).solution_count(), 0);
    }

    #[test]
    fn variety_empty_examples() {
        let f = x1x2_plus_one();
        assert!(variety_empty_f2(&f, 1));
        assert!(!variety_empty_f2(&f, 2));
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for n in 1..=3 {
            for _ in 0..5 {
                let g = BooleanFunction::random(n, &mut rng);
                assert!(!variety_empty_f2(&g, 1 << n));
            }
        }
    }

    #[test]
    fn nonlinearity_examples() {
        assert_eq!(nonlinearity_f2(&x1x2_plus_one()), 1);
        let affine = BooleanFunction::affine(&AffineCoefficients::from_bits(&[0, 1, 1, 0]));
        assert_eq!(nonlinearity_f2(&affine), 0);
    }

    #[test]
    fn trace_reports_each_threshold() {
        let (nl, stats) = nonlinearity_f2_trace(&x1x2_plus_one());
        assert_eq!(nl, 1);
        assert_eq!(stats.len(), 2);
        assert_eq!(stats[0].solutions, 0);
        assert_eq!(stats[1].solutions, 4);
        assert!(stats
            .iter()
            .all(|s| s.counters.generators_sufficient <= s.counters.generators_checked));
    }

    #[test]
    fn weight_normal_form_examples() {
        let x1x2 = MultilinearPolyF2::from_masks(4, &[0b0011]);
        assert!(weight_ideal_normal_form(&x1x2, 1).is_zero());
        let p = MultilinearPolyF2::from_masks(4, &[0b0001, 0b0011]);
        assert!(weight_ideal_normal_form(&p, 0).is_zero());
        assert_eq!(
            weight_ideal_normal_form(&p, 1),
            MultilinearPolyF2::from_masks(4, &[0b0001])
        );
    }

    #[test]
    fn weight_normal_form_dimension_count() {
        // monomials of degree <= w match the points of weight <= w
        for s in 1..=6 {
            for w in 0..=s {
                let monomials = (0..1u64 << s)
                    .filter(|u| u.count_ones() as usize <= w)
                    .count();
                let points = (0..1u64 << s)
                    .filter(|v| v.count_ones() as usize <= w)
                    .count();
                assert_eq!(monomials, points);
            }
        }
    }

    #[test]
    fn weight_normal_form_vanishing() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for s in 2..=6 {
            for _ in 0..30 {
                let mut tt = BitVec::zeros(1 << s);
                tt.randomize(&mut rng);
                let p = MultilinearPolyF2::from_coeff_bits(s, tt);
                for w in 0..=s {
                    let vanishes = (0..1u64 << s)
                        .filter(|v| (v.count_ones() as usize) <= w)
                        .all(|v| !p.evaluate(v));
                    assert_eq!(weight_ideal_normal_form(&p, w).is_zero(), vanishes);
                }
            }
        }
    }

    #[test]
    fn mul_by_var_semantics() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for m in [3usize, 7, 8] {
            for _ in 0..10 {
                let mut v = BitVec::zeros(1 << m);
                v.randomize(&mut rng);
                for h in 0..m {
                    let prod = mul_by_var(&v, h);
                    let mut naive = BitVec::zeros(1 << m);
                    for mask in v.iter_ones() {
                        naive.toggle(mask | (1 << h));
                    }
                    assert_eq!(prod, naive);
                }
            }
        }
    }
}
