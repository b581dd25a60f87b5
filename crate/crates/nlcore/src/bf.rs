//! Boolean function representations: truth tables, algebraic normal forms,
//! point enumeration, distances and affine functions.
//!
//! One indexing convention is shared by the whole crate:
//!
//! * Points of F2^n are enumerated so that point number `i` (0-based) has
//!   coordinate `x_{j+1}` equal to bit `j` of `i`; `x_1` varies fastest.
//!   A point therefore *is* its own index, and both are plain masks.
//! * A square-free monomial is the mask of its variables: bit `j` set means
//!   variable `x_{j+1}` (or `a_j` for affine-coefficient variables, where
//!   `a_0` is bit 0) occurs.

use crate::bits::BitVec;
use crate::transforms::mobius_in_place;

/// Largest supported variable count. Integer transform values are bounded by
/// `2^n`, so everything fits in `i64` with headroom at this limit; transform
/// paths are practical to about n = 20, polynomial-system paths to n = 8.
pub const MAX_VARS: usize = 26;

/// The fixed enumeration of F2^n described in the module docs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointOrder {
    n: usize,
}

impl PointOrder {
    pub fn new(n: usize) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&n),
            "variable count {n} out of range"
        );
        PointOrder { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of points, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The point with the given 0-based index, as a coordinate mask.
    pub fn point(&self, index: usize) -> u64 {
        assert!(index < self.len(), "point index {index} out of range");
        index as u64
    }

    /// Coordinate `x_{var+1}` of the point with the given index.
    pub fn coordinate(&self, index: usize, var: usize) -> bool {
        assert!(var < self.n, "variable index {var} out of range");
        (self.point(index) >> var) & 1 == 1
    }
}

/// A Boolean function on F2^n, stored as its truth table: bit `i` of the
/// table is the value at point `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    tt: BitVec,
}

impl BooleanFunction {
    /// Wraps a truth table of length `2^n`.
    pub fn new(n: usize, truth_table: BitVec) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&n),
            "variable count {n} out of range"
        );
        assert_eq!(truth_table.len(), 1 << n, "truth table length must be 2^n");
        BooleanFunction { n, tt: truth_table }
    }

    pub fn zero(n: usize) -> Self {
        BooleanFunction::new(n, BitVec::zeros(1 << n))
    }

    pub fn constant(n: usize, value: bool) -> Self {
        if value {
            BooleanFunction::new(n, BitVec::ones(1 << n))
        } else {
            BooleanFunction::zero(n)
        }
    }

    /// The projection `x_{var+1}`.
    pub fn variable(n: usize, var: usize) -> Self {
        let order = PointOrder::new(n);
        assert!(var < n, "variable index {var} out of range");
        let mut tt = BitVec::zeros(order.len());
        for p in 0..order.len() {
            if order.coordinate(p, var) {
                tt.set(p, true);
            }
        }
        BooleanFunction::new(n, tt)
    }

    /// Uniformly random function on `n` variables.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut tt = BitVec::zeros(1 << n);
        tt.randomize(rng);
        BooleanFunction::new(n, tt)
    }

    /// The affine function `a_0 + a_1 x_1 + ... + a_n x_n`.
    pub fn affine(coeffs: &AffineCoefficients) -> Self {
        let n = coeffs.n();
        let constant = coeffs.get(0);
        let linear = coeffs.mask() >> 1;
        let mut tt = BitVec::zeros(1 << n);
        for p in 0..1u64 << n {
            let v = constant ^ ((linear & p).count_ones() & 1 == 1);
            if v {
                tt.set(p as usize, true);
            }
        }
        BooleanFunction::new(n, tt)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn truth_table(&self) -> &BitVec {
        &self.tt
    }

    /// Value at the point with the given index/mask.
    pub fn value(&self, point: usize) -> bool {
        assert!(point < 1 << self.n, "point index {point} out of range");
        self.tt.get(point)
    }

    /// Hamming weight of the truth table.
    pub fn weight(&self) -> usize {
        self.tt.count_ones()
    }

    /// Hamming distance between the truth tables; both functions must have
    /// the same variable count.
    pub fn distance(&self, other: &BooleanFunction) -> usize {
        assert_eq!(self.n, other.n, "variable count mismatch");
        self.tt
            .words()
            .iter()
            .zip(other.tt.words())
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// The function `f + 1`.
    pub fn complement(&self) -> BooleanFunction {
        let mut tt = self.tt.clone();
        tt.xor_with(&BitVec::ones(tt.len()));
        BooleanFunction::new(self.n, tt)
    }

    /// Pointwise sum (XOR) of two functions of equal variable count.
    pub fn xor(&self, other: &BooleanFunction) -> BooleanFunction {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut tt = self.tt.clone();
        tt.xor_with(&other.tt);
        BooleanFunction::new(self.n, tt)
    }

    /// Algebraic normal form, by the fast Möbius transform.
    pub fn anf(&self) -> MultilinearPolyF2 {
        let mut coeffs = self.tt.clone();
        mobius_in_place(&mut coeffs);
        MultilinearPolyF2 { m: self.n, coeffs }
    }

    /// True when the algebraic degree is 0 or 1.
    pub fn is_affine(&self) -> bool {
        self.anf().degree() <= 1
    }
}

impl std::fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BooleanFunction(n={}, tt={:?})", self.n, self.tt)
    }
}

/// A square-free polynomial over F2, stored as the set of its monomials:
/// bit `u` of the coefficient vector is the coefficient of the monomial with
/// variable mask `u`. The quotient by the field equations `x^2 - x` is
/// structural: no squared variable can be represented.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultilinearPolyF2 {
    m: usize,
    coeffs: BitVec,
}

impl MultilinearPolyF2 {
    pub fn zero(m: usize) -> Self {
        assert!(
            (1..=MAX_VARS + 1).contains(&m),
            "variable count {m} out of range"
        );
        MultilinearPolyF2 {
            m,
            coeffs: BitVec::zeros(1 << m),
        }
    }

    /// The constant polynomial 1.
    pub fn one(m: usize) -> Self {
        let mut p = MultilinearPolyF2::zero(m);
        p.coeffs.set(0, true);
        p
    }

    /// Builds from monomial masks; repeated masks cancel over F2.
    pub fn from_masks(m: usize, masks: &[u64]) -> Self {
        let mut p = MultilinearPolyF2::zero(m);
        for &mask in masks {
            p.toggle(mask);
        }
        p
    }

    pub(crate) fn from_coeff_bits(m: usize, coeffs: BitVec) -> Self {
        assert_eq!(coeffs.len(), 1 << m);
        MultilinearPolyF2 { m, coeffs }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coefficient(&self, mask: u64) -> bool {
        self.coeffs.get(mask as usize)
    }

    /// Adds (XORs) the monomial with the given mask.
    pub fn toggle(&mut self, mask: u64) {
        self.coeffs.toggle(mask as usize);
    }

    /// Masks of the monomials present, ascending.
    pub fn terms(&self) -> impl Iterator<Item = u64> + '_ {
        self.coeffs.iter_ones().map(|i| i as u64)
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Algebraic degree: the largest variable count among present monomials.
    /// The zero polynomial has degree 0, so constants are affine.
    pub fn degree(&self) -> usize {
        self.terms()
            .map(|u| u.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Value at a point given as a coordinate mask.
    pub fn evaluate(&self, point: u64) -> bool {
        assert!(point < 1 << self.m, "point {point} out of range");
        let mut acc = false;
        for u in self.terms() {
            if u & point == u {
                acc ^= true;
            }
        }
        acc
    }

    /// The Boolean function with this ANF; inverse of
    /// [`BooleanFunction::anf`] because the Möbius transform is an
    /// involution.
    pub fn to_function(&self) -> BooleanFunction {
        let mut tt = self.coeffs.clone();
        mobius_in_place(&mut tt);
        BooleanFunction::new(self.m, tt)
    }

    pub(crate) fn coeff_bits(&self) -> &BitVec {
        &self.coeffs
    }
}

impl std::fmt::Debug for MultilinearPolyF2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MultilinearPolyF2(m={}, masks={:?})",
            self.m,
            self.terms().collect::<Vec<_>>()
        )
    }
}

/// Coefficients `(a_0, ..., a_n)` of an affine function on `n` variables,
/// packed as a mask with `a_i` at bit `i`. The mask doubles as the index of
/// the corresponding entry in nonlinearity-polynomial evaluation vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineCoefficients {
    n: usize,
    mask: u64,
}

impl AffineCoefficients {
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&n),
            "variable count {n} out of range"
        );
        assert!(mask < 1 << (n + 1), "coefficient mask {mask} out of range");
        AffineCoefficients { n, mask }
    }

    /// Builds from the `n+1` entries `a_0..a_n`.
    pub fn from_bits(bits: &[u8]) -> Self {
        let n = bits.len() - 1;
        let mut mask = 0u64;
        for (i, &b) in bits.iter().enumerate() {
            assert!(b <= 1, "entries must be 0 or 1");
            mask |= (b as u64) << i;
        }
        AffineCoefficients::from_mask(n, mask)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Coefficient `a_i`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i <= self.n, "coefficient index {i} out of range");
        (self.mask >> i) & 1 == 1
    }

    /// All `2^(n+1)` coefficient vectors, in mask order.
    pub fn enumerate(n: usize) -> impl Iterator<Item = AffineCoefficients> {
        (0..1u64 << (n + 1)).map(move |mask| AffineCoefficients { n, mask })
    }
}

impl std::fmt::Debug for AffineCoefficients {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AffineCoefficients(n={}, mask={:#b})", self.n, self.mask)
    }
}
