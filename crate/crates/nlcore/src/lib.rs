//! Nonlinearity of Boolean functions by three mutually cross-checking
//! routes, with the transforms and polynomial machinery behind them.
//!
//! The nonlinearity of a Boolean function is its minimum Hamming distance to
//! an affine function. This crate computes it by:
//!
//! * [`transforms::nonlinearity_fwt`] — fast Walsh transform, the classical
//!   `O(n 2^n)` method;
//! * [`nlpoly::nonlinearity_nnf`] / [`nlpoly::nonlinearity_q_loop`] — the
//!   integer nonlinearity polynomial, whose evaluations over the binary cube
//!   list the distances to all `2^(n+1)` affine functions;
//! * [`solver::nonlinearity_f2`] — distance ideals over F2, decided by an
//!   incremental quotient-algebra solver instead of a Gröbner basis.
//!
//! The routes agree by construction; the test suites cross-check them
//! exhaustively on small variable counts. Supporting machinery — fast
//! Möbius transform, integer evaluation/coefficient butterflies, affine
//! function enumeration, operation counters — is exposed for reuse.
//!
//! All values are immutable after construction and safe to share across
//! threads; [`solver::LinearRep`] is the one mutable state and is meant to
//! be confined to a single task.

pub mod bf;
pub mod bits;
pub mod nlpoly;
pub mod solver;
pub mod transforms;

pub use bf::{AffineCoefficients, BooleanFunction, MultilinearPolyF2, PointOrder, MAX_VARS};
pub use bits::BitVec;
pub use nlpoly::{
    build_nl_poly, distance_spectrum, nonlinearity_nnf, nonlinearity_q_loop, variety_nonempty_q,
    NlPolynomial,
};
pub use solver::{
    distance_ideal, generator, monomial_stream, nonlinearity_f2, nonlinearity_f2_trace,
    variety_empty_f2, weight_ideal_normal_form, IdealStats, LinearRep, SolverCounters,
    SquareFreeMonomial,
};
pub use transforms::{
    evaluations_from_nnf, nnf_from_evaluations, nonlinearity_fwt, walsh_spectrum,
    IntegerEvaluationVector, IntegerMultilinearPoly, WalshSpectrum,
};
