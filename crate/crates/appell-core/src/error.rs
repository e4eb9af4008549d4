//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by precondition violations.
///
/// Arithmetic itself never fails (everything is exact); errors only arise
/// from arguments outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational literal that is not of the form `p` or `p/q` with
    /// integer `p` and positive integer `q`.
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    /// Harmonic numbers `H_k` are defined for `k >= 1`.
    #[error("harmonic number requires k >= 1")]
    HarmonicIndex,

    /// Multinomial parts must sum to the top argument.
    #[error("multinomial parts sum to {sum}, expected {n}")]
    MultinomialParts { n: usize, sum: usize },

    /// A lower index exceeding the upper index where the triangle is
    /// undefined.
    #[error("index k = {k} exceeds n = {n}")]
    KExceedsN { n: usize, k: usize },

    /// A degree request beyond the stored truncation order.
    #[error("degree {n} exceeds truncation order {order}")]
    DegreeExceedsOrder { n: usize, order: usize },

    /// Sequences in the convolution group need a nonzero leading term.
    #[error("leading term must be nonzero")]
    ZeroLeadingTerm,

    /// Series operation requiring a zero constant term.
    #[error("{op} requires a series with zero constant term")]
    ConstantTermNotZero { op: &'static str },

    /// Series operation requiring a unit constant term.
    #[error("{op} requires a series with constant term 1")]
    ConstantTermNotOne { op: &'static str },

    /// Series operation requiring a nonzero constant term.
    #[error("{op} requires a series with nonzero constant term")]
    ZeroConstantTerm { op: &'static str },

    /// Finite-support distributions need nonnegative probabilities
    /// summing to one.
    #[error("probabilities must be nonnegative and sum to 1")]
    InvalidDistribution,

    /// Family order parameters that must be positive integers.
    #[error("order parameter must be at least 1")]
    PositiveOrderRequired,

    /// Mismatched sequence/point lists in a convolution sum.
    #[error("expected {expected} evaluation points, got {got}")]
    PointCountMismatch { expected: usize, got: usize },

    /// A convolution sum over an empty family list.
    #[error("at least one sequence is required")]
    EmptyFamilyList,

    /// An identity name that is not part of the verification suite.
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}
