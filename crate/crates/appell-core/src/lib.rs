//! Exact computation with Appell polynomial sequences.
//!
//! Everything is built on arbitrary-precision rational arithmetic, so every
//! result is exact: there is no floating point anywhere. The crate provides
//!
//! - the abelian group of EGF sequences under binomial convolution
//!   ([`seqgroup`]), with the Stirling transform pair;
//! - truncated formal power series ([`series`]) acting as an independent
//!   generating-function oracle;
//! - forward differences, Stirling numbers of both kinds, and exact moment
//!   sequences ([`stirling`]);
//! - Appell sequences with their forward-difference and expectation
//!   transformations ([`appell`]);
//! - concrete families — generalized Bernoulli of rational order,
//!   Apostol-Euler, Daehee numbers — together with executable verification
//!   of their convolution identities against brute-force multinomial
//!   enumeration ([`families`]).
//!
//! All values are immutable and all operations are pure functions, so
//! everything here can be shared freely across threads.

pub mod appell;
pub mod error;
pub mod families;
pub mod numeric;
pub mod polynomial;
pub mod seqgroup;
pub mod series;
pub mod stirling;

pub use appell::AppellSeq;
pub use error::Error;
pub use numeric::Rat;
pub use polynomial::Polynomial;
pub use seqgroup::EgfSequence;
pub use series::TruncatedSeries;
pub use stirling::MomentSequence;
