//! Exact rational scalars and shared combinatorial primitives.
//!
//! Every scalar in this crate is an arbitrary-precision rational ([`Rat`]),
//! kept in lowest terms with a positive denominator, so nothing ever rounds.
//! On top of it sit the coefficient helpers the polynomial families are
//! built from: factorials, binomial coefficients with a rational upper
//! argument, falling factorials, harmonic numbers, multinomials, and the
//! binomial convolution kernel.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// The scalar type: an exact arbitrary-precision rational.
///
/// The canonical text form is `p/q` (just `p` when `q = 1`), with an
/// optional leading minus on `p`; this is exactly what `Display` produces
/// and what [`parse_rat`] accepts.
pub type Rat = BigRational;

/// Rational from a numerator/denominator pair.
///
/// Panics on a zero denominator; use [`parse_rat`] for untrusted input.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(numer: i64) -> Rat {
    Rat::from_integer(BigInt::from(numer))
}

/// Exact nonnegative integer power.
pub fn rat_pow(base: &Rat, exp: usize) -> Rat {
    num_traits::pow(base.clone(), exp)
}

/// Parse the canonical text form `p/q`, or `p` when the denominator is 1.
///
/// `p` may carry a leading minus; `q` must be a plain positive integer.
/// The result is reduced to lowest terms.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let bad = || Error::InvalidRational(s.to_string());
    let (numer, denom) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let digits = numer.strip_prefix('-').unwrap_or(numer);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let p: BigInt = numer.parse().map_err(|_| bad())?;
    let q: BigInt = match denom {
        None => BigInt::one(),
        Some(q) => {
            if q.is_empty() || !q.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            q.parse().map_err(|_| bad())?
        }
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `n!` as a rational, for coefficient arithmetic.
pub fn factorial_rat(n: usize) -> Rat {
    Rat::from_integer(factorial(n))
}

/// Integer binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `C(n, k)` as a rational.
pub fn binomial_rat(n: usize, k: usize) -> Rat {
    Rat::from_integer(binomial(n, k))
}

/// Binomial coefficient with an arbitrary rational upper argument:
/// `t(t-1)...(t-k+1) / k!`, equal to 1 when `k = 0`.
pub fn binom_general(t: &Rat, k: usize) -> Rat {
    falling_factorial(t, k) / factorial_rat(k)
}

/// Falling factorial `t(t-1)...(t-n+1)`; the empty product is 1.
pub fn falling_factorial(t: &Rat, n: usize) -> Rat {
    let mut product = Rat::one();
    let mut factor = t.clone();
    for _ in 0..n {
        product *= &factor;
        factor -= Rat::one();
    }
    product
}

/// The `k`th harmonic number `1 + 1/2 + ... + 1/k`, defined for `k >= 1`.
pub fn harmonic(k: usize) -> Result<Rat, Error> {
    if k == 0 {
        return Err(Error::HarmonicIndex);
    }
    Ok((1..=k).fold(Rat::zero(), |acc, j| {
        acc + Rat::new(BigInt::one(), BigInt::from(j))
    }))
}

/// Multinomial coefficient `n! / (j_1! ... j_m!)`; the parts must sum to
/// `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigInt, Error> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(Error::MultinomialParts { n, sum });
    }
    let parts: Vec<BigInt> = parts.iter().map(|&p| BigInt::from(p)).collect();
    Ok(num_integer::multinomial(&parts))
}

/// Binomial convolution of two coefficient slices:
/// `c_n = sum_k C(n,k) a_k b_{n-k}`, truncated to the shorter input.
///
/// The sum is lower triangular, so each output term is exact regardless of
/// how long the inputs are beyond the common prefix.
pub fn binomial_convolution(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|n| {
            (0..=n).fold(Rat::zero(), |acc, k| {
                acc + binomial_rat(n, k) * &a[k] * &b[n - k]
            })
        })
        .collect()
}
