//! Truncated formal power series over exact rationals.
//!
//! A series carries the coefficients `c_0 .. c_N` of `sum c_n z^n` for an
//! explicit truncation order `N` (default [`DEFAULT_ORDER`]). Binary
//! operations truncate to the shorter operand, so a result never claims more
//! precision than was actually computed. Multiplication is the plain
//! quadratic convolution: the exact bignum coefficient arithmetic dominates
//! the cost anyway, and transform-based multiplication would give up
//! exactness.
//!
//! These series are the generating-function oracle for the sequence and
//! polynomial identities elsewhere in the crate, via the EGF bridge
//! [`egf_to_sequence`] / [`sequence_to_egf`].

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::numeric::{factorial_rat, Rat};
use crate::seqgroup::EgfSequence;

/// Truncation order used when none is specified.
pub const DEFAULT_ORDER: usize = 32;

/// Coefficient prefix `c_0 .. c_order` of a formal power series in `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    /// Series from an explicit coefficient vector; the truncation order is
    /// `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: a series carries at least `c_0`.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        Self { coeffs }
    }

    /// Series from coefficients, zero-padded or cut to the given order.
    pub fn with_order(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::with_order(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        Self::with_order(vec![c], order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::with_order(vec![Rat::zero(), Rat::one()], order)
    }

    /// `e^z`: coefficients `1/n!`.
    pub fn exp_z(order: usize) -> Self {
        Self::new((0..=order).map(|n| Rat::one() / factorial_rat(n)).collect())
    }

    /// `e^z - 1`.
    pub fn expm1(order: usize) -> Self {
        let mut s = Self::exp_z(order);
        s.coeffs[0] = Rat::zero();
        s
    }

    /// `log(1 + z)`: coefficients `(-1)^{n+1}/n`.
    pub fn log1p(order: usize) -> Self {
        Self::new(
            (0..=order)
                .map(|n| match n {
                    0 => Rat::zero(),
                    _ => {
                        let c = Rat::new(BigInt::one(), BigInt::from(n));
                        if n % 2 == 0 {
                            -c
                        } else {
                            c
                        }
                    }
                })
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &Rat {
        &self.coeffs[0]
    }

    /// Prefix of length `min(order, self.order()) + 1`.
    pub fn truncated(&self, order: usize) -> Self {
        let len = order.min(self.order()) + 1;
        Self {
            coeffs: self.coeffs[..len].to_vec(),
        }
    }

    fn mul_coeffs(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let len = a.len().min(b.len());
        let mut out = vec![Rat::zero(); len];
        for (i, ca) in a.iter().enumerate().take(len) {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate().take(len - i) {
                out[i + j] += ca * cb;
            }
        }
        out
    }

    /// Exact quotient by long division; the divisor needs a nonzero
    /// constant term.
    pub fn div(&self, g: &Self) -> Result<Self, Error> {
        if g.constant_term().is_zero() {
            return Err(Error::ZeroConstantTerm { op: "div" });
        }
        let order = self.order().min(g.order());
        let mut out: Vec<Rat> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut c = self.coeffs[n].clone();
            for k in 1..=n {
                c -= &g.coeffs[k] * &out[n - k];
            }
            out.push(c / g.constant_term());
        }
        Ok(Self { coeffs: out })
    }

    /// Composition `f(g(z))` by Horner's scheme; `g` must have zero
    /// constant term so every output coefficient is determined by the
    /// prefixes.
    pub fn compose(&self, g: &Self) -> Result<Self, Error> {
        if !g.constant_term().is_zero() {
            return Err(Error::ConstantTermNotZero { op: "compose" });
        }
        let order = self.order().min(g.order());
        let g = g.truncated(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for i in (0..order).rev() {
            acc = &acc * &g;
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Formal exponential of a series with zero constant term, via the
    /// derivative recurrence `n g_n = sum_{k=1}^n k f_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.constant_term().is_zero() {
            return Err(Error::ConstantTermNotZero { op: "exp" });
        }
        let order = self.order();
        let mut out = vec![Rat::one()];
        for n in 1..=order {
            let mut acc = Rat::zero();
            for k in 1..=n {
                acc += crate::numeric::rat_int(k as i64) * &self.coeffs[k] * &out[n - k];
            }
            out.push(acc / crate::numeric::rat_int(n as i64));
        }
        Ok(Self { coeffs: out })
    }

    /// Formal logarithm of a series with constant term 1, via
    /// `n h_n = n f_n - sum_{k=1}^{n-1} k h_k f_{n-k}`.
    pub fn log(&self) -> Result<Self, Error> {
        if !self.constant_term().is_one() {
            return Err(Error::ConstantTermNotOne { op: "log" });
        }
        let order = self.order();
        let mut out = vec![Rat::zero()];
        for n in 1..=order {
            let mut acc = crate::numeric::rat_int(n as i64) * &self.coeffs[n];
            for (k, h) in out.iter().enumerate().skip(1) {
                acc -= crate::numeric::rat_int(k as i64) * h * &self.coeffs[n - k];
            }
            out.push(acc / crate::numeric::rat_int(n as i64));
        }
        Ok(Self { coeffs: out })
    }

    /// Rational power `f^t = exp(t log f)` of a series with constant term 1.
    /// One code path covers every rational exponent.
    pub fn pow(&self, t: &Rat) -> Result<Self, Error> {
        if !self.constant_term().is_one() {
            return Err(Error::ConstantTermNotOne { op: "pow" });
        }
        let log = self.log().expect("constant term is 1");
        let scaled = Self::new(log.coeffs.iter().map(|c| c * t).collect());
        Ok(scaled.exp().expect("log has zero constant term"))
    }

    /// Divides by `z` after checking that the constant term is zero; the
    /// order drops by one.
    ///
    /// This is the only place a negative power would ever appear, so it is
    /// kept as an explicit shift instead of a Laurent representation.
    pub fn divided_by_z(&self) -> Result<Self, Error> {
        if !self.constant_term().is_zero() {
            return Err(Error::ConstantTermNotZero { op: "divided_by_z" });
        }
        assert!(self.order() >= 1, "cannot shift an order-0 series");
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        TruncatedSeries {
            coeffs: (0..len).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        TruncatedSeries {
            coeffs: (0..len).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: TruncatedSeries::mul_coeffs(&self.coeffs, &rhs.coeffs),
        }
    }
}

/// EGF view of a series: `u_n = n! c_n`. The constant term must be nonzero
/// for the result to sit in the convolution group.
pub fn egf_to_sequence(f: &TruncatedSeries) -> Result<EgfSequence, Error> {
    EgfSequence::new(
        f.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| factorial_rat(n) * c)
            .collect(),
    )
}

/// Inverse of [`egf_to_sequence`]: `c_n = u_n / n!`.
pub fn sequence_to_egf(u: &EgfSequence) -> TruncatedSeries {
    TruncatedSeries::new(
        u.terms()
            .iter()
            .enumerate()
            .map(|(n, t)| t / factorial_rat(n))
            .collect(),
    )
}
