//! The abelian group of EGF sequences under binomial convolution, and the
//! Stirling transform pair.
//!
//! A sequence `u = (u_0 .. u_N)` with `u_0 != 0` stands for the exponential
//! generating function `sum u_n z^n / n!`. Binomial convolution multiplies
//! those generating functions; because the convolution is lower triangular,
//! a finite prefix is exact to its own order, and every operation truncates
//! to the shortest input it saw.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::numeric::{binomial_convolution, binomial_rat, Rat};
use crate::stirling::{stirling_first_triangle, stirling_second_triangle};

/// Finite prefix of an EGF coefficient sequence with nonzero leading term.
///
/// Equality compares term-wise up to the *common* order of the operands,
/// mirroring how each operation truncates to the shorter input; for that
/// reason the type implements only `PartialEq` (prefix equality is not
/// transitive across different orders).
#[derive(Clone, Debug)]
pub struct EgfSequence {
    terms: Vec<Rat>,
}

impl EgfSequence {
    /// Sequence from explicit terms; `terms[0]` must be nonzero.
    pub fn new(terms: Vec<Rat>) -> Result<Self, Error> {
        if terms.first().is_none_or(Zero::is_zero) {
            return Err(Error::ZeroLeadingTerm);
        }
        Ok(Self { terms })
    }

    /// The identity element `e = (1, 0, 0, ...)`.
    pub fn identity(order: usize) -> Self {
        let mut terms = vec![Rat::zero(); order + 1];
        terms[0] = Rat::one();
        Self { terms }
    }

    /// Builds `(f(0), ..., f(order))`; `f(0)` must be nonzero.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> Rat) -> Result<Self, Error> {
        Self::new((0..=order).map(&mut f).collect())
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, n: usize) -> &Rat {
        &self.terms[n]
    }

    pub fn terms(&self) -> &[Rat] {
        &self.terms
    }

    /// Prefix of length `min(order, self.order()) + 1`.
    pub fn truncated(&self, order: usize) -> Self {
        let len = order.min(self.order()) + 1;
        Self {
            terms: self.terms[..len].to_vec(),
        }
    }

    /// Binomial convolution `(u × v)_n = sum_k C(n,k) u_k v_{n-k}`,
    /// truncated to the shorter operand.
    pub fn binomial_convolve(&self, other: &Self) -> Self {
        Self {
            terms: binomial_convolution(&self.terms, &other.terms),
        }
    }

    /// Inverse in the convolution group, by the triangular recursion
    /// `v_0 = 1/u_0`, `v_n = -(1/u_0) sum_{k=1}^n C(n,k) u_k v_{n-k}`.
    pub fn inverse(&self) -> Self {
        let order = self.order();
        let mut inv: Vec<Rat> = Vec::with_capacity(order + 1);
        inv.push(Rat::one() / &self.terms[0]);
        for n in 1..=order {
            let mut acc = Rat::zero();
            for k in 1..=n {
                acc += binomial_rat(n, k) * &self.terms[k] * &inv[n - k];
            }
            inv.push(-acc / &self.terms[0]);
        }
        Self { terms: inv }
    }

    /// Stirling transform `v_n = sum_k S(n,k) u_k`: substitutes `e^z - 1`
    /// into the EGF.
    pub fn stirling_transform(&self) -> Self {
        let triangle = stirling_second_triangle(self.order());
        self.triangular_transform(&triangle)
    }

    /// Inverse Stirling transform `u_n = sum_k s(n,k) v_k`: substitutes
    /// `log(1 + z)` into the EGF. Mutually inverse with
    /// [`stirling_transform`](Self::stirling_transform).
    pub fn inverse_stirling_transform(&self) -> Self {
        let triangle = stirling_first_triangle(self.order());
        self.triangular_transform(&triangle)
    }

    fn triangular_transform(&self, triangle: &[Vec<num_bigint::BigInt>]) -> Self {
        let terms = (0..=self.order())
            .map(|n| {
                (0..=n).fold(Rat::zero(), |acc, k| {
                    acc + Rat::from_integer(triangle[n][k].clone()) * &self.terms[k]
                })
            })
            .collect();
        Self { terms }
    }
}

impl PartialEq for EgfSequence {
    fn eq(&self, other: &Self) -> bool {
        let len = self.terms.len().min(other.terms.len());
        self.terms[..len] == other.terms[..len]
    }
}
