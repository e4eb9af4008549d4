//! Difference calculus and Stirling machinery.
//!
//! Forward differences of powers and polynomials, Stirling numbers of both
//! kinds (by their recurrences), the generalized Stirling numbers
//! `Δ^k I_n(x) / k!`, and exact moment sequences. Moment sequences stand in
//! for random variables: every expectation that appears in the identities is
//! a linear functional of the moments, so exact rationals replace sampling
//! entirely and double as independent oracles for the Stirling recurrences.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::numeric::{binomial_convolution, binomial_rat, factorial_rat, rat_pow, Rat};
use crate::polynomial::Polynomial;

/// `Δ^k I_n(x)`: the `k`th forward difference of `x^n`, computed as
/// `sum_j C(k,j) (-1)^{k-j} (x+j)^n`.
pub fn forward_difference_power(n: usize, k: usize, x: &Rat) -> Rat {
    let mut total = Rat::zero();
    for j in 0..=k {
        let base = x + crate::numeric::rat_int(j as i64);
        let term = binomial_rat(k, j) * rat_pow(&base, n);
        if (k - j).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `Δ^k p` for a polynomial, by iterating `p(x+1) - p(x)`.
pub fn forward_difference_poly(p: &Polynomial, k: usize) -> Polynomial {
    let mut q = p.clone();
    for _ in 0..k {
        q = q.forward_difference();
    }
    q
}

/// Rows `0..=n_max` of the second-kind triangle,
/// `S(n,k) = k S(n-1,k) + S(n-1,k-1)` with `S(0,0) = 1`.
pub fn stirling_second_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let zero = BigInt::zero();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let above = prev.get(k).unwrap_or(&zero);
            row[k] = BigInt::from(k) * above + &prev[k - 1];
        }
        rows.push(row);
    }
    rows
}

/// Rows `0..=n_max` of the signed first-kind triangle,
/// `s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)` with `s(0,0) = 1`.
pub fn stirling_first_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let zero = BigInt::zero();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let above = prev.get(k).unwrap_or(&zero);
            row[k] = &prev[k - 1] - BigInt::from(n - 1) * above;
        }
        rows.push(row);
    }
    rows
}

/// Stirling number of the second kind `S(n, k)`, for `k <= n`.
pub fn stirling_second(n: usize, k: usize) -> Result<BigInt, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    Ok(stirling_second_triangle(n).swap_remove(n).swap_remove(k))
}

/// Signed Stirling number of the first kind `s(n, k)`, for `k <= n`.
pub fn stirling_first(n: usize, k: usize) -> Result<BigInt, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    Ok(stirling_first_triangle(n).swap_remove(n).swap_remove(k))
}

/// Generalized Stirling number `Δ^k I_n(x) / k!`, defined for `k <= n`.
///
/// At `x = 0` this is `S(n, k)`. Requests with `k > n` are rejected rather
/// than silently mapped to zero.
pub fn generalized_stirling(n: usize, k: usize, x: &Rat) -> Result<Rat, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    Ok(forward_difference_power(n, k, x) / factorial_rat(k))
}

/// Describes how a [`MomentSequence`] was constructed.
#[derive(Clone, Debug, PartialEq)]
pub enum MomentLabel {
    /// Deterministic value `c`.
    PointMass(Rat),
    /// Uniform distribution on `[0, 1]`.
    Uniform01,
    /// Standard exponential distribution.
    Exponential1,
    /// Product of independent uniform and exponential factors.
    UniformTimesExponential,
    /// Sign flip of the base distribution.
    Negated(Box<MomentLabel>),
    /// Discrete distribution given by `(value, probability)` atoms.
    FiniteSupport(Vec<(Rat, Rat)>),
    /// Sum of `count` independent copies of the base distribution.
    IidSum {
        base: Box<MomentLabel>,
        count: usize,
    },
}

/// Exact moments `m_n = E[Y^n]` of a formal random variable `Y`, with
/// `m_0 = 1`.
///
/// All constructors here produce distributions with finite exponential
/// moments (`E e^{r|Y|} < ∞` for some `r > 0`) and also satisfy the stronger
/// domination `r E|Y| e^{r|Y|} < 1` for `r` small, which the real-power
/// construction assumes. The type records moments only; those analytic side
/// conditions are documented, not enforced, since every computation below is
/// formal.
#[derive(Clone, Debug)]
pub struct MomentSequence {
    moments: Vec<Rat>,
    label: MomentLabel,
}

impl MomentSequence {
    /// Point mass at `c`: `m_n = c^n`.
    pub fn point_mass(c: Rat, order: usize) -> Self {
        let moments = (0..=order).map(|n| rat_pow(&c, n)).collect();
        Self {
            moments,
            label: MomentLabel::PointMass(c),
        }
    }

    /// Uniform on `[0, 1]`: `m_n = 1/(n+1)`.
    pub fn uniform01(order: usize) -> Self {
        let moments = (0..=order)
            .map(|n| Rat::new(BigInt::one(), BigInt::from(n + 1)))
            .collect();
        Self {
            moments,
            label: MomentLabel::Uniform01,
        }
    }

    /// Standard exponential: `m_n = n!`.
    pub fn exponential1(order: usize) -> Self {
        let moments = (0..=order).map(factorial_rat).collect();
        Self {
            moments,
            label: MomentLabel::Exponential1,
        }
    }

    /// Product of independent uniform and exponential factors:
    /// `m_n = n!/(n+1)`.
    pub fn uniform_times_exponential(order: usize) -> Self {
        let moments = (0..=order)
            .map(|n| factorial_rat(n) / crate::numeric::rat_int(n as i64 + 1))
            .collect();
        Self {
            moments,
            label: MomentLabel::UniformTimesExponential,
        }
    }

    /// Moments of `-Y`: flips the sign of every odd moment.
    pub fn negated(&self) -> Self {
        let moments = self
            .moments
            .iter()
            .enumerate()
            .map(|(n, m)| if n.is_multiple_of(2) { m.clone() } else { -m })
            .collect();
        Self {
            moments,
            label: MomentLabel::Negated(Box::new(self.label.clone())),
        }
    }

    /// Discrete distribution from `(value, probability)` atoms; the
    /// probabilities must be nonnegative and sum to one. `m_n` is
    /// `sum_i p_i v_i^n` by construction.
    pub fn finite_support(atoms: Vec<(Rat, Rat)>, order: usize) -> Result<Self, Error> {
        let total = atoms
            .iter()
            .fold(Rat::zero(), |acc, (_, p)| acc + p.clone());
        if !total.is_one() || atoms.iter().any(|(_, p)| p.is_negative()) {
            return Err(Error::InvalidDistribution);
        }
        let moments = (0..=order)
            .map(|n| {
                atoms
                    .iter()
                    .fold(Rat::zero(), |acc, (v, p)| acc + p * rat_pow(v, n))
            })
            .collect();
        Ok(Self {
            moments,
            label: MomentLabel::FiniteSupport(atoms),
        })
    }

    /// Moments of `W_k = Y_1 + ... + Y_k` for independent copies of `Y`:
    /// the `k`-fold binomial convolution of the moments (the moment EGF of a
    /// sum of independent variables is the product of the EGFs). `k = 0`
    /// gives the point mass at zero.
    pub fn iid_sum(&self, k: usize) -> Self {
        let order = self.order();
        let mut moments = vec![Rat::zero(); order + 1];
        moments[0] = Rat::one();
        for _ in 0..k {
            moments = binomial_convolution(&moments, &self.moments);
        }
        Self {
            moments,
            label: MomentLabel::IidSum {
                base: Box::new(self.label.clone()),
                count: k,
            },
        }
    }

    pub fn order(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moment(&self, n: usize) -> &Rat {
        &self.moments[n]
    }

    pub fn moments(&self) -> &[Rat] {
        &self.moments
    }

    pub fn label(&self) -> &MomentLabel {
        &self.label
    }

    /// `E[(x + Y)^n]`, expanded binomially through the stored moments.
    pub fn shifted_moment(&self, x: &Rat, n: usize) -> Rat {
        (0..=n).fold(Rat::zero(), |acc, j| {
            acc + binomial_rat(n, j) * rat_pow(x, n - j) * &self.moments[j]
        })
    }
}

/// Moment-based oracle for the second kind:
/// `S(n,k) = C(n,k) E[S_k^{n-k}]` where `S_k` is the `k`-fold iid sum of
/// uniform variables on `[0, 1]`.
pub fn stirling_second_via_moments(n: usize, k: usize) -> Result<Rat, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let sum = MomentSequence::uniform01(n - k).iid_sum(k);
    Ok(binomial_rat(n, k) * sum.moment(n - k))
}

/// Moment-based oracle for the first kind:
/// `s(n,k) = (-1)^{n-k} C(n,k) E[(S_k*)^{n-k}]` where `S_k*` is the `k`-fold
/// iid sum of uniform-times-exponential products.
pub fn stirling_first_via_moments(n: usize, k: usize) -> Result<Rat, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let sum = MomentSequence::uniform_times_exponential(n - k).iid_sum(k);
    let magnitude = binomial_rat(n, k) * sum.moment(n - k);
    Ok(if (n - k).is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    })
}
