//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::numeric::{binomial_rat, rat_pow, Rat};

/// A polynomial stored densely: `coeffs[i]` is the coefficient of `x^i`.
///
/// Trailing zeros are trimmed, so the leading coefficient is nonzero unless
/// the polynomial is identically zero (empty vector). Evaluation at any
/// rational point is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    /// Polynomial from a coefficient vector (index = power of x).
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the convention that the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Exact evaluation by Horner's scheme.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * crate::numeric::rat_int(i as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    /// Taylor shift: the polynomial `p(x + c)`.
    pub fn shifted(&self, c: &Rat) -> Polynomial {
        let mut out = vec![Rat::zero(); self.coeffs.len()];
        for (j, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
                *slot += coeff * binomial_rat(j, i) * rat_pow(c, j - i);
            }
        }
        Polynomial::new(out)
    }

    /// Forward difference `p(x + 1) - p(x)`; drops the degree by one.
    pub fn forward_difference(&self) -> Polynomial {
        &self.shifted(&Rat::one()) - self
    }

    pub fn scaled(&self, c: &Rat) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let q = Polynomial::new(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(q.degree(), 0);
        assert_eq!(q, Polynomial::constant(rat_int(1)));
    }

    #[test]
    fn eval_horner() {
        // 2x^2 - 3x + 1 at x = 3/2 is 9/2 - 9/2 + 1
        let q = p(&[1, -3, 2]);
        assert_eq!(q.eval(&rat(3, 2)), rat_int(1));
        assert_eq!(q.eval(&rat_int(2)), rat_int(3));
        assert_eq!(q.eval(&rat_int(0)), rat_int(1));
    }

    #[test]
    fn derivative_drops_degree() {
        let q = p(&[5, 0, 0, 1]); // x^3 + 5
        assert_eq!(q.derivative(), p(&[0, 0, 3]));
        assert_eq!(Polynomial::zero().derivative(), Polynomial::zero());
    }

    #[test]
    fn shift_expands_binomially() {
        // (x + 1)^2 = x^2 + 2x + 1
        let q = Polynomial::monomial(2).shifted(&rat_int(1));
        assert_eq!(q, p(&[1, 2, 1]));
        // shift by 0 is the identity
        assert_eq!(q.shifted(&rat_int(0)), q);
    }

    #[test]
    fn forward_difference_of_square() {
        // (x+1)^2 - x^2 = 2x + 1
        assert_eq!(Polynomial::monomial(2).forward_difference(), p(&[1, 2]));
        // constants vanish
        assert!(p(&[7]).forward_difference().is_zero());
    }

    #[test]
    fn product_of_linear_factors() {
        // x(x-1) = x^2 - x
        let q = &Polynomial::monomial(1) * &p(&[-1, 1]);
        assert_eq!(q, p(&[0, -1, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0]).to_string(), "0");
        let b2 = Polynomial::new(vec![rat(1, 6), rat_int(-1), rat_int(1)]);
        assert_eq!(b2.to_string(), "x^2 - x + 1/6");
        assert_eq!(p(&[0, -2]).to_string(), "-2*x");
    }
}
