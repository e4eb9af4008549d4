//! Appell sequences and their transformations.
//!
//! An Appell sequence satisfies `A_n'(x) = n A_{n-1}(x)`, or equivalently
//! `A_n(x) = sum_k C(n,k) A_k(0) x^{n-k}`, so it is determined by the prefix
//! of its values at zero. Only that prefix is stored; polynomials are
//! materialized on demand, which avoids keeping quadratic coefficient
//! tables around.
//!
//! The central map is the forward-difference transformation
//! `(L_u A)_n = sum_k (u_k/k!) Δ^k A_n`. It is a multiplier of the
//! convolution group of Appell sequences and is computed here through the
//! value prefix: the values of `L_u I` are exactly the Stirling transform of
//! `u`, so `L_u A = A × L_u I` needs one transform and one convolution.
//! A second, independent route applies the differences directly to the
//! materialized polynomials; the two must agree exactly and the tests
//! insist on it.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::numeric::{binom_general, binomial_rat, factorial_rat, rat_int, rat_pow, Rat};
use crate::polynomial::Polynomial;
use crate::seqgroup::EgfSequence;
use crate::stirling::MomentSequence;

/// An Appell sequence, stored as the prefix of its values at zero.
#[derive(Clone, Debug, PartialEq)]
pub struct AppellSeq {
    values_at_zero: EgfSequence,
}

impl AppellSeq {
    /// The identity sequence `I_n(x) = x^n`, whose value prefix is the
    /// group identity.
    pub fn identity(order: usize) -> Self {
        Self {
            values_at_zero: EgfSequence::identity(order),
        }
    }

    /// Appell sequence with the given values at zero.
    pub fn from_values(values_at_zero: EgfSequence) -> Self {
        Self { values_at_zero }
    }

    /// Rebuilds a sequence from its associated sequence via
    /// `A_n(0) = sum_k S(n,k) a_k`.
    pub fn from_associated(a: &EgfSequence) -> Self {
        Self {
            values_at_zero: a.stirling_transform(),
        }
    }

    pub fn values_at_zero(&self) -> &EgfSequence {
        &self.values_at_zero
    }

    pub fn order(&self) -> usize {
        self.values_at_zero.order()
    }

    /// `A_n(x) = sum_k C(n,k) A_k(0) x^{n-k}`, exact for any rational `x`.
    pub fn evaluate(&self, n: usize, x: &Rat) -> Result<Rat, Error> {
        if n > self.order() {
            return Err(Error::DegreeExceedsOrder {
                n,
                order: self.order(),
            });
        }
        Ok((0..=n).fold(Rat::zero(), |acc, k| {
            acc + binomial_rat(n, k) * self.values_at_zero.term(k) * rat_pow(x, n - k)
        }))
    }

    /// The degree-`n` member as an explicit polynomial.
    pub fn polynomial(&self, n: usize) -> Result<Polynomial, Error> {
        if n > self.order() {
            return Err(Error::DegreeExceedsOrder {
                n,
                order: self.order(),
            });
        }
        let mut coeffs = vec![Rat::zero(); n + 1];
        for k in 0..=n {
            // coefficient of x^{n-k}
            coeffs[n - k] = binomial_rat(n, k) * self.values_at_zero.term(k);
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Binomial convolution `(A × C)(x)`, acting on the value prefixes.
    pub fn convolve(&self, other: &Self) -> Self {
        Self {
            values_at_zero: self.values_at_zero.binomial_convolve(&other.values_at_zero),
        }
    }

    /// Inverse in the convolution group of Appell sequences; the identity
    /// sequence is the neutral element.
    pub fn inverse(&self) -> Self {
        Self {
            values_at_zero: self.values_at_zero.inverse(),
        }
    }

    /// The unique sequence `a` with `A = L_a I`:
    /// `a_n = sum_k s(n,k) A_k(0)`. Inverse of
    /// [`from_associated`](Self::from_associated).
    pub fn associated_sequence(&self) -> EgfSequence {
        self.values_at_zero.inverse_stirling_transform()
    }
}

/// Forward-difference transformation `L_u A`, computed through the value
/// prefix: `(L_u A)(0) = A(0) × stirling_transform(u)`, the Stirling
/// transform of `u` being the value prefix of the multiplier `L_u I`.
pub fn forward_difference_transform(u: &EgfSequence, a: &AppellSeq) -> AppellSeq {
    AppellSeq {
        values_at_zero: a.values_at_zero.binomial_convolve(&u.stirling_transform()),
    }
}

/// `L_u A` from the definition `(L_u A)_n = sum_k (u_k/k!) Δ^k A_n`,
/// applied to the materialized polynomials and read off at zero.
///
/// This route is independent of [`forward_difference_transform`]; the two
/// must agree exactly.
pub fn forward_difference_transform_direct(u: &EgfSequence, a: &AppellSeq) -> AppellSeq {
    let order = u.order().min(a.order());
    let values: Vec<Rat> = (0..=order)
        .map(|n| {
            let p = a.polynomial(n).expect("n <= order");
            let mut difference = p;
            let mut acc = Rat::zero();
            for k in 0..=n {
                acc += u.term(k) / factorial_rat(k) * difference.eval(&Rat::zero());
                difference = difference.forward_difference();
            }
            acc
        })
        .collect();
    AppellSeq {
        values_at_zero: EgfSequence::new(values).expect("u_0 A_0(0) != 0"),
    }
}

/// Expectation transform `R_Y A` with `(R_Y A)_n(x) = E A_n(x + Y)`:
/// on the value prefix this is binomial convolution with the moment
/// sequence, since `(R_Y A)_n(0) = sum_k C(n,k) A_k(0) m_{n-k}` and the
/// moments are the values of `R_Y I` at zero.
pub fn expectation_transform(m: &MomentSequence, a: &AppellSeq) -> AppellSeq {
    let moments = EgfSequence::new(m.moments().to_vec()).expect("m_0 = 1");
    AppellSeq {
        values_at_zero: a.values_at_zero.binomial_convolve(&moments),
    }
}

/// Factorial moments `y_n = E[(Y)_n] = sum_k s(n,k) m_k`: the associated
/// sequence of `R_Y I`.
pub fn factorial_moments(m: &MomentSequence) -> EgfSequence {
    EgfSequence::new(m.moments().to_vec())
        .expect("m_0 = 1")
        .inverse_stirling_transform()
}

/// The unique sequence whose EGF is the `t`-th power of the moment EGF:
/// `y_n(t) = sum_k C(t,k) C(n-t,n-k) E[W_k^n]`, with `W_k` the `k`-fold iid
/// sum of `Y`. For integer `t = m` this collapses to the moments of `W_m`.
pub fn real_power_sequence(m: &MomentSequence, t: &Rat) -> EgfSequence {
    let order = m.order();
    // Moments of W_0, W_1, ..., W_order, convolved incrementally.
    let mut sums: Vec<Vec<Rat>> = Vec::with_capacity(order + 1);
    let mut zero_sum = vec![Rat::zero(); order + 1];
    zero_sum[0] = Rat::one();
    sums.push(zero_sum);
    for k in 1..=order {
        sums.push(crate::numeric::binomial_convolution(
            &sums[k - 1],
            m.moments(),
        ));
    }
    let terms: Vec<Rat> = (0..=order)
        .map(|n| {
            (0..=n).fold(Rat::zero(), |acc, k| {
                let weight = binom_general(t, k) * binom_general(&(rat_int(n as i64) - t), n - k);
                acc + weight * &sums[k][n]
            })
        })
        .collect();
    EgfSequence::new(terms).expect("y_0(t) = 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};
    use crate::series::{egf_to_sequence, sequence_to_egf, TruncatedSeries};
    use proptest::prelude::*;

    /// Classical Bernoulli weights: a_k = k! (-1)^k / (k+1).
    fn bernoulli_weights(order: usize) -> EgfSequence {
        EgfSequence::from_fn(order, |k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            factorial_rat(k) * rat(sign, k as i64 + 1)
        })
        .unwrap()
    }

    /// Classical Euler weights: a_k = k! (-1/2)^k.
    fn euler_weights(order: usize) -> EgfSequence {
        EgfSequence::from_fn(order, |k| factorial_rat(k) * rat_pow(&rat(-1, 2), k)).unwrap()
    }

    /// Bernoulli values B_n(0) straight from the series z/(e^z - 1).
    fn bernoulli_values_oracle(order: usize) -> EgfSequence {
        let base = TruncatedSeries::expm1(order + 1).divided_by_z().unwrap();
        egf_to_sequence(&base.pow(&rat_int(-1)).unwrap()).unwrap()
    }

    #[test]
    fn identity_evaluates_to_powers() {
        let i = AppellSeq::identity(6);
        let x = rat(3, 4);
        for n in 0..=6 {
            assert_eq!(i.evaluate(n, &x).unwrap(), rat_pow(&x, n));
        }
        assert_eq!(
            i.evaluate(7, &x),
            Err(Error::DegreeExceedsOrder { n: 7, order: 6 })
        );
    }

    #[test]
    fn bernoulli_from_weights_matches_series_oracle() {
        let b = forward_difference_transform(&bernoulli_weights(8), &AppellSeq::identity(8));
        assert_eq!(b.values_at_zero(), &bernoulli_values_oracle(8));
        assert_eq!(b.evaluate(1, &rat_int(0)).unwrap(), rat(-1, 2));
        // B_2(x) = x^2 - x + 1/6
        let b2 = b.polynomial(2).unwrap();
        assert_eq!(b2.coeffs(), &[rat(1, 6), rat_int(-1), rat_int(1)]);
    }

    #[test]
    fn euler_from_weights_matches_series_oracle() {
        // E(x) has EGF 2 e^{xz}/(e^z + 1) = e^{xz} / (1 + (e^z-1)/2).
        let e = forward_difference_transform(&euler_weights(8), &AppellSeq::identity(8));
        let half_expm1 = TruncatedSeries::new(
            TruncatedSeries::expm1(8)
                .coeffs()
                .iter()
                .map(|c| c * rat(1, 2))
                .collect(),
        );
        let denom = &TruncatedSeries::one(8) + &half_expm1;
        let oracle = egf_to_sequence(&TruncatedSeries::one(8).div(&denom).unwrap()).unwrap();
        assert_eq!(e.values_at_zero(), &oracle);
        // E_1(x) = x - 1/2
        let e1 = e.polynomial(1).unwrap();
        assert_eq!(e1.coeffs(), &[rat(-1, 2), rat_int(1)]);
    }

    #[test]
    fn convolution_identity_and_inverse() {
        let b = AppellSeq::from_values(bernoulli_values_oracle(8));
        let i = AppellSeq::identity(8);
        assert_eq!(i.inverse(), i);
        assert_eq!(b.convolve(&i), b);
        assert_eq!(b.convolve(&b.inverse()), i);
        // inverse of Bernoulli has values 1/(n+1), the EGF of (e^z-1)/z.
        let inv = b.inverse();
        for n in 0..=8 {
            assert_eq!(inv.values_at_zero().term(n), &rat(1, n as i64 + 1));
        }
        // B x B at n = 1, x = 0: second-order Bernoulli value -1.
        let bb = b.convolve(&b);
        assert_eq!(bb.evaluate(1, &rat_int(0)).unwrap(), rat_int(-1));
    }

    #[test]
    fn transform_by_identity_element_is_identity() {
        let b = AppellSeq::from_values(bernoulli_values_oracle(6));
        let e = EgfSequence::identity(6);
        assert_eq!(forward_difference_transform(&e, &b), b);
        assert_eq!(forward_difference_transform_direct(&e, &b), b);
    }

    #[test]
    fn associated_sequence_round_trips() {
        let i = AppellSeq::identity(6);
        assert_eq!(i.associated_sequence(), EgfSequence::identity(6));
        assert_eq!(AppellSeq::from_associated(&EgfSequence::identity(6)), i);

        let b = AppellSeq::from_values(bernoulli_values_oracle(10));
        assert_eq!(b.associated_sequence(), bernoulli_weights(10));
        assert_eq!(AppellSeq::from_associated(&bernoulli_weights(10)), b);

        let e = forward_difference_transform(&euler_weights(10), &AppellSeq::identity(10));
        assert_eq!(e.associated_sequence(), euler_weights(10));
    }

    #[test]
    fn expectation_transform_examples() {
        let b = AppellSeq::from_values(bernoulli_values_oracle(6));
        // Y = 0 leaves everything unchanged.
        let unchanged = expectation_transform(&MomentSequence::point_mass(rat_int(0), 6), &b);
        assert_eq!(unchanged, b);
        // Shift of the identity by a point mass: E (x+1)^2 = (x+1)^2.
        let shifted = expectation_transform(
            &MomentSequence::point_mass(rat_int(1), 6),
            &AppellSeq::identity(6),
        );
        let p = shifted.polynomial(2).unwrap();
        assert_eq!(p.coeffs(), &[rat_int(1), rat_int(2), rat_int(1)]);
        // Uniform moments: E U^2 = 1/3.
        let ru = expectation_transform(&MomentSequence::uniform01(6), &AppellSeq::identity(6));
        assert_eq!(ru.evaluate(2, &rat_int(0)).unwrap(), rat(1, 3));
    }

    #[test]
    fn expectation_transform_matches_definition() {
        // (R_Y A)_n(x) = sum_k C(n,k) A_k(0) E (x+Y)^{n-k}, at sample points.
        let a = AppellSeq::from_values(bernoulli_values_oracle(6));
        let m = MomentSequence::uniform01(6);
        let transformed = expectation_transform(&m, &a);
        for n in 0..=6usize {
            for x in [rat_int(0), rat(2, 3), rat(-7, 5)] {
                let direct = (0..=n).fold(Rat::zero(), |acc, k| {
                    acc + binomial_rat(n, k)
                        * a.values_at_zero().term(k)
                        * m.shifted_moment(&x, n - k)
                });
                assert_eq!(transformed.evaluate(n, &x).unwrap(), direct);
            }
        }
    }

    #[test]
    fn factorial_moments_examples() {
        let c = rat(5, 3);
        let pm = MomentSequence::point_mass(c.clone(), 6);
        let fm = factorial_moments(&pm);
        for n in 0..=6 {
            assert_eq!(fm.term(n), &crate::numeric::falling_factorial(&c, n));
        }
        // (1)_n vanishes from n = 2 on.
        let unit = factorial_moments(&MomentSequence::point_mass(rat_int(1), 5));
        assert_eq!(
            unit.terms(),
            &[
                rat_int(1),
                rat_int(1),
                rat_int(0),
                rat_int(0),
                rat_int(0),
                rat_int(0)
            ]
        );
        // E U(U-1) = 1/3 - 1/2 = -1/6.
        let u = factorial_moments(&MomentSequence::uniform01(4));
        assert_eq!(u.term(2), &rat(-1, 6));
    }

    #[test]
    fn real_power_sequence_examples() {
        let m = MomentSequence::uniform01(6);
        assert_eq!(
            real_power_sequence(&m, &rat_int(0)),
            EgfSequence::identity(6)
        );
        // Point mass at 1, cubed: constant 3.
        let p = real_power_sequence(&MomentSequence::point_mass(rat_int(1), 6), &rat_int(3));
        for n in 0..=6 {
            assert_eq!(p.term(n), &rat_pow(&rat_int(3), n));
        }
    }

    #[test]
    fn real_power_sequence_integer_reduces_to_iid_sum() {
        let m = MomentSequence::uniform_times_exponential(8);
        for k in 0..=4usize {
            let power = real_power_sequence(&m, &rat_int(k as i64));
            assert_eq!(power.terms(), m.iid_sum(k).moments());
        }
    }

    #[test]
    fn real_power_sequence_half_matches_series_oracle() {
        // Y = -UT has moment EGF log(1+z)/z, so the square root of that EGF
        // carries y(1/2); equivalently the Stirling transform of y(1/2) has
        // EGF (z/(e^z-1))^{1/2}.
        let order = 8;
        let m = MomentSequence::uniform_times_exponential(order).negated();
        let half = real_power_sequence(&m, &rat(1, 2));
        let log_base = TruncatedSeries::log1p(order + 1).divided_by_z().unwrap();
        let oracle = egf_to_sequence(&log_base.pow(&rat(1, 2)).unwrap()).unwrap();
        assert_eq!(half, oracle);
        let bern_base = TruncatedSeries::expm1(order + 1).divided_by_z().unwrap();
        let bern_oracle = egf_to_sequence(&bern_base.pow(&rat(-1, 2)).unwrap()).unwrap();
        assert_eq!(half.stirling_transform(), bern_oracle);
    }

    #[test]
    fn multi_factor_convolution_splits_points() {
        // Term-wise convolution of the value sequences at x_1, ..., x_m
        // equals the m-fold convolution evaluated at their sum.
        let mut rng = crate::families::Lcg64::new(515);
        let order = 10;
        for m in 2..=4usize {
            for _ in 0..5 {
                let seqs: Vec<AppellSeq> = (0..m)
                    .map(|_| AppellSeq::from_values(rng.next_sequence(order)))
                    .collect();
                let points: Vec<Rat> = (0..m).map(|_| rng.next_rational()).collect();
                let total = points.iter().fold(Rat::zero(), |acc, p| acc + p);
                let value_sequences: Vec<EgfSequence> = seqs
                    .iter()
                    .zip(&points)
                    .map(|(seq, x)| {
                        EgfSequence::from_fn(order, |n| seq.evaluate(n, x).unwrap())
                            .expect("A_0(x) != 0")
                    })
                    .collect();
                let lhs = value_sequences[1..]
                    .iter()
                    .fold(value_sequences[0].clone(), |acc, u| {
                        acc.binomial_convolve(u)
                    });
                let convolved = seqs[1..]
                    .iter()
                    .fold(seqs[0].clone(), |acc, seq| acc.convolve(seq));
                for n in 0..=order {
                    assert_eq!(
                        lhs.term(n),
                        &convolved.evaluate(n, &total).unwrap(),
                        "m={m} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn expectation_of_shifted_power_expands_in_differences() {
        // E (x+Y)^n = sum_k (y_k / k!) Δ^k I_n(x), with y the factorial
        // moments of Y.
        use crate::stirling::forward_difference_power;
        let order = 10;
        let distributions = [
            MomentSequence::uniform01(order),
            MomentSequence::finite_support(
                vec![
                    (rat(-3, 2), rat(1, 4)),
                    (rat_int(2), rat(1, 4)),
                    (rat(7, 5), rat(1, 2)),
                ],
                order,
            )
            .unwrap(),
        ];
        for m in &distributions {
            let shifted = expectation_transform(m, &AppellSeq::identity(order));
            let weights = factorial_moments(m);
            for x in [rat_int(0), rat(3, 7), rat(-5, 2)] {
                for n in 0..=order {
                    let direct = (0..=n).fold(Rat::zero(), |acc, k| {
                        acc + weights.term(k) / factorial_rat(k)
                            * forward_difference_power(n, k, &x)
                    });
                    assert_eq!(shifted.evaluate(n, &x).unwrap(), direct, "n={n} x={x}");
                }
            }
        }
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_sequence(order: usize) -> impl Strategy<Value = EgfSequence> {
        let term = arb_rat();
        let leading = (1i64..=20, 1i64..=12, proptest::bool::ANY).prop_map(|(n, d, neg)| {
            if neg {
                rat(-n, d)
            } else {
                rat(n, d)
            }
        });
        (leading, proptest::collection::vec(term, order)).prop_map(|(first, mut rest)| {
            let mut terms = vec![first];
            terms.append(&mut rest);
            EgfSequence::new(terms).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        // The two routes for L_u must agree exactly.
        #[test]
        fn transform_routes_agree(u in arb_sequence(8), values in arb_sequence(8)) {
            let a = AppellSeq::from_values(values);
            prop_assert_eq!(
                forward_difference_transform(&u, &a),
                forward_difference_transform_direct(&u, &a)
            );
        }

        // Derivative law A_n' = n A_{n-1} for materialized polynomials.
        #[test]
        fn derivative_law(values in arb_sequence(8)) {
            let a = AppellSeq::from_values(values);
            for n in 1..=a.order() {
                let derived = a.polynomial(n).unwrap().derivative();
                let scaled = a.polynomial(n - 1).unwrap().scaled(&rat_int(n as i64));
                prop_assert_eq!(derived, scaled);
            }
        }

        // The generating-function law for L_u: the EGF of the transformed
        // values is the EGF of A(0) times the EGF of u composed with e^z-1.
        #[test]
        fn transform_generating_function_law(u in arb_sequence(8), values in arb_sequence(8)) {
            let a = AppellSeq::from_values(values);
            let transformed = forward_difference_transform(&u, &a);
            let lhs = sequence_to_egf(transformed.values_at_zero());
            let composed = sequence_to_egf(&u)
                .compose(&TruncatedSeries::expm1(u.order()))
                .unwrap();
            let rhs = &sequence_to_egf(a.values_at_zero()) * &composed;
            prop_assert_eq!(lhs.truncated(rhs.order()), rhs);
        }

        // Values convolved at split points equal the convolution evaluated
        // at the total: A(x) x C(y) = (A x C)(x + y), term-wise.
        #[test]
        fn convolution_splits_evaluation_points(
            a_values in arb_sequence(8),
            c_values in arb_sequence(8),
            x in arb_rat(),
            y in arb_rat(),
        ) {
            let a = AppellSeq::from_values(a_values);
            let c = AppellSeq::from_values(c_values);
            let conv = a.convolve(&c);
            for n in 0..=a.order().min(c.order()) {
                let lhs = (0..=n).fold(Rat::zero(), |acc, k| {
                    acc + binomial_rat(n, k)
                        * a.evaluate(k, &x).unwrap()
                        * c.evaluate(n - k, &y).unwrap()
                });
                prop_assert_eq!(lhs, conv.evaluate(n, &(&x + &y)).unwrap());
            }
        }
    }
}
