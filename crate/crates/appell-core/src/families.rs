//! Concrete Appell families and executable verification of their
//! convolution identities.
//!
//! The families are all specified through their associated sequences (the
//! weights of the forward-difference representation): generalized Bernoulli
//! polynomials of rational order, whose integer-order weights are the Daehee
//! numbers, and generalized Apostol-Euler polynomials. Each closed-form
//! identity about them is checked against a brute-force multinomial
//! enumeration at deterministic pseudo-random rational points, so a report
//! is reproducible bit for bit from its seed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::appell::{forward_difference_transform, forward_difference_transform_direct, AppellSeq};
use crate::error::Error;
use crate::numeric::{
    binom_general, binomial_rat, factorial_rat, falling_factorial, harmonic, multinomial, rat,
    rat_int, rat_pow, Rat,
};
use crate::seqgroup::EgfSequence;
use crate::stirling::{
    forward_difference_power, stirling_first, stirling_first_triangle, stirling_second_triangle,
};

/// Associated sequence of the generalized Bernoulli family of order `t`:
/// `b_n(t) = sum_k C(t,k) C(n-t,n-k) s(k+n,k) / C(k+n,n)`.
pub fn bernoulli_associated(t: &Rat, order: usize) -> EgfSequence {
    let triangle = stirling_first_triangle(2 * order);
    let terms: Vec<Rat> = (0..=order)
        .map(|n| {
            (0..=n).fold(Rat::zero(), |acc, k| {
                let weight = binom_general(t, k) * binom_general(&(rat_int(n as i64) - t), n - k)
                    / binomial_rat(k + n, n);
                acc + weight * Rat::from_integer(triangle[k + n][k].clone())
            })
        })
        .collect();
    EgfSequence::new(terms).expect("b_0(t) = 1")
}

/// The generalized Bernoulli sequence of order `t`, truncated at `order`.
pub fn bernoulli(t: &Rat, order: usize) -> AppellSeq {
    AppellSeq::from_associated(&bernoulli_associated(t, order))
}

/// `B_n(t; x)`, the generalized Bernoulli polynomial of order `t`,
/// evaluated exactly.
pub fn bernoulli_polynomial(t: &Rat, n: usize, x: &Rat) -> Rat {
    bernoulli(t, n).evaluate(n, x).expect("order is n")
}

/// Daehee number of order `m >= 1`: `s(m+n, m) / C(m+n, n)`, the `n`th
/// associated-sequence weight of the order-`m` Bernoulli family.
pub fn daehee_number(m: usize, n: usize) -> Result<Rat, Error> {
    if m == 0 {
        return Err(Error::PositiveOrderRequired);
    }
    let s = stirling_first(m + n, m).expect("m <= m + n");
    Ok(Rat::from_integer(s) / binomial_rat(m + n, n))
}

/// Order-2 Bernoulli weights in harmonic-number form:
/// `b_n(2) = (-1)^n n! 2 H_{n+1} / (n+2)`. Agrees term-wise with
/// [`bernoulli_associated`] at `t = 2`.
pub fn bernoulli_order2_associated(order: usize) -> EgfSequence {
    EgfSequence::from_fn(order, |n| {
        let h = harmonic(n + 1).expect("index >= 1");
        let magnitude = factorial_rat(n) * rat_int(2) * h / rat_int(n as i64 + 2);
        if n % 2 == 0 {
            magnitude
        } else {
            -magnitude
        }
    })
    .expect("b_0(2) = 1")
}

/// Associated sequence of the generalized Apostol-Euler family:
/// `a_n(t) = (-t)_n beta^n`.
pub fn euler_associated(t: &Rat, beta: &Rat, order: usize) -> EgfSequence {
    let minus_t = -t;
    EgfSequence::from_fn(order, |n| falling_factorial(&minus_t, n) * rat_pow(beta, n))
        .expect("a_0(t) = 1")
}

/// The generalized Apostol-Euler sequence of order `t` and parameter
/// `beta`, truncated at `order`.
pub fn apostol_euler(t: &Rat, beta: &Rat, order: usize) -> AppellSeq {
    AppellSeq::from_associated(&euler_associated(t, beta, order))
}

/// `E_n(t, beta; x)`, the generalized Apostol-Euler polynomial, evaluated
/// exactly.
pub fn apostol_euler_polynomial(t: &Rat, beta: &Rat, n: usize, x: &Rat) -> Rat {
    apostol_euler(t, beta, n)
        .evaluate(n, x)
        .expect("order is n")
}

/// Forward-difference weights of the mixed Bernoulli/Apostol-Euler
/// convolution (`m` Bernoulli factors, `r` Apostol-Euler factors):
/// `v_k = m! sum_j C(-r,j) beta^j s(m+k-j, m) / (m+k-j)!`.
pub fn mixed_weights(m: usize, r: usize, beta: &Rat, order: usize) -> Result<Vec<Rat>, Error> {
    if m == 0 || r == 0 {
        return Err(Error::PositiveOrderRequired);
    }
    let triangle = stirling_first_triangle(m + order);
    let minus_r = rat_int(-(r as i64));
    Ok((0..=order)
        .map(|k| {
            let sum = (0..=k).fold(Rat::zero(), |acc, j| {
                acc + binom_general(&minus_r, j)
                    * rat_pow(beta, j)
                    * Rat::from_integer(triangle[m + k - j][m].clone())
                    / factorial_rat(m + k - j)
            });
            factorial_rat(m) * sum
        })
        .collect())
}

/// Brute-force multinomial convolution
/// `sum_{j_1+...+j_m=n} (n! / prod j_i!) prod A_{j_i}(x_i)`, by direct
/// enumeration of the compositions of `n` into `m` parts.
pub fn multinomial_convolution_bruteforce(
    seqs: &[AppellSeq],
    points: &[Rat],
    n: usize,
) -> Result<Rat, Error> {
    if seqs.is_empty() {
        return Err(Error::EmptyFamilyList);
    }
    if seqs.len() != points.len() {
        return Err(Error::PointCountMismatch {
            expected: seqs.len(),
            got: points.len(),
        });
    }
    let mut total = Rat::zero();
    let mut parts = vec![0usize; seqs.len()];
    sum_compositions(n, 0, &mut parts, &mut |parts| {
        let mut term = Rat::from_integer(multinomial(n, parts).expect("parts sum to n"));
        for ((seq, point), &j) in seqs.iter().zip(points).zip(parts.iter()) {
            term *= seq.evaluate(j, point)?;
        }
        total += term;
        Ok(())
    })?;
    Ok(total)
}

fn sum_compositions(
    remaining: usize,
    index: usize,
    parts: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> Result<(), Error>,
) -> Result<(), Error> {
    if index + 1 == parts.len() {
        parts[index] = remaining;
        return visit(parts);
    }
    for j in 0..=remaining {
        parts[index] = j;
        sum_compositions(remaining - j, index + 1, parts, visit)?;
    }
    Ok(())
}

/// Deterministic 64-bit linear congruential generator (Knuth's constants):
/// `state <- 6364136223846793005 * state + 1442695040888963407 (mod 2^64)`.
/// Bounded draws take the upper 32 bits modulo the range width, so a seed
/// pins every generated test point bit for bit.
#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    const MULTIPLIER: u64 = 6364136223846793005;
    const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        self.state
    }

    /// Uniform draw from the inclusive range `[lo, hi]`.
    pub fn next_range(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + ((self.next_u64() >> 32) % span) as i64
    }

    /// Random rational test point: numerator in `[-20, 20]`, denominator in
    /// `[1, 12]`.
    pub fn next_rational(&mut self) -> Rat {
        rat(self.next_range(-20, 20), self.next_range(1, 12))
    }

    /// Random nonzero rational, for group elements.
    pub fn next_nonzero_rational(&mut self) -> Rat {
        loop {
            let r = self.next_rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Random member of the convolution group with the given order.
    pub fn next_sequence(&mut self, order: usize) -> EgfSequence {
        let mut terms = vec![self.next_nonzero_rational()];
        for _ in 0..order {
            terms.push(self.next_rational());
        }
        EgfSequence::new(terms).expect("leading term nonzero")
    }
}

/// The identities the verification driver knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// Second-order Bernoulli convolution with the sign as printed in the
    /// classical statement being checked; fails (see
    /// [`NorlundCorrected`](Identity::NorlundCorrected)).
    NorlundPaper,
    /// Second-order Bernoulli convolution with the corrected
    /// `+n(x+y-1)B_{n-1}(x+y)` term; passes.
    NorlundCorrected,
    /// Higher-order Bernoulli convolution against the Daehee-weight closed
    /// form.
    BernoulliHigher,
    /// Order-2 Bernoulli convolution against the harmonic-number weights.
    BernoulliHarmonic,
    /// Higher-order Apostol-Euler convolution against the binomial-weight
    /// closed form.
    EulerHigher,
    /// Mixed Bernoulli/Apostol-Euler convolution against the combined
    /// weights.
    Mixed,
    /// Abelian-group laws of binomial convolution on random sequences.
    GroupLaws,
    /// Stirling transform round trips and the orthogonality of the two
    /// Stirling kinds.
    StirlingInversion,
    /// Multiplier laws of the forward-difference transformation, including
    /// the dual-route agreement.
    MultiplierLaws,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::NorlundPaper,
        Identity::NorlundCorrected,
        Identity::BernoulliHigher,
        Identity::BernoulliHarmonic,
        Identity::EulerHigher,
        Identity::Mixed,
        Identity::GroupLaws,
        Identity::StirlingInversion,
        Identity::MultiplierLaws,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::NorlundPaper => "norlund-paper",
            Identity::NorlundCorrected => "norlund-corrected",
            Identity::BernoulliHigher => "bernoulli-higher",
            Identity::BernoulliHarmonic => "bernoulli-harmonic",
            Identity::EulerHigher => "euler-higher",
            Identity::Mixed => "mixed",
            Identity::GroupLaws => "group-laws",
            Identity::StirlingInversion => "stirling-inversion",
            Identity::MultiplierLaws => "multiplier-laws",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Identity::ALL
            .into_iter()
            .find(|identity| identity.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Parameters consumed by the identity checks; each identity ignores the
/// fields it does not use.
#[derive(Clone, Debug)]
pub struct IdentityParams {
    /// Number of Bernoulli (or Apostol-Euler, for `euler-higher`) factors.
    pub m: usize,
    /// Number of Apostol-Euler factors in the mixed identity.
    pub r: usize,
    /// Apostol-Euler parameter.
    pub beta: Rat,
}

impl Default for IdentityParams {
    fn default() -> Self {
        Self {
            m: 2,
            r: 1,
            beta: rat(1, 2),
        }
    }
}

/// First mismatch found by a verification run, with both exact sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Degree at which the mismatch occurred (trial index for the law
    /// suites, which check whole sequences instead of degrees).
    pub degree: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity verification run. `passed` is true exactly when
/// no mismatch was found over the declared ranges.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: Identity,
    pub parameters: BTreeMap<String, String>,
    pub max_degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub passed: bool,
    pub first_failure: Option<Failure>,
}

/// Runs one identity check: the brute-force side and the closed-form side
/// are evaluated at `trials` pseudo-random rational points per degree,
/// drawn deterministically from `seed`, and compared exactly. Cells are
/// scanned in a fixed order (degree-major), so the first failure is
/// well-defined and the whole report is reproducible.
pub fn verify_identity(
    identity: Identity,
    params: &IdentityParams,
    max_degree: usize,
    trials: usize,
    seed: u64,
) -> IdentityReport {
    let mut rng = Lcg64::new(seed);
    let first_failure = match identity {
        Identity::NorlundPaper => check_norlund(false, max_degree, trials, &mut rng),
        Identity::NorlundCorrected => check_norlund(true, max_degree, trials, &mut rng),
        Identity::BernoulliHigher => check_bernoulli_higher(params.m, max_degree, trials, &mut rng),
        Identity::BernoulliHarmonic => check_bernoulli_harmonic(max_degree, trials, &mut rng),
        Identity::EulerHigher => {
            check_euler_higher(params.m, &params.beta, max_degree, trials, &mut rng)
        }
        Identity::Mixed => check_mixed(
            params.m,
            params.r,
            &params.beta,
            max_degree,
            trials,
            &mut rng,
        ),
        Identity::GroupLaws => check_group_laws(max_degree, trials, &mut rng),
        Identity::StirlingInversion => check_stirling_inversion(max_degree, trials, &mut rng),
        Identity::MultiplierLaws => check_multiplier_laws(max_degree, trials, &mut rng),
    };
    let mut parameters = BTreeMap::new();
    match identity {
        Identity::BernoulliHigher => {
            parameters.insert("m".to_string(), params.m.to_string());
        }
        Identity::EulerHigher => {
            parameters.insert("m".to_string(), params.m.to_string());
            parameters.insert("beta".to_string(), params.beta.to_string());
        }
        Identity::Mixed => {
            parameters.insert("m".to_string(), params.m.to_string());
            parameters.insert("r".to_string(), params.r.to_string());
            parameters.insert("beta".to_string(), params.beta.to_string());
        }
        _ => {}
    }
    IdentityReport {
        identity,
        parameters,
        max_degree,
        trials,
        seed,
        passed: first_failure.is_none(),
        first_failure,
    }
}

fn rat_failure(degree: usize, lhs: &Rat, rhs: &Rat) -> Option<Failure> {
    (lhs != rhs).then(|| Failure {
        degree,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

fn seq_string(s: &EgfSequence) -> String {
    let parts: Vec<String> = s.terms().iter().map(Rat::to_string).collect();
    format!("({})", parts.join(", "))
}

fn seq_failure(index: usize, lhs: &EgfSequence, rhs: &EgfSequence) -> Option<Failure> {
    (lhs != rhs).then(|| Failure {
        degree: index,
        lhs: seq_string(lhs),
        rhs: seq_string(rhs),
    })
}

fn check_norlund(
    corrected: bool,
    max_degree: usize,
    trials: usize,
    rng: &mut Lcg64,
) -> Option<Failure> {
    let order = max_degree.max(1);
    let b = bernoulli(&Rat::one(), order);
    let pair = [b.clone(), b.clone()];
    for n in 1..=max_degree {
        for _ in 0..trials {
            let x = rng.next_rational();
            let y = rng.next_rational();
            let lhs = multinomial_convolution_bruteforce(&pair, &[x.clone(), y.clone()], n)
                .expect("n <= order");
            let s = &x + &y;
            let linear = rat_int(n as i64)
                * (&s - Rat::one())
                * b.evaluate(n - 1, &s).expect("n-1 <= order");
            let trailing = rat_int(n as i64 - 1) * b.evaluate(n, &s).expect("n <= order");
            let rhs = if corrected {
                linear - trailing
            } else {
                -linear - trailing
            };
            if let Some(failure) = rat_failure(n, &lhs, &rhs) {
                return Some(failure);
            }
        }
    }
    None
}

fn check_bernoulli_higher(
    m: usize,
    max_degree: usize,
    trials: usize,
    rng: &mut Lcg64,
) -> Option<Failure> {
    let b1 = bernoulli(&Rat::one(), max_degree);
    let factors = vec![b1; m.max(1)];
    let bm = bernoulli(&rat_int(m as i64), max_degree);
    for n in 0..=max_degree {
        for _ in 0..trials {
            let points: Vec<Rat> = (0..factors.len()).map(|_| rng.next_rational()).collect();
            let x = points.iter().fold(Rat::zero(), |acc, p| acc + p);
            let brute =
                multinomial_convolution_bruteforce(&factors, &points, n).expect("n <= order");
            let family = bm.evaluate(n, &x).expect("n <= order");
            if let Some(failure) = rat_failure(n, &brute, &family) {
                return Some(failure);
            }
            // Closed form: sum_k s(m+k,m) / (k! C(m+k,m)) Δ^k I_n(x).
            let closed = (0..=n).fold(Rat::zero(), |acc, k| {
                let weight = Rat::from_integer(stirling_first(m + k, m).expect("m <= m + k"))
                    / (factorial_rat(k) * binomial_rat(m + k, m));
                acc + weight * forward_difference_power(n, k, &x)
            });
            if let Some(failure) = rat_failure(n, &family, &closed) {
                return Some(failure);
            }
        }
    }
    None
}

fn check_bernoulli_harmonic(max_degree: usize, trials: usize, rng: &mut Lcg64) -> Option<Failure> {
    // The harmonic weights must reproduce the order-2 associated sequence.
    let harmonic_weights = bernoulli_order2_associated(max_degree);
    if let Some(failure) = seq_failure(
        0,
        &harmonic_weights,
        &bernoulli_associated(&rat_int(2), max_degree),
    ) {
        return Some(failure);
    }
    let b1 = bernoulli(&Rat::one(), max_degree);
    let pair = [b1.clone(), b1];
    for n in 0..=max_degree {
        for _ in 0..trials {
            let x1 = rng.next_rational();
            let x2 = rng.next_rational();
            let x = &x1 + &x2;
            let brute =
                multinomial_convolution_bruteforce(&pair, &[x1, x2], n).expect("n <= order");
            // 2 sum_k (-1)^k H_{k+1} / (k+2) Δ^k I_n(x)
            let closed = (0..=n).fold(Rat::zero(), |acc, k| {
                let h = harmonic(k + 1).expect("index >= 1");
                let magnitude =
                    rat_int(2) * h / rat_int(k as i64 + 2) * forward_difference_power(n, k, &x);
                if k % 2 == 0 {
                    acc + magnitude
                } else {
                    acc - magnitude
                }
            });
            if let Some(failure) = rat_failure(n, &brute, &closed) {
                return Some(failure);
            }
        }
    }
    None
}

fn check_euler_higher(
    m: usize,
    beta: &Rat,
    max_degree: usize,
    trials: usize,
    rng: &mut Lcg64,
) -> Option<Failure> {
    let e1 = apostol_euler(&Rat::one(), beta, max_degree);
    let factors = vec![e1; m.max(1)];
    let em = apostol_euler(&rat_int(m as i64), beta, max_degree);
    let minus_m = rat_int(-(m as i64));
    for n in 0..=max_degree {
        for _ in 0..trials {
            let points: Vec<Rat> = (0..factors.len()).map(|_| rng.next_rational()).collect();
            let x = points.iter().fold(Rat::zero(), |acc, p| acc + p);
            let brute =
                multinomial_convolution_bruteforce(&factors, &points, n).expect("n <= order");
            let family = em.evaluate(n, &x).expect("n <= order");
            if let Some(failure) = rat_failure(n, &brute, &family) {
                return Some(failure);
            }
            // Closed form: sum_k C(-m,k) beta^k Δ^k I_n(x).
            let closed = (0..=n).fold(Rat::zero(), |acc, k| {
                acc + binom_general(&minus_m, k)
                    * rat_pow(beta, k)
                    * forward_difference_power(n, k, &x)
            });
            if let Some(failure) = rat_failure(n, &family, &closed) {
                return Some(failure);
            }
        }
    }
    None
}

fn check_mixed(
    m: usize,
    r: usize,
    beta: &Rat,
    max_degree: usize,
    trials: usize,
    rng: &mut Lcg64,
) -> Option<Failure> {
    let m = m.max(1);
    let r = r.max(1);
    let b1 = bernoulli(&Rat::one(), max_degree);
    let e1 = apostol_euler(&Rat::one(), beta, max_degree);
    let mut factors = vec![b1; m];
    factors.extend(std::iter::repeat_n(e1, r));
    let convolved = bernoulli(&rat_int(m as i64), max_degree).convolve(&apostol_euler(
        &rat_int(r as i64),
        beta,
        max_degree,
    ));
    let weights = mixed_weights(m, r, beta, max_degree).expect("m, r >= 1");
    for n in 0..=max_degree {
        for _ in 0..trials {
            let points: Vec<Rat> = (0..m + r).map(|_| rng.next_rational()).collect();
            let x = points.iter().fold(Rat::zero(), |acc, p| acc + p);
            let brute =
                multinomial_convolution_bruteforce(&factors, &points, n).expect("n <= order");
            let family = convolved.evaluate(n, &x).expect("n <= order");
            if let Some(failure) = rat_failure(n, &brute, &family) {
                return Some(failure);
            }
            let closed = (0..=n).fold(Rat::zero(), |acc, k| {
                acc + &weights[k] * forward_difference_power(n, k, &x)
            });
            if let Some(failure) = rat_failure(n, &family, &closed) {
                return Some(failure);
            }
        }
    }
    None
}

fn check_group_laws(max_degree: usize, trials: usize, rng: &mut Lcg64) -> Option<Failure> {
    let e = EgfSequence::identity(max_degree);
    for trial in 0..trials {
        let u = rng.next_sequence(max_degree);
        let v = rng.next_sequence(max_degree);
        let w = rng.next_sequence(max_degree);
        let checks = [
            (u.binomial_convolve(&v), v.binomial_convolve(&u)),
            (
                u.binomial_convolve(&v).binomial_convolve(&w),
                u.binomial_convolve(&v.binomial_convolve(&w)),
            ),
            (u.binomial_convolve(&e), u.clone()),
            (u.binomial_convolve(&u.inverse()), e.clone()),
            (u.inverse().inverse(), u.clone()),
        ];
        for (lhs, rhs) in &checks {
            if let Some(failure) = seq_failure(trial, lhs, rhs) {
                return Some(failure);
            }
        }
    }
    None
}

#[allow(clippy::needless_range_loop)]
fn check_stirling_inversion(max_degree: usize, trials: usize, rng: &mut Lcg64) -> Option<Failure> {
    // Orthogonality sum_k s(n,k) S(k,j) = δ_{nj} over the whole triangle.
    let first = stirling_first_triangle(max_degree);
    let second = stirling_second_triangle(max_degree);
    for n in 0..=max_degree {
        for j in 0..=max_degree {
            let mut total = num_bigint::BigInt::zero();
            for k in j..=n {
                total += &first[n][k] * &second[k][j];
            }
            let expected = if n == j {
                num_bigint::BigInt::one()
            } else {
                num_bigint::BigInt::zero()
            };
            if total != expected {
                return Some(Failure {
                    degree: n,
                    lhs: total.to_string(),
                    rhs: expected.to_string(),
                });
            }
        }
    }
    for trial in 0..trials {
        let u = rng.next_sequence(max_degree);
        let round_trips = [
            (
                u.stirling_transform().inverse_stirling_transform(),
                u.clone(),
            ),
            (
                u.inverse_stirling_transform().stirling_transform(),
                u.clone(),
            ),
        ];
        for (lhs, rhs) in &round_trips {
            if let Some(failure) = seq_failure(trial, lhs, rhs) {
                return Some(failure);
            }
        }
    }
    None
}

fn check_multiplier_laws(max_degree: usize, trials: usize, rng: &mut Lcg64) -> Option<Failure> {
    for trial in 0..trials {
        let u = rng.next_sequence(max_degree);
        let v = rng.next_sequence(max_degree);
        let a = AppellSeq::from_values(rng.next_sequence(max_degree));
        let c = AppellSeq::from_values(rng.next_sequence(max_degree));
        let ac = a.convolve(&c);

        let nested_uv = forward_difference_transform(&u, &forward_difference_transform(&v, &ac));
        let nested_vu = forward_difference_transform(&v, &forward_difference_transform(&u, &ac));
        let fused = forward_difference_transform(&u.binomial_convolve(&v), &ac);
        let split =
            forward_difference_transform(&u, &a).convolve(&forward_difference_transform(&v, &c));
        let split_swapped =
            forward_difference_transform(&v, &a).convolve(&forward_difference_transform(&u, &c));

        let transformed_ac = forward_difference_transform(&u, &ac);
        let multiplier_right = a.convolve(&forward_difference_transform(&u, &c));
        let multiplier_left = forward_difference_transform(&u, &a).convolve(&c);

        let undone =
            forward_difference_transform(&u.inverse(), &forward_difference_transform(&u, &a));
        let direct = forward_difference_transform_direct(&u, &a);

        let checks = [
            (&nested_uv, &nested_vu),
            (&nested_uv, &fused),
            (&nested_uv, &split),
            (&nested_uv, &split_swapped),
            (&transformed_ac, &multiplier_right),
            (&transformed_ac, &multiplier_left),
            (&undone, &a),
            (&forward_difference_transform(&u, &a), &direct),
        ];
        for (lhs, rhs) in checks {
            if let Some(failure) = seq_failure(trial, lhs.values_at_zero(), rhs.values_at_zero()) {
                return Some(failure);
            }
        }
    }
    None
}
