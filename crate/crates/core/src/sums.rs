//! Prefix, weighted and strided sums, each with a closed form and a
//! brute-force twin ([`sum_oracle`]).

use num_traits::{One, Zero};

use crate::arith::{int, pow2, rat_pow, EisensteinRational, Rational};
use crate::closed_forms::{decomposed_term, jacobsthal_closed};
use crate::error::{domain, Error, Result};
use crate::sequences::{SequenceParams, Terms};

/// `Σ wᵢ·J(iᵢ)` straight from the recurrence. Weights default to 1.
pub fn sum_oracle(
    params: &SequenceParams,
    indices: &[i64],
    weights: Option<&[Rational]>,
) -> Result<Rational> {
    if let Some(w) = weights {
        if w.len() != indices.len() {
            return Err(domain(format!(
                "{} weights for {} indices",
                w.len(),
                indices.len()
            )));
        }
    }
    if let Some(bad) = indices.iter().find(|&&i| i < 0) {
        return Err(domain(format!("negative index {bad}")));
    }
    let Some(&top) = indices.iter().max() else {
        return Ok(Rational::zero());
    };
    let values: Vec<Rational> = Terms::new(params).take(top as usize + 1).collect();
    let one = Rational::one();
    Ok(indices
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let w = weights.map_or(&one, |w| &w[k]);
            w * &values[i as usize]
        })
        .sum())
}

/// `Σ_{k=0..n} J(k)` for the Jacobsthal numbers: `J(n+1)`, less 1 when
/// `n ≡ 0 (mod 3)`.
pub fn prefix_sum_closed(n: u64) -> Rational {
    let next = jacobsthal_closed(n + 1);
    if n.is_multiple_of(3) {
        next - int(1)
    } else {
        next
    }
}

/// `2 + x + x² - x³`, the common denominator of the three geometric sums.
/// This is `-(x³ - x² - x - 2)`.
pub fn weighted_denominator(x: &Rational) -> Rational {
    int(2) + x + x * x - x * x * x
}

/// `x³ - x² - x - 2` as printed alongside the weighted-sum formula.
pub fn printed_weighted_denominator(x: &Rational) -> Rational {
    -weighted_denominator(x)
}

/// The braced numerator of the weighted-sum formula:
/// `2J(n) + (J(n+2) - J(n+1))x + J(n+1)x² - x^(n+1)·((c-b-a) - (a-b)x + ax²)`.
pub fn weighted_numerator(params: &SequenceParams, x: &Rational, n: u64) -> Result<Rational> {
    let (a, b, c) = (params.a(), params.b(), params.c());
    let jn = decomposed_term(params, n);
    let jn1 = decomposed_term(params, n + 1);
    let jn2 = decomposed_term(params, n + 2);
    let tail = (c - b - a) - (a - b) * x + a * x * x;
    Ok(int(2) * jn + (jn2 - &jn1) * x + jn1 * x * x - rat_pow(x, n as i64 + 1)? * tail)
}

fn weighted_guard(x: &Rational) -> Result<()> {
    if x.is_zero() {
        return Err(domain("x must be nonzero"));
    }
    if *x == int(2) {
        return Err(Error::Pole(x.clone()));
    }
    Ok(())
}

/// `Σ_{k=0..n} J(k)/x^k` in closed form, over the sign-corrected
/// denominator `x^n·(2 + x + x² - x³)`.
pub fn weighted_sum_closed(params: &SequenceParams, x: &Rational, n: u64) -> Result<Rational> {
    weighted_guard(x)?;
    let den = rat_pow(x, n as i64)? * weighted_denominator(x);
    Ok(weighted_numerator(params, x, n)? / den)
}

/// The weighted-sum formula with the denominator `x^n·(x³ - x² - x - 2)`
/// exactly as it is usually printed. It is off by a factor of -1; kept so
/// the discrepancy can be demonstrated.
pub fn weighted_sum_printed(params: &SequenceParams, x: &Rational, n: u64) -> Result<Rational> {
    weighted_guard(x)?;
    let den = rat_pow(x, n as i64)? * printed_weighted_denominator(x);
    Ok(weighted_numerator(params, x, n)? / den)
}

/// `Σ_{k=0..n} J(k)/x^k` by the oracle.
pub fn weighted_sum_oracle(params: &SequenceParams, x: &Rational, n: u64) -> Result<Rational> {
    if x.is_zero() {
        return Err(domain("x must be nonzero"));
    }
    let indices: Vec<i64> = (0..=n as i64).collect();
    let weights = indices
        .iter()
        .map(|&k| rat_pow(x, -k))
        .collect::<Result<Vec<_>>>()?;
    sum_oracle(params, &indices, Some(&weights))
}

/// Constants of the strided sum `Σ_{k=0..n} J(mk + r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StridedSumContext {
    pub m: u64,
    pub r: u64,
    /// `ω₁^m + ω₂^m`: 2 when `3 | m`, else -1.
    pub trace: Rational,
    /// `2^m + trace`.
    pub mu: Rational,
    /// `2^(m+1) + (1 - 2^m)·trace - 2`; zero exactly when `3 | m`. Depends
    /// on `m` only, not on the number of summed terms.
    pub sigma: Rational,
}

impl StridedSumContext {
    pub fn new(m: u64, r: u64) -> Result<Self> {
        if m == 0 {
            return Err(domain("stride m must be positive"));
        }
        if r < m {
            return Err(domain(format!("offset r = {r} must be >= stride m = {m}")));
        }
        let trace = (EisensteinRational::omega1().pow(m) + EisensteinRational::omega2().pow(m))
            .rational_part()?;
        let two_m = pow2(m as i64);
        let mu = &two_m + &trace;
        let sigma = pow2(m as i64 + 1) + (int(1) - &two_m) * &trace - int(2);
        Ok(Self { m, r, trace, mu, sigma })
    }

    pub fn is_degenerate(&self) -> bool {
        self.sigma.is_zero()
    }
}

/// `Σ_{k=0..n} J(mk + r)` in closed form; needs `r >= m >= 1` and `3 ∤ m`.
pub fn strided_sum_closed(params: &SequenceParams, m: u64, r: u64, n: u64) -> Result<Rational> {
    let ctx = StridedSumContext::new(m, r)?;
    if ctx.is_degenerate() {
        return Err(Error::DegenerateStride(m));
    }
    let j = |i: u64| decomposed_term(params, i);
    let two_m = pow2(m as i64);
    let top = j(m * (n + 1) + r);
    let base = j(r);
    let brace = (&top - &base) + &two_m * j(m * n + r) - &two_m * j(r - m) - &ctx.mu * (&top - &base)
        + j(m * (n + 2) + r)
        - j(r + m);
    Ok(brace / ctx.sigma)
}

/// `Σ_{k=0..n} J(mk + r)` by the oracle; any `m`, any `r >= 0`.
pub fn strided_sum_oracle(params: &SequenceParams, m: u64, r: u64, n: u64) -> Result<Rational> {
    let indices: Vec<i64> = (0..=n).map(|k| (m * k + r) as i64).collect();
    sum_oracle(params, &indices, None)
}
