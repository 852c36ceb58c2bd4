//! Closed-form evaluators that must agree with the recurrence term by term.
//!
//! Two independent routes:
//!
//! * [`binet_term`] sums `A·2^n - B·ω₁^n + C·ω₂^n` in `Q(ω)` and insists that
//!   the ω-coefficient cancels exactly.
//! * [`decomposed_term`] uses the period-3 split `(ρ·2^n - V(n)) / 7`.

use crate::arith::{int, pow2, EisensteinRational, Rational};
use crate::error::Result;
use crate::sequences::{v_gen, SequenceParams};

/// Coefficients of the Binet form `J(n) = A·2^n - B·ω₁^n + C·ω₂^n`.
///
/// Note the minus sign on the `B` term: `B` and `C` are kept exactly as the
/// two quotients of the classical derivation, so `C = -conj(B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinetCoefficients {
    /// Coefficient of `2^n`, always `ρ/7`.
    pub a: Rational,
    pub b: EisensteinRational,
    pub c: EisensteinRational,
}

impl BinetCoefficients {
    /// `A·2^n - B·ω₁^n + C·ω₂^n` as an element of `Q(ω)`.
    pub fn evaluate(&self, n: u64) -> EisensteinRational {
        let growth = EisensteinRational::from(&self.a * pow2(n as i64));
        let w1 = &self.b * &EisensteinRational::omega1().pow(n);
        let w2 = &self.c * &EisensteinRational::omega2().pow(n);
        &(&growth - &w1) + &w2
    }
}

/// Solves the `n = 0, 1, 2` system in `Q(ω)` from the explicit quotients
///
/// ```text
/// (2-ω₁)(2-ω₂)  A = c + b + a
/// (2-ω₁)(ω₁-ω₂) B = c - (2+ω₂) b + 2ω₂ a
/// (2-ω₂)(ω₁-ω₂) C = c - (2+ω₁) b + 2ω₁ a
/// ```
pub fn binet_coefficients(params: &SequenceParams) -> BinetCoefficients {
    let (w1, w2) = (EisensteinRational::omega1(), EisensteinRational::omega2());
    let two = EisensteinRational::from(2);
    let (a, b, c) = (
        EisensteinRational::from(params.a().clone()),
        EisensteinRational::from(params.b().clone()),
        EisensteinRational::from(params.c().clone()),
    );
    let gap = &w1 - &w2;

    let quotient = |root: &EisensteinRational, other: &EisensteinRational| {
        // c - (2 + other) b + 2·other·a, over (2 - root)(ω₁ - ω₂)
        let num = &(&c - &(&(&two + other) * &b)) + &(&(&two * other) * &a);
        let den = &(&two - root) * &gap;
        num.checked_div(&den).expect("2, ω₁ and ω₂ are distinct")
    };

    BinetCoefficients {
        a: params.rho() / int(7),
        b: quotient(&w1, &w2),
        c: quotient(&w2, &w1),
    }
}

/// `J(n)` from the Binet form. Fails if the ω-part does not cancel.
pub fn binet_term(params: &SequenceParams, n: u64) -> Result<Rational> {
    binet_coefficients(params).evaluate(n).rational_part()
}

/// `J(n) = (ρ·2^n - V(n)) / 7`.
pub fn decomposed_term(params: &SequenceParams, n: u64) -> Rational {
    let v = v_gen(params);
    (params.rho() * pow2(n as i64) - v.at(n as i64)) / int(7)
}

/// Third-order Jacobsthal number `J(n) = (2^(n+1) - V(n)) / 7`, on the
/// fixed `(2, -3, 1)` table.
pub fn jacobsthal_closed(n: u64) -> Rational {
    let v = crate::sequences::PeriodicTriple::from_ints(2, -3, 1);
    (pow2(n as i64 + 1) - v.at(n as i64)) / int(7)
}

/// Third-order Jacobsthal-Lucas number `j(n) = (2^(n+3) + 3 V(n)) / 7`.
pub fn jacobsthal_lucas_closed(n: u64) -> Rational {
    let v = crate::sequences::PeriodicTriple::from_ints(2, -3, 1);
    (pow2(n as i64 + 3) + int(3) * v.at(n as i64)) / int(7)
}
