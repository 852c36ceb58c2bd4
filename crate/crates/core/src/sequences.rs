//! The recurrence oracle and the period-3 companion sequences.
//!
//! [`term`] and [`range`] iterate `J(n+3) = J(n+2) + J(n+1) + 2 J(n)`
//! directly and are the ground truth for everything else in the crate.
//! The companion triples ([`CompanionSet`]) are the period-3 residues left
//! over once the `2^n` component has been removed from a sequence.

use std::fmt;

use num_traits::Zero;

use crate::arith::{int, Rational};
use crate::error::{Error, Result};

/// Seeds `(a, b, c)` of the recurrence, plus the two derived constants used by
/// the closed forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequenceParams {
    a: Rational,
    b: Rational,
    c: Rational,
    rho: Rational,
    quartic: Rational,
}

impl SequenceParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        let rho = &a + &b + &c;
        let quartic = int(4) * &a * &a + int(3) * &b * &b + &c * &c
            - int(2) * &a * &c
            - int(3) * &b * &c;
        Self { a, b, c, rho, quartic }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(int(a), int(b), int(c))
    }

    /// Third-order Jacobsthal numbers, seeds `(0, 1, 1)`.
    pub fn jacobsthal() -> Self {
        Self::from_ints(0, 1, 1)
    }

    /// Third-order Jacobsthal-Lucas numbers, seeds `(2, 1, 5)`.
    pub fn jacobsthal_lucas() -> Self {
        Self::from_ints(2, 1, 5)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// `a + b + c`.
    pub fn rho(&self) -> &Rational {
        &self.rho
    }

    /// `4a² + 3b² + c² - 2ac - 3bc`, the constant term of the Catalan and
    /// Gelin-Cesàro identities. Equal to 1 for the Jacobsthal seeds.
    pub fn quartic(&self) -> &Rational {
        &self.quartic
    }

    pub fn seeds(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }
}

impl Default for SequenceParams {
    fn default() -> Self {
        Self::jacobsthal()
    }
}

impl fmt::Display for SequenceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Streaming iterator over the sequence, starting at index 0.
#[derive(Clone, Debug)]
pub struct Terms {
    window: [Rational; 3],
}

impl Terms {
    pub fn new(params: &SequenceParams) -> Self {
        Self { window: [params.a.clone(), params.b.clone(), params.c.clone()] }
    }
}

impl Iterator for Terms {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let next = &self.window[2] + &self.window[1] + &self.window[0] * int(2);
        self.window.rotate_left(1);
        Some(std::mem::replace(&mut self.window[2], next))
    }
}

/// The `n`-th term by linear iteration of the recurrence.
pub fn term(params: &SequenceParams, n: u64) -> Rational {
    Terms::new(params).nth(n as usize).expect("Terms is infinite")
}

/// Terms `from..=to`, in one pass.
pub fn range(params: &SequenceParams, from: u64, to: u64) -> Result<Vec<Rational>> {
    if from > to {
        return Err(Error::EmptyRange { from, to });
    }
    Ok(Terms::new(params).skip(from as usize).take((to - from + 1) as usize).collect())
}

/// A period-3 sequence on the integers, given by its values at residues
/// 0, 1 and 2 (mod 3).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicTriple {
    values: [Rational; 3],
}

impl PeriodicTriple {
    pub fn new(at0: Rational, at1: Rational, at2: Rational) -> Self {
        Self { values: [at0, at1, at2] }
    }

    pub fn from_ints(at0: i64, at1: i64, at2: i64) -> Self {
        Self::new(int(at0), int(at1), int(at2))
    }

    /// Value at any integer index; negative indices wrap.
    pub fn at(&self, n: i64) -> &Rational {
        &self.values[n.rem_euclid(3) as usize]
    }

    pub fn values(&self) -> &[Rational; 3] {
        &self.values
    }

    /// True when `t(n+2) = -t(n+1) - t(n)`, i.e. the three residues sum to 0.
    pub fn is_zero_sum(&self) -> bool {
        self.values.iter().sum::<Rational>().is_zero()
    }
}

impl fmt::Display for PeriodicTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.values;
        write!(f, "({x}, {y}, {z})")
    }
}

pub fn periodic_value(t: &PeriodicTriple, n: i64) -> Rational {
    t.at(n).clone()
}

/// The period-3 companions of one parameter set.
///
/// All triples are indexed by the natural index `n` (so `w.at(n)` is
/// `W(n)`, not `W(n+2)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionSet {
    /// `V(n) = (2, -3, 1)`, the periodic part of the Jacobsthal numbers.
    pub v: PeriodicTriple,
    /// `V(n)` for general seeds: `J(n) = (ρ 2^n - V(n)) / 7`.
    pub v_gen: PeriodicTriple,
    /// `W(n)` for the Jacobsthal seeds, `(2, 1, -3)`.
    pub w: PeriodicTriple,
    /// `7 W(n+2) = 5 V(n+1) - 3 V(n)` for general seeds.
    pub w_gen: PeriodicTriple,
    /// `U(r) = j(r-1) - J(r+1)`, extended to `r = 0` by periodicity: `(0, 1, -1)`.
    pub u: PeriodicTriple,
    /// `T(n) = W(n+1) W(n+2)` for general seeds.
    pub t: PeriodicTriple,
}

/// `V(n)` for general seeds.
pub fn v_gen(params: &SequenceParams) -> PeriodicTriple {
    let (a, b, c) = (&params.a, &params.b, &params.c);
    PeriodicTriple::new(
        c + b - int(6) * a,
        int(2) * c - int(5) * b + int(2) * a,
        int(-3) * c + int(4) * b + int(4) * a,
    )
}

/// `W(n)` for general seeds.
pub fn w_gen(params: &SequenceParams) -> PeriodicTriple {
    let (a, b, c) = (&params.a, &params.b, &params.c);
    PeriodicTriple::new(
        int(-3) * c + int(5) * b + int(2) * a,
        int(2) * c - b - int(6) * a,
        c - int(4) * b + int(4) * a,
    )
}

pub fn companions(params: &SequenceParams) -> CompanionSet {
    let w_gen = w_gen(params);
    let t = PeriodicTriple::new(
        w_gen.at(1) * w_gen.at(2),
        w_gen.at(2) * w_gen.at(0),
        w_gen.at(0) * w_gen.at(1),
    );
    CompanionSet {
        v: PeriodicTriple::from_ints(2, -3, 1),
        v_gen: v_gen(params),
        w: PeriodicTriple::from_ints(2, 1, -3),
        w_gen,
        u: PeriodicTriple::from_ints(0, 1, -1),
        t,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_normalize;
    use proptest::prelude::*;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn jacobsthal_terms() {
        let p = SequenceParams::jacobsthal();
        assert_eq!(range(&p, 0, 6).unwrap(), ints(&[0, 1, 1, 2, 5, 9, 18]));
    }

    #[test]
    fn jacobsthal_lucas_terms() {
        let p = SequenceParams::jacobsthal_lucas();
        assert_eq!(range(&p, 0, 5).unwrap(), ints(&[2, 1, 5, 10, 17, 37]));
    }

    #[test]
    fn general_terms_match_symbolic_prefix() {
        // a, b, c, 2a+b+c, 2a+3b+2c, 4a+4b+5c, 10a+9b+9c
        let p = SequenceParams::from_ints(1, 2, 3);
        assert_eq!(range(&p, 0, 6).unwrap(), ints(&[1, 2, 3, 7, 14, 27, 55]));
        assert_eq!(term(&p, 6), int(55));
    }

    #[test]
    fn range_examples() {
        let j = SequenceParams::jacobsthal();
        assert_eq!(range(&j, 0, 3).unwrap(), ints(&[0, 1, 1, 2]));
        assert_eq!(range(&SequenceParams::from_ints(1, 2, 3), 3, 5).unwrap(), ints(&[7, 14, 27]));
        assert_eq!(range(&j, 5, 5).unwrap(), ints(&[9]));
        assert_eq!(range(&j, 5, 4), Err(Error::EmptyRange { from: 5, to: 4 }));
    }

    #[test]
    fn derived_constants() {
        let j = SequenceParams::jacobsthal();
        assert_eq!(j.rho(), &int(2));
        assert_eq!(j.quartic(), &int(1));
        let p = SequenceParams::from_ints(1, 2, 3);
        assert_eq!(p.rho(), &int(6));
        // 4 + 12 + 9 - 6 - 18
        assert_eq!(p.quartic(), &int(1));
    }

    #[test]
    fn periodic_lookup() {
        let c = companions(&SequenceParams::jacobsthal());
        assert_eq!(periodic_value(&c.v, 4), int(-3));
        assert_eq!(periodic_value(&c.v, 6), int(2));
        assert_eq!(periodic_value(&c.v, -1), int(1));
        let g = companions(&SequenceParams::from_ints(1, 2, 3));
        assert_eq!(periodic_value(&g.v_gen, 2), int(3));
    }

    #[test]
    fn companions_for_jacobsthal_reduce_to_fixed_tables() {
        let c = companions(&SequenceParams::jacobsthal());
        assert_eq!(c.v_gen, c.v);
        assert_eq!(c.w_gen, c.w);
        assert_eq!(c.t, PeriodicTriple::from_ints(-3, -6, 2));
    }

    #[test]
    fn companions_general() {
        let c = companions(&SequenceParams::from_ints(1, 2, 3));
        assert_eq!(c.v_gen, PeriodicTriple::from_ints(-1, -2, 3));
    }

    #[test]
    fn u_matches_lucas_minus_jacobsthal() {
        let j = range(&SequenceParams::jacobsthal(), 0, 40).unwrap();
        let l = range(&SequenceParams::jacobsthal_lucas(), 0, 40).unwrap();
        let u = companions(&SequenceParams::jacobsthal()).u;
        for r in 1..38i64 {
            let ru = r as usize;
            assert_eq!(u.at(r), &(&l[ru - 1] - &j[ru + 1]), "r = {r}");
        }
    }

    fn rat() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=20).prop_map(|(p, q)| rat_normalize(p, q).unwrap())
    }

    fn params() -> impl Strategy<Value = SequenceParams> {
        (rat(), rat(), rat()).prop_map(|(a, b, c)| SequenceParams::new(a, b, c))
    }

    proptest! {
        #[test]
        fn seed_recovery(p in params()) {
            let v = v_gen(&p);
            for n in 0..3i64 {
                let got = (p.rho() * crate::arith::pow2(n) - v.at(n)) / int(7);
                prop_assert_eq!(&got, p.seeds()[n as usize]);
            }
        }

        #[test]
        fn companion_relations(p in params()) {
            let c = companions(&p);
            prop_assert!(c.v.is_zero_sum());
            prop_assert!(c.v_gen.is_zero_sum());
            prop_assert!(c.w.is_zero_sum());
            prop_assert!(c.w_gen.is_zero_sum());
            prop_assert!(c.u.is_zero_sum());
            for n in 0..3i64 {
                prop_assert_eq!(
                    int(7) * c.w_gen.at(n + 2),
                    int(5) * c.v_gen.at(n + 1) - int(3) * c.v_gen.at(n)
                );
                prop_assert_eq!(c.t.at(n), &(c.w_gen.at(n + 1) * c.w_gen.at(n + 2)));
            }
        }

        #[test]
        fn periodic_value_has_period_three(n in -1000i64..1000, p in params()) {
            let v = v_gen(&p);
            prop_assert_eq!(periodic_value(&v, n), periodic_value(&v, n + 3));
        }

        #[test]
        fn oracle_is_linear_in_seeds(p in params(), n in 0u64..60) {
            let basis = [
                SequenceParams::from_ints(1, 0, 0),
                SequenceParams::from_ints(0, 1, 0),
                SequenceParams::from_ints(0, 0, 1),
            ];
            let combined: Rational = p.seeds().iter().zip(&basis).map(|(s, e)| *s * term(e, n)).sum();
            prop_assert_eq!(term(&p, n), combined);
        }

        #[test]
        fn range_agrees_with_term(p in params(), from in 0u64..40, len in 0u64..20) {
            let xs = range(&p, from, from + len).unwrap();
            for (i, x) in xs.iter().enumerate() {
                prop_assert_eq!(x, &term(&p, from + i as u64));
            }
        }
    }
}
