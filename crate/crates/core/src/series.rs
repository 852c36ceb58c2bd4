//! Truncated formal power series over `Q`.

use num_traits::Zero;

use crate::arith::{int, Rational};
use crate::error::{domain, Error, Result};
use crate::sequences::SequenceParams;

/// Dense polynomial in `t`, index = power. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Product of `self` with a coefficient stream, truncated to `len` terms.
    pub fn mul_truncated(&self, series: &[Rational], len: usize) -> Vec<Rational> {
        (0..len)
            .map(|n| {
                self.coeffs
                    .iter()
                    .enumerate()
                    .take(n + 1)
                    .filter_map(|(k, d)| series.get(n - k).map(|s| d * s))
                    .sum()
            })
            .collect()
    }
}

/// First `count` coefficients of `num / den` by long division:
/// `c(n) = (num(n) - Σ_{k=1..n} den(k)·c(n-k)) / den(0)`.
pub fn series_div(num: &Poly, den: &Poly, count: usize) -> Result<Vec<Rational>> {
    let lead = den.coeff(0);
    if lead.is_zero() {
        return Err(Error::NotAUnit);
    }
    if count == 0 {
        return Err(domain("coefficient count must be positive"));
    }
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    for n in 0..count {
        let mut acc = num.coeff(n);
        for (k, d) in den.coeffs().iter().enumerate().skip(1).take(n) {
            acc -= d * &out[n - k];
        }
        out.push(acc / &lead);
    }
    Ok(out)
}

/// Numerator `a + (b-a)t + (c-b-a)t²` of the generating function.
pub fn gf_numerator(params: &SequenceParams) -> Poly {
    let (a, b, c) = (params.a(), params.b(), params.c());
    Poly::new(vec![a.clone(), b - a, c - b - a])
}

/// Denominator `1 - t - t² - 2t³` of the generating function.
pub fn gf_denominator() -> Poly {
    Poly::from_ints(&[1, -1, -1, -2])
}

/// The first `count` coefficients of the generating function.
pub fn gf_coefficients(params: &SequenceParams, count: usize) -> Result<Vec<Rational>> {
    series_div(&gf_numerator(params), &gf_denominator(), count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_normalize;
    use crate::sequences::range;
    use proptest::prelude::*;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn division_examples() {
        let den = Poly::from_ints(&[1, -1, -1, -2]);
        assert_eq!(
            series_div(&Poly::from_ints(&[0, 1]), &den, 7).unwrap(),
            ints(&[0, 1, 1, 2, 5, 9, 18])
        );
        assert_eq!(
            series_div(&Poly::from_ints(&[1]), &Poly::from_ints(&[1, -1]), 4).unwrap(),
            ints(&[1, 1, 1, 1])
        );
        assert_eq!(
            series_div(&Poly::from_ints(&[1, 2, 3]), &Poly::from_ints(&[1]), 3).unwrap(),
            ints(&[1, 2, 3])
        );
    }

    #[test]
    fn non_unit_denominator() {
        let r = series_div(&Poly::from_ints(&[1]), &Poly::from_ints(&[0, 1]), 3);
        assert_eq!(r, Err(Error::NotAUnit));
        assert_eq!(series_div(&Poly::from_ints(&[1]), &Poly::default(), 3), Err(Error::NotAUnit));
    }

    #[test]
    fn zero_count_rejected() {
        assert!(matches!(
            series_div(&Poly::from_ints(&[1]), &Poly::from_ints(&[1]), 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(Poly::from_ints(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(Poly::from_ints(&[0, 0]).degree(), None);
        assert_eq!(Poly::from_ints(&[0, 0]), Poly::default());
    }

    #[test]
    fn non_monic_denominator() {
        // 1 / (2 - t) = 1/2 + t/4 + t²/8 + ...
        let got = series_div(&Poly::from_ints(&[1]), &Poly::from_ints(&[2, -1]), 3).unwrap();
        assert_eq!(got, vec![rat_normalize(1, 2).unwrap(), rat_normalize(1, 4).unwrap(), rat_normalize(1, 8).unwrap()]);
    }

    #[test]
    fn gf_examples() {
        assert_eq!(gf_coefficients(&SequenceParams::jacobsthal(), 7).unwrap(), ints(&[0, 1, 1, 2, 5, 9, 18]));
        assert_eq!(gf_coefficients(&SequenceParams::jacobsthal_lucas(), 6).unwrap(), ints(&[2, 1, 5, 10, 17, 37]));
        assert_eq!(
            gf_coefficients(&SequenceParams::from_ints(1, 2, 3), 7).unwrap(),
            ints(&[1, 2, 3, 7, 14, 27, 55])
        );
    }

    fn rat() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=20).prop_map(|(p, d)| rat_normalize(p, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn gf_matches_oracle((a, b, c) in (rat(), rat(), rat()), count in 1usize..256) {
            let p = SequenceParams::new(a, b, c);
            prop_assert_eq!(gf_coefficients(&p, count).unwrap(), range(&p, 0, count as u64 - 1).unwrap());
        }

        #[test]
        fn multiplying_back_recovers_numerator((a, b, c) in (rat(), rat(), rat()), count in 1usize..64) {
            let p = SequenceParams::new(a, b, c);
            let series = gf_coefficients(&p, count).unwrap();
            let back = gf_denominator().mul_truncated(&series, count);
            let num = gf_numerator(&p);
            let padded: Vec<Rational> = (0..count).map(|k| num.coeff(k)).collect();
            prop_assert_eq!(back, padded);
        }
    }
}
