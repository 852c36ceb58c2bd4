//! Exact scalars: big rationals and the cyclotomic field `Q(ω)`.
//!
//! Elements of `Q(ω)` are stored in the basis `{1, ω}` where `ω` is a
//! primitive cube root of unity, so `ω² = -1 - ω`. The two roots that appear
//! next to `2` in the characteristic polynomial `x³ - x² - x - 2` are
//! `ω₁ = ω` and `ω₂ = ω² = -1 - ω`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `p/q` in lowest terms.
pub fn rat_normalize(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Rational> {
    let q = q.into();
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(p.into(), q))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^e` for any integer exponent (negative exponents give `1/2^|e|`).
pub fn pow2(e: i64) -> Rational {
    let mag = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(BigInt::one(), mag)
    }
}

/// `x^e` for a rational base and any integer exponent.
pub fn rat_pow(x: &Rational, e: i64) -> Result<Rational> {
    if e < 0 && x.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let e32 = i32::try_from(e).map_err(|_| crate::error::domain("exponent out of range"))?;
    Ok(num_traits::Pow::pow(x, e32))
}

/// Parses `"p/q"` or a bare integer, with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidRational(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            rat_normalize(p, q)
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Renders as `p/q`, or `p` when the denominator is 1.
pub fn render(x: &Rational) -> String {
    x.to_string()
}

/// An element `re + om·ω` of `Q(ω)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct EisensteinRational {
    pub re: Rational,
    pub om: Rational,
}

impl EisensteinRational {
    pub fn new(re: Rational, om: Rational) -> Self {
        Self { re, om }
    }

    pub fn from_ints(re: i64, om: i64) -> Self {
        Self::new(int(re), int(om))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    /// `ω₁ = (-1 + i√3)/2`.
    pub fn omega1() -> Self {
        Self::from_ints(0, 1)
    }

    /// `ω₂ = (-1 - i√3)/2 = -1 - ω`.
    pub fn omega2() -> Self {
        Self::from_ints(-1, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.om.is_zero()
    }

    /// Complex conjugation, which swaps `ω₁` and `ω₂`:
    /// `conj(x + yω) = (x - y) - yω`.
    pub fn conj(&self) -> Self {
        Self::new(&self.re - &self.om, -&self.om)
    }

    /// Field norm `u·conj(u) = x² - xy + y²`, nonnegative.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - &self.re * &self.om + &self.om * &self.om
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.re * k, &self.om * k)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self::new(c.re / &n, c.om / n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    /// `self^k` by square-and-multiply.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The rational value of an element known to be real. A nonzero
    /// ω-coefficient is an error, never rounded away.
    pub fn rational_part(&self) -> Result<Rational> {
        if self.om.is_zero() {
            Ok(self.re.clone())
        } else {
            Err(Error::NonRealResidue(self.om.clone()))
        }
    }
}

/// `eis_mul` in functional form.
pub fn eis_mul(u: &EisensteinRational, v: &EisensteinRational) -> EisensteinRational {
    u * v
}

pub fn eis_pow(u: &EisensteinRational, k: u64) -> EisensteinRational {
    u.pow(k)
}

pub fn eis_rational_part(u: &EisensteinRational) -> Result<Rational> {
    u.rational_part()
}

impl From<Rational> for EisensteinRational {
    fn from(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }
}

impl From<i64> for EisensteinRational {
    fn from(re: i64) -> Self {
        Self::from_ints(re, 0)
    }
}

impl fmt::Display for EisensteinRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.om.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}ω", self.om);
        }
        let sign = if self.om.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}ω", self.re, sign, self.om.abs())
    }
}

impl<'a> Add<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn add(self, rhs: &'a EisensteinRational) -> EisensteinRational {
        EisensteinRational::new(&self.re + &rhs.re, &self.om + &rhs.om)
    }
}

impl Add for EisensteinRational {
    type Output = EisensteinRational;
    fn add(self, rhs: EisensteinRational) -> EisensteinRational {
        &self + &rhs
    }
}

impl AddAssign<&EisensteinRational> for EisensteinRational {
    fn add_assign(&mut self, rhs: &EisensteinRational) {
        self.re += &rhs.re;
        self.om += &rhs.om;
    }
}

impl<'a> Sub<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn sub(self, rhs: &'a EisensteinRational) -> EisensteinRational {
        EisensteinRational::new(&self.re - &rhs.re, &self.om - &rhs.om)
    }
}

impl Sub for EisensteinRational {
    type Output = EisensteinRational;
    fn sub(self, rhs: EisensteinRational) -> EisensteinRational {
        &self - &rhs
    }
}

impl Neg for &EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> EisensteinRational {
        EisensteinRational::new(-&self.re, -&self.om)
    }
}

impl Neg for EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> EisensteinRational {
        -&self
    }
}

// (x + yω)(s + tω) = xs + (xt + ys)ω + yt·ω²,  ω² = -1 - ω
impl<'a> Mul<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn mul(self, rhs: &'a EisensteinRational) -> EisensteinRational {
        let yt = &self.om * &rhs.om;
        let re = &self.re * &rhs.re - &yt;
        let om = &self.re * &rhs.om + &self.om * &rhs.re - yt;
        EisensteinRational::new(re, om)
    }
}

impl Mul for EisensteinRational {
    type Output = EisensteinRational;
    fn mul(self, rhs: EisensteinRational) -> EisensteinRational {
        &self * &rhs
    }
}
