//! Arbitrary-precision real and complex floating point.
//!
//! The arithmetic itself is delegated to `astro-float`; this module adds a
//! precision-carrying value type, the complex layer with principal-branch
//! conventions (arguments in `(-pi, pi]`), exact conversions to and from
//! [`Rational`], and the two-precision agreement contract in [`verified`].

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use astro_float::{BigFloat as Raw, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, Sign as BigSign};
use num_traits::{ToPrimitive, Zero};

use super::{format_scientific, GaussianRational, Rational};
use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// Extra bits used for the second run of the agreement check.
pub const VERIFY_EXTRA_BITS: usize = 64;
/// Precision escalation stops here.
pub const MAX_BITS: usize = 1 << 18;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Bits needed to carry `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> usize {
    ((digits as f64) * std::f64::consts::LOG2_10).ceil() as usize
}

#[derive(Clone, Debug)]
pub struct BigFloat {
    raw: Raw,
    prec: usize,
}

impl BigFloat {
    fn wrap(raw: Raw, prec: usize) -> Self {
        Self { raw, prec }
    }

    pub fn zero(prec: usize) -> Self {
        Self::wrap(Raw::from_u8(0, prec), prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::wrap(Raw::from_u8(1, prec), prec)
    }

    pub fn from_i64(x: i64, prec: usize) -> Self {
        Self::wrap(Raw::from_i64(x, prec), prec)
    }

    pub fn from_f64(x: f64, prec: usize) -> Self {
        Self::wrap(Raw::from_f64(x, prec), prec)
    }

    pub fn from_bigint(x: &BigInt, prec: usize) -> Self {
        if x.is_zero() {
            return Self::zero(prec);
        }
        let (sign, words) = x.to_u64_digits();
        let sign = if sign == BigSign::Minus { Sign::Neg } else { Sign::Pos };
        let exp = (64 * words.len()) as i32;
        let mut raw = Raw::from_words(&words, sign, exp);
        raw.set_precision(prec.max(64), RM).expect("set precision");
        Self::wrap(raw, prec)
    }

    pub fn from_rational(q: &Rational, prec: usize) -> Self {
        let work = prec + 64;
        let n = Self::from_bigint(q.numer(), work);
        let d = Self::from_bigint(q.denom(), work);
        let mut out = Self::wrap(n.raw.div(&d.raw, prec, RM), prec);
        out.prec = prec;
        out
    }

    pub fn pi(prec: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(prec, RM)), prec)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        let mut raw = self.raw.clone();
        raw.set_precision(prec, RM).expect("set precision");
        Self::wrap(raw, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.raw.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.raw.is_zero() && self.raw.is_negative()
    }

    pub fn is_finite(&self) -> bool {
        !self.raw.is_nan() && !self.raw.is_inf()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.raw.abs(), self.prec)
    }

    /// Binary exponent `e` with `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        if self.raw.is_zero() {
            return None;
        }
        self.raw.exponent().map(|e| e as i64)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.prec.max(rhs.prec);
        Ok(Self::wrap(self.raw.div(&rhs.raw, p, RM), p))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.prec).checked_div(self)
    }

    pub fn exp(&self) -> Self {
        let p = self.prec;
        Self::wrap(with_consts(|cc| self.raw.exp(p, RM, cc)), p)
    }

    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() || self.is_negative() {
            return Err(Error::Domain("logarithm of a non-positive real".into()));
        }
        let p = self.prec;
        Ok(Self::wrap(with_consts(|cc| self.raw.ln(p, RM, cc)), p))
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::Domain("square root of a negative real".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        Ok(Self::wrap(self.raw.sqrt(self.prec, RM), self.prec))
    }

    pub fn sin(&self) -> Self {
        let p = self.prec;
        Self::wrap(with_consts(|cc| self.raw.sin(p, RM, cc)), p)
    }

    pub fn cos(&self) -> Self {
        let p = self.prec;
        Self::wrap(with_consts(|cc| self.raw.cos(p, RM, cc)), p)
    }

    pub fn atan(&self) -> Self {
        let p = self.prec;
        Self::wrap(with_consts(|cc| self.raw.atan(p, RM, cc)), p)
    }

    /// Angle of `(x, y)` in `(-pi, pi]`.
    pub fn atan2(y: &Self, x: &Self) -> Result<Self> {
        let p = y.prec.max(x.prec);
        if x.is_zero() {
            if y.is_zero() {
                return Err(Error::Domain("argument of zero".into()));
            }
            let half_pi = Self::pi(p).mul_i64(1).div_i64(2);
            return Ok(if y.is_negative() { -half_pi } else { half_pi });
        }
        let base = y.checked_div(x)?.atan();
        if !x.is_negative() {
            return Ok(base);
        }
        let pi = Self::pi(p);
        Ok(if y.is_negative() { base - &pi } else { base + &pi })
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.powi(-e)?.recip();
        }
        Ok(Self::wrap(self.raw.powi(e as usize, self.prec, RM), self.prec))
    }

    /// `self^y` for positive `self` (zero base allowed with positive `y`).
    pub fn pow(&self, y: &Self) -> Result<Self> {
        if self.is_zero() {
            return if y.is_negative() || y.is_zero() {
                Err(Error::Domain("0 raised to a non-positive power".into()))
            } else {
                Ok(self.clone())
            };
        }
        Ok((&self.ln()? * y).exp())
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        self * &Self::from_i64(k, self.prec)
    }

    pub fn div_i64(&self, k: i64) -> Self {
        self.checked_div(&Self::from_i64(k, self.prec))
            .expect("division by a nonzero integer")
    }

    /// Exact binary value as a rational; `None` for NaN or infinity.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.raw.is_zero() {
            return Some(Rational::zero());
        }
        let (words, _, sign, exp, _) = self.raw.as_raw_parts()?;
        let mant = BigInt::from_slice(
            BigSign::Plus,
            &words
                .iter()
                .flat_map(|w| [*w as u32, (*w >> 32) as u32])
                .collect::<Vec<u32>>(),
        );
        let shift = exp as i64 - 64 * words.len() as i64;
        let mut q = Rational::from_integer(mant);
        let two = Rational::from_integer(BigInt::from(2));
        q *= super::rational_pow(&two, shift).ok()?;
        Some(if sign == Sign::Neg { -q } else { q })
    }

    pub fn to_f64(&self) -> f64 {
        if self.raw.is_zero() {
            return 0.0;
        }
        if self.raw.is_nan() {
            return f64::NAN;
        }
        if self.raw.is_inf() {
            return if self.raw.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        let Some((words, _, sign, exp, _)) = self.raw.as_raw_parts() else {
            return f64::NAN;
        };
        let top = *words.last().unwrap_or(&0) as f64;
        let v = top * 2f64.powi((exp as i32).saturating_sub(64));
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }

    /// Scientific-notation decimal string with `digits` significant digits.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        match self.to_rational() {
            Some(q) => format_scientific(&q, digits),
            None if self.raw.is_nan() => "NaN".into(),
            None => if self.raw.is_negative() { "-inf" } else { "inf" }.into(),
        }
    }

    /// Decimal digits this precision reliably carries.
    pub fn decimal_digits(&self) -> usize {
        ((self.prec as f64) / std::f64::consts::LOG2_10).floor() as usize
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.raw.cmp(&other.raw) == Some(0)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.raw.cmp(&other.raw).map(|c| c.cmp(&0))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or_else(|| self.decimal_digits().max(1));
        f.write_str(&self.to_decimal_string(digits))
    }
}

impl<'a> Add<&'a BigFloat> for &'a BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &'a BigFloat) -> BigFloat {
        let p = self.prec.max(rhs.prec);
        BigFloat::wrap(self.raw.add(&rhs.raw, p, RM), p)
    }
}

impl<'a> Sub<&'a BigFloat> for &'a BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &'a BigFloat) -> BigFloat {
        let p = self.prec.max(rhs.prec);
        BigFloat::wrap(self.raw.sub(&rhs.raw, p, RM), p)
    }
}

impl<'a> Mul<&'a BigFloat> for &'a BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &'a BigFloat) -> BigFloat {
        let p = self.prec.max(rhs.prec);
        BigFloat::wrap(self.raw.mul(&rhs.raw, p, RM), p)
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat::wrap(self.raw.clone().neg(), self.prec)
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -&self
    }
}

macro_rules! owned_ops {
    ($ty:ty) => {
        impl Add<&$ty> for $ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                &self + rhs
            }
        }
        impl Sub<&$ty> for $ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                &self - rhs
            }
        }
        impl Mul<&$ty> for $ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                &self * rhs
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
    };
}

owned_ops!(BigFloat);
owned_ops!(BigComplex);

/// Complex number with a shared working precision.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub fn zero(prec: usize) -> Self {
        Self::new(BigFloat::zero(prec), BigFloat::zero(prec))
    }

    pub fn one(prec: usize) -> Self {
        Self::new(BigFloat::one(prec), BigFloat::zero(prec))
    }

    pub fn i(prec: usize) -> Self {
        Self::new(BigFloat::zero(prec), BigFloat::one(prec))
    }

    pub fn from_real(re: BigFloat) -> Self {
        let p = re.precision();
        Self::new(re, BigFloat::zero(p))
    }

    pub fn from_rational(q: &Rational, prec: usize) -> Self {
        Self::from_real(BigFloat::from_rational(q, prec))
    }

    pub fn from_gaussian(z: &GaussianRational, prec: usize) -> Self {
        Self::new(
            BigFloat::from_rational(&z.re, prec),
            BigFloat::from_rational(&z.im, prec),
        )
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        Self::new(BigFloat::from_f64(re, prec), BigFloat::from_f64(im, prec))
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        Self::new(self.re.with_precision(prec), self.im.with_precision(prec))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> BigFloat {
        &self.re * &self.re + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt().expect("norm is non-negative")
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> Result<BigFloat> {
        BigFloat::atan2(&self.im, &self.re)
    }

    pub fn scale(&self, k: &BigFloat) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let d = rhs.norm_sqr();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &rhs.conj();
        Ok(Self::new(num.re.checked_div(&d)?, num.im.checked_div(&d)?))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.precision()).checked_div(self)
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        Self::new(&m * &self.im.cos(), &m * &self.im.sin())
    }

    /// Principal logarithm, imaginary part in `(-pi, pi]`.
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("logarithm of zero".into()));
        }
        let re = self.norm_sqr().ln()?.div_i64(2);
        Ok(Self::new(re, self.arg()?))
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let half = self.ln()?.scale(&BigFloat::from_rational(
            &Rational::new(1.into(), 2.into()),
            self.precision(),
        ));
        Ok(half.exp())
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.powi(-e)?.recip();
        }
        let mut base = self.clone();
        let mut acc = Self::one(self.precision());
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Principal power `exp(y log self)`.
    pub fn pow(&self, y: &Self) -> Result<Self> {
        if y.is_zero() {
            return Ok(Self::one(self.precision()));
        }
        if self.is_zero() {
            return if y.re.is_negative() || y.re.is_zero() {
                Err(Error::Domain("0 raised to a power with non-positive real part".into()))
            } else {
                Ok(self.clone())
            };
        }
        Ok((&self.ln()? * y).exp())
    }

    pub fn to_gaussian(&self) -> Option<GaussianRational> {
        Some(GaussianRational::new(self.re.to_rational()?, self.im.to_rational()?))
    }

    pub fn to_decimal_string(&self, digits: usize) -> String {
        let re = self.re.to_decimal_string(digits);
        if self.im.is_zero() {
            return re;
        }
        let im = self.im.abs().to_decimal_string(digits);
        let sign = if self.im.is_negative() { '-' } else { '+' };
        format!("{re}{sign}{im}i")
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or_else(|| self.re.decimal_digits().max(1));
        f.write_str(&self.to_decimal_string(digits))
    }
}

impl<'a> Add<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &'a BigComplex) -> BigComplex {
        BigComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &'a BigComplex) -> BigComplex {
        BigComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &'a BigComplex) -> BigComplex {
        BigComplex::new(
            &self.re * &rhs.re - &(&self.im * &rhs.im),
            &self.re * &rhs.im + &(&self.im * &rhs.re),
        )
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-&self.re, -&self.im)
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -&self
    }
}

/// Values that can be compared for the agreement check.
pub trait Agreement {
    /// `|self - other| <= 10^-digits * |other|` (absolute when `other` is 0).
    fn agrees_with(&self, other: &Self, digits: u32) -> bool;
}

fn tolerance(digits: u32, prec: usize) -> BigFloat {
    BigFloat::from_rational(
        &Rational::new(1.into(), BigInt::from(10u32).pow(digits)),
        prec,
    )
}

impl Agreement for BigFloat {
    fn agrees_with(&self, other: &Self, digits: u32) -> bool {
        let p = self.precision().max(other.precision());
        let scale = if other.is_zero() { BigFloat::one(p) } else { other.abs() };
        (self - other).abs() <= tolerance(digits, p) * &scale
    }
}

impl Agreement for BigComplex {
    fn agrees_with(&self, other: &Self, digits: u32) -> bool {
        let p = self.precision().max(other.precision());
        let scale = if other.is_zero() { BigFloat::one(p) } else { other.abs() };
        (self - other).abs() <= tolerance(digits, p) * &scale
    }
}

impl Agreement for Vec<BigComplex> {
    fn agrees_with(&self, other: &Self, digits: u32) -> bool {
        self.len() == other.len() && self.iter().zip(other).all(|(a, b)| a.agrees_with(b, digits))
    }
}

/// Two-precision agreement: evaluate at `p` and `p + 64` bits and release the
/// higher-precision value once both agree to `digits`; otherwise double `p`
/// and retry.
pub fn verified<T, F>(digits: u32, initial_bits: usize, mut f: F) -> Result<T>
where
    T: Agreement,
    F: FnMut(usize) -> Result<T>,
{
    let mut p = initial_bits.max(bits_for_digits(digits) + 32);
    loop {
        let lo = f(p)?;
        let hi = f(p + VERIFY_EXTRA_BITS)?;
        if lo.agrees_with(&hi, digits) {
            return Ok(hi);
        }
        p *= 2;
        if p > MAX_BITS {
            return Err(Error::PrecisionExhausted { bits: p });
        }
    }
}

impl ToPrimitive for BigFloat {
    fn to_i64(&self) -> Option<i64> {
        self.to_rational()?.to_integer().to_i64()
    }
    fn to_u64(&self) -> Option<u64> {
        self.to_rational()?.to_integer().to_u64()
    }
    fn to_f64(&self) -> Option<f64> {
        Some(BigFloat::to_f64(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{frac, int};
    use num_traits::Signed;

    const P: usize = 256;

    #[test]
    fn exp_zero_is_one() {
        assert_eq!(BigFloat::zero(P).exp(), BigFloat::one(P));
        assert_eq!(BigComplex::zero(P).exp(), BigComplex::one(P));
    }

    #[test]
    fn principal_log_of_minus_one() {
        let z = BigComplex::from_rational(&int(-1), P).ln().unwrap();
        assert!(z.re.is_zero() || z.re.abs().to_f64() < 1e-70);
        assert_eq!(z.im, BigFloat::pi(P));
        // conjugate side of the cut: -1 - 0i still gives +pi for an exact zero
        let w = BigComplex::new(BigFloat::from_i64(-1, P), -BigFloat::zero(P));
        assert_eq!(w.arg().unwrap(), BigFloat::pi(P));
        assert!(BigComplex::zero(P).ln().is_err());
        assert!(BigFloat::from_i64(-2, P).ln().is_err());
        assert!(BigFloat::from_i64(-2, P).sqrt().is_err());
    }

    #[test]
    fn two_over_e() {
        // |2 e^{1-2}| = 2/e
        let w = BigComplex::from_rational(&int(2), P);
        let one = BigComplex::one(P);
        let m = (&w * &(&one - &w).exp()).abs();
        // digits of 2/e from an independent multiprecision library
        let expect = "7.357588823428846431910475403229217348916222620635356690156736033949e-1";
        assert_eq!(m.to_decimal_string(67), expect);
    }

    #[test]
    fn exact_rational_round_trip() {
        let q = frac(-355, 113 * 1024);
        let x = BigFloat::from_rational(&frac(3, 8), P);
        assert_eq!(x.to_rational().unwrap(), frac(3, 8));
        let y = BigFloat::from_rational(&q, P);
        let back = y.to_rational().unwrap();
        let err = (back - &q) / &q;
        assert!(err.abs() < frac(1, 1i64 << 62));
        let big = crate::numeric::factorial(60);
        assert_eq!(
            BigFloat::from_bigint(&big, 512).to_rational().unwrap(),
            Rational::from_integer(big)
        );
    }

    #[test]
    fn atan2_quadrants() {
        let pi = BigFloat::pi(P).to_f64();
        let f = |y: i64, x: i64| {
            BigFloat::atan2(&BigFloat::from_i64(y, P), &BigFloat::from_i64(x, P))
                .unwrap()
                .to_f64()
        };
        assert!((f(1, 1) - pi / 4.0).abs() < 1e-15);
        assert!((f(1, -1) - 3.0 * pi / 4.0).abs() < 1e-15);
        assert!((f(-1, -1) + 3.0 * pi / 4.0).abs() < 1e-15);
        assert!((f(-1, 0) + pi / 2.0).abs() < 1e-15);
        assert!(BigFloat::atan2(&BigFloat::zero(P), &BigFloat::zero(P)).is_err());
    }

    #[test]
    fn complex_sqrt_and_pow() {
        let z = BigComplex::from_rational(&int(-4), P);
        let s = z.sqrt().unwrap();
        assert!(s.re.abs().to_f64() < 1e-70);
        assert!((s.im.to_f64() - 2.0).abs() < 1e-15);
        let w = BigComplex::from_f64(1.5, -0.5, P);
        let cube = w.powi(3).unwrap();
        let via_pow = w.pow(&BigComplex::from_rational(&int(3), P)).unwrap();
        assert!(cube.agrees_with(&via_pow, 70));
    }

    #[test]
    fn scientific_output() {
        let third = BigFloat::from_rational(&frac(1, 3), P);
        assert_eq!(third.to_decimal_string(10), "3.333333333e-1");
        assert_eq!(format!("{:.5}", BigFloat::from_i64(-12, P)), "-1.2000e1");
    }

    #[test]
    fn extra_precision_does_not_move_released_digits() {
        for digits in [20u32, 50, 100] {
            let e = |p: usize| Ok(BigFloat::from_rational(&frac(7, 3), p).exp());
            let v = verified(digits, 0, e).unwrap();
            let w = e(2 * v.precision()).unwrap();
            assert!(v.agrees_with(&w, digits));
            assert_eq!(
                v.to_decimal_string(digits as usize - 2),
                w.to_decimal_string(digits as usize - 2)
            );
        }
    }

    #[test]
    fn verified_escalates_under_cancellation() {
        // (1 + 2^-150) - 1 vanishes at the first working precision
        let f = |p: usize| {
            let tiny = BigFloat::one(p).mul_i64(1).checked_div(&BigFloat::from_i64(2, p).powi(150)?)?;
            Ok(BigComplex::from_real(&(&BigFloat::one(p) + &tiny) - &BigFloat::one(p)))
        };
        let got = verified(30, 64, f).unwrap();
        assert!(got.precision() > 150);
        let expect = BigFloat::from_i64(2, 512).powi(-150).unwrap();
        assert!(got.re.agrees_with(&expect, 30));
    }
}
