//! Algebraic capability traits shared by every exact scalar in the crate.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use super::Rational;

/// A commutative ring with unity.
///
/// Blanket-implemented for anything with the right operator set, so
/// `Rational`, `Complex<Rational>`, `Poly<T>` and `RationalFnW` all qualify.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A ring containing a copy of the rationals.
pub trait RationalAlgebra: Ring {
    fn from_rational(q: &Rational) -> Self;

    fn scale(&self, q: &Rational) -> Self {
        self.clone() * Self::from_rational(q)
    }
}

impl RationalAlgebra for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
}

impl RationalAlgebra for Complex<Rational> {
    fn from_rational(q: &Rational) -> Self {
        Complex::new(q.clone(), Rational::zero())
    }

    fn scale(&self, q: &Rational) -> Self {
        Complex::new(&self.re * q, &self.im * q)
    }
}

/// Multiplicative inverse where one exists in the ring.
pub trait TryInverse: Sized {
    fn try_inverse(&self) -> Option<Self>;
}

impl TryInverse for Rational {
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl TryInverse for Complex<Rational> {
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.inv())
    }
}

/// `x^e` by repeated squaring; `e = 0` gives one.
pub fn ring_pow<T: Ring>(x: &T, mut e: u64) -> T {
    let mut base = x.clone();
    let mut acc = T::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}
