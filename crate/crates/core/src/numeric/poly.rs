//! Dense univariate polynomials over any [`Ring`].
//!
//! `Poly<Rational>` is the workhorse `PolyV` (polynomials in the parameter
//! `v`); `Poly<PolyV>` doubles as the bivariate numerator of
//! [`RationalFnW`](super::RationalFnW).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ring::{RationalAlgebra, Ring, TryInverse};
use super::{format_rational, Rational};

/// Coefficients in ascending order of degree, never with a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation in the coefficient ring.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Horner evaluation after mapping each coefficient into another ring.
    pub fn eval_with<S, F>(&self, x: &S, zero: S, embed: F) -> S
    where
        S: Clone + Add<Output = S> + Mul<Output = S>,
        F: Fn(&T) -> S,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(zero, |acc, c| acc * x.clone() + embed(c))
    }

    pub fn map<U: Ring, F: Fn(&T) -> U>(&self, f: F) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u64) -> Self {
        super::ring::ring_pow(self, e)
    }

    /// Synthetic division by `x - root`: returns `(quotient, remainder)`.
    pub fn div_linear(&self, root: &T) -> (Self, T) {
        if self.coeffs.is_empty() {
            return (Self::zero(), T::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![T::zero(); n - 1];
        let mut carry = T::zero();
        for i in (0..n).rev() {
            let cur = self.coeffs[i].clone() + carry.clone() * root.clone();
            if i == 0 {
                return (Self::new(q), cur);
            }
            q[i - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }

    /// Truncate to terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }
}

impl<T: RationalAlgebra> Poly<T> {
    pub fn scale_rational(&self, q: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(q)).collect())
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: RationalAlgebra> RationalAlgebra for Poly<T> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(T::from_rational(q))
    }

    fn scale(&self, q: &Rational) -> Self {
        self.scale_rational(q)
    }
}

impl<T: Ring + TryInverse> TryInverse for Poly<T> {
    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.try_inverse().map(Self::constant),
            _ => None,
        }
    }
}

impl<'a, T: Ring> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, T: Ring> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Ring> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Ring> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// The degree-`m` polynomial `v (v-1) ... (v-m+1) / m!`.
pub fn binomial_poly(m: usize) -> Poly<Rational> {
    let mut acc = Poly::<Rational>::one();
    for i in 0..m {
        let factor = Poly::new(vec![-Rational::from_integer(i.into()), Rational::one()]);
        acc = &acc * &factor;
        acc = acc.scale(&Rational::new(1.into(), (i as i64 + 1).into()));
    }
    acc
}

/// `v^m / m!`.
pub fn power_over_factorial_poly(m: usize) -> Poly<Rational> {
    Poly::monomial(
        Rational::from_integer(super::factorial(m as u64)).recip(),
        m,
    )
}

impl Poly<Rational> {
    /// Human-readable form in ascending powers, e.g. `1/3 - v`.
    pub fn format_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let body = match i {
                0 => format_rational(&a),
                _ => {
                    let mono = if i == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{i}")
                    };
                    if a.is_one() {
                        mono
                    } else {
                        format!("{}*{mono}", format_rational(&a))
                    }
                }
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_in("v"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{frac, int, PolyV};
    use proptest::prelude::*;

    #[test]
    fn binomial_poly_examples() {
        assert_eq!(binomial_poly(0), PolyV::one());
        assert_eq!(binomial_poly(1), PolyV::var());
        assert_eq!(binomial_poly(2), PolyV::new(vec![int(0), frac(-1, 2), frac(1, 2)]));
        for m in 0..8 {
            assert_eq!(binomial_poly(m).degree(), Some(m));
            // vanishes on 0..m, equals 1 at v = m
            for j in 0..m {
                assert!(binomial_poly(m).eval(&int(j as i64)).is_zero());
            }
            assert_eq!(binomial_poly(m).eval(&int(m as i64)), int(1));
        }
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(PolyV::zero().degree(), None);
        assert_eq!(PolyV::new(vec![int(0), int(0)]).degree(), None);
        assert_eq!(PolyV::constant(int(3)).degree(), Some(0));
    }

    #[test]
    fn display_forms() {
        assert_eq!(PolyV::new(vec![frac(1, 3), int(-1)]).to_string(), "1/3 - v");
        let rho1 = PolyV::new(vec![frac(4, 135), int(0), frac(-1, 3), frac(-1, 3)]);
        assert_eq!(rho1.to_string(), "4/135 - 1/3*v^2 - 1/3*v^3");
        assert_eq!(PolyV::new(vec![int(0), int(-2)]).to_string(), "-2*v");
        assert_eq!(PolyV::zero().to_string(), "0");
    }

    #[test]
    fn synthetic_division() {
        // (x - 2)(x + 3) = x^2 + x - 6
        let p = PolyV::new(vec![int(-6), int(1), int(1)]);
        let (q, r) = p.div_linear(&int(2));
        assert!(r.is_zero());
        assert_eq!(q, PolyV::new(vec![int(3), int(1)]));
        let (_, r) = p.div_linear(&int(1));
        assert_eq!(r, int(-4));
    }

    fn poly_strategy() -> impl Strategy<Value = PolyV> {
        prop::collection::vec((-50i64..50, 1i64..20), 0..6)
            .prop_map(|cs| PolyV::new(cs.into_iter().map(|(n, d)| frac(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn product_evaluates_pointwise(p in poly_strategy(), q in poly_strategy(), n in -30i64..30, d in 1i64..10) {
            let x = frac(n, d);
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        }

        #[test]
        fn degree_is_additive(p in poly_strategy(), q in poly_strategy()) {
            if let (Some(a), Some(b)) = (p.degree(), q.degree()) {
                prop_assert_eq!((&p * &q).degree(), Some(a + b));
            }
        }
    }
}
