//! Rational functions `N(w, v) / (w - 1)^e` with `N` polynomial over the
//! rationals. This is the natural home of every `U_r(w; v)`: the only pole
//! those functions ever have is at `w = 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::bigfloat::BigComplex;
use super::ring::{RationalAlgebra, TryInverse};
use super::{binomial, GaussianRational, Poly, PolyV, Rational};
use crate::error::{Error, Result};

/// Polynomial in `w` whose coefficients are polynomials in `v`.
pub type PolyWV = Poly<PolyV>;

/// `numerator / (w - 1)^denom_exp`, kept canonical: the numerator is not
/// divisible by `w - 1` unless `denom_exp == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFnW {
    numerator: PolyWV,
    denom_exp: u32,
}

fn w_minus_one() -> PolyWV {
    Poly::new(vec![-PolyV::one(), PolyV::one()])
}

impl RationalFnW {
    pub fn new(numerator: PolyWV, denom_exp: u32) -> Self {
        let mut out = Self {
            numerator,
            denom_exp,
        };
        out.canonicalize();
        out
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.denom_exp = 0;
            return;
        }
        while self.denom_exp > 0 {
            let (q, rem) = self.numerator.div_linear(&PolyV::one());
            if !rem.is_zero() {
                break;
            }
            self.numerator = q;
            self.denom_exp -= 1;
        }
    }

    pub fn numerator(&self) -> &PolyWV {
        &self.numerator
    }

    pub fn denom_exp(&self) -> u32 {
        self.denom_exp
    }

    /// The function `w`.
    pub fn w() -> Self {
        Self::new(Poly::var(), 0)
    }

    /// The function `v`.
    pub fn v() -> Self {
        Self::new(Poly::constant(PolyV::var()), 0)
    }

    /// `1 / (w - 1)^k`.
    pub fn w_minus_one_inv_pow(k: u32) -> Self {
        Self::new(Poly::one(), k)
    }

    pub fn from_poly_v(p: PolyV) -> Self {
        Self::new(Poly::constant(p), 0)
    }

    /// Polynomial in `w` with rational coefficients.
    pub fn from_poly_w(p: &Poly<Rational>) -> Self {
        Self::new(p.map(|c| PolyV::constant(c.clone())), 0)
    }

    fn raised(&self, e: u32) -> PolyWV {
        debug_assert!(e >= self.denom_exp);
        &self.numerator * &w_minus_one().pow((e - self.denom_exp) as u64)
    }

    pub fn v_degree(&self) -> Option<usize> {
        self.numerator
            .coeffs()
            .iter()
            .filter_map(|c| c.degree())
            .max()
    }

    /// Coefficient of `v^j`, as `(N_j(w), e_j)` meaning `N_j / (w - 1)^e_j`,
    /// reduced.
    pub fn coefficient_of_v(&self, j: usize) -> (Poly<Rational>, u32) {
        let mut num: Poly<Rational> =
            Poly::new(self.numerator.coeffs().iter().map(|c| c.coeff(j)).collect());
        let mut e = self.denom_exp;
        if num.is_zero() {
            return (num, 0);
        }
        while e > 0 {
            let (q, r) = num.div_linear(&Rational::one());
            if !r.is_zero() {
                break;
            }
            num = q;
            e -= 1;
        }
        (num, e)
    }

    /// Exact value at Gaussian-rational `(w, v)`.
    pub fn eval_gaussian(&self, w: &GaussianRational, v: &GaussianRational) -> Result<GaussianRational> {
        let shifted = w - GaussianRational::one();
        if self.denom_exp > 0 && shifted.is_zero() {
            return Err(Error::Pole("rational function evaluated at w = 1".into()));
        }
        let embed = |c: &Rational| GaussianRational::from_rational(c);
        let num = self.numerator.eval_with(w, GaussianRational::zero(), |pv| {
            pv.eval_with(v, GaussianRational::zero(), embed)
        });
        let den = super::ring::ring_pow(&shifted, self.denom_exp as u64);
        Ok(num / den)
    }

    pub fn eval_complex(&self, w: &BigComplex, v: &BigComplex) -> Result<BigComplex> {
        let prec = w.precision().max(v.precision());
        let zero = BigComplex::zero(prec);
        let embed = |c: &Rational| BigComplex::from_rational(c, prec);
        let num = self.numerator.eval_with(w, zero.clone(), |pv| {
            pv.eval_with(v, zero.clone(), embed)
        });
        if self.denom_exp == 0 {
            return Ok(num);
        }
        let shifted = w - &BigComplex::one(prec);
        if shifted.is_zero() {
            return Err(Error::Pole("rational function evaluated at w = 1".into()));
        }
        num.checked_div(&shifted.powi(self.denom_exp as i64)?)
    }

    /// Taylor coefficients at `w = 0` of degree `0..=order`, each a
    /// polynomial in `v`.
    pub fn taylor_at_zero(&self, order: usize) -> Vec<PolyV> {
        // (w-1)^{-e} = (-1)^e sum_i C(e+i-1, i) w^i
        let e = self.denom_exp as u64;
        let sign = if e % 2 == 1 { -Rational::one() } else { Rational::one() };
        let expansion: Vec<Rational> = (0..=order as u64)
            .map(|i| {
                let c = if e == 0 {
                    if i == 0 { 1.into() } else { 0.into() }
                } else {
                    binomial(e + i - 1, i)
                };
                Rational::from_integer(c) * &sign
            })
            .collect();
        (0..=order)
            .map(|d| {
                (0..=d).fold(PolyV::zero(), |acc, i| {
                    &acc + &self.numerator.coeff(i).scale_rational(&expansion[d - i])
                })
            })
            .collect()
    }

    /// Grouped by powers of `v`, with `(1-w)` denominators, e.g.
    /// `-w/(1-w)^3 - v*w/(1-w)^2`.
    pub fn format_one_minus_w(&self) -> String {
        let Some(deg) = self.v_degree() else {
            return "0".into();
        };
        let mut out = String::new();
        for j in 0..=deg {
            let (num, e) = self.coefficient_of_v(j);
            if num.is_zero() {
                continue;
            }
            // N/(w-1)^e = (-1)^e N/(1-w)^e
            let mut num = if e % 2 == 1 { -num } else { num };
            let nonzero = num.coeffs().iter().filter(|c| !c.is_zero()).count();
            let mut neg = false;
            if num.coeffs().iter().all(|c| c.is_zero() || c.is_negative()) {
                num = -num;
                neg = true;
            }
            let single = nonzero == 1;
            let num_str = num.format_in("w");
            let v_part = match j {
                0 => String::new(),
                1 => "v".to_string(),
                _ => format!("v^{j}"),
            };
            let mut body = match (v_part.is_empty(), num.is_one()) {
                (true, _) => {
                    if single {
                        num_str
                    } else {
                        format!("({num_str})")
                    }
                }
                (false, true) => v_part,
                (false, false) => {
                    if single {
                        format!("{v_part}*{num_str}")
                    } else {
                        format!("{v_part}*({num_str})")
                    }
                }
            };
            match e {
                0 => {}
                1 => body.push_str("/(1-w)"),
                _ => body.push_str(&format!("/(1-w)^{e}")),
            }
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

impl fmt::Display for RationalFnW {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_one_minus_w())
    }
}

impl Zero for RationalFnW {
    fn zero() -> Self {
        Self {
            numerator: Poly::zero(),
            denom_exp: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl One for RationalFnW {
    fn one() -> Self {
        Self {
            numerator: Poly::one(),
            denom_exp: 0,
        }
    }
}

impl<'a> Add<&'a RationalFnW> for &'a RationalFnW {
    type Output = RationalFnW;
    fn add(self, rhs: &'a RationalFnW) -> RationalFnW {
        let e = self.denom_exp.max(rhs.denom_exp);
        RationalFnW::new(&self.raised(e) + &rhs.raised(e), e)
    }
}

impl<'a> Sub<&'a RationalFnW> for &'a RationalFnW {
    type Output = RationalFnW;
    fn sub(self, rhs: &'a RationalFnW) -> RationalFnW {
        let e = self.denom_exp.max(rhs.denom_exp);
        RationalFnW::new(&self.raised(e) - &rhs.raised(e), e)
    }
}

impl<'a> Mul<&'a RationalFnW> for &'a RationalFnW {
    type Output = RationalFnW;
    fn mul(self, rhs: &'a RationalFnW) -> RationalFnW {
        RationalFnW::new(&self.numerator * &rhs.numerator, self.denom_exp + rhs.denom_exp)
    }
}

impl Add for RationalFnW {
    type Output = RationalFnW;
    fn add(self, rhs: RationalFnW) -> RationalFnW {
        &self + &rhs
    }
}

impl Sub for RationalFnW {
    type Output = RationalFnW;
    fn sub(self, rhs: RationalFnW) -> RationalFnW {
        &self - &rhs
    }
}

impl Mul for RationalFnW {
    type Output = RationalFnW;
    fn mul(self, rhs: RationalFnW) -> RationalFnW {
        &self * &rhs
    }
}

impl Neg for RationalFnW {
    type Output = RationalFnW;
    fn neg(self) -> RationalFnW {
        RationalFnW {
            numerator: -self.numerator,
            denom_exp: self.denom_exp,
        }
    }
}

impl RationalAlgebra for RationalFnW {
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly_v(PolyV::constant(q.clone()))
    }

    fn scale(&self, q: &Rational) -> Self {
        Self::new(self.numerator.map(|c| c.scale_rational(q)), self.denom_exp)
    }
}

impl TryInverse for RationalFnW {
    /// Invertible exactly when the numerator is `c (w-1)^j` for a nonzero
    /// rational `c`.
    fn try_inverse(&self) -> Option<Self> {
        let mut num = self.numerator.clone();
        let mut j = 0u32;
        loop {
            if num.is_zero() {
                return None;
            }
            let (q, r) = num.div_linear(&PolyV::one());
            if !r.is_zero() {
                break;
            }
            num = q;
            j += 1;
        }
        let c = match num.coeffs() {
            [c] if c.is_constant() => c.coeff(0),
            _ => return None,
        };
        let scaled = Self::new(w_minus_one().pow(self.denom_exp as u64), 0)
            .scale(&c.recip());
        Some(&scaled * &Self::w_minus_one_inv_pow(j))
    }
}

impl From<PolyV> for RationalFnW {
    fn from(p: PolyV) -> Self {
        Self::from_poly_v(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{frac, int};
    use num_complex::Complex;

    fn one_minus_w_inv(k: u32) -> RationalFnW {
        // 1/(1-w)^k = (-1)^k/(w-1)^k
        let f = RationalFnW::w_minus_one_inv_pow(k);
        if k % 2 == 1 {
            -f
        } else {
            f
        }
    }

    #[test]
    fn canonical_form_cancels_common_factor() {
        // (w - 1)^2 / (w - 1)^3 -> 1/(w - 1)
        let n = w_minus_one().pow(2);
        let f = RationalFnW::new(n, 3);
        assert_eq!(f, RationalFnW::w_minus_one_inv_pow(1));
        let zero = RationalFnW::new(Poly::zero(), 5);
        assert_eq!(zero.denom_exp(), 0);
    }

    #[test]
    fn display_matches_one_minus_w_convention() {
        let u0 = one_minus_w_inv(1);
        assert_eq!(u0.to_string(), "1/(1-w)");
        let w = RationalFnW::w();
        let v = RationalFnW::v();
        let u1 = -(&w * &one_minus_w_inv(3)) - &(&v * &w) * &one_minus_w_inv(2);
        assert_eq!(u1.to_string(), "-w/(1-w)^3 - v*w/(1-w)^2");
        assert_eq!(RationalFnW::zero().to_string(), "0");
    }

    #[test]
    fn inverse_of_w_minus_one_powers() {
        let f = RationalFnW::new(w_minus_one().pow(2), 0).scale(&frac(3, 2));
        let inv = f.try_inverse().unwrap();
        assert_eq!(&f * &inv, RationalFnW::one());
        assert!(RationalFnW::w().try_inverse().is_none());
        let g = RationalFnW::w_minus_one_inv_pow(4);
        assert_eq!(&g * &g.try_inverse().unwrap(), RationalFnW::one());
    }

    #[test]
    fn exact_gaussian_evaluation() {
        let f = one_minus_w_inv(1);
        let w = Complex::new(frac(1, 2), frac(1, 4));
        let v = Complex::new(int(0), int(0));
        let got = f.eval_gaussian(&w, &v).unwrap();
        let expect = (Complex::new(int(1), int(0)) - w.clone()).inv();
        assert_eq!(got, expect);
        assert!(f.eval_gaussian(&Complex::new(int(1), int(0)), &v).is_err());
    }

    #[test]
    fn taylor_of_geometric_series() {
        // 1/(1-w) = 1 + w + w^2 + ...
        let t = one_minus_w_inv(1).taylor_at_zero(5);
        assert!(t.iter().all(|c| *c == PolyV::one()));
        // w/(1-w)^2 = sum j w^j
        let t = (&RationalFnW::w() * &one_minus_w_inv(2)).taylor_at_zero(6);
        for (j, c) in t.iter().enumerate() {
            assert_eq!(*c, PolyV::constant(int(j as i64)));
        }
    }
}
