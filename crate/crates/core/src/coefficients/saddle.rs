//! The generic saddle-point coefficient
//!
//! `alpha_s = (1/mu) p_0^{-(s+a)/mu} sum_{m<=s} q_{s-m} sum_j C(-(s+a)/mu, j) A_{m,j}(p_1/p_0, p_2/p_0, ...)`
//!
//! for Taylor data `p(z) - p(z_0) = -sum_s p_s (z-z_0)^{s+mu}` and
//! `q(z) = sum_s q_s (z-z_0)^s`, over any ring containing the rationals.

use std::sync::Arc;


use crate::demoivre::{CoeffSequence, DeMoivreTable};
use crate::error::{Error, Result};
use crate::numeric::{binomial_rational, ring_pow, RationalAlgebra, Rational, TryInverse};

type Taylor<T> = Arc<dyn Fn(usize) -> T + Send + Sync>;

/// Taylor data at the critical point.
#[derive(Clone)]
pub struct SaddleData<T> {
    pub mu: u32,
    pub a: Rational,
    p: Taylor<T>,
    q: Taylor<T>,
}

impl<T> std::fmt::Debug for SaddleData<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SaddleData").field("mu", &self.mu).field("a", &self.a).finish()
    }
}

/// `alpha_s = factor * p_0^{p0_exponent}`, with the power of `p_0` left
/// unevaluated.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaCoefficient<T> {
    pub factor: T,
    pub p0_exponent: Rational,
}

impl<T: RationalAlgebra + TryInverse> AlphaCoefficient<T> {
    /// The full value, available when the exponent is an integer.
    pub fn resolve(&self, p0: &T) -> Result<T> {
        if !self.p0_exponent.is_integer() {
            return Err(Error::InvalidArgument(format!(
                "p_0^({}) is not a ring element",
                self.p0_exponent
            )));
        }
        let e = self.p0_exponent.to_integer();
        let base = if e < 0.into() {
            p0.try_inverse().ok_or(Error::DivisionByZero)?
        } else {
            p0.clone()
        };
        let e: u64 = e.magnitude().try_into().map_err(|_| Error::TooLarge("exponent".into()))?;
        Ok(self.factor.clone() * ring_pow(&base, e))
    }
}

impl<T: RationalAlgebra + TryInverse + Send + Sync + 'static> SaddleData<T> {
    /// `p(s)` gives `p_s` for `s >= 0`, `q(s)` gives `q_s`.
    pub fn new(
        mu: u32,
        a: Rational,
        p: impl Fn(usize) -> T + Send + Sync + 'static,
        q: impl Fn(usize) -> T + Send + Sync + 'static,
    ) -> Result<Self> {
        if mu == 0 {
            return Err(Error::InvalidArgument("mu must be at least 1".into()));
        }
        if p(0).is_zero() {
            return Err(Error::InvalidArgument("p_0 must be nonzero".into()));
        }
        Ok(Self {
            mu,
            a,
            p: Arc::new(p),
            q: Arc::new(q),
        })
    }

    pub fn p(&self, s: usize) -> T {
        (self.p)(s)
    }

    pub fn q(&self, s: usize) -> T {
        (self.q)(s)
    }

    /// `alpha_0, ..., alpha_{count-1}` sharing one De Moivre table.
    pub fn alphas(&self, count: usize) -> Result<Vec<AlphaCoefficient<T>>> {
        if count == 0 {
            return Ok(Vec::new());
        }
        let p0 = self.p(0);
        let inv = p0.try_inverse().ok_or(Error::DivisionByZero)?;
        let p = self.p.clone();
        let ratios = CoeffSequence::from_fn("p_j/p_0", move |j| p(j) * inv.clone());
        let table = DeMoivreTable::new(&ratios, count - 1);
        let mu = Rational::from_integer(self.mu.into());
        let q: Vec<T> = (0..count).map(|s| self.q(s)).collect();
        Ok((0..count)
            .map(|s| {
                let x = -(Rational::from_integer(s.into()) + &self.a) / &mu;
                let sum = (0..=s).fold(T::zero(), |acc, m| {
                    let inner = (0..=m).fold(T::zero(), |acc, j| {
                        acc + table.get(m as i64, j).scale(&binomial_rational(&x, j as u64))
                    });
                    acc + q[s - m].clone() * inner
                });
                AlphaCoefficient {
                    factor: sum.scale(&mu.recip()),
                    p0_exponent: x,
                }
            })
            .collect())
    }

    pub fn alpha(&self, s: usize) -> Result<AlphaCoefficient<T>> {
        Ok(self.alphas(s + 1)?.pop().expect("nonempty"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{frac, int};
    use num_traits::Zero;

    #[test]
    fn first_coefficient_is_q0_over_mu() {
        let data = SaddleData::new(3, frac(1, 2), |s| int(s as i64 + 5), |s| int(7 - s as i64)).unwrap();
        let a0 = data.alpha(0).unwrap();
        assert_eq!(a0.factor, frac(7, 3));
        assert_eq!(a0.p0_exponent, frac(-1, 6));
    }

    #[test]
    fn zero_p0_is_rejected() {
        assert!(SaddleData::new(1, int(1), |_| int(0), |_| int(1)).is_err());
    }

    #[test]
    fn laplace_gaussian_moments() {
        // p(z) = -z^2/2, q = 1: alpha_0 = (1/2)(1/2)^{-1/2} and all higher vanish
        let data = SaddleData::new(2, int(1), |s| if s == 0 { frac(1, 2) } else { int(0) }, |s| {
            if s == 0 { int(1) } else { int(0) }
        })
        .unwrap();
        let al = data.alphas(5).unwrap();
        assert_eq!(al[0].factor, frac(1, 2));
        assert!(al[1..].iter().all(|a| a.factor.is_zero()));
    }

    #[test]
    fn resolve_integer_power() {
        let data = SaddleData::new(1, int(1), |s| if s == 0 { int(2) } else { int(0) }, |_| int(1)).unwrap();
        let a1 = data.alpha(1).unwrap();
        assert_eq!(a1.p0_exponent, int(-2));
        assert_eq!(a1.resolve(&int(2)).unwrap(), frac(1, 4));
        let half = AlphaCoefficient { factor: int(1), p0_exponent: frac(1, 2) };
        assert!(half.resolve(&int(2)).is_err());
    }
}
