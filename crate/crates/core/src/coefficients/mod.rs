//! Expansion coefficients: `beta_s(v)`, `rho_r(v)`, `gamma_r(v)`,
//! `tau_r(v)`, `psi_r(v)` and the rational functions `U_r(w;v)`, each in a
//! plain form (De Moivre values of `1/3, 1/4, ...`) and, where one exists,
//! a tilde form (De Moivre values of `1/3!, 1/4!, ...`).

mod buckholtz;
mod psi;
mod record;
mod saddle;

pub use buckholtz::{carlitz_series, eulerian_from_demoivre, u_at_zero, u_coeff, EulerianForm, UMode, UZeroForm};
pub use psi::{check_conjecture, psi, psi_at_zero, psi_table, tau, tau_at_zero, ConjectureReport, ConjectureRow};
pub use record::{CoefficientFamily, CoefficientRecord};
pub use saddle::{AlphaCoefficient, SaddleData};

use num_traits::{One, Zero};

use crate::combinatorics::{stirling_associated, StirlingKind};
use crate::demoivre::{demoivre, rational_table, CoeffSequence};
use crate::error::Result;
use crate::numeric::{
    binomial_poly, binomial_rational, double_factorial, factorial, frac, int, power_over_factorial_poly,
    rational_pow, PolyV, Rational, RationalFnW,
};

/// Which De Moivre sequence a family is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `1/3, 1/4, ...` with `C(v, j)` weights.
    Plain,
    /// `1/3!, 1/4!, ...` with `v^j/j!` weights.
    Tilde,
}

impl Mode {
    fn sequence(self) -> CoeffSequence<Rational> {
        match self {
            Mode::Plain => CoeffSequence::reciprocal(2),
            Mode::Tilde => CoeffSequence::reciprocal_factorial(2),
        }
    }

    fn v_weight(self, j: usize) -> PolyV {
        match self {
            Mode::Plain => binomial_poly(j),
            Mode::Tilde => power_over_factorial_poly(j),
        }
    }

    /// Plain forms carry `(-1)^m` on the De Moivre index.
    fn sign(self, m: usize) -> Rational {
        if self == Mode::Plain && m % 2 == 1 {
            -Rational::one()
        } else {
            Rational::one()
        }
    }
}

fn parity(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn delta(r: usize) -> Rational {
    if r == 0 {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `sum_k c(k) A_{m,k}(seq)`.
fn inner_sum(m: usize, seq: &CoeffSequence<Rational>, c: impl Fn(usize) -> Rational) -> Rational {
    (0..=m).fold(Rational::zero(), |acc, k| {
        let d = demoivre(m as i64, k, seq);
        if d.is_zero() {
            acc
        } else {
            acc + c(k) * d
        }
    })
}

/// `sum_{m<=top} sign(m) weight(top-m) sum_k c(k) A_{m,k}(seq)`.
fn assemble(top: usize, mode: Mode, c: impl Fn(usize) -> Rational) -> PolyV {
    let seq = mode.sequence();
    rational_table(&seq, top);
    (0..=top).fold(PolyV::zero(), |acc, m| {
        let inner = inner_sum(m, &seq, &c) * mode.sign(m);
        acc + mode.v_weight(top - m).scale(&inner)
    })
}

/// `(2r+2k)!! / ((-1)^k k!)`
fn rho_weight(r: usize, k: usize) -> Rational {
    parity(k) * Rational::new(double_factorial(2 * (r + k) as i64), factorial(k as u64))
}

/// `(2r+2k-1)!! / ((-1)^k k!)`
fn gamma_weight(r: usize, k: usize) -> Rational {
    parity(k) * Rational::new(double_factorial(2 * (r + k) as i64 - 1), factorial(k as u64))
}

/// A polynomial times `sqrt(2)` or not: the exact shape of `beta_s(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtTwoScaled {
    pub poly: PolyV,
    pub sqrt2: bool,
}

impl SqrtTwoScaled {
    /// `poly * 2^{halves/2}`.
    pub fn from_half_power(poly: PolyV, halves: i64) -> Self {
        let whole = halves.div_euclid(2);
        let sqrt2 = halves.rem_euclid(2) == 1;
        let scale = rational_pow(&int(2), whole).expect("2 is nonzero");
        Self {
            poly: poly.scale(&scale),
            sqrt2,
        }
    }

    /// Multiply by `2^{halves/2}`.
    pub fn times_half_power(&self, halves: i64) -> Self {
        let base = Self::from_half_power(self.poly.clone(), halves + self.sqrt2 as i64);
        base
    }

    /// The polynomial when no `sqrt(2)` remains.
    pub fn rational(&self) -> Option<&PolyV> {
        (!self.sqrt2).then_some(&self.poly)
    }
}

/// The rational part `P_s(v)` with `beta_s(v) = 2^{(s-1)/2} P_s(v)`.
pub fn beta_rational_part(s: usize, mode: Mode) -> PolyV {
    let x = -frac(s as i64 + 1, 2);
    assemble(s, mode, |k| {
        rational_pow(&int(2), k as i64).expect("nonzero") * binomial_rational(&x, k as u64)
    })
}

/// `beta_s(v)` or its tilde form, with the power of two kept exact.
pub fn beta(s: usize, mode: Mode) -> SqrtTwoScaled {
    SqrtTwoScaled::from_half_power(beta_rational_part(s, mode), s as i64 - 1)
}

/// `rho_r(v)` (plain) or `rho~_r(v)` (tilde).
pub fn rho(r: usize, mode: Mode) -> PolyV {
    let sum = assemble(2 * r + 1, mode, |k| rho_weight(r, k));
    match mode {
        Mode::Plain => PolyV::constant(delta(r)) - sum,
        Mode::Tilde => -sum,
    }
}

/// `gamma_r(v)` (plain) or `gamma~_r(v)` (tilde).
pub fn gamma(r: usize, mode: Mode) -> PolyV {
    assemble(2 * r, mode, |k| gamma_weight(r, k))
}

/// `rho_r(0)` from the `1/3, 1/4, ...` values.
pub fn rho_at_zero(r: usize) -> Rational {
    let seq = Mode::Plain.sequence();
    delta(r) + inner_sum(2 * r + 1, &seq, |k| rho_weight(r, k))
}

/// `rho_r(0)` from the `1/3!, 1/4!, ...` values.
pub fn rho_at_zero_factorial(r: usize) -> Rational {
    let seq = Mode::Tilde.sequence();
    -inner_sum(2 * r + 1, &seq, |k| rho_weight(r, k))
}

/// `gamma_r(0)` from either sequence.
pub fn gamma_at_zero(r: usize, mode: Mode) -> Rational {
    inner_sum(2 * r, &mode.sequence(), |k| gamma_weight(r, k))
}

/// `gamma_j` through 3-associated Stirling numbers of either kind.
pub fn gamma_via_associated(j: usize, kind: StirlingKind) -> Rational {
    (0..=2 * j).fold(Rational::zero(), |acc, k| {
        let count = stirling_associated(kind, 2 * j + 2 * k, k, 3);
        acc + parity(k) * Rational::new(count, double_factorial(2 * (j + k) as i64))
    })
}

/// `rho_j` through 3-associated Stirling numbers of either kind.
pub fn rho_via_associated(j: usize, kind: StirlingKind) -> Rational {
    let sum = (0..=2 * j + 1).fold(Rational::zero(), |acc, k| {
        let count = stirling_associated(kind, 2 * j + 2 * k + 1, k, 3);
        acc + parity(k) * Rational::new(count, double_factorial(2 * (j + k) as i64 + 1))
    });
    match kind {
        StirlingKind::Cycle => delta(j) + sum,
        StirlingKind::Subset => -sum,
    }
}

/// Both sides of `2^{r+k} (Gamma(r+1/2)/sqrt(pi)) C(-r-1/2, k) = (2r+2k-1)!!/((-1)^k k!)`,
/// with `Gamma(r+1/2)/sqrt(pi) = (2r)!/(4^r r!)`.
pub fn half_integer_gamma_identity(r: usize, k: usize) -> (Rational, Rational) {
    let gamma_ratio = Rational::new(
        factorial(2 * r as u64),
        factorial(r as u64) * crate::numeric::Integer::from(4u32).pow(r as u32),
    );
    let lhs = rational_pow(&int(2), (r + k) as i64).expect("nonzero")
        * gamma_ratio
        * binomial_rational(&-(int(r as i64) + frac(1, 2)), k as u64);
    (lhs, gamma_weight(r, k))
}

/// `beta_s(v)` from the saddle engine: `mu = 2`, `a = 1`, `p_0 = 1/2`,
/// `p_s = (-1)^s/(s+2)`, `q_s = C(v, s)`.
pub fn beta_via_saddle(count: usize) -> Result<Vec<SqrtTwoScaled>> {
    let data = SaddleData::new(
        2,
        int(1),
        |s| PolyV::constant(parity(s) * frac(1, s as i64 + 2)),
        binomial_poly,
    )?;
    Ok(data
        .alphas(count)?
        .into_iter()
        .map(|al| {
            // (1/2)^e = 2^{-e}, e = p0_exponent in halves
            let halves = -(al.p0_exponent * int(2));
            assert!(halves.is_integer());
            let h: i64 = halves.to_integer().try_into().expect("small exponent");
            SqrtTwoScaled::from_half_power(al.factor, h)
        })
        .collect())
}

/// `U_r(w;v)` from the saddle engine: `mu = 1`, `a = 1`, `p_0 = w - 1`,
/// `p_s = (-1)^{s+1}/(s+1)`, `q_s = C(v, s)`, and `U_r = delta_{r0} - w r! alpha_r`.
pub fn u_via_saddle(count: usize) -> Result<Vec<RationalFnW>> {
    let p0 = RationalFnW::w() - RationalFnW::one();
    let p0_clone = p0.clone();
    let data = SaddleData::new(
        1,
        int(1),
        move |s| {
            if s == 0 {
                p0_clone.clone()
            } else {
                RationalFnW::from_poly_v(PolyV::constant(parity(s + 1) * frac(1, s as i64 + 1)))
            }
        },
        |s| RationalFnW::from_poly_v(binomial_poly(s)),
    )?;
    data.alphas(count)?
        .into_iter()
        .enumerate()
        .map(|(r, al)| {
            let alpha = al.resolve(&p0)?;
            let scaled = RationalFnW::w() * alpha;
            let r_fact = Rational::from_integer(factorial(r as u64));
            Ok(RationalFnW::from_poly_v(PolyV::constant(delta(r)))
                - crate::numeric::RationalAlgebra::scale(&scaled, &r_fact))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{parse_rational, PolyV};

    fn poly(cs: &[&str]) -> PolyV {
        PolyV::new(cs.iter().map(|c| parse_rational(c).unwrap()).collect())
    }

    #[test]
    fn rho_known_values() {
        let expect = ["1/3", "4/135", "-8/2835", "-16/8505", "8992/12629925"];
        for (r, e) in expect.iter().enumerate() {
            let e = parse_rational(e).unwrap();
            assert_eq!(rho(r, Mode::Plain).coeff(0), e);
            assert_eq!(rho_at_zero(r), e);
            assert_eq!(rho_at_zero_factorial(r), e);
        }
        assert_eq!(rho(0, Mode::Plain), poly(&["1/3", "-1"]));
        assert_eq!(rho(1, Mode::Plain), poly(&["4/135", "0", "-1/3", "-1/3"]));
        // -(8/2835 + v(9v^4 - 15v^2 - 2v + 4)/135)
        assert_eq!(
            rho(2, Mode::Plain),
            poly(&["-8/2835", "-4/135", "2/135", "15/135", "0", "-9/135"])
        );
    }

    #[test]
    fn gamma_known_values() {
        assert_eq!(gamma(0, Mode::Plain), PolyV::constant(int(1)));
        assert_eq!(gamma_at_zero(1, Mode::Plain), frac(1, 12));
        assert_eq!(gamma_at_zero(2, Mode::Plain), frac(1, 288));
        assert_eq!(gamma_at_zero(3, Mode::Plain), frac(-139, 51840));
        for r in 0..6 {
            assert_eq!(gamma_at_zero(r, Mode::Plain), gamma_at_zero(r, Mode::Tilde));
        }
    }

    #[test]
    fn beta_first_values() {
        // -Gamma(2) beta_1(0) = rho_0(0) - 1
        let b1 = beta(1, Mode::Plain);
        assert!(!b1.sqrt2);
        assert_eq!(b1.poly.coeff(0), frac(2, 3));
        let b0 = beta(0, Mode::Plain);
        assert!(b0.sqrt2);
        assert_eq!(b0.poly, PolyV::constant(frac(1, 2)));
    }

    #[test]
    fn degree_bounds() {
        for r in 0..8 {
            assert!(rho(r, Mode::Plain).degree().unwrap_or(0) <= 2 * r + 1);
            assert!(gamma(r, Mode::Plain).degree().unwrap_or(0) <= 2 * r);
            assert!(beta(r, Mode::Plain).poly.degree().unwrap_or(0) <= r);
        }
    }

    #[test]
    fn saddle_engine_reproduces_beta_and_u() {
        let via = beta_via_saddle(9).unwrap();
        for (s, b) in via.iter().enumerate() {
            assert_eq!(b, &beta(s, Mode::Plain), "s = {s}");
        }
        let us = u_via_saddle(6).unwrap();
        for (r, u) in us.iter().enumerate() {
            assert_eq!(u, &u_coeff(r, UMode::Plain), "r = {r}");
        }
    }

    #[test]
    fn associated_stirling_forms() {
        for j in 0..=5 {
            let g = gamma_at_zero(j, Mode::Plain);
            assert_eq!(gamma_via_associated(j, StirlingKind::Cycle), g);
            assert_eq!(gamma_via_associated(j, StirlingKind::Subset), g);
            let r = rho_at_zero(j);
            assert_eq!(rho_via_associated(j, StirlingKind::Cycle), r);
            assert_eq!(rho_via_associated(j, StirlingKind::Subset), r);
        }
    }

    #[test]
    fn half_integer_gamma() {
        for r in 0..=6 {
            for k in 0..=6 {
                let (l, rr) = half_integer_gamma_identity(r, k);
                assert_eq!(l, rr);
            }
        }
    }
}
