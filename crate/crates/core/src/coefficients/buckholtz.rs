//! The rational functions `U_r(w;v)` and their `v = 0` specializations.

use num_traits::Zero;

use super::{delta, parity};
use crate::combinatorics::{eulerian2, stirling, StirlingKind};
use crate::demoivre::{demoivre, rational_table, CoeffSequence};
use crate::numeric::{binomial_int, binomial_poly, factorial, power_over_factorial_poly, Poly, PolyV, Rational, RationalFnW};

/// Construction of `U_r(w;v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UMode {
    /// `1/2, 1/3, ...` with `C(v, j)` weights.
    Plain,
    /// `1/2!, 1/3!, ...` with `v^j/j!` weights: the function `U~_r(w;v)`.
    Tilde,
}

/// Closed forms for `U_r(w;0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UZeroForm {
    /// De Moivre values of `1/2, 1/3, ...`.
    Reciprocal,
    /// De Moivre values of `1/2!, 1/3!, ...`.
    Factorial,
    /// Second-order Eulerian numbers.
    Knuth,
}

/// `c w^deg / (w-1)^e`
fn term(c: PolyV, deg: usize, e: usize) -> RationalFnW {
    RationalFnW::new(Poly::monomial(c, deg), e as u32)
}

/// `(r+k)!/k!`
fn rising(r: usize, k: usize) -> Rational {
    Rational::new(factorial((r + k) as u64), factorial(k as u64))
}

fn table_for(seq: &CoeffSequence<Rational>, n: usize) {
    rational_table(seq, n);
}

/// `U_r(w;v)` (plain) or `U~_r(w;v)` (tilde), exactly.
pub fn u_coeff(r: usize, mode: UMode) -> RationalFnW {
    let seq = match mode {
        UMode::Plain => CoeffSequence::reciprocal(1),
        UMode::Tilde => CoeffSequence::reciprocal_factorial(1),
    };
    table_for(&seq, r);
    let mut sum = RationalFnW::zero();
    for k in 0..=r {
        let mut c = PolyV::zero();
        for m in k..=r {
            let d = demoivre(m as i64, k, &seq);
            if d.is_zero() {
                continue;
            }
            let (weight, sign) = match mode {
                UMode::Plain => (binomial_poly(r - m), parity(m)),
                UMode::Tilde => (power_over_factorial_poly(r - m), parity(k)),
            };
            c = c + weight.scale(&(d * sign));
        }
        if c.is_zero() {
            continue;
        }
        let c = c.scale(&rising(r, k));
        sum = sum
            + match mode {
                UMode::Plain => term(c, 1, r + k + 1),
                UMode::Tilde => term(c, k, r + k + 1),
            };
    }
    match mode {
        UMode::Plain => RationalFnW::from_poly_v(PolyV::constant(delta(r))) - sum,
        UMode::Tilde => -sum,
    }
}

/// `U_r(w;0)` from one of its closed forms.
pub fn u_at_zero(r: usize, form: UZeroForm) -> RationalFnW {
    let mut sum = if form == UZeroForm::Factorial {
        RationalFnW::zero()
    } else {
        RationalFnW::from_poly_v(PolyV::constant(delta(r)))
    };
    match form {
        UZeroForm::Reciprocal | UZeroForm::Factorial => {
            let seq = match form {
                UZeroForm::Reciprocal => CoeffSequence::reciprocal(1),
                _ => CoeffSequence::reciprocal_factorial(1),
            };
            table_for(&seq, r);
            for k in 0..=r {
                let d = demoivre(r as i64, k, &seq);
                if d.is_zero() {
                    continue;
                }
                // 1/(1-w)^e = (-1)^e/(w-1)^e
                let e = r + k + 1;
                let t = match form {
                    UZeroForm::Reciprocal => {
                        let c = rising(r, k) * d * parity(k) * parity(e);
                        term(PolyV::constant(c), 1, e)
                    }
                    _ => {
                        let c = rising(r, k) * d * parity(r) * parity(e);
                        term(PolyV::constant(c), k, e)
                    }
                };
                sum = sum + t;
            }
        }
        UZeroForm::Knuth => {
            let e = 2 * r + 1;
            let numer: Vec<PolyV> = std::iter::once(PolyV::zero())
                .chain((0..=r).map(|j| PolyV::constant(Rational::from_integer(eulerian2(r, j as i64)))))
                .collect();
            let c = parity(r) * parity(e);
            sum = sum + RationalFnW::new(Poly::new(numer), e as u32).scale_by(&c);
        }
    }
    sum
}

trait ScaleBy {
    fn scale_by(&self, c: &Rational) -> Self;
}

impl ScaleBy for RationalFnW {
    fn scale_by(&self, c: &Rational) -> Self {
        crate::numeric::RationalAlgebra::scale(self, c)
    }
}

/// Taylor coefficients `[w^0, ..., w^order]` of `U_r(w;0)` from subset
/// Stirling numbers: `delta_{r0} + (-1)^r sum_{j>=1} {r+j, j} w^j`.
pub fn carlitz_series(r: usize, order: usize) -> Vec<Rational> {
    (0..=order)
        .map(|j| {
            if j == 0 {
                delta(r)
            } else {
                parity(r) * Rational::from_integer(stirling(StirlingKind::Subset, r + j, j))
            }
        })
        .collect()
}

/// Route to second-order Eulerian numbers through De Moivre sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EulerianForm {
    Reciprocal,
    Factorial,
}

/// `<<r, j>>` from De Moivre values of `1/2, 1/3, ...` or `1/2!, 1/3!, ...`.
/// The factorial route needs `r >= 1`.
pub fn eulerian_from_demoivre(r: usize, j: usize, form: EulerianForm) -> Rational {
    let seq = match form {
        EulerianForm::Reciprocal => CoeffSequence::reciprocal(1),
        EulerianForm::Factorial => CoeffSequence::reciprocal_factorial(1),
    };
    (0..=r).fold(Rational::zero(), |acc, k| {
        let d = demoivre(r as i64, k, &seq);
        if d.is_zero() {
            return acc;
        }
        let (b, sign) = match form {
            EulerianForm::Reciprocal => (binomial_int((r - k) as i64, j as u64), parity(r + j + k)),
            EulerianForm::Factorial => {
                if j + 1 < k {
                    return acc;
                }
                (binomial_int((r - k) as i64, (j + 1 - k) as u64), parity(j + k + 1))
            }
        };
        acc + rising(r, k) * d * sign * Rational::from_integer(b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::parse_rational;
    use num_traits::One;

    fn one_minus_w_pow(e: u32) -> RationalFnW {
        // 1/(1-w)^e
        let s = if e % 2 == 0 { Rational::one() } else { -Rational::one() };
        RationalFnW::w_minus_one_inv_pow(e).scale_by(&s)
    }

    fn w_poly(cs: &[&str]) -> RationalFnW {
        let p: Poly<Rational> = Poly::new(cs.iter().map(|c| parse_rational(c).unwrap()).collect());
        RationalFnW::from_poly_w(&p)
    }

    #[test]
    fn first_three() {
        let v = RationalFnW::v();
        let w = RationalFnW::w();
        assert_eq!(u_coeff(0, UMode::Plain), one_minus_w_pow(1));
        let u1 = -(w.clone() * one_minus_w_pow(3)) - v.clone() * w.clone() * one_minus_w_pow(2);
        assert_eq!(u_coeff(1, UMode::Plain), u1);
        let u2 = w_poly(&["0", "1", "2"]) * one_minus_w_pow(5)
            + v.clone() * w_poly(&["0", "2", "1"]) * one_minus_w_pow(4)
            + v.clone() * v * w * one_minus_w_pow(3);
        assert_eq!(u_coeff(2, UMode::Plain), u2);
    }

    #[test]
    fn tilde_relation() {
        let v = RationalFnW::v();
        assert_eq!(u_coeff(0, UMode::Plain), u_coeff(0, UMode::Tilde));
        for r in 1..=8 {
            let rhs = u_coeff(r, UMode::Tilde) + v.clone() * u_coeff(r - 1, UMode::Tilde);
            assert_eq!(u_coeff(r, UMode::Plain), rhs, "r = {r}");
        }
    }

    #[test]
    fn zero_forms_agree() {
        for r in 0..=8 {
            let plain = u_coeff(r, UMode::Plain);
            let at_zero = RationalFnW::new(
                plain.numerator().map(|c| PolyV::constant(c.coeff(0))),
                plain.denom_exp(),
            );
            for form in [UZeroForm::Reciprocal, UZeroForm::Factorial, UZeroForm::Knuth] {
                assert_eq!(u_at_zero(r, form), at_zero, "r = {r}, {form:?}");
            }
            let taylor: Vec<Rational> = at_zero.taylor_at_zero(12).iter().map(|p| p.coeff(0)).collect();
            assert_eq!(taylor, carlitz_series(r, 12));
        }
    }

    #[test]
    fn eulerian_routes() {
        for r in 0..=8 {
            for j in 0..=8 {
                let e = Rational::from_integer(eulerian2(r, j as i64));
                assert_eq!(eulerian_from_demoivre(r, j, EulerianForm::Reciprocal), e, "r={r} j={j}");
                if r >= 1 {
                    assert_eq!(eulerian_from_demoivre(r, j, EulerianForm::Factorial), e, "r={r} j={j}");
                }
            }
        }
    }
}
