//! Scalars: exact rationals, Gaussian rationals, polynomials, rational
//! functions with a pole at `w = 1`, and arbitrary-precision floats.

pub mod bigfloat;
pub mod gaussian;
pub mod poly;
pub mod ratfn;
pub mod rational;
pub mod ring;

pub use bigfloat::{bits_for_digits, verified, Agreement, BigComplex, BigFloat};
pub use gaussian::{format_gaussian, gaussian, parse_gaussian, GaussianRational};
pub use poly::{binomial_poly, power_over_factorial_poly, Poly};
pub use ratfn::{PolyWV, RationalFnW};
pub use rational::{
    binomial, binomial_int, binomial_rational, double_factorial, factorial, format_rational,
    format_scientific, frac, int, parse_rational, rational_arith, rational_pow, ArithOp,
};
pub use ring::{ring_pow, RationalAlgebra, Ring, TryInverse};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
/// Polynomial in the parameter `v`.
pub type PolyV = Poly<Rational>;
