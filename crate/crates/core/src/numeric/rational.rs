//! Exact integers and rationals plus the handful of combinatorial scalars
//! (factorials, double factorials, binomials) that every coefficient formula
//! is built from.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{Integer, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl fmt::Display for ArithOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ArithOp::Add => "+",
            ArithOp::Sub => "-",
            ArithOp::Mul => "*",
            ArithOp::Div => "/",
        };
        f.write_str(s)
    }
}

/// Exact `a op b`; the result is always in lowest terms.
pub fn rational_arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

/// Parse `"p"`, `"p/q"` or a plain decimal such as `"-0.125"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_decimal(n)?;
        let d = parse_decimal(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(n / d);
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (neg, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str(&digits).map_err(|_| bad())?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    let q = Rational::new(numer, denom);
    Ok(if neg { -q } else { q })
}

/// `p/q` form, or just `p` for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Scientific notation with `digits` significant digits, correctly rounded
/// (ties away from zero).
pub fn format_scientific(q: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let a = q.abs();
    let ten = BigInt::from(10u32);
    let len = |x: &BigInt| x.to_string().len() as i64;
    let mut exp10 = len(a.numer()) - len(a.denom());
    let round_at = |e: i64| -> BigInt {
        let shift = digits as i64 - 1 - e;
        let scaled = if shift >= 0 {
            &a * Rational::from_integer(ten.pow(shift as u32))
        } else {
            &a / Rational::from_integer(ten.pow((-shift) as u32))
        };
        let twice = scaled * Rational::from_integer(BigInt::from(2));
        let fl = twice.floor().to_integer();
        // round half away from zero on the doubled value
        (fl + 1) / 2
    };
    let lo = ten.pow(digits as u32 - 1);
    let hi = ten.pow(digits as u32);
    let mut m = round_at(exp10);
    for _ in 0..4 {
        if m >= hi {
            exp10 += 1;
        } else if m < lo {
            exp10 -= 1;
        } else {
            break;
        }
        m = round_at(exp10);
    }
    let ms = m.to_string();
    let (head, tail) = ms.split_at(1);
    let sign = if neg { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{exp10}")
    } else {
        format!("{sign}{head}.{tail}e{exp10}")
    }
}

pub fn factorial(n: u64) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// `n!!` with the conventions `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> Integer {
    assert!(n >= -1, "double factorial undefined for {n}");
    let mut acc = Integer::one();
    let mut i = n;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}

/// `C(n, k)` for nonnegative integers; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n, k)` for any integer `n` (upper-negation convention), `k >= 0`.
pub fn binomial_int(n: i64, k: u64) -> Integer {
    if n >= 0 {
        return binomial(n as u64, k);
    }
    // C(n, k) = (-1)^k C(k - n - 1, k)
    let b = binomial(k + (-n) as u64 - 1, k);
    if k.is_odd() {
        -b
    } else {
        b
    }
}

/// Generalized binomial `x (x-1) ... (x-k+1) / k!` for rational `x`.
pub fn binomial_rational(x: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= x - Rational::from_integer(i.into());
        acc /= Rational::from_integer((i + 1).into());
    }
    acc
}

pub fn rational_pow(q: &Rational, e: i64) -> Result<Rational> {
    if e < 0 && q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let base = if e < 0 { q.recip() } else { q.clone() };
    Ok(super::ring::ring_pow(&base, e.unsigned_abs()))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
