//! Gaussian rationals `a + b i` with `a, b` rational, written on the command
//! line as e.g. `1/2+1/4i`.

use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use super::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

pub type GaussianRational = Complex<Rational>;

pub fn gaussian(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

/// Accepts `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`, with `a`, `b` in `p/q` or
/// decimal form.
pub fn parse_gaussian(s: &str) -> Result<GaussianRational> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty complex number".into()));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex::new(parse_rational(&s)?, Rational::zero()));
    };
    // split at the last sign that is not the leading one
    let split = body
        .char_indices()
        .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let im = match im {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
    };
    let re = if re.is_empty() {
        Rational::zero()
    } else {
        parse_rational(re)?
    };
    Ok(Complex::new(re, im))
}

pub fn format_gaussian(z: &GaussianRational) -> String {
    if z.im.is_zero() {
        return format_rational(&z.re);
    }
    let im = if z.im.abs().is_one() {
        String::new()
    } else {
        format_rational(&z.im.abs())
    };
    if z.re.is_zero() {
        let sign = if z.im.is_negative() { "-" } else { "" };
        return format!("{sign}{im}i");
    }
    let sign = if z.im.is_negative() { '-' } else { '+' };
    format!("{}{sign}{im}i", format_rational(&z.re))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{frac, int};

    #[test]
    fn parses_cli_syntax() {
        assert_eq!(parse_gaussian("1/2+1/4i").unwrap(), gaussian(frac(1, 2), frac(1, 4)));
        assert_eq!(parse_gaussian("2").unwrap(), gaussian(int(2), int(0)));
        assert_eq!(parse_gaussian("-1").unwrap(), gaussian(int(-1), int(0)));
        assert_eq!(parse_gaussian("3i").unwrap(), gaussian(int(0), int(3)));
        assert_eq!(parse_gaussian("-i").unwrap(), gaussian(int(0), int(-1)));
        assert_eq!(parse_gaussian("1-i").unwrap(), gaussian(int(1), int(-1)));
        assert_eq!(parse_gaussian("-1/2-3/2i").unwrap(), gaussian(frac(-1, 2), frac(-3, 2)));
        assert_eq!(parse_gaussian("0.5+0.25i").unwrap(), gaussian(frac(1, 2), frac(1, 4)));
        assert!(parse_gaussian("1+xi").is_err());
        assert!(parse_gaussian("").is_err());
    }

    #[test]
    fn format_round_trips() {
        for s in ["1/2+1/4i", "2", "-i", "3/7-2i", "-5i", "0"] {
            let z = parse_gaussian(s).unwrap();
            assert_eq!(format_gaussian(&z), s);
            assert_eq!(parse_gaussian(&format_gaussian(&z)).unwrap(), z);
        }
    }
}
