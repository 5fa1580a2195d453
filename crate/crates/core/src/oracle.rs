//! Reference values computed from exact finite sums plus convergent
//! series at verified precision: `T_n(w;v)`, `S_n(w;v)`, `theta_n(v)`,
//! `Ei(n)`, `Psi_n(v)` and `(n+v)!`, and the convergence probe that
//! compares them against truncated expansions.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::asymptotics::{
    default_epsilon, gamma_expansion, psi_expansion, s_expansion, stirling_prefactor, t_expansion,
    theta_expansion, Region,
};
use crate::error::{Error, Result};
use crate::numeric::{
    bits_for_digits, factorial, verified, BigComplex, BigFloat, GaussianRational, Integer, Rational,
};

/// Fractional digits of the Euler-Mascheroni constant, `0.5772...`,
/// generated with mpmath (`mp.dps = 1100; nstr(euler, 1050)`).
const EULER_GAMMA_FRACTION: [&str; 14] = [
    "57721566490153286060651209008240243104215933593992359880576723488486772677766467",
    "09369470632917467495146314472498070824809605040144865428362241739976449235362535",
    "00333742937337737673942792595258247094916008735203948165670853233151776611528621",
    "19950150798479374508570574002992135478614669402960432542151905877553526733139925",
    "40129674205137541395491116851028079842348775872050384310939973613725530608893312",
    "67600172479537836759271351577226102734929139407984301034177717780881549570661075",
    "01016191663340152278935867965497252036212879226555953669628176388792726801324310",
    "10476505963703947394957638906572967929601009015125195950922243501409349871228247",
    "94974719564697631850667612906381105182419744486783638086174945516989279230187739",
    "10729457815543160050021828440960537724342032854783670151773943987003023703395183",
    "28690001558193988042707411542227819716523011073565833967348717650491941812300040",
    "65469314299929777956930310050308630341856980323108369164002589297089098548682577",
    "73642882539549258736295961332985747393023734388470703702844129201664178502487333",
    "7908056275",
];

/// Digits of the embedded constant that are used; the tail of the literal
/// is left as rounding margin.
pub const EULER_GAMMA_DIGITS: usize = 1040;

/// Largest `digits` any oracle that needs the constant will accept.
pub const MAX_EI_DIGITS: u32 = 1000;

/// The Euler-Mascheroni constant to `min(prec, EULER_GAMMA_DIGITS digits)`.
pub fn euler_gamma(prec: usize) -> BigFloat {
    let all: String = EULER_GAMMA_FRACTION.concat();
    let digits = &all[..EULER_GAMMA_DIGITS];
    let numer: Integer = digits.parse().expect("decimal literal");
    let q = Rational::new(numer, Integer::from(10u32).pow(EULER_GAMMA_DIGITS as u32));
    BigFloat::from_rational(&q, prec)
}

fn require_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok(())
}

fn total(n: u64, v: i64, minimum: i64) -> Result<u64> {
    let m = n as i64 + v;
    if m < minimum {
        return Err(Error::InvalidArgument(format!("n + v must be at least {minimum}")));
    }
    Ok(m as u64)
}

/// Bits for `digits` plus `n log10(e)` guard digits against the cancellation
/// in `theta_n` and `Psi_n`, plus 20 more.
fn cancelling_bits(digits: u32, n: u64) -> usize {
    let guard = (n as f64 * std::f64::consts::LOG10_E).ceil() as u32;
    bits_for_digits(digits + guard + 20)
}

/// `T_n(w;v) = ((n+v)!/(nw)^{n+v}) sum_{j<n+v} (nw)^j/j!`, exactly.
pub fn oracle_t(n: u64, w: &GaussianRational, v: i64) -> Result<GaussianRational> {
    require_n(n)?;
    let m = total(n, v, 0)?;
    if w.is_zero() {
        return Err(Error::Domain("T_n(0;v) is undefined".into()));
    }
    let nw = w * GaussianRational::from(Rational::from_integer(n.into()));
    let inv = GaussianRational::one() / nw;
    // sum_{j<m} (m!/j!) (nw)^{j-m}, built from j = m-1 downwards
    let mut acc = GaussianRational::zero();
    let mut term = GaussianRational::one();
    for j in (0..m).rev() {
        term = term * &inv * GaussianRational::from(Rational::from_integer((j + 1).into()));
        acc = acc + &term;
    }
    Ok(acc)
}

/// `(n+v)!/(nw)^{n+v}`, exactly.
fn gamma_ratio(n: u64, w: &GaussianRational, m: u64) -> GaussianRational {
    let nw = w * GaussianRational::from(Rational::from_integer(n.into()));
    let mut denom = GaussianRational::one();
    for _ in 0..m {
        denom = denom * &nw;
    }
    GaussianRational::from(Rational::from_integer(factorial(m))) / denom
}

/// `S_n(w;v) = e^{nw} (n+v)!/(nw)^{n+v} - T_n(w;v)`, with `S_n(0;v) = 0`.
pub fn oracle_s(n: u64, w: &GaussianRational, v: i64, digits: u32) -> Result<BigComplex> {
    require_n(n)?;
    let m = total(n, v, 0)?;
    if w.is_zero() {
        return Ok(BigComplex::zero(bits_for_digits(digits)));
    }
    let t = oracle_t(n, w, v)?;
    let g = gamma_ratio(n, w, m);
    let scale = BigComplex::from_gaussian(&t, 64).abs();
    let guard = scale.exponent().unwrap_or(0).max(0) as usize;
    let nw = w * GaussianRational::from(Rational::from_integer(n.into()));
    verified(digits, bits_for_digits(digits + 20) + guard, |p| {
        let e = BigComplex::from_gaussian(&nw, p).exp();
        Ok(&(&e * &BigComplex::from_gaussian(&g, p)) - &BigComplex::from_gaussian(&t, p))
    })
}

/// `theta_n(v) = (e^n/2 - sum_{j<n+v} n^j/j!) (n+v)!/n^{n+v}`.
pub fn oracle_theta(n: u64, v: i64, digits: u32) -> Result<BigFloat> {
    require_n(n)?;
    let m = total(n, v, 1)?;
    let nn = Integer::from(n);
    let ratio = Rational::new(factorial(m), nn.pow(m as u32));
    let partial = (0..m).fold(Rational::zero(), |acc, j| {
        acc + Rational::new(factorial(m) / factorial(j), nn.pow((m - j) as u32))
    });
    verified(digits, cancelling_bits(digits, n), |p| {
        let e = BigFloat::from_i64(n as i64, p).exp();
        Ok((e * &BigFloat::from_rational(&ratio, p)).div_i64(2) - &BigFloat::from_rational(&partial, p))
    })
}

fn ei_at(n: u64, prec: usize) -> BigFloat {
    let x = BigFloat::from_i64(n as i64, prec);
    let mut sum = euler_gamma(prec) + &x.ln().expect("n > 0");
    let mut term = BigFloat::one(prec);
    let floor = BigFloat::from_rational(
        &Rational::new(1.into(), Integer::from(2u32).pow(prec as u32 + 16)),
        prec,
    );
    let mut k = 1i64;
    loop {
        term = term.mul_i64(n as i64).div_i64(k);
        let add = term.div_i64(k);
        sum = sum + &add;
        if k as u64 > n && add < &sum * &floor {
            break;
        }
        k += 1;
    }
    sum
}

/// `Ei(n) = gamma_E + ln n + sum_{k>=1} n^k/(k k!)` for integer `n >= 1`.
pub fn oracle_ei(n: u64, digits: u32) -> Result<BigFloat> {
    require_n(n)?;
    if digits > MAX_EI_DIGITS {
        return Err(Error::InvalidArgument(format!(
            "at most {MAX_EI_DIGITS} digits are available for Ei"
        )));
    }
    verified(digits, bits_for_digits(digits + 20), |p| Ok(ei_at(n, p)))
}

/// `Psi_n(v) = (n e^{-n} Ei(n) - sum_{j<n+v} j!/n^j) n^{n+v}/(n+v)!`.
pub fn oracle_psi(n: u64, v: i64, digits: u32) -> Result<BigFloat> {
    require_n(n)?;
    let m = total(n, v, 1)?;
    let guard = (n as f64 * std::f64::consts::LOG10_E).ceil() as u32;
    if digits + guard + 20 > MAX_EI_DIGITS {
        return Err(Error::InvalidArgument(format!(
            "Psi_{n} to {digits} digits needs Ei to more than {MAX_EI_DIGITS} digits"
        )));
    }
    let nn = Integer::from(n);
    let scale = Rational::new(nn.pow(m as u32), factorial(m));
    let partial = (0..m).fold(Rational::zero(), |acc, j| {
        acc + Rational::new(factorial(j) * nn.pow((m - j) as u32), factorial(m))
    });
    verified(digits, cancelling_bits(digits, n), |p| {
        let x = BigFloat::from_i64(n as i64, p);
        let lead = &x * &(-&x).exp() * &ei_at(n, p) * &BigFloat::from_rational(&scale, p);
        Ok(lead - &BigFloat::from_rational(&partial, p))
    })
}

/// `Gamma(n+v+1) = (n+v)!`, exactly.
pub fn gamma_factorial(n: u64, v: i64) -> Result<Integer> {
    Ok(factorial(total(n, v, 0)?))
}

/// Which oracle/expansion pair the probe compares.
#[derive(Clone, Debug, PartialEq)]
pub enum ProbeTarget {
    Theta { v: i64 },
    /// `(n+v)!` divided by `sqrt(2 pi n) n^{n+v} e^{-n}` against `sum gamma_r(v)/n^r`.
    GammaFactorial { v: i64 },
    Psi { v: i64 },
    S { w: GaussianRational, v: i64 },
    T { w: GaussianRational, v: i64 },
}

impl ProbeTarget {
    pub fn name(&self) -> &'static str {
        match self {
            ProbeTarget::Theta { .. } => "theta",
            ProbeTarget::GammaFactorial { .. } => "gammaFactorial",
            ProbeTarget::Psi { .. } => "psi",
            ProbeTarget::S { .. } => "S",
            ProbeTarget::T { .. } => "T",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeRow {
    pub n: u64,
    pub error: String,
    /// `error(n) / error(previous n)`.
    pub ratio: Option<f64>,
    /// `(previous n / n)^order`.
    pub expected: Option<f64>,
    pub within_band: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub target: String,
    pub terms: usize,
    /// The power of `1/n` the truncation error is claimed to decay like.
    pub order: f64,
    pub regime: String,
    pub rows: Vec<ProbeRow>,
}

impl ProbeReport {
    /// Every ratio lies within a factor of two of its expected value.
    pub fn all_within_band(&self) -> bool {
        self.rows.iter().all(|r| r.within_band != Some(false))
    }
}

fn probe_error(target: &ProbeTarget, n: u64, terms: usize, digits: u32) -> Result<(BigFloat, Region)> {
    let p = bits_for_digits(digits);
    let nf = BigFloat::from_i64(n as i64, p);
    let vc = |v: i64| BigComplex::from_real(BigFloat::from_i64(v, p));
    match target {
        ProbeTarget::Theta { v } => {
            let o = oracle_theta(n, *v, digits)?.with_precision(p);
            let e = theta_expansion(&nf, &vc(*v), terms)?;
            Ok(((BigComplex::from_real(o) - e.value).abs(), e.regime))
        }
        ProbeTarget::GammaFactorial { v } => {
            let exact = BigFloat::from_bigint(&gamma_factorial(n, *v)?, p);
            let pre = stirling_prefactor(&nf, &vc(*v))?;
            let normalized = BigComplex::from_real(exact).checked_div(&pre)?;
            let e = gamma_expansion(&nf, &vc(*v), terms)?;
            let series = e.value.checked_div(&pre)?;
            Ok(((normalized - series).abs(), e.regime))
        }
        ProbeTarget::Psi { v } => {
            let o = oracle_psi(n, *v, digits)?.with_precision(p);
            let e = psi_expansion(&nf, *v, terms)?;
            Ok(((BigComplex::from_real(o) - e.value).abs(), e.regime))
        }
        ProbeTarget::S { w, v } => {
            let o = oracle_s(n, w, *v, digits)?.with_precision(p);
            let e = s_expansion(&nf, &BigComplex::from_gaussian(w, p), &vc(*v), terms, &default_epsilon(p))?;
            Ok(((o - e.value).abs(), e.regime))
        }
        ProbeTarget::T { w, v } => {
            let o = BigComplex::from_gaussian(&oracle_t(n, w, *v)?, p);
            let e = t_expansion(&nf, &BigComplex::from_gaussian(w, p), &vc(*v), terms, &default_epsilon(p))?;
            Ok(((o - e.value).abs(), e.regime))
        }
    }
}

fn claimed_order(target: &ProbeTarget, terms: usize, regime: Region) -> f64 {
    let r = terms as f64;
    match (target, regime) {
        (ProbeTarget::S { .. } | ProbeTarget::T { .. }, Region::One | Region::SCurve | Region::TCurve) => r - 0.5,
        _ => r,
    }
}

/// Error of the `terms`-term expansion at each `n`, and the ratio of
/// consecutive errors against `(n_prev/n)^order`.
pub fn convergence_probe(target: &ProbeTarget, terms: usize, n_list: &[u64], digits: u32) -> Result<ProbeReport> {
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("n values must be increasing".into()));
    }
    let mut rows: Vec<ProbeRow> = Vec::new();
    let mut prev: Option<(u64, BigFloat)> = None;
    let mut regime = Region::One;
    for &n in n_list {
        let (err, reg) = probe_error(target, n, terms, digits)?;
        regime = reg;
        let order = claimed_order(target, terms, reg);
        let (ratio, expected, within) = match &prev {
            Some((pn, pe)) if !pe.is_zero() => {
                let ratio = err.checked_div(pe)?.to_f64();
                let expected = (*pn as f64 / n as f64).powf(order);
                (Some(ratio), Some(expected), Some(ratio >= expected / 2.0 && ratio <= expected * 2.0))
            }
            _ => (None, None, None),
        };
        rows.push(ProbeRow {
            n,
            error: err.to_decimal_string(6),
            ratio,
            expected,
            within_band: within,
        });
        prev = Some((n, err));
    }
    Ok(ProbeReport {
        target: target.name().to_string(),
        terms,
        order: claimed_order(target, terms, regime),
        regime: regime.name().to_string(),
        rows,
    })
}
