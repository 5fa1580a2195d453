//! Regions of the `w`-plane cut out by `|w e^{1-w}| = 1`, the boundary
//! phase, sampled curve points, and truncated expansions of `theta_n(v)`,
//! `Gamma(n+v+1)`, `S_n(w;v)`, `T_n(w;v)` and `Psi_n(v)`.

use serde::Serialize;

use crate::coefficients::{gamma, psi_table, rho, u_coeff, Mode, UMode};
use crate::error::{Error, Result};
use crate::numeric::{BigComplex, BigFloat, PolyV, Rational};

/// Default half-width of the boundary band at 128-bit working precision.
pub fn default_epsilon(prec: usize) -> BigFloat {
    BigFloat::from_rational(&Rational::new(1.into(), num_bigint::BigInt::from(10u32).pow(20)), prec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Region {
    /// `|w e^{1-w}| > 1`.
    X,
    /// `|w e^{1-w}| < 1`, `Re(w) < 1`.
    Y,
    /// `|w e^{1-w}| < 1`, `Re(w) > 1`.
    Z,
    /// `|w e^{1-w}| = 1`, `Re(w) < 1`.
    SCurve,
    /// `|w e^{1-w}| = 1`, `Re(w) > 1`.
    TCurve,
    One,
    Zero,
}

impl Region {
    pub fn name(self) -> &'static str {
        match self {
            Region::X => "X",
            Region::Y => "Y",
            Region::Z => "Z",
            Region::SCurve => "S",
            Region::TCurve => "T",
            Region::One => "One",
            Region::Zero => "Zero",
        }
    }
}

/// A region label with the distance `| |w e^{1-w}| - 1 |`.
#[derive(Clone, Debug)]
pub struct RegionLabel {
    pub region: Region,
    pub boundary_margin: BigFloat,
}

/// `|w e^{1-w}| = |w| e^{1 - Re(w)}`.
pub fn modulus(w: &BigComplex) -> BigFloat {
    let p = w.precision();
    w.abs() * (BigFloat::one(p) - &w.re).exp()
}

pub fn classify(w: &BigComplex, epsilon: &BigFloat) -> RegionLabel {
    let p = w.precision();
    let one = BigFloat::one(p);
    let m = modulus(w);
    let margin = (&m - &one).abs();
    let label = |region| RegionLabel {
        region,
        boundary_margin: margin.clone(),
    };
    if (w - &BigComplex::one(p)).abs() < *epsilon {
        return label(Region::One);
    }
    if w.abs() < *epsilon {
        return label(Region::Zero);
    }
    let left = w.re < one;
    if margin < *epsilon {
        label(if left { Region::SCurve } else { Region::TCurve })
    } else if m > one {
        label(Region::X)
    } else if left {
        label(Region::Y)
    } else {
        label(Region::Z)
    }
}

/// Reduce to `(-pi, pi]`.
fn reduce_angle(x: BigFloat) -> BigFloat {
    let p = x.precision();
    let pi = BigFloat::pi(p);
    let two_pi = pi.mul_i64(2);
    let mut y = x;
    while y > pi {
        y = &y - &two_pi;
    }
    while y <= -&pi {
        y = &y + &two_pi;
    }
    y
}

/// `phi(w)` with `w e^{1-w} = e^{-i phi(w)}`, in `(-pi, pi]`.
pub fn phi(w: &BigComplex, tolerance: &BigFloat) -> Result<BigFloat> {
    let p = w.precision();
    let margin = (modulus(w) - &BigFloat::one(p)).abs();
    if margin > *tolerance {
        return Err(Error::Domain(format!(
            "w is off the curve |w e^(1-w)| = 1 by {}",
            margin.to_decimal_string(6)
        )));
    }
    Ok(reduce_angle(-(w.arg()? - &w.im)))
}

/// `W(1/e)`: the root of `x e^x = 1/e`, by Newton's method from `0.25`.
pub fn lambert_w_inv_e(prec: usize) -> BigFloat {
    let work = prec + 32;
    let one = BigFloat::one(work);
    let target = (-&one).exp();
    let mut x = BigFloat::from_f64(0.25, work);
    let tol = BigFloat::from_rational(&Rational::new(1.into(), num_bigint::BigInt::from(2u32).pow(prec as u32 + 8)), work);
    for _ in 0..200 {
        let ex = x.exp();
        let f = &x * &ex - &target;
        let df = &ex * &(&x + &one);
        let step = f.checked_div(&df).expect("x e^x is increasing near the root");
        x = &x - &step;
        if step.abs() < tol {
            break;
        }
    }
    x.with_precision(prec)
}

#[derive(Clone, Debug)]
pub struct CurvePoint {
    pub t: BigFloat,
    /// Upper point `t + i sqrt(e^{2t-2} - t^2)`.
    pub w: BigComplex,
    /// `| |w e^{1-w}| - 1 |`.
    pub residual: BigFloat,
}

fn curve_point(t: BigFloat) -> Result<CurvePoint> {
    let p = t.precision();
    let one = BigFloat::one(p);
    let radicand = (t.mul_i64(2) - &one.mul_i64(2)).exp() - &t * &t;
    let radicand = if radicand.is_negative() {
        // the edge point, where the radicand is zero up to rounding
        let bound = BigFloat::from_rational(&Rational::new(1.into(), num_bigint::BigInt::from(2u32).pow(p as u32 / 2)), p);
        if radicand.abs() > bound {
            return Err(Error::Domain("t is below -W(1/e)".into()));
        }
        BigFloat::zero(p)
    } else {
        radicand
    };
    let w = BigComplex::new(t.clone(), radicand.sqrt()?);
    let residual = (modulus(&w) - &one).abs();
    Ok(CurvePoint { t, w, residual })
}

/// Points `t_min, t_min + step, ... <= t_max` on the curve; `t_min` must be
/// at least `-W(1/e)`.
pub fn szego_curve(t_min: &Rational, t_max: &Rational, step: &Rational, prec: usize) -> Result<Vec<CurvePoint>> {
    if step <= &Rational::from_integer(0.into()) {
        return Err(Error::InvalidArgument("step must be positive".into()));
    }
    let edge = -lambert_w_inv_e(prec);
    if BigFloat::from_rational(t_min, prec) < edge {
        return Err(Error::Domain(format!(
            "t_min is below -W(1/e) = {}",
            edge.to_decimal_string(20)
        )));
    }
    let mut out = Vec::new();
    let mut t = t_min.clone();
    while &t <= t_max {
        out.push(curve_point(BigFloat::from_rational(&t, prec))?);
        t += step;
    }
    Ok(out)
}

/// `count` points evenly spaced in `t` from the edge `-W(1/e)` to `t_max`.
pub fn szego_curve_from_edge(count: usize, t_max: &Rational, prec: usize) -> Result<Vec<CurvePoint>> {
    if count < 2 {
        return Err(Error::InvalidArgument("need at least two points".into()));
    }
    let start = -lambert_w_inv_e(prec);
    let end = BigFloat::from_rational(t_max, prec);
    if end <= start {
        return Err(Error::Domain("t_max is below -W(1/e)".into()));
    }
    let width = &end - &start;
    (0..count)
        .map(|i| {
            let t = &start + &(&width * &BigFloat::from_rational(&Rational::new(i.into(), (count - 1).into()), prec));
            curve_point(t)
        })
        .collect()
}

/// A truncated expansion and the pieces it is made of.
#[derive(Clone, Debug)]
pub struct ExpansionResult {
    pub value: BigComplex,
    pub terms_used: usize,
    pub contributions: Vec<BigComplex>,
    pub regime: Region,
    pub claimed_error_order: String,
}

impl ExpansionResult {
    fn from_terms(contributions: Vec<BigComplex>, regime: Region, order: String, prec: usize) -> Self {
        let value = contributions
            .iter()
            .fold(BigComplex::zero(prec), |acc, c| acc + c);
        Self {
            value,
            terms_used: contributions.len(),
            contributions,
            regime,
            claimed_error_order: order,
        }
    }
}

fn eval_poly(p: &PolyV, v: &BigComplex) -> BigComplex {
    let prec = v.precision();
    p.eval_with(v, BigComplex::zero(prec), |c| BigComplex::from_rational(c, prec))
}

fn check_n(n: &BigFloat) -> Result<()> {
    if n.is_negative() || n.is_zero() {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok(())
}

/// `1/n^r` for `r < count`.
fn inverse_powers(n: &BigFloat, count: usize) -> Result<Vec<BigComplex>> {
    let inv = BigComplex::from_real(n.recip()?);
    let mut out = Vec::with_capacity(count);
    let mut acc = BigComplex::one(n.precision());
    for _ in 0..count {
        out.push(acc.clone());
        acc = &acc * &inv;
    }
    Ok(out)
}

/// `w^v`, by repeated multiplication when `v` is an integer.
fn power(w: &BigComplex, v: &BigComplex) -> Result<BigComplex> {
    if v.is_real() {
        if let Some(q) = v.re.to_rational() {
            if q.is_integer() {
                if let Ok(e) = i64::try_from(q.to_integer()) {
                    return w.powi(e);
                }
            }
        }
    }
    w.pow(v)
}

fn series(polys: &[PolyV], v: &BigComplex, n: &BigFloat) -> Result<Vec<BigComplex>> {
    let inv = inverse_powers(n, polys.len())?;
    Ok(polys.iter().zip(&inv).map(|(p, i)| &eval_poly(p, v) * i).collect())
}

fn at_precision(v: &BigComplex, n: &BigFloat) -> (BigComplex, BigFloat, usize) {
    let p = v.precision().max(n.precision());
    (v.with_precision(p), n.with_precision(p), p)
}

/// `sum_{r<R} rho_r(v)/n^r`.
pub fn theta_expansion(n: &BigFloat, v: &BigComplex, terms: usize) -> Result<ExpansionResult> {
    check_n(n)?;
    let (v, n, p) = at_precision(v, n);
    let rhos: Vec<PolyV> = (0..terms).map(|r| rho(r, Mode::Plain)).collect();
    Ok(ExpansionResult::from_terms(series(&rhos, &v, &n)?, Region::One, format!("n^-{terms}"), p))
}

/// `sqrt(2 pi n) n^{n+v} e^{-n}`.
pub fn stirling_prefactor(n: &BigFloat, v: &BigComplex) -> Result<BigComplex> {
    let p = n.precision();
    let root = (BigFloat::pi(p).mul_i64(2) * n).sqrt()?;
    let nc = BigComplex::from_real(n.clone());
    let exponent = &(&nc + v) * &nc.ln()? - &nc;
    Ok(exponent.exp().scale(&root))
}

/// `sqrt(2 pi n) (n^{n+v}/e^n) sum_{r<R} gamma_r(v)/n^r`.
pub fn gamma_expansion(n: &BigFloat, v: &BigComplex, terms: usize) -> Result<ExpansionResult> {
    check_n(n)?;
    let (v, n, p) = at_precision(v, n);
    let pre = stirling_prefactor(&n, &v)?;
    let gammas: Vec<PolyV> = (0..terms).map(|r| gamma(r, Mode::Plain)).collect();
    let terms_out = series(&gammas, &v, &n)?.into_iter().map(|t| &t * &pre).collect();
    Ok(ExpansionResult::from_terms(terms_out, Region::One, format!("relative n^-{terms}"), p))
}

/// `sum_{r<R} psi_r(v)/n^r` for integer `v`.
pub fn psi_expansion(n: &BigFloat, v: i64, terms: usize) -> Result<ExpansionResult> {
    check_n(n)?;
    let p = n.precision();
    let v = BigComplex::from_real(BigFloat::from_i64(v, p));
    let psis = psi_table(terms);
    Ok(ExpansionResult::from_terms(series(&psis, &v, n)?, Region::One, format!("n^-{terms}"), p))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tail {
    S,
    T,
}

fn u_series(n: &BigFloat, w: &BigComplex, v: &BigComplex, terms: usize, sign: i64) -> Result<Vec<BigComplex>> {
    let inv = inverse_powers(n, terms)?;
    (0..terms)
        .map(|r| {
            let u = u_coeff(r, UMode::Plain).eval_complex(w, v)?;
            Ok((&u * &inv[r]).scale(&BigFloat::from_i64(sign, n.precision())))
        })
        .collect()
}

/// `gamma_r(v) sqrt(2 pi n) / ((w e^{1-w})^n w^v n^r)`.
fn dominant_series(n: &BigFloat, w: &BigComplex, v: &BigComplex, terms: usize) -> Result<Vec<BigComplex>> {
    let p = n.precision();
    let root = (BigFloat::pi(p).mul_i64(2) * n).sqrt()?;
    let nc = BigComplex::from_real(n.clone());
    // (w e^{1-w})^{-n} = exp(-n (ln w + 1 - w))
    let log_base = &(&w.ln()? + &BigComplex::one(p)) - w;
    let factor = (-(&nc * &log_base)).exp().checked_div(&power(w, v)?)?.scale(&root);
    let gammas: Vec<PolyV> = (0..terms).map(|r| gamma(r, Mode::Plain)).collect();
    Ok(series(&gammas, v, n)?.into_iter().map(|t| &t * &factor).collect())
}

/// `e^{n i phi(w)} sqrt(2 pi n) gamma_r(v) / (w^v n^r)` on the curve.
fn boundary_series(
    n: &BigFloat,
    w: &BigComplex,
    v: &BigComplex,
    terms: usize,
    tolerance: &BigFloat,
) -> Result<Vec<BigComplex>> {
    let p = n.precision();
    let angle = phi(w, tolerance)?;
    let rot = BigComplex::new(BigFloat::zero(p), n * &angle).exp();
    let root = (BigFloat::pi(p).mul_i64(2) * n).sqrt()?;
    let factor = rot.checked_div(&power(w, v)?)?.scale(&root);
    let gammas: Vec<PolyV> = (0..terms).map(|r| gamma(r, Mode::Plain)).collect();
    Ok(series(&gammas, v, n)?.into_iter().map(|t| &t * &factor).collect())
}

fn tail_expansion(
    which: Tail,
    n: &BigFloat,
    w: &BigComplex,
    v: &BigComplex,
    terms: usize,
    epsilon: &BigFloat,
) -> Result<ExpansionResult> {
    check_n(n)?;
    let p = n.precision().max(w.precision()).max(v.precision());
    let (n, w, v) = (n.with_precision(p), w.with_precision(p), v.with_precision(p));
    let label = classify(&w, epsilon);
    let region = label.region;
    let sign = if which == Tail::S { 1 } else { -1 };
    let root_order = format!("n^-({terms}-1/2)");
    let plain_order = format!("n^-{terms}");
    let (contributions, order) = match (which, region) {
        (Tail::S, Region::Zero) => (Vec::new(), "exact".to_string()),
        (Tail::T, Region::Zero) => return Err(Error::Domain("T_n(0;v) is undefined".into())),
        (_, Region::One) => {
            let root = (BigFloat::pi(p).mul_i64(2) * &n).sqrt()?;
            let half_root = BigComplex::from_real(root.div_i64(2));
            let inv = inverse_powers(&n, terms)?;
            let out = (0..terms)
                .map(|r| {
                    let rh = eval_poly(&rho(r, Mode::Plain), &v).scale(&BigFloat::from_i64(sign, p));
                    let g = &eval_poly(&gamma(r, Mode::Plain), &v) * &half_root;
                    &(&rh + &g) * &inv[r]
                })
                .collect();
            (out, root_order)
        }
        (Tail::S, Region::X | Region::Y | Region::SCurve) | (Tail::T, Region::X | Region::Z | Region::TCurve) => {
            (u_series(&n, &w, &v, terms, sign)?, plain_order)
        }
        (Tail::S, Region::TCurve) | (Tail::T, Region::SCurve) => {
            let tolerance = epsilon.clone();
            let b = boundary_series(&n, &w, &v, terms, &tolerance)?;
            let u = u_series(&n, &w, &v, terms, sign)?;
            (u.iter().zip(&b).map(|(a, c)| a + c).collect(), root_order)
        }
        (Tail::S, Region::Z) | (Tail::T, Region::Y) => {
            (dominant_series(&n, &w, &v, terms)?, format!("relative n^-{terms}"))
        }
    };
    Ok(ExpansionResult::from_terms(contributions, region, order, p))
}

/// `S_n(w;v)` from the expansion that applies at `w`.
pub fn s_expansion(n: &BigFloat, w: &BigComplex, v: &BigComplex, terms: usize, epsilon: &BigFloat) -> Result<ExpansionResult> {
    tail_expansion(Tail::S, n, w, v, terms, epsilon)
}

/// `T_n(w;v)` from the expansion that applies at `w`; `w = 0` is an error.
pub fn t_expansion(n: &BigFloat, w: &BigComplex, v: &BigComplex, terms: usize, epsilon: &BigFloat) -> Result<ExpansionResult> {
    tail_expansion(Tail::T, n, w, v, terms, epsilon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::frac;

    const P: usize = 192;

    fn c(re: f64, im: f64) -> BigComplex {
        BigComplex::from_f64(re, im, P)
    }

    fn eps() -> BigFloat {
        default_epsilon(P)
    }

    #[test]
    fn labels() {
        assert_eq!(classify(&c(1.0, 0.0), &eps()).region, Region::One);
        assert_eq!(classify(&c(0.0, 0.0), &eps()).region, Region::Zero);
        assert_eq!(classify(&c(2.0, 0.0), &eps()).region, Region::Z);
        assert_eq!(classify(&c(-1.0, 0.0), &eps()).region, Region::X);
        assert_eq!(classify(&c(0.5, 0.0), &eps()).region, Region::Y);
        assert_eq!(classify(&c(0.5, 3.0), &eps()).region, Region::X);
        for (re, im) in [(0.3, 0.4), (2.0, 1.0), (-0.5, -1.5)] {
            assert_eq!(classify(&c(re, im), &eps()).region, classify(&c(re, -im), &eps()).region);
        }
    }

    #[test]
    fn lambert_constant() {
        let w = lambert_w_inv_e(P);
        let check = &w * &w.exp() - &(-BigFloat::one(P)).exp();
        assert!(check.abs() < BigFloat::from_f64(1e-50, P));
        assert!((w.to_f64() - 0.278_464_542_761_073_8).abs() < 1e-15);
    }

    #[test]
    fn curve_points_and_phase() {
        let pts = szego_curve(&frac(0, 1), &frac(3, 1), &frac(1, 4), P).unwrap();
        assert_eq!(pts.len(), 13);
        let tiny = BigFloat::from_f64(1e-40, P);
        for pt in &pts {
            assert!(pt.residual < tiny);
            let label = classify(&pt.w, &eps()).region;
            if pt.t.to_f64() == 1.0 {
                assert_eq!(label, Region::One);
                continue;
            }
            let expect = if pt.t.to_f64() < 1.0 { Region::SCurve } else { Region::TCurve };
            assert_eq!(label, expect);
            let ph = phi(&pt.w, &eps()).unwrap();
            // w e^{1-w} = e^{-i phi}
            let lhs = &pt.w * &(&BigComplex::one(P) - &pt.w).exp();
            let rhs = BigComplex::new(BigFloat::zero(P), -ph.clone()).exp();
            assert!((&lhs - &rhs).abs() < BigFloat::from_f64(1e-40, P));
            let ph_conj = phi(&pt.w.conj(), &eps()).unwrap();
            assert!((&ph_conj + &ph).abs() < BigFloat::from_f64(1e-40, P));
        }
        let edge = szego_curve_from_edge(5, &frac(2, 1), P).unwrap();
        assert!(edge[0].w.im.abs() < BigFloat::from_f64(1e-20, P));
        assert!(szego_curve(&frac(-1, 2), &frac(0, 1), &frac(1, 10), P).is_err());
    }

    #[test]
    fn phi_rejects_off_curve() {
        assert!(phi(&c(2.0, 0.0), &eps()).is_err());
        assert!(phi(&c(1.0, 0.0), &eps()).unwrap().is_zero());
    }

    #[test]
    fn truncations() {
        let n = BigFloat::from_i64(10, P);
        let v0 = BigComplex::zero(P);
        let t = theta_expansion(&n, &v0, 1).unwrap();
        assert_eq!(t.value, BigComplex::from_rational(&frac(1, 3), P));
        let s = s_expansion(&n, &BigComplex::zero(P), &v0, 3, &eps()).unwrap();
        assert!(s.value.is_zero());
        assert!(t_expansion(&n, &BigComplex::zero(P), &v0, 3, &eps()).is_err());
        let ps = psi_expansion(&n, 0, 1).unwrap();
        assert_eq!(ps.value, BigComplex::from_rational(&frac(-1, 3), P));
        let s_half = s_expansion(&n, &c(0.5, 0.0), &v0, 1, &eps()).unwrap();
        assert_eq!(s_half.regime, Region::Y);
        assert!((s_half.value.re.to_f64() - 2.0).abs() < 1e-30);
        let s_two = s_expansion(&n, &c(2.0, 0.0), &v0, 2, &eps()).unwrap();
        assert_eq!(s_two.regime, Region::Z);
        let t_two = t_expansion(&n, &c(2.0, 0.0), &v0, 2, &eps()).unwrap();
        assert_eq!(t_two.regime, Region::Z);
        let sum = t_two.contributions.iter().fold(BigComplex::zero(P), |a, b| a + b);
        assert_eq!(sum, t_two.value);
    }

    #[test]
    fn stirling_leading_term() {
        // R = 1 gives sqrt(2 pi n) n^n e^{-n}
        let n = BigFloat::from_i64(20, P);
        let g = gamma_expansion(&n, &BigComplex::zero(P), 1).unwrap();
        let direct = (BigFloat::pi(P).mul_i64(40)).sqrt().unwrap() * n.powi(20).unwrap() * (-&n).exp();
        assert!((&g.value.re - &direct).abs() < BigFloat::from_f64(1e-30, P) * &direct);
    }
}
