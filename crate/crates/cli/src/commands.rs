use rama_core::asymptotics::{
    classify, default_epsilon, gamma_expansion, psi_expansion, s_expansion, szego_curve, szego_curve_from_edge,
    t_expansion, theta_expansion, CurvePoint, ExpansionResult,
};
use rama_core::coefficients::{
    beta, carlitz_series, check_conjecture, gamma, psi, rho, tau, u_at_zero, u_coeff, Mode, UMode, UZeroForm,
};
use rama_core::numeric::{
    bits_for_digits, format_gaussian, format_rational, parse_gaussian, parse_rational, BigComplex, BigFloat,
    GaussianRational, PolyV, Rational, RationalFnW,
};
use rama_core::oracle::{
    convergence_probe, gamma_factorial, oracle_ei, oracle_psi, oracle_s, oracle_t, oracle_theta, ProbeTarget,
};
use rama_core::verify::run_ledger;
use rama_core::{Error, Result};
use serde_json::{json, Value};

use crate::args::*;

/// A command's result in every format it supports.
pub struct Report {
    pub json: Value,
    pub plain: String,
    pub csv: Option<String>,
    pub default: Format,
    pub ok: bool,
}

impl Report {
    fn new(json: Value, plain: impl Into<String>) -> Self {
        Self {
            json,
            plain: plain.into(),
            csv: None,
            default: Format::Json,
            ok: true,
        }
    }
}

fn poly_strings(p: &PolyV) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

fn parse_v(v: &Option<String>) -> Result<Option<GaussianRational>> {
    v.as_deref().map(parse_gaussian).transpose()
}

fn poly_report(family: &str, r: usize, p: &PolyV, v: Option<GaussianRational>) -> Report {
    match v {
        Some(v) => {
            let value = format_gaussian(&eval_poly_gaussian(p, &v));
            Report::new(
                json!({"family": family, "r": r, "v": format_gaussian(&v), "value": value}),
                value,
            )
        }
        None => Report::new(
            json!({"family": family, "r": r, "polyV": poly_strings(p)}),
            p.to_string(),
        ),
    }
}

fn eval_poly_gaussian(p: &PolyV, v: &GaussianRational) -> GaussianRational {
    p.eval_with(v, GaussianRational::from(Rational::from_integer(0.into())), |c| {
        GaussianRational::from(c.clone())
    })
}

fn mode_of(mode: CoeffMode) -> Result<Mode> {
    match mode {
        CoeffMode::Plain => Ok(Mode::Plain),
        CoeffMode::Tilde => Ok(Mode::Tilde),
        other => Err(Error::InvalidArgument(format!("mode {other:?} applies only to U"))),
    }
}

pub fn coeff(a: &CoeffArgs) -> Result<Report> {
    let v = parse_v(&a.v)?;
    match a.family {
        Family::Rho => poly_report_with_mode("rho", a, v, rho),
        Family::Gamma => poly_report_with_mode("gamma", a, v, gamma),
        Family::Tau => {
            mode_of(a.mode)?;
            Ok(poly_report("tau", a.r, &tau(a.r), v))
        }
        Family::Psi => {
            mode_of(a.mode)?;
            Ok(poly_report("psi", a.r, &psi(a.r), v))
        }
        Family::Beta => {
            let b = beta(a.r, mode_of(a.mode)?);
            let name = if a.mode == CoeffMode::Tilde { "betaTilde" } else { "beta" };
            let suffix = if b.sqrt2 { " (times sqrt(2))" } else { "" };
            match v {
                Some(v) => {
                    let value = format_gaussian(&eval_poly_gaussian(&b.poly, &v));
                    Ok(Report::new(
                        json!({"family": name, "r": a.r, "v": format_gaussian(&v), "value": value, "sqrt2": b.sqrt2}),
                        format!("{value}{suffix}"),
                    ))
                }
                None => Ok(Report::new(
                    json!({"family": name, "r": a.r, "polyV": poly_strings(&b.poly), "sqrt2": b.sqrt2}),
                    format!("{}{suffix}", b.poly),
                )),
            }
        }
        Family::U => coeff_u(a, v),
    }
}

fn poly_report_with_mode(
    name: &str,
    a: &CoeffArgs,
    v: Option<GaussianRational>,
    f: fn(usize, Mode) -> PolyV,
) -> Result<Report> {
    let mode = mode_of(a.mode)?;
    let family = if mode == Mode::Tilde { format!("{name}Tilde") } else { name.to_string() };
    Ok(poly_report(&family, a.r, &f(a.r, mode), v))
}

fn coeff_u(a: &CoeffArgs, v: Option<GaussianRational>) -> Result<Report> {
    let zero_form = |form| {
        if v.as_ref().is_some_and(|v| !num_traits::Zero::is_zero(v)) {
            return Err(Error::InvalidArgument("this U mode is the v = 0 specialization".into()));
        }
        Ok(u_at_zero(a.r, form))
    };
    let f: RationalFnW = match a.mode {
        CoeffMode::Plain => u_coeff(a.r, UMode::Plain),
        CoeffMode::Tilde => u_coeff(a.r, UMode::Tilde),
        CoeffMode::Uj => zero_form(UZeroForm::Reciprocal)?,
        CoeffMode::Uj2 => zero_form(UZeroForm::Factorial)?,
        CoeffMode::Knuth => zero_form(UZeroForm::Knuth)?,
        CoeffMode::Carlitz => {
            let cs: Vec<String> = carlitz_series(a.r, a.order).iter().map(format_rational).collect();
            let plain = PolyV::new(carlitz_series(a.r, a.order)).format_in("w");
            return Ok(Report::new(
                json!({"family": "U", "r": a.r, "mode": "carlitz", "taylorW": cs}),
                format!("{plain} + O(w^{})", a.order + 1),
            ));
        }
    };
    let mode = format!("{:?}", a.mode).to_lowercase();
    match &a.w {
        Some(w) => {
            let w = parse_gaussian(w)?;
            let vv = v.unwrap_or_else(|| GaussianRational::from(Rational::from_integer(0.into())));
            let value = format_gaussian(&f.eval_gaussian(&w, &vv)?);
            Ok(Report::new(
                json!({"family": "U", "r": a.r, "mode": mode, "w": format_gaussian(&w), "v": format_gaussian(&vv), "value": value}),
                value,
            ))
        }
        None => {
            let f = match &v {
                Some(vv) => substitute_v(&f, vv)?,
                None => f,
            };
            let text = f.format_one_minus_w();
            Ok(Report::new(json!({"family": "U", "r": a.r, "mode": mode, "value": text}), text))
        }
    }
}

/// Substitute a rational `v`, keeping `w` symbolic.
fn substitute_v(f: &RationalFnW, v: &GaussianRational) -> Result<RationalFnW> {
    if !num_traits::Zero::is_zero(&v.im) {
        return Err(Error::InvalidArgument("symbolic w needs a real rational v".into()));
    }
    let num = f.numerator().map(|c| PolyV::constant(c.eval(&v.re)));
    Ok(RationalFnW::new(num, f.denom_exp()))
}

fn complex_json(z: &BigComplex, digits: u32) -> Value {
    json!({"re": z.re.to_decimal_string(digits as usize), "im": z.im.to_decimal_string(digits as usize)})
}

fn expansion_report(e: &ExpansionResult, digits: u32, head: Value) -> Report {
    let mut j = head;
    j["value"] = complex_json(&e.value, digits);
    j["termsUsed"] = json!(e.terms_used);
    j["contributions"] = Value::Array(e.contributions.iter().map(|c| complex_json(c, digits)).collect());
    j["regime"] = json!(e.regime.name());
    j["claimedErrorOrder"] = json!(e.claimed_error_order);
    Report::new(j, e.value.to_decimal_string(digits as usize))
}

pub fn eval(a: &EvalArgs, digits: u32) -> Result<Report> {
    let p = bits_for_digits(digits + 10);
    let n_q = parse_rational(&a.n)?;
    let n = BigFloat::from_rational(&n_q, p);
    let v_g = parse_gaussian(&a.v)?;
    let v = BigComplex::from_gaussian(&v_g, p);
    let eps = default_epsilon(p);
    let need_w = || -> Result<(GaussianRational, BigComplex)> {
        let w = a
            .w
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("--w is required".into()))
            .and_then(parse_gaussian)?;
        let wc = BigComplex::from_gaussian(&w, p);
        Ok((w, wc))
    };
    let mut head = json!({"target": format!("{:?}", a.target), "n": format_rational(&n_q), "v": format_gaussian(&v_g)});
    let e = match a.target {
        EvalTarget::Theta => theta_expansion(&n, &v, a.terms)?,
        EvalTarget::Gamma => gamma_expansion(&n, &v, a.terms)?,
        EvalTarget::Psi => {
            if !num_traits::Zero::is_zero(&v_g.im) || !v_g.re.is_integer() {
                return Err(Error::InvalidArgument("psi needs an integer v".into()));
            }
            let v_int = i64::try_from(v_g.re.to_integer()).map_err(|_| Error::TooLarge("v".into()))?;
            psi_expansion(&n, v_int, a.terms)?
        }
        EvalTarget::S | EvalTarget::T => {
            let (w, wc) = need_w()?;
            head["w"] = json!(format_gaussian(&w));
            if a.target == EvalTarget::S {
                s_expansion(&n, &wc, &v, a.terms, &eps)?
            } else {
                t_expansion(&n, &wc, &v, a.terms, &eps)?
            }
        }
    };
    head["target"] = json!(match a.target {
        EvalTarget::Theta => "theta",
        EvalTarget::Gamma => "gamma",
        EvalTarget::S => "S",
        EvalTarget::T => "T",
        EvalTarget::Psi => "psi",
    });
    Ok(expansion_report(&e, digits, head))
}

pub fn oracle(a: &OracleArgs, digits: u32) -> Result<Report> {
    let w = a.w.as_deref().map(parse_gaussian).transpose()?;
    let need_w = || w.clone().ok_or_else(|| Error::InvalidArgument("--w is required".into()));
    let d = digits as usize;
    let (name, value_json, plain): (&str, Value, String) = match a.target {
        OracleTarget::T => {
            let t = oracle_t(a.n, &need_w()?, a.v)?;
            let exact = format_gaussian(&t);
            let approx = BigComplex::from_gaussian(&t, bits_for_digits(digits + 10));
            ("T", json!({"exact": exact, "approx": complex_json(&approx, digits)}), exact)
        }
        OracleTarget::S => {
            let s = oracle_s(a.n, &need_w()?, a.v, digits)?;
            ("S", complex_json(&s, digits), s.to_decimal_string(d))
        }
        OracleTarget::Theta => {
            let x = oracle_theta(a.n, a.v, digits)?;
            ("theta", json!(x.to_decimal_string(d)), x.to_decimal_string(d))
        }
        OracleTarget::Psi => {
            let x = oracle_psi(a.n, a.v, digits)?;
            ("psi", json!(x.to_decimal_string(d)), x.to_decimal_string(d))
        }
        OracleTarget::Ei => {
            let x = oracle_ei(a.n, digits)?;
            ("Ei", json!(x.to_decimal_string(d)), x.to_decimal_string(d))
        }
        OracleTarget::GammaFactorial => {
            let x = gamma_factorial(a.n, a.v)?.to_string();
            ("gammaFactorial", json!(x), x)
        }
    };
    Ok(Report::new(
        json!({
            "target": name,
            "n": a.n,
            "v": a.v,
            "w": w.as_ref().map(format_gaussian),
            "digits": digits,
            "value": value_json,
        }),
        plain,
    ))
}

pub fn classify_cmd(a: &ClassifyArgs, digits: u32) -> Result<Report> {
    let p = bits_for_digits(digits).max(128);
    let w = parse_gaussian(&a.w)?;
    let eps = match &a.epsilon {
        Some(e) => BigFloat::from_rational(&parse_rational(e)?, p),
        None => default_epsilon(p),
    };
    if eps.is_negative() || eps.is_zero() {
        return Err(Error::InvalidArgument("epsilon must be positive".into()));
    }
    let label = classify(&BigComplex::from_gaussian(&w, p), &eps);
    let name = label.region.name();
    Ok(Report::new(
        json!({"w": format_gaussian(&w), "region": name, "boundaryMargin": label.boundary_margin.to_decimal_string(12)}),
        name,
    ))
}

pub fn szego(a: &SzegoArgs, digits: u32) -> Result<Report> {
    let p = bits_for_digits(digits).max(128);
    let t_max = parse_rational(&a.t_max)?;
    let pts: Vec<CurvePoint> = match &a.t_min {
        Some(t_min) => {
            let step = a
                .step
                .as_deref()
                .ok_or_else(|| Error::InvalidArgument("--step is required with --t-min".into()))
                .and_then(parse_rational)?;
            szego_curve(&parse_rational(t_min)?, &t_max, &step, p)?
        }
        None => szego_curve_from_edge(a.count, &t_max, p)?,
    };
    let d = digits as usize;
    let rows: Vec<[String; 4]> = pts
        .iter()
        .map(|pt| {
            [
                pt.t.to_decimal_string(d),
                pt.w.re.to_decimal_string(d),
                pt.w.im.to_decimal_string(d),
                pt.residual.to_decimal_string(6),
            ]
        })
        .collect();
    let mut csv = String::from("t,re(w),im(w),residual\n");
    for r in &rows {
        csv.push_str(&r.join(","));
        csv.push('\n');
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| json!({"t": r[0], "re": r[1], "im": r[2], "residual": r[3]}))
        .collect();
    let plain = rows.iter().map(|r| r.join(" ")).collect::<Vec<_>>().join("\n");
    Ok(Report {
        json: Value::Array(json_rows),
        plain,
        csv: Some(csv.trim_end().to_string()),
        default: Format::Csv,
        ok: true,
    })
}

/// The probe set used by `verify convergence`.
pub fn standard_probes() -> Vec<(ProbeTarget, usize, Vec<u64>)> {
    use rama_core::numeric::{frac, gaussian, int};
    vec![
        (ProbeTarget::Theta { v: 0 }, 3, vec![25, 50, 100]),
        (ProbeTarget::GammaFactorial { v: 0 }, 4, vec![20, 40]),
        (ProbeTarget::GammaFactorial { v: 5 }, 4, vec![20, 40]),
        (ProbeTarget::Psi { v: 0 }, 3, vec![25, 50, 100]),
        (ProbeTarget::S { w: gaussian(frac(1, 2), int(0)), v: 0 }, 3, vec![25, 50, 100]),
        (ProbeTarget::T { w: gaussian(int(2), int(0)), v: 0 }, 3, vec![25, 50, 100]),
    ]
}

pub fn verify(a: &VerifyArgs, digits: u32) -> Result<Report> {
    match a.suite {
        Suite::Identities => {
            let rep = run_ledger(a.max_r);
            let mut plain: Vec<String> = rep
                .items
                .iter()
                .map(|i| {
                    let status = if i.pass { "pass" } else { "FAIL" };
                    let extra = i.failure.as_deref().map(|f| format!(" ({f})")).unwrap_or_default();
                    format!("{status} {} [{} checks]{extra}", i.id, i.checks)
                })
                .collect();
            plain.push(format!("{}/{} pass", rep.passed(), rep.items.len()));
            let ok = rep.all_pass();
            Ok(Report {
                ok,
                ..Report::new(serde_json::to_value(&rep).expect("serializable"), plain.join("\n"))
            })
        }
        Suite::Conjecture => {
            let rep = check_conjecture(a.max_r);
            let mut plain = format!("{}/{} pass", rep.passed, rep.checked);
            for f in &rep.failures {
                plain.push_str(&format!("\nFAIL r={}: psi={} (-1)^(r+1) rho={}", f.r, f.psi, f.signed_rho));
            }
            let ok = rep.all_pass();
            Ok(Report {
                ok,
                ..Report::new(serde_json::to_value(&rep).expect("serializable"), plain)
            })
        }
        Suite::Convergence => {
            let mut reports = Vec::new();
            let mut plain = Vec::new();
            let mut csv = vec!["target,terms,n,error,ratio,expected,within_band".to_string()];
            let mut ok = true;
            for (target, terms, ns) in standard_probes() {
                let rep = convergence_probe(&target, terms, &ns, digits)?;
                let label = match &target {
                    ProbeTarget::GammaFactorial { v } => format!("{}(v={v})", rep.target),
                    _ => rep.target.clone(),
                };
                ok &= rep.all_within_band();
                for row in &rep.rows {
                    let fmt = |x: Option<f64>| x.map(|r| format!("{r:.5}")).unwrap_or_default();
                    csv.push(format!(
                        "{label},{terms},{},{},{},{},{}",
                        row.n,
                        row.error,
                        fmt(row.ratio),
                        fmt(row.expected),
                        row.within_band.map(|b| b.to_string()).unwrap_or_default()
                    ));
                }
                let ratios: Vec<String> = rep.rows.iter().filter_map(|r| r.ratio).map(|r| format!("{r:.4}")).collect();
                let status = if rep.all_within_band() { "pass" } else { "FAIL" };
                plain.push(format!(
                    "{status} {label} R={terms} n={ns:?} ratios=[{}] target={:.4}",
                    ratios.join(", "),
                    0.5f64.powf(rep.order)
                ));
                reports.push(serde_json::to_value(&rep).expect("serializable"));
            }
            Ok(Report {
                json: Value::Array(reports),
                plain: plain.join("\n"),
                csv: Some(csv.join("\n")),
                default: Format::Json,
                ok,
            })
        }
    }
}
