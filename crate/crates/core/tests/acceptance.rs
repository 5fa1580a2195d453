//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rama_core::asymptotics::{classify, default_epsilon, szego_curve_from_edge, Region};
use rama_core::coefficients::{
    beta, beta_via_saddle, check_conjecture, psi, psi_at_zero, rho, u_coeff, u_via_saddle, Mode, UMode,
};
use rama_core::numeric::{frac, gaussian, int, parse_rational};
use rama_core::oracle::{convergence_probe, ProbeTarget};
use rama_core::verify::{run_ledger, LedgerReport};
use rama_core::{BigComplex, BigFloat, Poly, PolyV, Rational, RationalFnW};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn poly(cs: &[&str]) -> PolyV {
    Poly::new(cs.iter().map(|c| parse_rational(c).unwrap()).collect())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `1/(1-w)^k`
fn inv_one_minus_w(k: u32) -> RationalFnW {
    let f = RationalFnW::w_minus_one_inv_pow(k);
    if k % 2 == 1 {
        -f
    } else {
        f
    }
}

fn w_poly(cs: &[&str]) -> RationalFnW {
    RationalFnW::from_poly_w(&poly(cs))
}

fn criterion_1() -> Outcome {
    let rho0 = ["1/3", "4/135", "-8/2835", "-16/8505", "8992/12629925"];
    for (r, e) in rho0.iter().enumerate() {
        let got = rho(r, Mode::Plain).coeff(0);
        ensure(got == parse_rational(e).unwrap(), || format!("rho_{r}(0) = {got}"))?;
    }
    let rho_polys = [
        poly(&["1/3", "-1"]),
        poly(&["4/135", "0", "-1/3", "-1/3"]),
        poly(&["-8/2835", "-4/135", "2/135", "1/9", "0", "-1/15"]),
    ];
    for (r, e) in rho_polys.iter().enumerate() {
        ensure(&rho(r, Mode::Plain) == e, || format!("rho_{r}(v) = {}", rho(r, Mode::Plain)))?;
    }
    for (r, e) in ["-1/3", "4/135", "8/2835"].iter().enumerate() {
        ensure(psi_at_zero(r) == parse_rational(e).unwrap(), || format!("psi_{r}(0)"))?;
    }
    let psi_polys = [
        poly(&["-1/3", "-1"]),
        poly(&["4/135", "1/3", "2/3", "1/3"]),
        poly(&["8/2835", "-8/135", "-47/135", "-5/9", "-1/3", "-1/15"]),
    ];
    for (r, e) in psi_polys.iter().enumerate() {
        ensure(&psi(r) == e, || format!("psi_{r}(v) = {}", psi(r)))?;
    }
    let v = RationalFnW::v();
    let w = RationalFnW::w();
    let u = [
        inv_one_minus_w(1),
        -(w.clone() * inv_one_minus_w(3)) - v.clone() * w.clone() * inv_one_minus_w(2),
        w_poly(&["0", "1", "2"]) * inv_one_minus_w(5)
            + v.clone() * w_poly(&["0", "2", "1"]) * inv_one_minus_w(4)
            + v.clone() * v * w * inv_one_minus_w(3),
    ];
    for (r, e) in u.iter().enumerate() {
        ensure(&u_coeff(r, UMode::Plain) == e, || format!("U_{r} = {}", u_coeff(r, UMode::Plain)))?;
    }
    Ok("rho, psi and U first values exact".into())
}

fn ledger_criterion(prefixes: &[&str], max_r: usize) -> Outcome {
    static LEDGER: OnceLock<LedgerReport> = OnceLock::new();
    let report = LEDGER.get_or_init(|| run_ledger(max_r));
    let items: Vec<_> = report
        .items
        .iter()
        .filter(|i| prefixes.iter().any(|p| i.id.starts_with(p)) && i.id != "coeff.saddle-engine")
        .collect();
    ensure(!items.is_empty(), || "no ledger items selected".into())?;
    let checks: usize = items.iter().map(|i| i.checks).sum();
    for i in &items {
        ensure(i.pass, || format!("{}: {}", i.id, i.failure.clone().unwrap_or_default()))?;
    }
    Ok(format!("{} identities, {checks} exact checks (r <= {max_r})", items.len()))
}

fn criterion_2() -> Outcome {
    ledger_criterion(&["coeff."], 25)
}

fn criterion_3() -> Outcome {
    ledger_criterion(&["eulerian.", "stirling.", "demoivre."], 25)
}

fn criterion_4() -> Outcome {
    let rep = check_conjecture(100);
    ensure(rep.all_pass() && rep.checked == 101, || {
        format!("{}/{} pass, first failure r = {:?}", rep.passed, rep.checked, rep.failures.first().map(|f| f.r))
    })?;
    Ok(format!("psi_r(0) = (-1)^(r+1) rho_r(0) for r <= 100 ({}/{})", rep.passed, rep.checked))
}

fn criterion_5() -> Outcome {
    let probes = [
        (ProbeTarget::Theta { v: 0 }, 3, vec![25, 50, 100]),
        (ProbeTarget::GammaFactorial { v: 0 }, 4, vec![20, 40]),
        (ProbeTarget::GammaFactorial { v: 5 }, 4, vec![20, 40]),
        (ProbeTarget::Psi { v: 0 }, 3, vec![25, 50, 100]),
        (ProbeTarget::S { w: gaussian(frac(1, 2), int(0)), v: 0 }, 3, vec![25, 50, 100]),
        (ProbeTarget::T { w: gaussian(int(2), int(0)), v: 0 }, 3, vec![25, 50, 100]),
    ];
    let mut summary = Vec::new();
    for (target, terms, ns) in probes {
        let rep = convergence_probe(&target, terms, &ns, 200).map_err(|e| e.to_string())?;
        let bound = 0.5f64.powi(terms as i32);
        let ratios: Vec<f64> = rep.rows.iter().filter_map(|r| r.ratio).collect();
        ensure(ratios.len() == ns.len() - 1, || format!("{}: missing ratios", rep.target))?;
        for q in &ratios {
            ensure(*q >= bound / 2.0 && *q <= bound * 2.0, || format!("{}: ratio {q} vs {bound}", rep.target))?;
        }
        summary.push(format!(
            "{} [{}]",
            rep.target,
            ratios.iter().map(|q| format!("{q:.4}")).collect::<Vec<_>>().join(", ")
        ));
    }
    Ok(summary.join("; "))
}

fn criterion_6() -> Outcome {
    let betas = beta_via_saddle(9).map_err(|e| e.to_string())?;
    for (s, b) in betas.iter().enumerate() {
        ensure(b == &beta(s, Mode::Plain), || format!("beta_{s} mismatch"))?;
    }
    let us = u_via_saddle(6).map_err(|e| e.to_string())?;
    for (r, u) in us.iter().enumerate() {
        ensure(u == &u_coeff(r, UMode::Plain), || format!("U_{r} mismatch"))?;
    }
    Ok(format!("beta_s for s <= {}, U_r for r <= {}", betas.len() - 1, us.len() - 1))
}

/// Sign of `ln|w| + 1 - Re w`, evaluated from exact rational parts.
fn log_modulus_sign(re: &Rational, im: &Rational, prec: usize) -> std::cmp::Ordering {
    let norm = BigFloat::from_rational(&(re * re + im * im), prec);
    let ln = norm.ln().expect("nonzero").div_i64(2);
    let shift = BigFloat::from_rational(&(Rational::from_integer(1.into()) - re), prec);
    let g = &ln + &shift;
    let zero = BigFloat::zero(prec);
    g.partial_cmp(&zero).unwrap()
}

fn criterion_7() -> Outcome {
    use std::cmp::Ordering;
    let prec = 160;
    let pts = szego_curve_from_edge(200, &int(3), prec).map_err(|e| e.to_string())?;
    ensure(pts.len() == 200, || format!("{} curve points", pts.len()))?;
    let tol = BigFloat::from_rational(&Rational::new(1.into(), num_bigint::BigInt::from(10u8).pow(30)), prec);
    let one = BigComplex::one(prec);
    let mut worst = BigFloat::zero(prec);
    for pt in &pts {
        let z = &pt.w * &(&one - &pt.w).exp();
        let resid = (&z.abs() - &BigFloat::one(prec)).abs();
        ensure(resid < tol, || format!("residual {} at t = {}", resid, pt.t))?;
        if resid > worst {
            worst = resid;
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    let eps = default_epsilon(128);
    let mut counts = [0usize; 3];
    for _ in 0..1000 {
        let re = frac(rng.gen_range(-2000..=3000), 1000);
        let im = frac(rng.gen_range(-2000..=2000), 1000);
        let w = BigComplex::from_gaussian(&gaussian(re.clone(), im.clone()), 128);
        let got = classify(&w, &eps).region;
        let zero = Rational::from_integer(0.into());
        let one_q = Rational::from_integer(1.into());
        let expected = if re == zero && im == zero {
            Region::Zero
        } else if re == one_q && im == zero {
            Region::One
        } else {
            match log_modulus_sign(&re, &im, 512) {
                Ordering::Greater => Region::X,
                Ordering::Less if re < one_q => Region::Y,
                Ordering::Less => Region::Z,
                Ordering::Equal => return Err(format!("sample {re}+{im}i on the curve")),
            }
        };
        ensure(got == expected, || format!("w = {re}+{im}i: {} vs {}", got.name(), expected.name()))?;
        match got {
            Region::X => counts[0] += 1,
            Region::Y => counts[1] += 1,
            Region::Z => counts[2] += 1,
            _ => {}
        }
    }
    Ok(format!(
        "200 curve points, max residual {}; 1000 samples agree (X {}, Y {}, Z {})",
        worst.to_decimal_string(3),
        counts[0],
        counts[1],
        counts[2]
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome, Duration); 7] = [
        (1, "coefficient exactness", criterion_1, Duration::from_secs(1)),
        (2, "dual-form identities", criterion_2, Duration::from_secs(30)),
        (3, "combinatorial ledger", criterion_3, Duration::from_secs(60)),
        (4, "sign relation at v = 0", criterion_4, Duration::from_secs(600)),
        (5, "convergence orders", criterion_5, Duration::from_secs(120)),
        (6, "saddle-engine cross-check", criterion_6, Duration::from_secs(60)),
        (7, "region and curve suite", criterion_7, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (n, name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if took <= budget {
                Ok(msg)
            } else {
                Err(format!("{msg}; took {took:.2?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS criterion {n} ({name}, {took:.2?}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}, {took:.2?}): {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
