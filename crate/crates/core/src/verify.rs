//! The identity ledger: every exact relation among De Moivre values,
//! Stirling-type numbers and expansion coefficients, runnable as one
//! suite with a pass/fail row per item.

use num_traits::Zero;
use serde::Serialize;

use crate::coefficients::{
    beta, beta_rational_part, beta_via_saddle, carlitz_series, eulerian_from_demoivre, gamma, gamma_at_zero,
    gamma_via_associated, half_integer_gamma_identity, rho, rho_at_zero, rho_at_zero_factorial, rho_via_associated,
    u_at_zero, u_coeff, u_via_saddle, EulerianForm, Mode, UMode, UZeroForm,
};
use crate::combinatorics::{
    enumerate_profile, eulerian2, stirling, stirling_associated, stirling_associated_padded, StirlingKind,
};
use crate::demoivre::{
    demoivre, shifted_exponential_value, special_closed_form, strip_first, strip_r, ClosedForm, CoeffSequence,
};
use crate::numeric::{binomial, binomial_int, double_factorial, factorial, Integer, PolyV, Rational, RationalFnW};

type Check = std::result::Result<usize, String>;

/// One ledger entry.
pub struct LedgerItem {
    pub id: &'static str,
    pub description: &'static str,
    run: fn(usize) -> Check,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerOutcome {
    pub id: String,
    pub description: String,
    pub checks: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LedgerReport {
    pub max_r: usize,
    pub items: Vec<LedgerOutcome>,
}

impl LedgerReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn passed(&self) -> usize {
        self.items.iter().filter(|i| i.pass).count()
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(a: &T, b: &T, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{}: {a:?} != {b:?}", what()))
    }
}

fn closed_forms(_: usize) -> Check {
    let mut n_checks = 0;
    for which in ClosedForm::ALL {
        let seq = which.sequence();
        for n in 0..=12 {
            for k in 0..=n {
                let direct = demoivre(n as i64, k, &seq);
                expect_eq(&special_closed_form(n, k, which), &direct, || format!("{} n={n} k={k}", which.name()))?;
                n_checks += 1;
            }
        }
    }
    Ok(n_checks)
}

fn exponential_shift(_: usize) -> Check {
    let seq = CoeffSequence::reciprocal_factorial(-1);
    let mut n_checks = 0;
    for m in 0..=10 {
        for k in 0..=10 {
            expect_eq(&demoivre((m + k) as i64, k, &seq), &shifted_exponential_value(m, k), || {
                format!("m={m} k={k}")
            })?;
            n_checks += 1;
        }
    }
    Ok(n_checks)
}

fn first_coefficient_removal(_: usize) -> Check {
    let mut n_checks = 0;
    for seq in [CoeffSequence::reciprocal(0), CoeffSequence::reciprocal_factorial(0)] {
        let shifted = seq.shifted(1);
        for n in 0..=10i64 {
            for k in 0..=10 {
                expect_eq(&strip_first(n, k, &seq), &demoivre(n, k, &shifted), || format!("{} n={n} k={k}", seq.tag()))?;
                n_checks += 1;
            }
        }
    }
    Ok(n_checks)
}

fn leading_coefficients_removal(_: usize) -> Check {
    let mut n_checks = 0;
    for seq in [CoeffSequence::reciprocal(0), CoeffSequence::reciprocal_factorial(0)] {
        for r in 1..=3 {
            let shifted = seq.shifted(r);
            for n in 0..=8i64 {
                for k in 0..=6 {
                    expect_eq(&strip_r(n, k, r, &seq), &demoivre(n, k, &shifted), || {
                        format!("{} r={r} n={n} k={k}", seq.tag())
                    })?;
                    n_checks += 1;
                }
            }
        }
    }
    Ok(n_checks)
}

fn associated_enumeration(_: usize) -> Check {
    let mut n_checks = 0;
    for kind in [StirlingKind::Cycle, StirlingKind::Subset] {
        for n in 0..=10 {
            let profile = enumerate_profile(kind, n).map_err(|e| e.to_string())?;
            for r in 1..=3 {
                for k in 0..=n {
                    let brute: Integer = if n == 0 {
                        profile[k][0].clone()
                    } else {
                        profile[k].iter().skip(r).cloned().sum()
                    };
                    expect_eq(&stirling_associated(kind, n, k, r), &brute, || {
                        format!("{} n={n} k={k} r={r}", kind.name())
                    })?;
                    n_checks += 1;
                }
            }
        }
    }
    Ok(n_checks)
}

fn associated_padded(_: usize) -> Check {
    let mut n_checks = 0;
    for kind in [StirlingKind::Cycle, StirlingKind::Subset] {
        for r in 1..=4 {
            for n in 0..=14 {
                for k in 0..=n {
                    expect_eq(&stirling_associated_padded(kind, n, k, r), &stirling_associated(kind, n, k, r), || {
                        format!("{} n={n} k={k} r={r}", kind.name())
                    })?;
                    n_checks += 1;
                }
            }
        }
    }
    Ok(n_checks)
}

fn eulerian_cycle(_: usize) -> Check {
    let mut n_checks = 0;
    for r in 0..=10usize {
        for j in 0..=10usize {
            let sum: Integer = (0..=r)
                .map(|k| eulerian2(r, k as i64) * binomial((r + j + k) as u64, 2 * r as u64))
                .sum();
            expect_eq(&sum, &stirling(StirlingKind::Cycle, r + j, j), || format!("r={r} j={j}"))?;
            n_checks += 1;
        }
    }
    Ok(n_checks)
}

fn eulerian_subset(_: usize) -> Check {
    let mut n_checks = 0;
    for r in 0..=10usize {
        for j in 0..=10usize {
            let sum: Integer = (0..=r)
                .map(|k| binomial_int(2 * r as i64 + j as i64 - 1 - k as i64, 2 * r as u64) * eulerian2(r, k as i64))
                .sum();
            expect_eq(&sum, &stirling(StirlingKind::Subset, r + j, j), || format!("r={r} j={j}"))?;
            n_checks += 1;
        }
    }
    Ok(n_checks)
}

fn eulerian_row_sums(_: usize) -> Check {
    for n in 1..=10usize {
        let s: Integer = (0..n as i64).map(|k| eulerian2(n, k)).sum();
        expect_eq(&s, &double_factorial(2 * n as i64 - 1), || format!("n={n}"))?;
    }
    Ok(10)
}

fn eulerian_via_demoivre(_: usize) -> Check {
    let mut n_checks = 0;
    for r in 0..=10 {
        for j in 0..=10 {
            let e = Rational::from_integer(eulerian2(r, j as i64));
            expect_eq(&eulerian_from_demoivre(r, j, EulerianForm::Reciprocal), &e, || format!("1/j r={r} j={j}"))?;
            n_checks += 1;
            if r >= 1 {
                expect_eq(&eulerian_from_demoivre(r, j, EulerianForm::Factorial), &e, || format!("1/j! r={r} j={j}"))?;
                n_checks += 1;
            }
        }
    }
    Ok(n_checks)
}

fn gamma_dual(max_r: usize) -> Check {
    for r in 0..=max_r {
        expect_eq(&gamma_at_zero(r, Mode::Plain), &gamma_at_zero(r, Mode::Tilde), || format!("r={r}"))?;
    }
    Ok(max_r + 1)
}

fn rho_dual(max_r: usize) -> Check {
    for r in 0..=max_r {
        expect_eq(&rho_at_zero(r), &rho_at_zero_factorial(r), || format!("r={r}"))?;
    }
    Ok(max_r + 1)
}

fn tilde_recurrence(max_r: usize, f: fn(usize, Mode) -> PolyV) -> Check {
    let tildes: Vec<PolyV> = (0..=max_r).map(|r| f(r, Mode::Tilde)).collect();
    for r in 0..=max_r {
        let rhs = if r == 0 {
            tildes[0].clone()
        } else {
            tildes[r].clone() + PolyV::var() * tildes[r - 1].clone()
        };
        expect_eq(&f(r, Mode::Plain), &rhs, || format!("r={r}"))?;
    }
    Ok(max_r + 1)
}

fn rho_recurrence(max_r: usize) -> Check {
    tilde_recurrence(max_r, rho)
}

fn gamma_recurrence(max_r: usize) -> Check {
    tilde_recurrence(max_r, gamma)
}

fn u_recurrence(max_r: usize) -> Check {
    let top = max_r.min(15);
    let tildes: Vec<RationalFnW> = (0..=top).map(|r| u_coeff(r, UMode::Tilde)).collect();
    for r in 0..=top {
        let rhs = if r == 0 {
            tildes[0].clone()
        } else {
            tildes[r].clone() + RationalFnW::v() * tildes[r - 1].clone()
        };
        expect_eq(&u_coeff(r, UMode::Plain), &rhs, || format!("r={r}"))?;
    }
    Ok(top + 1)
}

fn u_zero_forms(max_r: usize) -> Check {
    let top = max_r.min(15);
    let mut n_checks = 0;
    for r in 0..=top {
        let base = u_at_zero(r, UZeroForm::Reciprocal);
        for form in [UZeroForm::Factorial, UZeroForm::Knuth] {
            expect_eq(&u_at_zero(r, form), &base, || format!("{form:?} r={r}"))?;
            n_checks += 1;
        }
        let plain = u_coeff(r, UMode::Plain);
        let at_zero = RationalFnW::new(plain.numerator().map(|c| PolyV::constant(c.coeff(0))), plain.denom_exp());
        expect_eq(&at_zero, &base, || format!("U_r(w;0) r={r}"))?;
        let taylor: Vec<Rational> = base.taylor_at_zero(15).iter().map(|p| p.coeff(0)).collect();
        expect_eq(&taylor, &carlitz_series(r, 15), || format!("Taylor r={r}"))?;
        n_checks += 2;
    }
    Ok(n_checks)
}

fn associated_coefficients(_: usize) -> Check {
    let mut n_checks = 0;
    for j in 0..=10 {
        let g = gamma_at_zero(j, Mode::Plain);
        let r = rho_at_zero(j);
        for kind in [StirlingKind::Cycle, StirlingKind::Subset] {
            expect_eq(&gamma_via_associated(j, kind), &g, || format!("gamma {} j={j}", kind.name()))?;
            expect_eq(&rho_via_associated(j, kind), &r, || format!("rho {} j={j}", kind.name()))?;
            n_checks += 2;
        }
    }
    Ok(n_checks)
}

fn half_integer_gamma(_: usize) -> Check {
    for r in 0..=20 {
        for k in 0..=20 {
            let (l, rr) = half_integer_gamma_identity(r, k);
            expect_eq(&l, &rr, || format!("r={r} k={k}"))?;
        }
    }
    Ok(441)
}

fn beta_anchors(max_r: usize) -> Check {
    let mut n_checks = 0;
    for r in 0..=max_r {
        let fact = Rational::from_integer(factorial(r as u64));
        let delta = if r == 0 { Rational::from_integer(1.into()) } else { Rational::zero() };
        let b = beta(2 * r + 1, Mode::Plain);
        let b = b.rational().ok_or("odd-index beta carries sqrt(2)")?;
        expect_eq(&rho(r, Mode::Plain), &(PolyV::constant(delta) - b.scale(&fact)), || format!("rho r={r}"))?;
        let bt = beta(2 * r + 1, Mode::Tilde);
        let bt = bt.rational().ok_or("odd-index beta carries sqrt(2)")?;
        expect_eq(&rho(r, Mode::Tilde), &(-bt.scale(&fact)), || format!("rho~ r={r}"))?;
        let df = Rational::from_integer(double_factorial(2 * r as i64 - 1));
        expect_eq(&gamma(r, Mode::Plain), &beta_rational_part(2 * r, Mode::Plain).scale(&df), || {
            format!("gamma r={r}")
        })?;
        n_checks += 3;
    }
    Ok(n_checks)
}

fn saddle_engine(_: usize) -> Check {
    let betas = beta_via_saddle(9).map_err(|e| e.to_string())?;
    for (s, b) in betas.iter().enumerate() {
        expect_eq(b, &beta(s, Mode::Plain), || format!("beta s={s}"))?;
    }
    let us = u_via_saddle(6).map_err(|e| e.to_string())?;
    for (r, u) in us.iter().enumerate() {
        expect_eq(u, &u_coeff(r, UMode::Plain), || format!("U r={r}"))?;
    }
    Ok(betas.len() + us.len())
}

/// Every ledger item, sorted by id.
pub fn ledger() -> Vec<LedgerItem> {
    let mut items = vec![
        LedgerItem { id: "coeff.anchor-beta", description: "rho, rho~ and gamma from beta", run: beta_anchors },
        LedgerItem { id: "coeff.associated-stirling", description: "gamma_j and rho_j through 3-associated Stirling numbers (j <= 10)", run: associated_coefficients },
        LedgerItem { id: "coeff.gamma-dual", description: "gamma_r(0) from 1/j equals gamma_r(0) from 1/j!", run: gamma_dual },
        LedgerItem { id: "coeff.gamma-tilde-recurrence", description: "gamma_r = gamma~_r + v gamma~_{r-1}", run: gamma_recurrence },
        LedgerItem { id: "coeff.half-integer-gamma", description: "2^{r+k} Gamma(r+1/2)/sqrt(pi) C(-r-1/2,k) = (2r+2k-1)!!/((-1)^k k!) (r, k <= 20)", run: half_integer_gamma },
        LedgerItem { id: "coeff.rho-dual", description: "rho_r(0) from 1/j equals rho_r(0) from 1/j!", run: rho_dual },
        LedgerItem { id: "coeff.rho-tilde-recurrence", description: "rho_r = rho~_r + v rho~_{r-1}", run: rho_recurrence },
        LedgerItem { id: "coeff.saddle-engine", description: "generic saddle coefficients give beta_s (s <= 8) and U_r (r <= 5)", run: saddle_engine },
        LedgerItem { id: "coeff.u-tilde-recurrence", description: "U_r = U~_r + v U~_{r-1} (r <= 15)", run: u_recurrence },
        LedgerItem { id: "coeff.u-zero-forms", description: "U_r(w;0) closed forms agree; Taylor coefficients are signed subset numbers (r <= 15)", run: u_zero_forms },
        LedgerItem { id: "demoivre.closed-forms", description: "closed forms for 1/j, 1/j!, 1/(j+1), 1/(j+1)!, 1/(j+2), 1/(j+2)! sequences (n <= 12)", run: closed_forms },
        LedgerItem { id: "demoivre.exponential-shift", description: "A_{m+k,k}(1/0!, 1/1!, ...) = k^m/m! (m, k <= 10)", run: exponential_shift },
        LedgerItem { id: "demoivre.strip-first", description: "removing the first coefficient by the binomial theorem", run: first_coefficient_removal },
        LedgerItem { id: "demoivre.strip-leading", description: "removing the first r coefficients by the multinomial theorem (r <= 3)", run: leading_coefficients_removal },
        LedgerItem { id: "eulerian.cycle", description: "cycle numbers from second-order Eulerian numbers (r, j <= 10)", run: eulerian_cycle },
        LedgerItem { id: "eulerian.demoivre", description: "second-order Eulerian numbers from De Moivre sums (r, j <= 10)", run: eulerian_via_demoivre },
        LedgerItem { id: "eulerian.row-sums", description: "row sums of second-order Eulerian numbers are (2n-1)!!", run: eulerian_row_sums },
        LedgerItem { id: "eulerian.subset", description: "subset numbers from second-order Eulerian numbers (r, j <= 10)", run: eulerian_subset },
        LedgerItem { id: "stirling.associated-enumeration", description: "associated Stirling numbers against brute-force enumeration (n <= 10, r <= 3)", run: associated_enumeration },
        LedgerItem { id: "stirling.associated-padded", description: "zero-padded and shifted sequences give the same associated counts", run: associated_padded },
    ];
    items.sort_by_key(|i| i.id);
    items
}

impl LedgerItem {
    pub fn run(&self, max_r: usize) -> LedgerOutcome {
        let result = (self.run)(max_r);
        LedgerOutcome {
            id: self.id.to_string(),
            description: self.description.to_string(),
            checks: *result.as_ref().unwrap_or(&0),
            pass: result.is_ok(),
            failure: result.err(),
        }
    }
}

/// Run every item in parallel; results come back sorted by id.
pub fn run_ledger(max_r: usize) -> LedgerReport {
    let items = ledger();
    let items = std::thread::scope(|scope| {
        let handles: Vec<_> = items.iter().map(|item| scope.spawn(move || item.run(max_r))).collect();
        handles
            .into_iter()
            .zip(&items)
            .map(|(h, item)| {
                h.join().unwrap_or_else(|_| LedgerOutcome {
                    id: item.id.to_string(),
                    description: item.description.to_string(),
                    checks: 0,
                    pass: false,
                    failure: Some("panicked".into()),
                })
            })
            .collect()
    });
    LedgerReport { max_r, items }
}
