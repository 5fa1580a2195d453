//! `tau_r(v)` and `psi_r(v)`, the coefficients of the normalized
//! exponential-integral expansion, and the sign relation between
//! `psi_r(0)` and `rho_r(0)`.

use serde::Serialize;

use super::{assemble, gamma, gamma_at_zero, gamma_weight, inner_sum, parity, rho_at_zero, Mode};
use crate::demoivre::{rational_table, CoeffSequence, DeMoivreTable};
use crate::numeric::{format_rational, PolyV, Rational, RationalAlgebra};

/// `tau_r(v)`.
pub fn tau(r: usize) -> PolyV {
    -assemble(2 * r + 1, Mode::Plain, |k| gamma_weight(r, k))
}

/// `tau_r(0)`.
pub fn tau_at_zero(r: usize) -> Rational {
    inner_sum(2 * r + 1, &Mode::Plain.sequence(), |k| gamma_weight(r, k))
}

/// `psi_r = sum_m tau_{r-m} sum_k (-1)^k A_{m,k}(gamma_1, gamma_2, ...)`:
/// the `tau` series divided by the `gamma` series, for every `r < count`.
fn divide_series<T: RationalAlgebra + Send + Sync + 'static>(taus: Vec<T>, gammas: Vec<T>) -> Vec<T> {
    let count = taus.len();
    if count == 0 {
        return Vec::new();
    }
    let seq = CoeffSequence::from_vec("gamma_j", gammas);
    let table = DeMoivreTable::new(&seq, count - 1);
    let inverse: Vec<T> = (0..count)
        .map(|m| {
            (0..=m).fold(T::zero(), |acc, k| acc + table.get(m as i64, k).scale(&parity(k)))
        })
        .collect();
    (0..count)
        .map(|r| (0..=r).fold(T::zero(), |acc, m| acc + taus[r - m].clone() * inverse[m].clone()))
        .collect()
}

/// `psi_0(v), ..., psi_{count-1}(v)`.
pub fn psi_table(count: usize) -> Vec<PolyV> {
    let taus = (0..count).map(tau).collect();
    let gammas = (1..=count).map(|j| gamma(j, Mode::Plain)).collect();
    divide_series(taus, gammas)
}

/// `psi_r(v)`.
pub fn psi(r: usize) -> PolyV {
    psi_table(r + 1).pop().expect("nonempty")
}

fn psi_zero_table(count: usize) -> Vec<Rational> {
    rational_table(&Mode::Plain.sequence(), 2 * count + 1);
    let taus = (0..count).map(tau_at_zero).collect();
    let gammas = (1..=count).map(|j| gamma_at_zero(j, Mode::Plain)).collect();
    divide_series(taus, gammas)
}

/// `psi_r(0)`.
pub fn psi_at_zero(r: usize) -> Rational {
    psi_zero_table(r + 1).pop().expect("nonempty")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub r: usize,
    pub psi: String,
    pub signed_rho: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub max_r: usize,
    pub checked: usize,
    pub passed: usize,
    pub failures: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn all_pass(&self) -> bool {
        self.passed == self.checked
    }
}

/// Test `psi_r(0) = (-1)^{r+1} rho_r(0)` exactly for `r = 0..=max_r`.
pub fn check_conjecture(max_r: usize) -> ConjectureReport {
    let psis = psi_zero_table(max_r + 1);
    let failures: Vec<ConjectureRow> = psis
        .iter()
        .enumerate()
        .filter_map(|(r, p)| {
            let signed = rho_at_zero(r) * parity(r + 1);
            (p != &signed).then(|| ConjectureRow {
                r,
                psi: format_rational(p),
                signed_rho: format_rational(&signed),
                pass: false,
            })
        })
        .collect();
    ConjectureReport {
        max_r,
        checked: max_r + 1,
        passed: max_r + 1 - failures.len(),
        failures,
    }
}
