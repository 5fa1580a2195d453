//! JSON export shape for coefficient families.

use serde::{Deserialize, Serialize};

use super::{beta, gamma, psi, rho, tau, Mode};
use crate::numeric::{format_rational, PolyV};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum CoefficientFamily {
    Rho,
    RhoTilde,
    Gamma,
    GammaTilde,
    Beta,
    BetaTilde,
    Tau,
    Psi,
}

impl CoefficientFamily {
    pub const ALL: [CoefficientFamily; 8] = [
        Self::Rho,
        Self::RhoTilde,
        Self::Gamma,
        Self::GammaTilde,
        Self::Beta,
        Self::BetaTilde,
        Self::Tau,
        Self::Psi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Rho => "rho",
            Self::RhoTilde => "rhoTilde",
            Self::Gamma => "gamma",
            Self::GammaTilde => "gammaTilde",
            Self::Beta => "beta",
            Self::BetaTilde => "betaTilde",
            Self::Tau => "tau",
            Self::Psi => "psi",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }
}

/// One coefficient as `{family, r, polyV: ["c0", "c1", ...]}`. A `beta`
/// record carries `sqrt2: true` when the polynomial is to be multiplied by
/// `sqrt(2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRecord {
    pub family: CoefficientFamily,
    pub r: usize,
    #[serde(rename = "polyV")]
    pub poly_v: Vec<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub sqrt2: bool,
}

impl CoefficientRecord {
    pub fn from_poly(family: CoefficientFamily, r: usize, p: &PolyV) -> Self {
        Self {
            family,
            r,
            poly_v: p.coeffs().iter().map(format_rational).collect(),
            sqrt2: false,
        }
    }

    pub fn compute(family: CoefficientFamily, r: usize) -> Self {
        use CoefficientFamily::*;
        match family {
            Rho => Self::from_poly(family, r, &rho(r, Mode::Plain)),
            RhoTilde => Self::from_poly(family, r, &rho(r, Mode::Tilde)),
            Gamma => Self::from_poly(family, r, &gamma(r, Mode::Plain)),
            GammaTilde => Self::from_poly(family, r, &gamma(r, Mode::Tilde)),
            Beta | BetaTilde => {
                let mode = if family == Beta { Mode::Plain } else { Mode::Tilde };
                let b = beta(r, mode);
                Self {
                    sqrt2: b.sqrt2,
                    ..Self::from_poly(family, r, &b.poly)
                }
            }
            Tau => Self::from_poly(family, r, &tau(r)),
            Psi => Self::from_poly(family, r, &psi(r)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let rec = CoefficientRecord::compute(CoefficientFamily::Rho, 0);
        let s = serde_json::to_string(&rec).unwrap();
        assert_eq!(s, r#"{"family":"rho","r":0,"polyV":["1/3","-1"]}"#);
        let back: CoefficientRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rec);
        let b0 = CoefficientRecord::compute(CoefficientFamily::Beta, 0);
        assert!(serde_json::to_string(&b0).unwrap().contains("\"sqrt2\":true"));
    }

    #[test]
    fn names_round_trip() {
        for f in CoefficientFamily::ALL {
            assert_eq!(CoefficientFamily::from_name(f.name()), Some(f));
        }
    }
}
