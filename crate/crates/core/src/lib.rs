pub mod asymptotics;
pub mod coefficients;
pub mod combinatorics;
pub mod demoivre;
pub mod error;
pub mod numeric;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use numeric::{
    BigComplex, BigFloat, GaussianRational, Integer, Poly, PolyV, Rational, RationalFnW,
};
