pub mod base;
pub mod error;
pub mod instances;
pub mod matc;
pub mod pathcalc;
pub mod quantum;
pub mod scalars;
pub mod structures;
pub mod verify;

pub use error::{Error, Result};
pub use scalars::{GaussRational, Rational, Scalar};

/// Vector spaces over the Gaussian rationals, the instance with a dagger.
pub type GaussVec = instances::VecSkel<GaussRational>;
/// Vector spaces over the rationals.
pub type RatVec = instances::VecSkel<Rational>;
