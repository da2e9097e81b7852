//! Exact scalar fields.
//!
//! [`Rational`] and [`GaussRational`] carry unbounded integers, so products of
//! many small matrices never overflow. The [`Scalar`] trait is what the
//! vector-space instance is generic over.

mod gauss;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

pub use gauss::GaussRational;
pub use rational::Rational;

use crate::error::Result;

/// A field with an involutive conjugation, exact equality and a text form.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + FromStr<Err = crate::Error>
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Sub<Output = Self>
    + Neg<Output = Self>
{
    fn conj(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn from_integer(n: i64) -> Self;
    /// Square root inside the field, if one exists and is found.
    fn sqrt_exact(&self) -> Option<Self>;
    /// A short human-readable form; integers print without a denominator.
    fn pretty(&self) -> String;

    fn mul_ref(&self, rhs: &Self) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
}

impl Scalar for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn inv(&self) -> Result<Self> {
        self.recip()
    }
    fn from_integer(n: i64) -> Self {
        Rational::from_integer(n)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        Rational::sqrt_exact(self)
    }
    fn pretty(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            self.to_string()
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
}

impl Scalar for GaussRational {
    fn conj(&self) -> Self {
        GaussRational::conj(self)
    }
    fn inv(&self) -> Result<Self> {
        GaussRational::inv(self)
    }
    fn from_integer(n: i64) -> Self {
        n.into()
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if !self.im.is_zero() {
            return None;
        }
        self.re.sqrt_exact().map(GaussRational::real)
    }
    fn pretty(&self) -> String {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => self.re.pretty(),
            (true, false) => format!("{}i", self.im.pretty()),
            (false, false) if self.im.is_negative() => {
                format!("{}-{}i", self.re.pretty(), (-&self.im).pretty())
            }
            (false, false) => format!("{}+{}i", self.re.pretty(), self.im.pretty()),
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn gauss() -> impl Strategy<Value = GaussRational> {
        (rat(), rat()).prop_map(|(a, b)| GaussRational::new(a, b))
    }

    proptest! {
        #[test]
        fn conj_is_multiplicative_involution(z in gauss(), w in gauss()) {
            prop_assert_eq!((&z * &w).conj(), z.conj() * w.conj());
            prop_assert_eq!(z.conj().conj(), z);
        }

        #[test]
        fn field_axioms(a in gauss(), b in gauss(), c in gauss()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn rational_field_axioms(a in rat(), b in rat(), c in rat()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
            }
        }

        #[test]
        fn text_round_trip(z in gauss()) {
            prop_assert_eq!(z.to_string().parse::<GaussRational>().unwrap(), z);
        }
    }
}
