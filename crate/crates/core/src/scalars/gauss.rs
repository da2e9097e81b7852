use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::rational::{forward_owned, Rational};
use crate::error::{Error, Result};

/// A Gaussian rational `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRational::new(Rational::zero(), Rational::one())
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm_sqr().recip()?;
        let c = self.conj();
        Ok(GaussRational::new(&c.re * &n, &c.im * &n))
    }
}

impl From<Rational> for GaussRational {
    fn from(re: Rational) -> Self {
        GaussRational::real(re)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::real(n.into())
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::real(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::real(&self.re * &rhs.re);
        }
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -&self
    }
}

forward_owned!(GaussRational, Add::add, Sub::sub, Mul::mul);

impl fmt::Display for GaussRational {
    /// `p/q+r/s i`, or `p/q-r/s i` when the imaginary part is negative.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{} i", self.re, -&self.im)
        } else {
            write!(f, "{}+{} i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussRational {
    type Err = Error;

    /// Accepts `a`, `a+b i`, `a-b i` and `b i`, where `a`, `b` are rationals.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let Some(body) = t.strip_suffix('i') else {
            return Ok(GaussRational::real(t.parse()?));
        };
        let body = body.trim_end();
        // the split is the last sign that is not a leading sign
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        match split {
            Some(k) => Ok(GaussRational::new(body[..k].parse()?, body[k..].parse()?)),
            None if body.is_empty() || body == "+" => Ok(GaussRational::i()),
            None if body == "-" => Ok(-GaussRational::i()),
            None => Ok(GaussRational::new(Rational::zero(), body.parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussRational {
        GaussRational::new(a.into(), b.into())
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(GaussRational::i() * GaussRational::i(), g(-1, 0));
    }

    #[test]
    fn conjugate_negates_imaginary_part() {
        assert_eq!(g(2, 3).conj(), g(2, -3));
    }

    #[test]
    fn inverse() {
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(g(1, 1).inv().unwrap(), GaussRational::new(half.clone(), -half));
        assert_eq!(GaussRational::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn text_form_round_trips() {
        let z = GaussRational::new(Rational::new(1, 2).unwrap(), Rational::new(-3, 4).unwrap());
        assert_eq!(z.to_string(), "1/2-3/4 i");
        assert_eq!(z.to_string().parse::<GaussRational>().unwrap(), z);
        assert_eq!("1/2+1/3 i".parse::<GaussRational>().unwrap().im, Rational::new(1, 3).unwrap());
        assert_eq!("-2".parse::<GaussRational>().unwrap(), g(-2, 0));
        assert_eq!("-5/1 i".parse::<GaussRational>().unwrap(), g(0, -5));
        assert_eq!("i".parse::<GaussRational>().unwrap(), g(0, 1));
        assert_eq!("-1-1 i".parse::<GaussRational>().unwrap(), g(-1, -1));
        assert!("1+x i".parse::<GaussRational>().is_err());
    }
}
