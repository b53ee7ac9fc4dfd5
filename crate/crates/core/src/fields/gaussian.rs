use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{split_complex_literal, Field, Rational};
use crate::error::{Error, Result};

/// `re + im*i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn norm_sqr(&self) -> Rational {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im = if self.im == Rational::one() {
            "i".to_string()
        } else if self.im == -Rational::one() {
            "-i".to_string()
        } else {
            format!("{}*i", self.im)
        };
        if self.re.is_zero() {
            write!(f, "{im}")
        } else if im.starts_with('-') {
            write!(f, "{}{im}", self.re)
        } else {
            write!(f, "{}+{im}", self.re)
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        GaussianRational::new(re, im)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Field for GaussianRational {
    const EXACT: bool = true;

    fn name() -> String {
        "gaussian-rational".into()
    }

    fn zero() -> Self {
        GaussianRational::default_zero()
    }

    fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }

    fn from_i64(v: i64) -> Self {
        Rational::from(v).into()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        let d = self.norm_sqr().inv()?;
        Some(GaussianRational::new(
            self.re.clone() * d.clone(),
            -(self.im.clone() * d),
        ))
    }

    fn characteristic() -> u64 {
        0
    }

    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    fn parse_literal(s: &str) -> Result<Self> {
        let (re, im) = split_complex_literal(s)
            .ok_or_else(|| Error::Parse(format!("invalid gaussian rational {s:?}")))?;
        Ok(GaussianRational::new(re.parse()?, im.parse()?))
    }

    fn fraction_free() -> bool {
        true
    }
}

impl GaussianRational {
    fn default_zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }
}
