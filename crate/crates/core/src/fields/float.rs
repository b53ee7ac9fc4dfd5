use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{split_complex_literal, Field};
use crate::error::{Error, Result};

impl Field for f64 {
    const EXACT: bool = false;

    fn name() -> String {
        "f64".into()
    }

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }

    fn characteristic() -> u64 {
        0
    }

    fn pivot_weight(&self) -> f64 {
        self.abs()
    }

    fn parse_literal(s: &str) -> Result<Self> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid f64 literal {s:?}")))
    }
}

/// Complex double precision scalar.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct C64(pub Complex64);

impl C64 {
    pub fn new(re: f64, im: f64) -> Self {
        C64(Complex64::new(re, im))
    }
}

impl fmt::Debug for C64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for C64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Complex64 { re, im } = self.0;
        if im == 0.0 {
            write!(f, "{re}")
        } else if im < 0.0 {
            write!(f, "{re}{im}*i")
        } else {
            write!(f, "{re}+{im}*i")
        }
    }
}

impl Add for C64 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        C64(self.0 + rhs.0)
    }
}

impl Sub for C64 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        C64(self.0 - rhs.0)
    }
}

impl Mul for C64 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        C64(self.0 * rhs.0)
    }
}

impl Neg for C64 {
    type Output = Self;
    fn neg(self) -> Self {
        C64(-self.0)
    }
}

impl Field for C64 {
    const EXACT: bool = false;

    fn name() -> String {
        "c64".into()
    }

    fn zero() -> Self {
        C64::new(0.0, 0.0)
    }

    fn one() -> Self {
        C64::new(1.0, 0.0)
    }

    fn from_i64(v: i64) -> Self {
        C64::new(v as f64, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(C64(self.0.inv()))
        }
    }

    fn characteristic() -> u64 {
        0
    }

    fn conj(&self) -> Self {
        C64(self.0.conj())
    }

    fn pivot_weight(&self) -> f64 {
        self.0.norm()
    }

    fn parse_literal(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid c64 literal {s:?}"));
        let (re, im) = split_complex_literal(s).ok_or_else(bad)?;
        let re: f64 = re.parse().map_err(|_| bad())?;
        let im: f64 = im.parse().map_err(|_| bad())?;
        Ok(C64::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c64_round_trip() {
        for lit in ["1.5-2*i", "0.25", "3+0.5*i"] {
            let z = C64::parse_literal(lit).unwrap();
            assert_eq!(C64::parse_literal(&z.to_string()).unwrap(), z);
        }
        assert_eq!(C64::parse_literal("i").unwrap(), C64::new(0.0, 1.0));
        assert_eq!(f64::parse_literal(&0.1f64.to_string()).unwrap(), 0.1);
    }
}
