use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Field;
use crate::error::{Error, Result};

const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of the prime field GF(P), stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf<const P: u64>(u64);

impl<const P: u64> Gf<P> {
    const PRIME: () = assert!(is_prime(P) && P < (1 << 32), "modulus must be a prime below 2^32");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME;
        Gf(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Gf<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gf((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Gf<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Gf((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Gf<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Gf(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Gf<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Gf((P - self.0) % P)
    }
}

impl<const P: u64> Field for Gf<P> {
    const EXACT: bool = true;

    fn name() -> String {
        format!("GF({P})")
    }

    fn zero() -> Self {
        Gf::new(0)
    }

    fn one() -> Self {
        Gf::new(1)
    }

    fn from_i64(v: i64) -> Self {
        Gf::new(v)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = self.0;
        let mut e = P - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Some(Gf(acc))
    }

    fn characteristic() -> u64 {
        P
    }

    fn parse_literal(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid GF({P}) literal {s:?}"));
        let parse_int = |t: &str| -> Result<Self> {
            let v: i128 = t.trim().parse().map_err(|_| bad())?;
            Ok(Gf(v.rem_euclid(P as i128) as u64))
        };
        match s.split_once('/') {
            Some((n, d)) => parse_int(n)?.div(&parse_int(d)?).ok_or_else(bad),
            None => parse_int(s),
        }
    }
}
