//! Scalar fields.
//!
//! Every algorithm in the crate is generic over [`Field`]. Exact fields
//! ([`Rational`], [`Gf`], [`GaussianRational`]) support the full set of
//! operations; the floating fields (`f64`, [`C64`]) share the arithmetic
//! interface but exact-only operations (kernels, gcds, exclusion checks)
//! reject them.

mod float;
mod gaussian;
mod prime;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

pub use float::C64;
pub use gaussian::GaussianRational;
pub use prime::Gf;
pub use rational::Rational;

use crate::error::{Error, Result};

/// Arithmetic shared by all scalar types.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Whether arithmetic is exact.
    const EXACT: bool;

    /// Human readable field name, used in error messages and documents.
    fn name() -> String;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// 0 for characteristic zero.
    fn characteristic() -> u64;

    /// Complex conjugation; the identity on fields without one.
    fn conj(&self) -> Self {
        self.clone()
    }

    /// Parse a scalar literal (`"3/4"`, `"1-2*i"`, `"5"` ...).
    fn parse_literal(s: &str) -> Result<Self>;

    /// Use fraction-free elimination for determinants.
    fn fraction_free() -> bool {
        false
    }

    /// `self / rhs`; `None` when `rhs` is zero.
    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    /// `num / den` embedded in the field; `None` when `den` vanishes.
    fn from_ratio(num: i64, den: i64) -> Option<Self> {
        Self::from_i64(num).div(&Self::from_i64(den))
    }

    /// Pivot preference in elimination: magnitude for floating fields,
    /// 1 for any nonzero exact value.
    fn pivot_weight(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// Fails with [`Error::InexactField`] when `F` is a floating field.
pub(crate) fn require_exact<F: Field>(operation: &'static str) -> Result<()> {
    if F::EXACT {
        Ok(())
    } else {
        Err(Error::InexactField {
            operation,
            field: F::name(),
        })
    }
}

/// Split a complex literal `a+b*i` into its real and imaginary parts.
///
/// Accepted forms: `a`, `b*i`, `i`, `-i`, `a+b*i`, `a-b*i`, `a+i`.
pub(crate) fn split_complex_literal(s: &str) -> Option<(String, String)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    if !s.ends_with('i') {
        return Some((s, "0".to_string()));
    }
    let body = &s[..s.len() - 1];
    // Find the sign splitting real and imaginary parts; skip a leading sign
    // and signs that belong to an exponent ("1e-3").
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let c = bytes[idx];
        if (c == b'+' || c == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
            split = Some(idx);
            break;
        }
    }
    let (re, im) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("0", body),
    };
    let im = im.strip_suffix('*').unwrap_or(im);
    let im = match im {
        "" | "+" => "1".to_string(),
        "-" => "-1".to_string(),
        other => other.strip_prefix('+').unwrap_or(other).to_string(),
    };
    Some((re.to_string(), im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literal_forms() {
        let cases = [
            ("3", ("3", "0")),
            ("i", ("0", "1")),
            ("-i", ("0", "-1")),
            ("2*i", ("0", "2")),
            ("1/2-3/4*i", ("1/2", "-3/4")),
            ("-1+i", ("-1", "1")),
            ("1e-3+2e-1*i", ("1e-3", "2e-1")),
        ];
        for (lit, (re, im)) in cases {
            let (a, b) = split_complex_literal(lit).unwrap();
            assert_eq!((a.as_str(), b.as_str()), (re, im), "{lit}");
        }
    }

    #[test]
    fn pow_by_squaring() {
        let two = Rational::from_i64(2);
        assert_eq!(two.pow(10), Rational::from_i64(1024));
        assert_eq!(Gf::<7>::from_i64(3).pow(6), Gf::<7>::one());
    }
}
