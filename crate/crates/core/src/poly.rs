//! Univariate scalar polynomials in the monomial basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::fields::{require_exact, Field};

/// Scalar polynomial with ascending monomial coefficients, trailing zeros
/// trimmed.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::new(vec![F::zero(), F::one()])
    }

    /// `x - a`.
    pub fn linear_root(a: F) -> Self {
        Poly::new(vec![-a, F::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Coefficients padded to `grade + 1` entries.
    pub fn padded(&self, grade: usize) -> Vec<F> {
        (0..=grade).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(F::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let Some(dd) = d.degree() else {
            return Err(Error::Singular("division by the zero polynomial"));
        };
        let lead_inv = d.leading().and_then(F::inv).expect("nonzero leading");
        let mut r = self.coeffs.clone();
        let Some(rd) = self.degree().filter(|&rd| rd >= dd) else {
            return Ok((Poly::zero(), self.clone()));
        };
        let mut q = vec![F::zero(); rd - dd + 1];
        for i in (0..=rd - dd).rev() {
            let c = r[i + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * dc.clone();
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        require_exact::<F>("polynomial gcd")?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Lagrange interpolation through `(x_i, y_i)` with distinct `x_i`.
    pub fn interpolate(xs: &[F], ys: &[F]) -> Result<Self> {
        assert_eq!(xs.len(), ys.len());
        // Newton divided differences.
        let n = xs.len();
        let mut coef = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let den = xs[i].clone() - xs[i - j].clone();
                coef[i] = (coef[i].clone() - coef[i - 1].clone())
                    .div(&den)
                    .ok_or(Error::Singular("interpolation nodes not distinct"))?;
            }
        }
        let mut p = Poly::zero();
        for i in (0..n).rev() {
            p = &(&p * &Poly::linear_root(xs[i].clone())) + &Poly::constant(coef[i].clone());
        }
        Ok(p)
    }

    /// Parse the monomial grammar `x^2+3/2*x-1` (also `-x`, `2x`, `x^3`).
    pub fn parse(s: &str) -> Result<Self> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = src.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&src[start..i]);
                start = i;
            }
        }
        terms.push(&src[start..]);
        let mut coeffs: Vec<F> = Vec::new();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-F::one(), &term[1..]),
                Some(b'+') => (F::one(), &term[1..]),
                _ => (F::one(), term),
            };
            let (coef, power) = parse_term::<F>(body)
                .ok_or_else(|| Error::Parse(format!("invalid polynomial term {term:?} in {s:?}")))?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, F::zero());
            }
            coeffs[power] = coeffs[power].clone() + sign * coef;
        }
        Ok(Poly::new(coeffs))
    }
}

fn parse_term<F: Field>(body: &str) -> Option<(F, usize)> {
    if body.is_empty() {
        return None;
    }
    let Some(xpos) = body.find('x') else {
        return F::parse_literal(body).ok().map(|c| (c, 0));
    };
    let coef_part = body[..xpos].strip_suffix('*').unwrap_or(&body[..xpos]);
    let coef = if coef_part.is_empty() {
        F::one()
    } else {
        F::parse_literal(coef_part).ok()?
    };
    let rest = &body[xpos + 1..];
    let power = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')?.parse().ok()?
    };
    Some((coef, power))
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let lit = c.to_string();
            let compound = lit[1..].contains(['+', '-']);
            let (neg, mag) = match lit.strip_prefix('-') {
                Some(m) if !compound => (true, m.to_string()),
                _ => (false, lit.clone()),
            };
            let mag = if compound { format!("({mag})") } else { mag };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag == "1";
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}
