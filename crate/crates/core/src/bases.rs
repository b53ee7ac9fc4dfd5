//! Degree-graded polynomial bases.
//!
//! A basis is described by its multiplication rule
//! `x·φ_j = Σ_{i ≤ j+1} m_{j,i} φ_i` with `m_{j,j+1} ≠ 0`. Vectors indexed by
//! basis elements are stored in descending degree, `Λ(λ) = [φ_{k−1}(λ), …, φ_0(λ)]ᵀ`.

use crate::error::{Error, Result};
use crate::fields::Field;
use crate::matrix::Matrix;
use crate::poly::Poly;

#[derive(Clone, PartialEq, Debug)]
pub enum Basis<F> {
    Monomial,
    ChebyshevT,
    /// Three-term recurrence `x·φ_j = a_j φ_{j+1} + b_j φ_j + c_j φ_{j−1}`,
    /// `φ_0 = 1`. The recurrence is defined for `j < a.len()`.
    Orthogonal { a: Vec<F>, b: Vec<F>, c: Vec<F> },
    /// `table[j]` holds the coefficients of `x·φ_j` over `φ_0, …, φ_{j+1}`.
    DegreeGraded { table: Vec<Vec<F>> },
}

impl<F: Field> Basis<F> {
    pub fn orthogonal(a: Vec<F>, b: Vec<F>, c: Vec<F>) -> Result<Self> {
        if a.len() != b.len() || a.len() != c.len() {
            return Err(Error::InvalidBasis(format!(
                "recurrence sequences have lengths {}, {}, {}",
                a.len(),
                b.len(),
                c.len()
            )));
        }
        if let Some(j) = a.iter().position(F::is_zero) {
            return Err(Error::InvalidBasis(format!("a_{j} = 0, basis is not degree-graded")));
        }
        Ok(Basis::Orthogonal { a, b, c })
    }

    pub fn degree_graded(table: Vec<Vec<F>>) -> Result<Self> {
        for (j, row) in table.iter().enumerate() {
            if row.len() != j + 2 {
                return Err(Error::InvalidBasis(format!(
                    "row {j} of the multiplication table needs {} entries, got {}",
                    j + 2,
                    row.len()
                )));
            }
            if row[j + 1].is_zero() {
                return Err(Error::InvalidBasis(format!(
                    "coefficient of φ_{} in x·φ_{j} vanishes, basis is not degree-graded",
                    j + 1
                )));
            }
        }
        Ok(Basis::DegreeGraded { table })
    }

    /// Legendre polynomials, recurrence defined for `j < len`.
    pub fn legendre(len: usize) -> Result<Self> {
        let ratio = |p: usize, q: usize| {
            F::from_ratio(p as i64, q as i64).ok_or(Error::FieldTooSmall("the Legendre recurrence"))
        };
        let a = (0..len).map(|j| ratio(j + 1, 2 * j + 1)).collect::<Result<Vec<_>>>()?;
        let c = (0..len).map(|j| ratio(j, 2 * j + 1)).collect::<Result<Vec<_>>>()?;
        Basis::orthogonal(a, vec![F::zero(); len], c)
    }

    pub fn is_monomial(&self) -> bool {
        matches!(self, Basis::Monomial)
    }

    pub fn is_chebyshev(&self) -> bool {
        matches!(self, Basis::ChebyshevT)
    }

    /// Largest `j` for which `x·φ_j` is known (`None` = unbounded).
    pub fn max_recurrence(&self) -> Option<usize> {
        match self {
            Basis::Monomial | Basis::ChebyshevT => None,
            Basis::Orthogonal { a, .. } => a.len().checked_sub(1),
            Basis::DegreeGraded { table } => table.len().checked_sub(1),
        }
    }

    /// Fails unless `φ_0, …, φ_k` and the products `x·φ_j` for `j < k` are
    /// all available in this field.
    pub fn validate(&self, k: usize) -> Result<()> {
        if k > 0 {
            self.xphi(k - 1)?;
        }
        Ok(())
    }

    /// Coefficients of `x·φ_j` over `φ_0, …, φ_{j+1}`.
    pub fn xphi(&self, j: usize) -> Result<Vec<F>> {
        let mut out = vec![F::zero(); j + 2];
        match self {
            Basis::Monomial => out[j + 1] = F::one(),
            Basis::ChebyshevT => {
                if F::characteristic() == 2 {
                    return Err(Error::ChebyshevCharacteristic2);
                }
                if j == 0 {
                    out[1] = F::one();
                } else {
                    let half = F::from_ratio(1, 2).ok_or(Error::ChebyshevCharacteristic2)?;
                    out[j - 1] = half.clone();
                    out[j + 1] = half;
                }
            }
            Basis::Orthogonal { a, b, c } => {
                if j >= a.len() {
                    return Err(self.too_short(j));
                }
                out[j + 1] = a[j].clone();
                out[j] = b[j].clone();
                if j > 0 {
                    out[j - 1] = c[j].clone();
                }
            }
            Basis::DegreeGraded { table } => {
                out = table.get(j).cloned().ok_or_else(|| self.too_short(j))?;
            }
        }
        Ok(out)
    }

    fn too_short(&self, j: usize) -> Error {
        Error::InvalidBasis(format!("recurrence for x·φ_{j} is not defined by this basis"))
    }

    /// Whether `φ_i` has the parity of `i`, read off from the recurrence for
    /// `j < k`.
    pub fn is_alternating(&self, k: usize) -> bool {
        (0..k).all(|j| match self.xphi(j) {
            Ok(row) => row
                .iter()
                .enumerate()
                .all(|(i, m)| m.is_zero() || (j + 1 - i) % 2 == 0),
            Err(_) => false,
        })
    }

    /// `M ∈ F^{nk × n(k+1)}`: block `(p, q)` holds the coefficient of
    /// `φ_{k−q}` in `x·φ_{k−1−p}` (0-indexed), times `I_n`.
    pub fn mult_matrix(&self, k: usize, n: usize) -> Result<Matrix<F>> {
        let mut m = Matrix::zeros(n * k, n * (k + 1));
        for p in 0..k {
            let row = self.xphi(k - 1 - p)?;
            for (deg, coef) in row.iter().enumerate() {
                let q = k - deg;
                for d in 0..n {
                    m[(p * n + d, q * n + d)] = coef.clone();
                }
            }
        }
        Ok(m)
    }

    /// `φ_0(λ), …, φ_{k−1}(λ)` in ascending order.
    pub fn eval_all(&self, k: usize, lambda: &F) -> Result<Vec<F>> {
        Ok(self.eval_with_derivative(k, lambda)?.0)
    }

    /// Values and derivatives of `φ_0, …, φ_{k−1}` at `λ`, ascending, via
    /// `φ'_{j+1} = (φ_j + xφ'_j − Σ_{i≤j} m_{j,i} φ'_i) / m_{j,j+1}`.
    pub fn eval_with_derivative(&self, k: usize, lambda: &F) -> Result<(Vec<F>, Vec<F>)> {
        let mut val = Vec::with_capacity(k);
        let mut der = Vec::with_capacity(k);
        if k == 0 {
            return Ok((val, der));
        }
        val.push(F::one());
        der.push(F::zero());
        for j in 0..k - 1 {
            let row = self.xphi(j)?;
            let lead_inv = row[j + 1].inv().ok_or_else(|| self.too_short(j))?;
            let mut v = lambda.clone() * val[j].clone();
            let mut d = val[j].clone() + lambda.clone() * der[j].clone();
            for i in 0..=j {
                v = v - row[i].clone() * val[i].clone();
                d = d - row[i].clone() * der[i].clone();
            }
            val.push(v * lead_inv.clone());
            der.push(d * lead_inv);
        }
        Ok((val, der))
    }

    /// `Λ(λ) = [φ_{k−1}(λ), …, φ_0(λ)]`.
    pub fn lambda_vector(&self, k: usize, lambda: &F) -> Result<Vec<F>> {
        let mut v = self.eval_all(k, lambda)?;
        v.reverse();
        Ok(v)
    }

    /// `Σ_j c_j φ_j(λ)` for ascending coefficients `c`.
    pub fn eval_series(&self, coeffs: &[F], lambda: &F) -> Result<F> {
        let phis = self.eval_all(coeffs.len(), lambda)?;
        Ok(coeffs
            .iter()
            .zip(&phis)
            .fold(F::zero(), |acc, (c, p)| acc + c.clone() * p.clone()))
    }

    /// Monomial expansions of `φ_0, …, φ_{k−1}`.
    pub fn monomial_forms(&self, k: usize) -> Result<Vec<Poly<F>>> {
        let mut polys: Vec<Poly<F>> = Vec::with_capacity(k);
        if k == 0 {
            return Ok(polys);
        }
        polys.push(Poly::constant(F::one()));
        for j in 0..k - 1 {
            let row = self.xphi(j)?;
            let lead_inv = row[j + 1].inv().ok_or_else(|| self.too_short(j))?;
            let mut p = &Poly::x() * &polys[j];
            for (i, m) in row.iter().enumerate().take(j + 1) {
                p = &p - &polys[i].scale(m);
            }
            polys.push(p.scale(&lead_inv));
        }
        Ok(polys)
    }

    /// `S ∈ F^{k×k}` with `Λ(λ) = S·[λ^{k−1}, …, λ, 1]ᵀ`.
    pub fn change_of_basis(&self, k: usize) -> Result<Matrix<F>> {
        let polys = self.monomial_forms(k)?;
        let mut s = Matrix::zeros(k, k);
        for r in 0..k {
            let p = &polys[k - 1 - r];
            for c in 0..k {
                s[(r, c)] = p.coeff(k - 1 - c);
            }
        }
        Ok(s)
    }

    /// Ascending monomial coefficients of `Σ_j c_j φ_j`.
    pub fn to_monomial(&self, coeffs: &[F]) -> Result<Vec<F>> {
        let polys = self.monomial_forms(coeffs.len())?;
        let mut out = vec![F::zero(); coeffs.len()];
        for (c, p) in coeffs.iter().zip(&polys) {
            for (i, pc) in p.coeffs().iter().enumerate() {
                out[i] = out[i].clone() + c.clone() * pc.clone();
            }
        }
        Ok(out)
    }

    /// Inverse of [`Basis::to_monomial`]: coefficients in this basis of the
    /// polynomial with ascending monomial coefficients `mono`.
    pub fn from_monomial(&self, mono: &[F]) -> Result<Vec<F>> {
        let g = mono.len();
        let polys = self.monomial_forms(g)?;
        let mut rest = mono.to_vec();
        let mut out = vec![F::zero(); g];
        for j in (0..g).rev() {
            let lead = polys[j].coeff(j);
            let c = rest[j].div(&lead).ok_or_else(|| self.too_short(j))?;
            for (i, pc) in polys[j].coeffs().iter().enumerate() {
                rest[i] = rest[i].clone() - c.clone() * pc.clone();
            }
            out[j] = c;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{Gf, Rational};
    use proptest::prelude::*;

    type Q = Rational;

    fn q(a: i64, b: i64) -> Q {
        Q::new(a, b)
    }

    fn bases() -> Vec<Basis<Q>> {
        vec![
            Basis::Monomial,
            Basis::ChebyshevT,
            Basis::legendre(8).unwrap(),
            Basis::degree_graded(vec![
                vec![q(1, 3), q(2, 1)],
                vec![q(1, 1), q(-1, 2), q(3, 1)],
                vec![q(0, 1), q(1, 1), q(2, 1), q(-1, 1)],
                vec![q(5, 1), q(0, 1), q(1, 1), q(1, 4), q(2, 3)],
            ])
            .unwrap(),
        ]
    }

    #[test]
    fn monomial_mult_matrix() {
        let m = Basis::<Q>::Monomial.mult_matrix(2, 1).unwrap();
        assert_eq!(m, Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn chebyshev_mult_matrix() {
        let m = Basis::<Q>::ChebyshevT.mult_matrix(3, 1).unwrap();
        let h = q(1, 2);
        let z = Q::zero();
        let expected = Matrix::from_rows(vec![
            vec![h.clone(), z.clone(), h.clone(), z.clone()],
            vec![z.clone(), h.clone(), z.clone(), h.clone()],
            vec![z.clone(), z.clone(), Q::one(), z.clone()],
        ])
        .unwrap();
        assert_eq!(m, expected);
        // Nonzeros stay inside the three block diagonals 0, 1, 2; for
        // Chebyshev the middle one is zero since b_j = 0.
        let m = Basis::<Q>::ChebyshevT.mult_matrix(6, 2).unwrap();
        let mut diags = std::collections::BTreeSet::new();
        for r in 0..6 {
            for c in 0..7 {
                if !m[(2 * r, 2 * c)].is_zero() {
                    diags.insert(c as i64 - r as i64);
                }
            }
        }
        assert_eq!(diags.into_iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn legendre_mult_matrix() {
        // x·P_1 = 2/3 P_2 + 1/3 P_0, x·P_0 = P_1.
        let m = Basis::<Q>::legendre(4).unwrap().mult_matrix(2, 1).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![q(2, 3), q(0, 1), q(1, 3)],
            vec![q(0, 1), q(1, 1), q(0, 1)],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn lambda_vectors() {
        let v = Basis::<Q>::Monomial.lambda_vector(3, &Q::from(2)).unwrap();
        assert_eq!(v, vec![Q::from(4), Q::from(2), Q::from(1)]);
        let v = Basis::<Q>::ChebyshevT.lambda_vector(3, &q(1, 2)).unwrap();
        assert_eq!(v, vec![q(-1, 2), q(1, 2), Q::one()]);
    }

    #[test]
    fn change_of_basis_examples() {
        assert_eq!(Basis::<Q>::Monomial.change_of_basis(3).unwrap(), Matrix::identity(3));
        assert_eq!(
            Basis::<Q>::ChebyshevT.change_of_basis(3).unwrap(),
            Matrix::from_i64(&[&[2, 0, -1], &[0, 1, 0], &[0, 0, 1]])
        );
        let s = Basis::<Q>::legendre(4).unwrap().change_of_basis(3).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![q(3, 2), q(0, 1), q(-1, 2)],
            vec![q(0, 1), q(1, 1), q(0, 1)],
            vec![q(0, 1), q(0, 1), q(1, 1)],
        ])
        .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn chebyshev_rejects_characteristic_two() {
        assert_eq!(
            Basis::<Gf<2>>::ChebyshevT.mult_matrix(2, 1).unwrap_err(),
            Error::ChebyshevCharacteristic2
        );
        assert!(Basis::<Gf<3>>::ChebyshevT.mult_matrix(2, 1).is_ok());
    }

    #[test]
    fn degree_graded_validation() {
        assert!(Basis::<Q>::degree_graded(vec![vec![Q::one(), Q::zero()]]).is_err());
        assert!(Basis::<Q>::orthogonal(vec![Q::zero()], vec![Q::zero()], vec![Q::zero()]).is_err());
        assert!(Basis::<Q>::legendre(2).unwrap().mult_matrix(3, 1).is_err());
    }

    #[test]
    fn alternating_flags() {
        assert!(Basis::<Q>::Monomial.is_alternating(5));
        assert!(Basis::<Q>::ChebyshevT.is_alternating(5));
        assert!(Basis::<Q>::legendre(6).unwrap().is_alternating(5));
        assert!(!bases()[3].is_alternating(3));
    }

    proptest! {
        #[test]
        fn lambda_vector_matches_change_of_basis(num in -100i64..100, den in 1i64..100, k in 1usize..5) {
            let lambda = q(num, den);
            for basis in bases() {
                let s = basis.change_of_basis(k).unwrap();
                let powers: Vec<Q> = (0..k).rev().map(|e| lambda.pow(e as u32)).collect();
                let expect = (&s * &Matrix::column(powers)).entries().to_vec();
                prop_assert_eq!(basis.lambda_vector(k, &lambda).unwrap(), expect);
            }
        }

        #[test]
        fn mult_matrix_multiplies_by_x(num in -100i64..100, den in 1i64..100, k in 1usize..5) {
            let lambda = q(num, den);
            for basis in bases() {
                let m = basis.mult_matrix(k, 1).unwrap();
                let ext = Matrix::column(basis.lambda_vector(k + 1, &lambda).unwrap());
                let lhs = &m * &ext;
                let rhs = Matrix::column(basis.lambda_vector(k, &lambda).unwrap()).scale(&lambda);
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn monomial_round_trip(c in proptest::collection::vec(-9i64..9, 1..6)) {
            let coeffs: Vec<Q> = c.iter().map(|&v| Q::from(v)).collect();
            for basis in bases() {
                let mono = basis.to_monomial(&coeffs).unwrap();
                prop_assert_eq!(basis.from_monomial(&mono).unwrap(), coeffs.clone());
                let x = q(3, 7);
                let direct = basis.eval_series(&coeffs, &x).unwrap();
                prop_assert_eq!(Poly::new(mono).eval(&x), direct);
            }
        }

        #[test]
        fn derivative_recurrence(num in -50i64..50, k in 1usize..6) {
            let lambda = q(num, 7);
            for basis in bases() {
                let (_, der) = basis.eval_with_derivative(k, &lambda).unwrap();
                let polys = basis.monomial_forms(k).unwrap();
                let expect: Vec<Q> = polys.iter().map(|p| p.derivative().eval(&lambda)).collect();
                prop_assert_eq!(der, expect);
            }
        }
    }
}
