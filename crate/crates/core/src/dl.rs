//! The double ansatz space `DL(P)`.
//!
//! A pencil `λX + Y` lies in `DL(P)` with ansatz `v` when
//! `X ⊞→ Y = v ⊗ [P_k … P_0]` and `X ⊞↓ Y = [P_k; …; P_0] ⊗ vᵀ`. Two
//! independent constructions are provided: a block-row recurrence that
//! solves the two shift-sum equations directly, and the Bézoutian formula
//! `λ·B(vI, P) + B(P, x·vI)`.

use crate::bases::Basis;
use crate::bezout::bezout_commuting;
use crate::blockpoly::{col_shift_sum, row_shift_sum, BlockMatrix, MatrixPolynomial, Pencil};
use crate::error::{Error, Result};
use crate::fields::{require_exact, Field};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Ansatz polynomial `v(y) = Σ v_i φ_i(y)` of grade `k − 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct Ansatz<F> {
    basis: Basis<F>,
    /// `v_0, …, v_{k−1}`.
    coeffs: Vec<F>,
}

impl<F: Field> Ansatz<F> {
    /// From ascending coefficients `v_0, …, v_{k−1}`.
    pub fn new(basis: Basis<F>, coeffs: Vec<F>) -> Self {
        Ansatz { basis, coeffs }
    }

    /// From the vector `v = [v_{k−1}, …, v_0]ᵀ`.
    pub fn from_vector(basis: Basis<F>, v: &[F]) -> Self {
        Ansatz::new(basis, v.iter().rev().cloned().collect())
    }

    /// The `i`-th unit vector `e_i` (1-indexed from the top of `v`).
    pub fn unit(basis: Basis<F>, k: usize, i: usize) -> Self {
        let mut v = vec![F::zero(); k];
        v[i - 1] = F::one();
        Ansatz::from_vector(basis, &v)
    }

    /// `v(y) = 1`.
    pub fn one(basis: Basis<F>, k: usize) -> Result<Self> {
        let mono: Vec<F> = (0..k).map(|i| if i == 0 { F::one() } else { F::zero() }).collect();
        let coeffs = basis.from_monomial(&mono)?;
        Ok(Ansatz::new(basis, coeffs))
    }

    pub fn basis(&self) -> &Basis<F> {
        &self.basis
    }

    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// `[v_{k−1}, …, v_0]`.
    pub fn vector(&self) -> Vec<F> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    pub fn eval(&self, lambda: &F) -> Result<F> {
        self.basis.eval_series(&self.coeffs, lambda)
    }

    /// `v` in monomial coefficients.
    pub fn to_poly(&self) -> Result<Poly<F>> {
        Ok(Poly::new(self.basis.to_monomial(&self.coeffs)?))
    }

    /// `v(λ)·I_n` as a matrix polynomial of grade `grade`.
    pub fn times_identity(&self, n: usize, grade: usize) -> Result<MatrixPolynomial<F>> {
        MatrixPolynomial::scalar(self.basis.clone(), &self.coeffs, n)?.with_grade(grade)
    }
}

fn check_inputs<F: Field>(p: &MatrixPolynomial<F>, v: &Ansatz<F>) -> Result<usize> {
    let k = p.grade();
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    if v.k() != k {
        return Err(Error::AnsatzLength {
            expected: k,
            got: v.k(),
        });
    }
    if v.basis() != p.basis() {
        return Err(Error::InvalidBasis("ansatz and polynomial use different bases".into()));
    }
    Ok(k)
}

/// `v ⊗ [P_k, …, P_0]`, `k × (k+1)` blocks.
fn right_ansatz_target<F: Field>(p: &MatrixPolynomial<F>, v: &[F]) -> BlockMatrix<F> {
    let row: Vec<Matrix<F>> = p.coeffs().iter().rev().cloned().collect();
    BlockMatrix::outer(v, &row)
}

/// The pencil in `DL(P)` with ansatz `v`, by the block-row recurrence.
///
/// With `Z = [0 Y]` and `R = T·M − Mᵀ·S` the `Y` equation is triangular in
/// the block rows of `Z` because `M` is upper triangular; `X` then follows
/// from the row shift sum. Works in any degree-graded basis. Over exact
/// fields both shift sums and block symmetry are re-verified.
pub fn dl_pencil<F: Field>(p: &MatrixPolynomial<F>, v: &Ansatz<F>) -> Result<Pencil<F>> {
    let k = check_inputs(p, v)?;
    let n = p.n();
    let basis = p.basis();
    let m = basis.mult_matrix(k, 1)?;
    let mk = basis.mult_matrix(k, n)?;
    let s = right_ansatz_target(p, &v.vector());
    let t = s.block_transpose();
    let r = t.mul_matrix(&mk)?.try_sub(&s.left_mul_matrix(&mk.transpose())?)?;

    let diag_inv = |i: usize| -> Result<F> {
        m[(i, i)]
            .inv()
            .ok_or_else(|| Error::InvalidBasis("basis is not degree-graded".into()))
    };
    let width = n * (k + 1);
    let r_row = |i: usize| r.matrix().submatrix(i * n, 0, n, width);

    // Block rows of Z = [0 Y].
    let mut z: Vec<Matrix<F>> = Vec::with_capacity(k);
    for i in 0..k {
        let mut acc = -&r_row(i);
        if i > 0 {
            let prev_y = z[i - 1].submatrix(0, n, n, n * k);
            acc = &acc + &prev_y.try_mul(&mk)?;
        }
        for (pi, zp) in z.iter().enumerate() {
            let c = &m[(pi, i)];
            if !c.is_zero() {
                acc = &acc - &zp.scale(c);
            }
        }
        z.push(acc.scale(&diag_inv(i)?));
    }
    let mut y = BlockMatrix::zeros(k, k, n);
    for (i, zi) in z.iter().enumerate() {
        for j in 0..k {
            y.set_block(i, j, &zi.submatrix(0, (j + 1) * n, n, n));
        }
    }

    // Row shift: Σ_{p ≤ i} m_{p,i} X_p + Y_{i−1} = T_i.
    let mut xs: Vec<Matrix<F>> = Vec::with_capacity(k);
    for i in 0..k {
        let mut acc = t.matrix().submatrix(i * n, 0, n, n * k);
        if i > 0 {
            acc = &acc - &y.matrix().submatrix((i - 1) * n, 0, n, n * k);
        }
        for (pi, xp) in xs.iter().enumerate() {
            let c = &m[(pi, i)];
            if !c.is_zero() {
                acc = &acc - &xp.scale(c);
            }
        }
        xs.push(acc.scale(&diag_inv(i)?));
    }
    let mut x = BlockMatrix::zeros(k, k, n);
    for (i, xi) in xs.iter().enumerate() {
        for j in 0..k {
            x.set_block(i, j, &xi.submatrix(0, j * n, n, n));
        }
    }

    let pencil = Pencil::new(x, y, basis.clone())?;
    if F::EXACT {
        if col_shift_sum(&pencil.x, &pencil.y, basis)? != s {
            return Err(Error::TheoremViolation("DL recurrence: column shift sum".into()));
        }
        if row_shift_sum(&pencil.x, &pencil.y, basis)? != t {
            return Err(Error::TheoremViolation("DL recurrence: row shift sum".into()));
        }
        if !pencil.is_block_symmetric() {
            return Err(Error::TheoremViolation("DL recurrence: block symmetry".into()));
        }
    }
    Ok(pencil)
}

/// The same pencil as `λ·B(vI, P) + B(P, x·vI)`.
pub fn dl_pencil_bezout<F: Field>(p: &MatrixPolynomial<F>, v: &Ansatz<F>) -> Result<Pencil<F>> {
    require_exact::<F>("dl_pencil_bezout")?;
    let k = check_inputs(p, v)?;
    let n = p.n();
    let vi = v.times_identity(n, k - 1)?;
    let xvi = vi.mul_x()?;
    let x = bezout_commuting(&vi.with_grade(k)?, p)?.matrix;
    let y = bezout_commuting(p, &xvi)?.matrix;
    Pencil::new(x, y, p.basis().clone())
}

/// Why a pencil is not in `DL(P)`.
#[derive(Clone, PartialEq, Debug)]
pub enum Rejection {
    /// Block row `block_row` of `X ⊞→ Y` is not a multiple of `[P_k … P_0]`.
    NotInL1 { block_row: usize },
    /// Block row `block_row` of `(X ⊞↓ Y)^B` is not a multiple of `[P_k … P_0]`.
    NotInL2 { block_row: usize },
    /// In both `L1(P)` and `L2(P)` but with different ansatz vectors.
    AnsatzMismatch { right: Vec<String>, left: Vec<String> },
}

#[derive(Clone, PartialEq, Debug)]
pub enum Recovery<F> {
    Member(Ansatz<F>),
    Rejected(Rejection),
}

/// Reads `v` off `Z = X ⊞→ Y`; `Err(r)` names the first block row that is
/// not a multiple of `[P_k … P_0]`.
fn read_ansatz<F: Field>(z: &BlockMatrix<F>, row: &[Matrix<F>]) -> std::result::Result<Vec<F>, usize> {
    // A reference entry where [P_k … P_0] is nonzero.
    let n = z.n();
    let (rb, ri, rj) = row
        .iter()
        .enumerate()
        .find_map(|(b, m)| {
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[(i, j)].is_zero())
                .map(|(i, j)| (b, i, j))
        })
        .expect("P is nonzero");
    let pivot_inv = row[rb][(ri, rj)].inv().expect("nonzero");
    let mut v = Vec::with_capacity(z.block_rows());
    for r in 0..z.block_rows() {
        let c = z.block(r, rb)[(ri, rj)].clone() * pivot_inv.clone();
        if (0..row.len()).any(|b| z.block(r, b) != row[b].scale(&c)) {
            return Err(r);
        }
        v.push(c);
    }
    Ok(v)
}

/// Decides membership of `λX + Y` in `DL(P)` and returns its ansatz.
pub fn recover_ansatz<F: Field>(l: &Pencil<F>, p: &MatrixPolynomial<F>) -> Result<Recovery<F>> {
    require_exact::<F>("recover_ansatz")?;
    if p.is_zero() {
        return Err(Error::NonRegular);
    }
    let k = l.k();
    if k != p.grade() || l.n() != p.n() {
        return Err(Error::DimensionMismatch {
            operation: "recover_ansatz",
            detail: format!(
                "pencil has {k} blocks of size {}, polynomial has grade {} and size {}",
                l.n(),
                p.grade(),
                p.n()
            ),
        });
    }
    let basis = p.basis();
    let row: Vec<Matrix<F>> = p.coeffs().iter().rev().cloned().collect();
    let right = match read_ansatz(&col_shift_sum(&l.x, &l.y, basis)?, &row) {
        Ok(v) => v,
        Err(block_row) => return Ok(Recovery::Rejected(Rejection::NotInL1 { block_row })),
    };
    let xb = l.x.block_transpose();
    let yb = l.y.block_transpose();
    let left = match read_ansatz(&col_shift_sum(&xb, &yb, basis)?, &row) {
        Ok(w) => w,
        Err(block_row) => return Ok(Recovery::Rejected(Rejection::NotInL2 { block_row })),
    };
    if right != left {
        let show = |v: &[F]| v.iter().map(F::to_string).collect();
        return Ok(Recovery::Rejected(Rejection::AnsatzMismatch {
            right: show(&right),
            left: show(&left),
        }));
    }
    Ok(Recovery::Member(Ansatz::from_vector(basis.clone(), &right)))
}

/// Outcome of the eigenvalue exclusion test.
#[derive(Clone, PartialEq, Debug)]
pub enum Exclusion<F> {
    Linearization,
    /// `gcd(v, det P)`, monic and nonconstant.
    SharedFiniteRoot(Poly<F>),
    SharedInfiniteEigenvalue,
}

/// `DL(P, v)` is a linearization iff `v(λ)I` (grade `k − 1`) and `P(λ)`
/// share no eigenvalue, including `∞`.
///
/// When both a finite and the infinite eigenvalue are shared, the finite
/// witness is reported.
pub fn exclusion_check<F: Field>(p: &MatrixPolynomial<F>, v: &Ansatz<F>) -> Result<Exclusion<F>> {
    require_exact::<F>("exclusion_check")?;
    let k = check_inputs(p, v)?;
    if v.is_zero() {
        return Err(Error::ZeroAnsatz);
    }
    let det = p.scalar_det()?;
    if det.is_zero() {
        return Err(Error::NonRegular);
    }
    let g = v.to_poly()?.gcd(&det)?;
    if g.degree().is_some_and(|d| d > 0) {
        return Ok(Exclusion::SharedFiniteRoot(g));
    }
    if v.coeffs()[k - 1].is_zero() && p.leading().determinant()?.is_zero() {
        return Ok(Exclusion::SharedInfiniteEigenvalue);
    }
    Ok(Exclusion::Linearization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Rational;
    use crate::random::Sampler;
    use proptest::prelude::*;

    type Q = Rational;

    fn cheb_cubic(seed: u64) -> MatrixPolynomial<Q> {
        Sampler::new(seed).matrix_polynomial(Basis::ChebyshevT, 2, 3)
    }

    fn grid(rows: Vec<Vec<Matrix<Q>>>) -> BlockMatrix<Q> {
        BlockMatrix::from_blocks(rows).unwrap()
    }

    /// The three reference pencils for the cubic Chebyshev polynomial.
    fn table(p: &MatrixPolynomial<Q>, which: usize) -> (BlockMatrix<Q>, BlockMatrix<Q>) {
        let c = |i: usize| p.coeff(i);
        let z = Matrix::zeros(2, 2);
        let two = Q::from(2);
        let s = |m: Matrix<Q>, f: i64| m.scale(&Q::from(f));
        match which {
            1 => (
                grid(vec![
                    vec![c(3).scale(&two), z.clone(), z.clone()],
                    vec![z.clone(), s(&c(3) - &c(1), 2), s(c(0), -2)],
                    vec![z.clone(), s(c(0), -2), &c(3) - &c(1)],
                ]),
                grid(vec![
                    vec![c(2), &c(1) - &c(3), c(0)],
                    vec![&c(1) - &c(3), s(c(0), 2), &c(1) - &c(3)],
                    vec![c(0), &c(1) - &c(3), c(0)],
                ]),
            ),
            2 => (
                grid(vec![
                    vec![z.clone(), s(c(3), 2), z.clone()],
                    vec![s(c(3), 2), s(c(2), 2), s(c(3), 2)],
                    vec![z.clone(), s(c(3), 2), &c(2) - &c(0)],
                ]),
                grid(vec![
                    vec![-&c(3), z.clone(), -&c(3)],
                    vec![z.clone(), &c(1) - &s(c(3), 3), &c(0) - &c(2)],
                    vec![-&c(3), &c(0) - &c(2), -&c(3)],
                ]),
            ),
            _ => (
                grid(vec![
                    vec![z.clone(), z.clone(), s(c(3), 2)],
                    vec![z.clone(), s(c(3), 4), s(c(2), 2)],
                    vec![s(c(3), 2), s(c(2), 2), &c(1) + &c(3)],
                ]),
                grid(vec![
                    vec![z.clone(), s(c(3), -2), z.clone()],
                    vec![s(c(3), -2), s(c(2), -2), s(c(3), -2)],
                    vec![z.clone(), s(c(3), -2), &c(0) - &c(2)],
                ]),
            ),
        }
    }

    #[test]
    fn chebyshev_cubic_pencils() {
        let p = cheb_cubic(5);
        for which in 1..=3 {
            let v = Ansatz::unit(Basis::ChebyshevT, 3, which);
            let (x, y) = table(&p, which);
            let l = dl_pencil(&p, &v).unwrap();
            assert_eq!(l.x, x, "X for e_{which}");
            assert_eq!(l.y, y, "Y for e_{which}");
            assert_eq!(dl_pencil_bezout(&p, &v).unwrap(), l);
            assert_eq!(recover_ansatz(&l, &p).unwrap(), Recovery::Member(v));
        }
    }

    #[test]
    fn monomial_quadratic() {
        let p = Sampler::new(2).matrix_polynomial::<Q>(Basis::Monomial, 2, 2);
        let l = dl_pencil(&p, &Ansatz::unit(Basis::Monomial, 2, 1)).unwrap();
        let z = Matrix::zeros(2, 2);
        assert_eq!(l.x, grid(vec![vec![p.coeff(2), z.clone()], vec![z.clone(), -&p.coeff(0)]]));
        assert_eq!(l.y, grid(vec![vec![p.coeff(1), p.coeff(0)], vec![p.coeff(0), z]]));
    }

    #[test]
    fn scalar_linear() {
        let p = MatrixPolynomial::scalar(Basis::Monomial, &[Q::from(-7), Q::from(1)], 1).unwrap();
        let v = Ansatz::new(Basis::Monomial, vec![Q::from(1)]);
        for l in [dl_pencil(&p, &v).unwrap(), dl_pencil_bezout(&p, &v).unwrap()] {
            assert_eq!(l.x.matrix(), &Matrix::from_i64(&[&[1]]));
            assert_eq!(l.y.matrix(), &Matrix::from_i64(&[&[-7]]));
        }
    }

    #[test]
    fn input_errors() {
        let p = cheb_cubic(1);
        assert_eq!(
            dl_pencil(&p, &Ansatz::new(Basis::ChebyshevT, vec![Q::from(1)])),
            Err(Error::AnsatzLength { expected: 3, got: 1 })
        );
        let p0 = MatrixPolynomial::<Q>::zero(Basis::Monomial, 2, 0).unwrap();
        assert_eq!(dl_pencil(&p0, &Ansatz::new(Basis::Monomial, vec![])), Err(Error::ZeroDegree));
        let zero = Ansatz::new(Basis::ChebyshevT, vec![Q::from(0); 3]);
        assert_eq!(exclusion_check(&p, &zero), Err(Error::ZeroAnsatz));
    }

    #[test]
    fn recovery_zero_and_rejection() {
        let p = cheb_cubic(8);
        let z = BlockMatrix::zeros(3, 3, 2);
        let zero = Pencil::new(z.clone(), z, Basis::ChebyshevT).unwrap();
        match recover_ansatz(&zero, &p).unwrap() {
            Recovery::Member(v) => assert!(v.is_zero()),
            other => panic!("{other:?}"),
        }
        let mut l = dl_pencil(&p, &Ansatz::unit(Basis::ChebyshevT, 3, 2)).unwrap();
        l.y.add_block(2, 1, &Matrix::identity(2));
        assert!(matches!(recover_ansatz(&l, &p).unwrap(), Recovery::Rejected(Rejection::NotInL1 { .. })));

        // The first companion form lies in L1(P) but not in L2(P).
        let p = Sampler::new(9).matrix_polynomial::<Q>(Basis::Monomial, 2, 2);
        let (i, z) = (Matrix::identity(2), Matrix::zeros(2, 2));
        let companion = Pencil::new(
            grid(vec![vec![p.coeff(2), z.clone()], vec![z.clone(), i.clone()]]),
            grid(vec![vec![p.coeff(1), p.coeff(0)], vec![-&i, z]]),
            Basis::Monomial,
        )
        .unwrap();
        assert_eq!(
            recover_ansatz(&companion, &p).unwrap(),
            Recovery::Rejected(Rejection::NotInL2 { block_row: 0 })
        );
    }

    #[test]
    fn exclusion_examples() {
        let p = cheb_cubic(4);
        let e3 = Ansatz::unit(Basis::ChebyshevT, 3, 3);
        assert_eq!(exclusion_check(&p, &e3).unwrap(), Exclusion::Linearization);

        let mut coeffs = p.coeffs().to_vec();
        coeffs[3] = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let singular_lead = MatrixPolynomial::new(Basis::ChebyshevT, coeffs).unwrap();
        let e2 = Ansatz::unit(Basis::ChebyshevT, 3, 2);
        assert_eq!(exclusion_check(&singular_lead, &e2).unwrap(), Exclusion::SharedInfiniteEigenvalue);
        assert_eq!(exclusion_check(&singular_lead, &Ansatz::unit(Basis::ChebyshevT, 3, 1)).unwrap(), Exclusion::Linearization);

        // det P(0) = det(P_0 − P_2) = 0 forces a shared root at 0 for v = T_1.
        let mut coeffs = p.coeffs().to_vec();
        coeffs[0] = &coeffs[2] + &Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let shared = MatrixPolynomial::new(Basis::ChebyshevT, coeffs).unwrap();
        assert_eq!(
            exclusion_check(&shared, &e2).unwrap(),
            Exclusion::SharedFiniteRoot(Poly::x())
        );
    }

    #[test]
    fn shared_root_by_construction() {
        let mut s = Sampler::new(17);
        let q = s.matrix_polynomial::<Q>(Basis::Monomial, 2, 1);
        let factor = MatrixPolynomial::new(
            Basis::Monomial,
            vec![Matrix::from_i64(&[&[-1, 0], &[0, 1]]), Matrix::from_i64(&[&[1, 0], &[0, 0]])],
        )
        .unwrap();
        let p = factor.try_mul(&q).unwrap();
        let v = Ansatz::new(Basis::Monomial, vec![Q::from(-1), Q::from(1)]);
        assert_eq!(exclusion_check(&p, &v).unwrap(), Exclusion::SharedFiniteRoot(Poly::from_i64(&[-1, 1])));
        let l = dl_pencil(&p, &v).unwrap();
        for lam in [3, -5, 11] {
            assert!(l.det_at(&Q::from(lam)).unwrap().is_zero());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn two_constructions_agree(seed in 0u64..100_000, n in 1usize..4, k in 1usize..5, cheb in any::<bool>()) {
            let basis = if cheb { Basis::ChebyshevT } else { Basis::Monomial };
            let mut s = Sampler::new(seed);
            let p = s.matrix_polynomial::<Q>(basis.clone(), n, k);
            let v = Ansatz::new(basis.clone(), s.vector(k));
            let a = dl_pencil(&p, &v).unwrap();
            prop_assert_eq!(&a, &dl_pencil_bezout(&p, &v).unwrap());
            prop_assert!(a.is_block_symmetric());
        }

        #[test]
        fn linear_in_the_ansatz(seed in 0u64..100_000, k in 1usize..4) {
            let basis = Basis::legendre(6).unwrap();
            let mut s = Sampler::new(seed);
            let p = s.matrix_polynomial::<Q>(basis.clone(), 2, k);
            let v1: Vec<Q> = s.vector(k);
            let v2: Vec<Q> = s.vector(k);
            let (a, b) = (s.rational(), s.rational());
            let mix: Vec<Q> = v1.iter().zip(&v2).map(|(x, y)| a.clone() * x.clone() + b.clone() * y.clone()).collect();
            let l = |v: Vec<Q>| dl_pencil(&p, &Ansatz::new(basis.clone(), v)).unwrap();
            let lhs = l(mix);
            let rhs = l(v1).scale(&a).try_add(&l(v2).scale(&b)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn recovery_inverts_construction(seed in 0u64..100_000, k in 1usize..4) {
            let mut s = Sampler::new(seed);
            let p = s.matrix_polynomial::<Q>(Basis::ChebyshevT, 2, k);
            let v = Ansatz::new(Basis::ChebyshevT, s.vector(k));
            let l = dl_pencil(&p, &v).unwrap();
            prop_assert_eq!(recover_ansatz(&l, &p).unwrap(), Recovery::Member(v));
        }
    }
}
