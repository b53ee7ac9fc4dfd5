//! Bézout matrices: scalar, one-sided and Lerer–Tismenetsky.
//!
//! Every construction forms a bivariate numerator that vanishes on the
//! diagonal `x = y`, divides it by `x − y` and reads the block matrix off
//! through `φ⁻¹`.

use crate::bases::Basis;
use crate::blockpoly::{phi_map, phi_unmap, Bivariate, BlockMatrix, MatrixPolynomial};
use crate::error::{Error, Result};
use crate::fields::Field;
use crate::matrix::Matrix;

/// A Bézout block matrix together with the Bézoutian it encodes.
#[derive(Clone, PartialEq, Debug)]
pub struct BezoutResult<F: Field> {
    /// `ℓ × k` blocks of size `n`.
    pub matrix: BlockMatrix<F>,
    /// `φ(matrix)`, in the basis of the inputs.
    pub bezoutian: Bivariate<F>,
    /// Grade `ℓ` of the multipliers (rows).
    pub grade_rows: usize,
    /// Grade `k` of the polynomials (columns).
    pub grade_cols: usize,
}

impl<F: Field> BezoutResult<F> {
    fn from_bezoutian(bezoutian: Bivariate<F>) -> Self {
        let matrix = phi_unmap(&bezoutian);
        BezoutResult {
            grade_rows: matrix.block_rows(),
            grade_cols: matrix.block_cols(),
            matrix,
            bezoutian,
        }
    }

    /// The underlying scalar matrix (the Bézout matrix itself when `n = 1`).
    pub fn scalar_matrix(&self) -> &Matrix<F> {
        self.matrix.matrix()
    }

    pub fn kernel_dim(&self) -> Result<usize> {
        let m = self.matrix.matrix();
        Ok(m.cols() - m.rank()?)
    }

    /// Exact check that `φ(matrix)` reproduces the stored Bézoutian.
    pub fn is_consistent(&self) -> bool {
        phi_map(&self.matrix, self.bezoutian.basis()) == self.bezoutian
    }
}

/// `F` with `F(x, y)·(x − y) = N(x, y)`.
///
/// The quotient has grades one lower than `N` in each variable. Fails with
/// [`Error::NotDivisibleByDiagonal`] unless `N(x, x) = 0` identically.
pub fn divide_x_minus_y<F: Field>(numerator: &Bivariate<F>) -> Result<Bivariate<F>> {
    let basis = numerator.basis().clone();
    let n = numerator.n();
    let (gx, gy) = (numerator.grade_x(), numerator.grade_y());
    if numerator.is_zero() {
        return Ok(Bivariate::zero(basis, n, gx.saturating_sub(1), gy.saturating_sub(1)));
    }
    if gx == 0 || gy == 0 {
        return Err(Error::NotDivisibleByDiagonal);
    }
    let mono = numerator.in_basis(&Basis::Monomial)?;

    // N = Σ_j c_j(y) x^j with c_j ∈ F[y]; synthetic division by x − y over
    // F[y]. Intermediate quotients reach y-degree gy + gx − 1.
    let ylen = gy + gx;
    let zero = Matrix::zeros(n, n);
    let column = |j: usize| -> Vec<Matrix<F>> {
        (0..ylen)
            .map(|i| if i <= gy { mono.get(i, j).clone() } else { zero.clone() })
            .collect()
    };
    let times_y = |p: &[Matrix<F>]| -> Vec<Matrix<F>> {
        let mut out = vec![zero.clone(); ylen + 1];
        for (i, c) in p.iter().enumerate() {
            out[i + 1] = c.clone();
        }
        out
    };
    let mut q: Vec<Vec<Matrix<F>>> = vec![Vec::new(); gx];
    q[gx - 1] = column(gx);
    for j in (1..gx).rev() {
        let shifted = times_y(&q[j]);
        q[j - 1] = column(j)
            .iter()
            .zip(&shifted)
            .map(|(a, b)| a + b)
            .collect();
        if !shifted[ylen].is_zero() {
            return Err(Error::TheoremViolation("synthetic division overflow".into()));
        }
    }
    let rem = times_y(&q[0]);
    let c0 = column(0);
    if rem.iter().zip(c0.iter().chain(std::iter::once(&zero))).any(|(a, b)| !(a + b).is_zero()) {
        return Err(Error::NotDivisibleByDiagonal);
    }

    let mut quotient = Bivariate::zero(Basis::Monomial, n, gx - 1, ylen - 1);
    for (j, qj) in q.iter().enumerate() {
        for (i, c) in qj.iter().enumerate() {
            quotient.set(i, j, c.clone());
        }
    }
    quotient.regrade(gx - 1, gy - 1)?.in_basis(&basis)
}

/// `A(x)·B(y)` with `A` on the left.
fn product_x_then_y<F: Field>(a_in_x: &MatrixPolynomial<F>, b_in_y: &MatrixPolynomial<F>) -> Bivariate<F> {
    let mut out = Bivariate::zero(a_in_x.basis().clone(), a_in_x.n(), a_in_x.grade(), b_in_y.grade());
    for (i, bi) in b_in_y.coeffs().iter().enumerate() {
        for (j, aj) in a_in_x.coeffs().iter().enumerate() {
            out.set(i, j, aj * bi);
        }
    }
    out
}

fn check_pair<F: Field>(a: &MatrixPolynomial<F>, b: &MatrixPolynomial<F>, op: &'static str) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            operation: op,
            detail: format!("sizes {} and {}", a.n(), b.n()),
        });
    }
    if a.basis() != b.basis() {
        return Err(Error::InvalidBasis(format!("{op} needs a common basis")));
    }
    Ok(())
}

/// Both arguments brought to their common (maximal) grade.
fn common_grade<F: Field>(
    a: &MatrixPolynomial<F>,
    b: &MatrixPolynomial<F>,
) -> Result<(MatrixPolynomial<F>, MatrixPolynomial<F>)> {
    let g = a.grade().max(b.grade());
    Ok((a.with_grade(g)?, b.with_grade(g)?))
}

/// The Lerer–Tismenetsky Bézout matrix `B_{M2,M1}(P1, P2)` of the quotient
/// `(M2(y)P2(x) − M1(y)P1(x)) / (x − y)`.
///
/// `P1, P2` are taken at their common grade `k` and `M1, M2` at theirs,
/// `ℓ`; the result has `ℓ × k` blocks. The identity `M1·P1 = M2·P2` is
/// checked exactly.
pub fn bezout_lt<F: Field>(
    p1: &MatrixPolynomial<F>,
    p2: &MatrixPolynomial<F>,
    m1: &MatrixPolynomial<F>,
    m2: &MatrixPolynomial<F>,
) -> Result<BezoutResult<F>> {
    check_pair(p1, p2, "bezout_lt")?;
    check_pair(p1, m1, "bezout_lt")?;
    check_pair(m1, m2, "bezout_lt")?;
    let (p1, p2) = common_grade(p1, p2)?;
    let (m1, m2) = common_grade(m1, m2)?;
    if !m1.try_mul(&p1)?.try_sub(&m2.try_mul(&p2)?)?.is_zero() {
        return Err(Error::IncompatibleMultipliers);
    }
    let numerator = Bivariate::product(&m2, &p2)?.try_sub(&Bivariate::product(&m1, &p1)?)?;
    Ok(BezoutResult::from_bezoutian(divide_x_minus_y(&numerator)?))
}

/// `B(P1, P2)` for commuting arguments, with `M1 = P2` and `M2 = P1`.
pub fn bezout_commuting<F: Field>(
    p1: &MatrixPolynomial<F>,
    p2: &MatrixPolynomial<F>,
) -> Result<BezoutResult<F>> {
    check_pair(p1, p2, "bezout_commuting")?;
    let (p1, p2) = common_grade(p1, p2)?;
    if p1.try_mul(&p2)? != p2.try_mul(&p1)? {
        return Err(Error::NonCommuting);
    }
    bezout_lt(&p1, &p2, &p2, &p1)
}

/// Scalar Bézout matrix of `p1`, `p2` (ascending coefficients in `basis`)
/// at the declared grade `k`.
pub fn bezout_scalar<F: Field>(p1: &[F], p2: &[F], k: usize, basis: &Basis<F>) -> Result<BezoutResult<F>> {
    let a = MatrixPolynomial::scalar(basis.clone(), p1, 1)?.trimmed().with_grade(k)?;
    let b = MatrixPolynomial::scalar(basis.clone(), p2, 1)?.trimmed().with_grade(k)?;
    bezout_commuting(&a, &b)
}

/// `(P1(y)P2(x) − P1(x)P2(y)) / (x − y)`.
///
/// A naive matrix generalization whose singularity does not track shared
/// eigenpairs; kept to reproduce the counterexamples.
pub fn bezout_onesided<F: Field>(
    p1: &MatrixPolynomial<F>,
    p2: &MatrixPolynomial<F>,
) -> Result<BezoutResult<F>> {
    check_pair(p1, p2, "bezout_onesided")?;
    let (p1, p2) = common_grade(p1, p2)?;
    let numerator = Bivariate::product(&p1, &p2)?.try_sub(&product_x_then_y(&p1, &p2))?;
    Ok(BezoutResult::from_bezoutian(divide_x_minus_y(&numerator)?))
}
