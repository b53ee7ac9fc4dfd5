//! Matrix polynomials, block matrices, bivariate matrix polynomials and the
//! map `φ` between block matrices and bivariate polynomials.

use std::fmt;

use crate::bases::Basis;
use crate::error::{Error, Result};
use crate::fields::{require_exact, Field};
use crate::matrix::Matrix;
use crate::poly::Poly;

fn mismatch(operation: &'static str, detail: impl Into<String>) -> Error {
    Error::DimensionMismatch {
        operation,
        detail: detail.into(),
    }
}

/// `P(λ) = Σ_{i=0}^{g} P_i φ_i(λ)` with `n × n` coefficients, `g` the grade.
#[derive(Clone, PartialEq, Debug)]
pub struct MatrixPolynomial<F> {
    n: usize,
    basis: Basis<F>,
    coeffs: Vec<Matrix<F>>,
}

impl<F: Field> MatrixPolynomial<F> {
    /// Coefficients are given in ascending order, `coeffs[i] = P_i`; the
    /// grade is `coeffs.len() − 1`.
    pub fn new(basis: Basis<F>, coeffs: Vec<Matrix<F>>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(mismatch("MatrixPolynomial::new", "no coefficients"));
        };
        let n = first.rows();
        if n == 0 {
            return Err(mismatch("MatrixPolynomial::new", "empty coefficient matrices"));
        }
        for (i, c) in coeffs.iter().enumerate() {
            if c.rows() != n || c.cols() != n {
                return Err(mismatch(
                    "MatrixPolynomial::new",
                    format!("P_{i} is {}x{}, expected {n}x{n}", c.rows(), c.cols()),
                ));
            }
        }
        basis.validate(coeffs.len() - 1)?;
        Ok(MatrixPolynomial { n, basis, coeffs })
    }

    pub fn zero(basis: Basis<F>, n: usize, grade: usize) -> Result<Self> {
        Self::new(basis, vec![Matrix::zeros(n, n); grade + 1])
    }

    /// `p(λ)·I_n` for ascending basis coefficients of `p`.
    pub fn scalar(basis: Basis<F>, coeffs: &[F], n: usize) -> Result<Self> {
        let coeffs = if coeffs.is_empty() { vec![F::zero()] } else { coeffs.to_vec() };
        Self::new(basis, coeffs.into_iter().map(|c| Matrix::scalar(n, c)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grade(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Actual degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn basis(&self) -> &Basis<F> {
        &self.basis
    }

    pub fn coeffs(&self) -> &[Matrix<F>] {
        &self.coeffs
    }

    /// `P_i`, zero beyond the grade.
    pub fn coeff(&self, i: usize) -> Matrix<F> {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Matrix::zeros(self.n, self.n))
    }

    /// Coefficient of the grade term.
    pub fn leading(&self) -> &Matrix<F> {
        self.coeffs.last().expect("at least one coefficient")
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Same polynomial with a different declared grade.
    pub fn with_grade(&self, grade: usize) -> Result<Self> {
        if let Some(d) = self.degree().filter(|&d| d > grade) {
            return Err(Error::GradeTooSmall { grade, degree: d });
        }
        let coeffs = (0..=grade).map(|i| self.coeff(i)).collect();
        Self::new(self.basis.clone(), coeffs)
    }

    /// The grade lowered to the actual degree (zero keeps grade 0).
    pub fn trimmed(&self) -> Self {
        self.with_grade(self.degree().unwrap_or(0)).expect("degree never exceeds itself")
    }

    pub fn eval(&self, lambda: &F) -> Result<Matrix<F>> {
        let phis = self.basis.eval_all(self.coeffs.len(), lambda)?;
        Ok(self.combine(&phis))
    }

    /// `P'(λ)` through the derivative recurrence of the basis.
    pub fn eval_derivative(&self, lambda: &F) -> Result<Matrix<F>> {
        let (_, der) = self.basis.eval_with_derivative(self.coeffs.len(), lambda)?;
        Ok(self.combine(&der))
    }

    fn combine(&self, weights: &[F]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.n, self.n);
        for (c, w) in self.coeffs.iter().zip(weights) {
            if !w.is_zero() {
                out = &out + &c.scale(w);
            }
        }
        out
    }

    /// Apply `f` to each coefficient matrix.
    pub fn map_coeffs(&self, f: impl Fn(&Matrix<F>) -> Matrix<F>) -> Self {
        MatrixPolynomial {
            n: self.n,
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Coefficientwise transpose, `Pᵀ(λ)`.
    pub fn transpose(&self) -> Self {
        self.map_coeffs(Matrix::transpose)
    }

    /// Coefficientwise conjugate transpose, `P*(λ)` for real `λ`.
    pub fn adjoint(&self) -> Self {
        self.map_coeffs(Matrix::adjoint)
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map_coeffs(|c| c.scale(s))
    }

    /// Re-express in the monomial basis (same grade).
    pub fn to_monomial(&self) -> Result<Self> {
        if self.basis.is_monomial() {
            return Ok(self.clone());
        }
        let coeffs = convert_sequence(&self.basis, &self.coeffs, true)?;
        Self::new(Basis::Monomial, coeffs)
    }

    /// Re-express a polynomial in `basis` (same grade).
    pub fn in_basis(&self, basis: &Basis<F>) -> Result<Self> {
        if &self.basis == basis {
            return Ok(self.clone());
        }
        let mono = self.to_monomial()?;
        let coeffs = convert_sequence(basis, &mono.coeffs, false)?;
        Self::new(basis.clone(), coeffs)
    }

    fn check_compatible(&self, other: &Self, operation: &'static str) -> Result<()> {
        if self.n != other.n {
            return Err(mismatch(operation, format!("sizes {} and {}", self.n, other.n)));
        }
        if self.basis != other.basis {
            return Err(Error::InvalidBasis(format!("{operation} needs a common basis")));
        }
        Ok(())
    }

    /// Sum at grade `max(grade)`.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other, "matrix polynomial sum")?;
        let g = self.grade().max(other.grade());
        let coeffs = (0..=g).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Self::new(self.basis.clone(), coeffs)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-F::one()))
    }

    /// Product at grade `grade(self) + grade(other)`, in the common basis.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other, "matrix polynomial product")?;
        let a = self.to_monomial()?;
        let b = other.to_monomial()?;
        let g = self.grade() + other.grade();
        let mut coeffs = vec![Matrix::zeros(self.n, self.n); g + 1];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(ai * bj);
            }
        }
        MatrixPolynomial::new(Basis::Monomial, coeffs)?.in_basis(&self.basis)
    }

    /// Multiply by the scalar polynomial `x`; grade grows by one.
    pub fn mul_x(&self) -> Result<Self> {
        let g = self.grade();
        let mut coeffs = vec![Matrix::zeros(self.n, self.n); g + 2];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, m) in self.basis.xphi(j)?.iter().enumerate() {
                if !m.is_zero() {
                    coeffs[i] = &coeffs[i] + &c.scale(m);
                }
            }
        }
        Self::new(self.basis.clone(), coeffs)
    }

    /// `det P(λ)` as a scalar polynomial in monomial coefficients.
    ///
    /// Interpolates at `n·g + 1` field points when the field has that many
    /// elements, otherwise runs fraction-free elimination over `F[λ]`.
    pub fn scalar_det(&self) -> Result<Poly<F>> {
        require_exact::<F>("scalar_det")?;
        let points = self.n * self.grade() + 1;
        let p = F::characteristic();
        if p == 0 || p >= points as u64 {
            let xs: Vec<F> = (0..points as i64).map(F::from_i64).collect();
            let ys = xs
                .iter()
                .map(|x| self.eval(x)?.determinant())
                .collect::<Result<Vec<_>>>()?;
            return Poly::interpolate(&xs, &ys);
        }
        let mono = self.to_monomial()?;
        let entries = (0..self.n)
            .map(|r| {
                (0..self.n)
                    .map(|c| Poly::new(mono.coeffs.iter().map(|m| m[(r, c)].clone()).collect()))
                    .collect()
            })
            .collect();
        polynomial_bareiss(entries)
    }

    /// Regular iff `det P(λ)` is not identically zero.
    pub fn is_regular(&self) -> Result<bool> {
        Ok(!self.scalar_det()?.is_zero())
    }
}

/// Change coefficient sequences entrywise between `basis` and monomials.
fn convert_sequence<F: Field>(
    basis: &Basis<F>,
    seq: &[Matrix<F>],
    to_monomial: bool,
) -> Result<Vec<Matrix<F>>> {
    let (rows, cols) = (seq[0].rows(), seq[0].cols());
    let mut out = vec![Matrix::zeros(rows, cols); seq.len()];
    for r in 0..rows {
        for c in 0..cols {
            let entry: Vec<F> = seq.iter().map(|m| m[(r, c)].clone()).collect();
            let conv = if to_monomial {
                basis.to_monomial(&entry)?
            } else {
                basis.from_monomial(&entry)?
            };
            for (m, v) in out.iter_mut().zip(conv) {
                m[(r, c)] = v;
            }
        }
    }
    Ok(out)
}

/// Fraction-free determinant over `F[λ]` with exact polynomial division.
fn polynomial_bareiss<F: Field>(mut a: Vec<Vec<Poly<F>>>) -> Result<Poly<F>> {
    let n = a.len();
    let mut sign = F::one();
    let mut prev = Poly::constant(F::one());
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(Poly::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                let (q, r) = num.div_rem(&prev)?;
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(a[n - 1][n - 1].scale(&sign))
}

/// A `k × h` grid of `n × n` blocks.
#[derive(Clone, PartialEq)]
pub struct BlockMatrix<F> {
    n: usize,
    k: usize,
    h: usize,
    m: Matrix<F>,
}

impl<F: Field> BlockMatrix<F> {
    pub fn zeros(k: usize, h: usize, n: usize) -> Self {
        BlockMatrix {
            n,
            k,
            h,
            m: Matrix::zeros(n * k, n * h),
        }
    }

    pub fn identity(k: usize, n: usize) -> Self {
        BlockMatrix {
            n,
            k,
            h: k,
            m: Matrix::identity(n * k),
        }
    }

    pub fn from_matrix(m: Matrix<F>, n: usize) -> Result<Self> {
        if n == 0 || !m.rows().is_multiple_of(n) || !m.cols().is_multiple_of(n) {
            return Err(mismatch(
                "BlockMatrix::from_matrix",
                format!("{}x{} is not a grid of {n}x{n} blocks", m.rows(), m.cols()),
            ));
        }
        Ok(BlockMatrix {
            n,
            k: m.rows() / n,
            h: m.cols() / n,
            m,
        })
    }

    pub fn from_blocks(blocks: Vec<Vec<Matrix<F>>>) -> Result<Self> {
        let k = blocks.len();
        let h = blocks.first().map_or(0, Vec::len);
        let n = blocks.first().and_then(|r| r.first()).map_or(0, Matrix::rows);
        let mut out = BlockMatrix::zeros(k, h, n);
        for (i, row) in blocks.iter().enumerate() {
            if row.len() != h {
                return Err(mismatch("BlockMatrix::from_blocks", "ragged block rows"));
            }
            for (j, b) in row.iter().enumerate() {
                if b.rows() != n || b.cols() != n {
                    return Err(mismatch(
                        "BlockMatrix::from_blocks",
                        format!("block ({i},{j}) is {}x{}, expected {n}x{n}", b.rows(), b.cols()),
                    ));
                }
                out.set_block(i, j, b);
            }
        }
        Ok(out)
    }

    /// `v ⊗ [B_1, …, B_h]`: block `(i, j)` is `v_i B_j`.
    pub fn outer(v: &[F], blocks: &[Matrix<F>]) -> Self {
        let n = blocks[0].rows();
        let mut out = BlockMatrix::zeros(v.len(), blocks.len(), n);
        for (i, vi) in v.iter().enumerate() {
            for (j, b) in blocks.iter().enumerate() {
                out.set_block(i, j, &b.scale(vi));
            }
        }
        out
    }

    pub fn block_rows(&self) -> usize {
        self.k
    }

    pub fn block_cols(&self) -> usize {
        self.h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix<F> {
        self.m
    }

    pub fn block(&self, i: usize, j: usize) -> Matrix<F> {
        self.m.submatrix(i * self.n, j * self.n, self.n, self.n)
    }

    pub fn set_block(&mut self, i: usize, j: usize, b: &Matrix<F>) {
        self.m.set_submatrix(i * self.n, j * self.n, b);
    }

    pub fn add_block(&mut self, i: usize, j: usize, b: &Matrix<F>) {
        self.m.add_submatrix(i * self.n, j * self.n, b);
    }

    /// Sub-grid of `rows × cols` blocks starting at block `(i0, j0)`.
    pub fn sub_blocks(&self, i0: usize, j0: usize, rows: usize, cols: usize) -> Self {
        BlockMatrix {
            n: self.n,
            k: rows,
            h: cols,
            m: self
                .m
                .submatrix(i0 * self.n, j0 * self.n, rows * self.n, cols * self.n),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    fn rewrap(&self, m: Matrix<F>) -> Self {
        BlockMatrix::from_matrix(m, self.n).expect("block size preserved")
    }

    /// `X^B`: block `(i, j)` moves to `(j, i)` unchanged.
    pub fn block_transpose(&self) -> Self {
        let mut out = BlockMatrix::zeros(self.h, self.k, self.n);
        for i in 0..self.k {
            for j in 0..self.h {
                out.set_block(j, i, &self.block(i, j));
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        self.rewrap(self.m.transpose())
    }

    pub fn adjoint(&self) -> Self {
        self.rewrap(self.m.adjoint())
    }

    pub fn is_block_symmetric(&self) -> bool {
        *self == self.block_transpose()
    }

    pub fn scale(&self, s: &F) -> Self {
        self.rewrap(self.m.scale(s))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_block_size(other)?;
        Ok(self.rewrap(self.m.try_add(&other.m)?))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_block_size(other)?;
        Ok(self.rewrap(self.m.try_sub(&other.m)?))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_block_size(other)?;
        Ok(self.rewrap(self.m.try_mul(&other.m)?))
    }

    /// Product with a plain matrix whose dimensions are multiples of `n`.
    pub fn mul_matrix(&self, other: &Matrix<F>) -> Result<Self> {
        BlockMatrix::from_matrix(self.m.try_mul(other)?, self.n)
    }

    /// Product `other · self` with a plain matrix.
    pub fn left_mul_matrix(&self, other: &Matrix<F>) -> Result<Self> {
        BlockMatrix::from_matrix(other.try_mul(&self.m)?, self.n)
    }

    fn check_block_size(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(mismatch(
                "block matrix arithmetic",
                format!("block sizes {} and {}", self.n, other.n),
            ));
        }
        Ok(())
    }

    /// First block `(i, j)` at which `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.k != other.k || self.h != other.h || self.n != other.n {
            return Some((0, 0));
        }
        (0..self.k)
            .flat_map(|i| (0..self.h).map(move |j| (i, j)))
            .find(|&(i, j)| self.block(i, j) != other.block(i, j))
    }
}

impl<F: Field> fmt::Display for BlockMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.m.to_rows();
        let strings: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = strings.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, r) in strings.iter().enumerate() {
            if i > 0 && i % self.n == 0 {
                let dashes = self.h * self.n * (width + 1) + 2 * (self.h.saturating_sub(1));
                writeln!(f, "{}", "-".repeat(dashes))?;
            }
            for (j, s) in r.iter().enumerate() {
                if j > 0 && j % self.n == 0 {
                    write!(f, " |")?;
                }
                write!(f, " {s:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for BlockMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlockMatrix {}x{} of {}x{}:\n{self}", self.k, self.h, self.n, self.n)
    }
}

/// `F(x, y) = Σ_{i ≤ g_y} Σ_{j ≤ g_x} F_{ij} φ_i(y) φ_j(x)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Bivariate<F> {
    n: usize,
    gx: usize,
    gy: usize,
    basis: Basis<F>,
    /// Row-major over `(i, j)`, `i` the `y` index.
    coef: Vec<Matrix<F>>,
}

impl<F: Field> Bivariate<F> {
    pub fn zero(basis: Basis<F>, n: usize, gx: usize, gy: usize) -> Self {
        Bivariate {
            n,
            gx,
            gy,
            basis,
            coef: vec![Matrix::zeros(n, n); (gx + 1) * (gy + 1)],
        }
    }

    /// `A(y)·B(x)`, grades taken from the two factors.
    pub fn product(a_in_y: &MatrixPolynomial<F>, b_in_x: &MatrixPolynomial<F>) -> Result<Self> {
        a_in_y.check_compatible(b_in_x, "bivariate product")?;
        let mut out = Bivariate::zero(
            a_in_y.basis.clone(),
            a_in_y.n,
            b_in_x.grade(),
            a_in_y.grade(),
        );
        for (i, ai) in a_in_y.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b_in_x.coeffs.iter().enumerate() {
                out.set(i, j, ai * bj);
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grade_x(&self) -> usize {
        self.gx
    }

    pub fn grade_y(&self) -> usize {
        self.gy
    }

    pub fn basis(&self) -> &Basis<F> {
        &self.basis
    }

    /// Coefficient of `φ_i(y)φ_j(x)`.
    pub fn get(&self, i: usize, j: usize) -> &Matrix<F> {
        &self.coef[i * (self.gx + 1) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, m: Matrix<F>) {
        let gx = self.gx;
        self.coef[i * (gx + 1) + j] = m;
    }

    fn add_to(&mut self, i: usize, j: usize, m: &Matrix<F>) {
        let gx = self.gx;
        let slot = &mut self.coef[i * (gx + 1) + j];
        *slot = &*slot + m;
    }

    pub fn is_zero(&self) -> bool {
        self.coef.iter().all(Matrix::is_zero)
    }

    pub fn eval(&self, x: &F, y: &F) -> Result<Matrix<F>> {
        let px = self.basis.eval_all(self.gx + 1, x)?;
        let py = self.basis.eval_all(self.gy + 1, y)?;
        let mut out = Matrix::zeros(self.n, self.n);
        for (i, pyi) in py.iter().enumerate() {
            for (j, pxj) in px.iter().enumerate() {
                let w = pyi.clone() * pxj.clone();
                if !w.is_zero() {
                    out = &out + &self.get(i, j).scale(&w);
                }
            }
        }
        Ok(out)
    }

    /// `F(λ, y)` as a matrix polynomial in `y`.
    pub fn eval_x(&self, lambda: &F) -> Result<MatrixPolynomial<F>> {
        let px = self.basis.eval_all(self.gx + 1, lambda)?;
        let coeffs = (0..=self.gy)
            .map(|i| {
                px.iter().enumerate().fold(Matrix::zeros(self.n, self.n), |acc, (j, w)| {
                    &acc + &self.get(i, j).scale(w)
                })
            })
            .collect();
        MatrixPolynomial::new(self.basis.clone(), coeffs)
    }

    /// `F(y, x)`.
    pub fn swap(&self) -> Self {
        let mut out = Bivariate::zero(self.basis.clone(), self.n, self.gy, self.gx);
        for i in 0..=self.gy {
            for j in 0..=self.gx {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Matrix<F>) -> Matrix<F>) -> Self {
        Bivariate {
            coef: self.coef.iter().map(f).collect(),
            ..self.clone()
        }
    }

    /// `F(x, y)·x` by the basis recurrence, `x`-grade grows by one.
    pub fn mul_x(&self) -> Result<Self> {
        let mut out = Bivariate::zero(self.basis.clone(), self.n, self.gx + 1, self.gy);
        for j in 0..=self.gx {
            let row = self.basis.xphi(j)?;
            for i in 0..=self.gy {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                for (l, m) in row.iter().enumerate() {
                    if !m.is_zero() {
                        out.add_to(i, l, &c.scale(m));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `y·F(x, y)`.
    pub fn mul_y(&self) -> Result<Self> {
        Ok(self.swap().mul_x()?.swap())
    }

    /// Same polynomial at other grades; fails if a nonzero term would drop.
    pub fn regrade(&self, gx: usize, gy: usize) -> Result<Self> {
        let mut out = Bivariate::zero(self.basis.clone(), self.n, gx, gy);
        for i in 0..=self.gy {
            for j in 0..=self.gx {
                let c = self.get(i, j);
                if i <= gy && j <= gx {
                    out.set(i, j, c.clone());
                } else if !c.is_zero() {
                    return Err(Error::GradeTooSmall {
                        grade: if i > gy { gy } else { gx },
                        degree: if i > gy { i } else { j },
                    });
                }
            }
        }
        Ok(out)
    }

    /// Sum, at the larger of each pair of grades.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.basis != other.basis {
            return Err(mismatch("bivariate sum", "different sizes or bases"));
        }
        let gx = self.gx.max(other.gx);
        let gy = self.gy.max(other.gy);
        let mut out = self.regrade(gx, gy)?;
        for i in 0..=other.gy {
            for j in 0..=other.gx {
                out.add_to(i, j, other.get(i, j));
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.map_coeffs(|m| -m))
    }

    /// The same polynomial expressed in `basis` in both variables.
    pub fn in_basis(&self, basis: &Basis<F>) -> Result<Self> {
        if &self.basis == basis {
            return Ok(self.clone());
        }
        let mut out = Bivariate::zero(basis.clone(), self.n, self.gx, self.gy);
        // x direction, row by row.
        let mut rows: Vec<Vec<Matrix<F>>> = Vec::with_capacity(self.gy + 1);
        for i in 0..=self.gy {
            let seq: Vec<Matrix<F>> = (0..=self.gx).map(|j| self.get(i, j).clone()).collect();
            let mono = convert_sequence(&self.basis, &seq, true)?;
            rows.push(convert_sequence(basis, &mono, false)?);
        }
        // y direction, column by column.
        for j in 0..=self.gx {
            let seq: Vec<Matrix<F>> = rows.iter().map(|r| r[j].clone()).collect();
            let mono = convert_sequence(&self.basis, &seq, true)?;
            for (i, m) in convert_sequence(basis, &mono, false)?.into_iter().enumerate() {
                out.set(i, j, m);
            }
        }
        Ok(out)
    }
}

/// `φ(X)`: block `X_{r,c}` (0-indexed) becomes the coefficient of
/// `φ_{k−1−r}(y)·φ_{h−1−c}(x)`.
pub fn phi_map<F: Field>(x: &BlockMatrix<F>, basis: &Basis<F>) -> Bivariate<F> {
    let (k, h) = (x.k, x.h);
    let mut out = Bivariate::zero(basis.clone(), x.n, h - 1, k - 1);
    for r in 0..k {
        for c in 0..h {
            out.set(k - 1 - r, h - 1 - c, x.block(r, c));
        }
    }
    out
}

/// Inverse of [`phi_map`].
pub fn phi_unmap<F: Field>(f: &Bivariate<F>) -> BlockMatrix<F> {
    let (k, h) = (f.gy + 1, f.gx + 1);
    let mut out = BlockMatrix::zeros(k, h, f.n);
    for r in 0..k {
        for c in 0..h {
            out.set_block(r, c, f.get(k - 1 - r, h - 1 - c));
        }
    }
    out
}

/// `Λ(λ) ⊗ I_n`, an `nk × n` matrix.
pub fn lambda_kron<F: Field>(basis: &Basis<F>, k: usize, n: usize, lambda: &F) -> Result<Matrix<F>> {
    let lv = basis.lambda_vector(k, lambda)?;
    let mut out = Matrix::zeros(n * k, n);
    for (p, v) in lv.iter().enumerate() {
        for d in 0..n {
            out[(p * n + d, d)] = v.clone();
        }
    }
    Ok(out)
}

/// `X·(Λ(λ) ⊗ I_n)`: the stacked coefficients of `F(λ, y)`.
pub fn eval_right<F: Field>(x: &BlockMatrix<F>, basis: &Basis<F>, lambda: &F) -> Result<Matrix<F>> {
    x.matrix().try_mul(&lambda_kron(basis, x.h, x.n, lambda)?)
}

/// Column shift sum `X ⊞→ Y = X·M + [0  Y]`.
pub fn col_shift_sum<F: Field>(
    x: &BlockMatrix<F>,
    y: &BlockMatrix<F>,
    basis: &Basis<F>,
) -> Result<BlockMatrix<F>> {
    if x.k != y.k || x.h != y.h || x.n != y.n {
        return Err(mismatch(
            "column shift sum",
            format!("{}x{} and {}x{} block grids", x.k, x.h, y.k, y.h),
        ));
    }
    let m = basis.mult_matrix(x.h, x.n)?;
    let mut z = x.mul_matrix(&m)?;
    for i in 0..y.k {
        for j in 0..y.h {
            z.add_block(i, j + 1, &y.block(i, j));
        }
    }
    Ok(z)
}

/// Row shift sum `X ⊞↓ Y = M^B·X + [0; Y]`.
pub fn row_shift_sum<F: Field>(
    x: &BlockMatrix<F>,
    y: &BlockMatrix<F>,
    basis: &Basis<F>,
) -> Result<BlockMatrix<F>> {
    if x.k != y.k || x.h != y.h || x.n != y.n {
        return Err(mismatch(
            "row shift sum",
            format!("{}x{} and {}x{} block grids", x.k, x.h, y.k, y.h),
        ));
    }
    // Blocks of M are multiples of I, so M^B = Mᵀ.
    let mt = basis.mult_matrix(x.k, x.n)?.transpose();
    let mut z = x.left_mul_matrix(&mt)?;
    for i in 0..y.k {
        for j in 0..y.h {
            z.add_block(i + 1, j, &y.block(i, j));
        }
    }
    Ok(z)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// `Σ = diag(…, I, −I, I)` with `k` blocks.
pub fn sigma<F: Field>(k: usize, n: usize) -> Matrix<F> {
    let mut s = Matrix::zeros(n * k, n * k);
    for p in 0..k {
        let v = if (k - 1 - p).is_multiple_of(2) { F::one() } else { -F::one() };
        for d in 0..n {
            s[(p * n + d, p * n + d)] = v.clone();
        }
    }
    s
}

/// Block anti-diagonal flip `R` with `k` blocks.
pub fn flip<F: Field>(k: usize, n: usize) -> Matrix<F> {
    let mut r = Matrix::zeros(n * k, n * k);
    for p in 0..k {
        for d in 0..n {
            r[(p * n + d, (k - 1 - p) * n + d)] = F::one();
        }
    }
    r
}

/// `ΣX` or `XΣ`; needs an alternating basis.
pub fn apply_sigma<F: Field>(x: &BlockMatrix<F>, basis: &Basis<F>, side: Side) -> Result<BlockMatrix<F>> {
    let size = if side == Side::Left { x.k } else { x.h };
    if !basis.is_alternating(size) {
        return Err(Error::InvalidBasis("Σ needs an alternating basis".into()));
    }
    let s = sigma(size, x.n);
    match side {
        Side::Left => x.left_mul_matrix(&s),
        Side::Right => x.mul_matrix(&s),
    }
}

/// `RX` or `XR`; needs the monomial basis.
pub fn apply_flip<F: Field>(x: &BlockMatrix<F>, basis: &Basis<F>, side: Side) -> Result<BlockMatrix<F>> {
    if !basis.is_monomial() {
        return Err(Error::NonMonomialBasis);
    }
    match side {
        Side::Left => x.left_mul_matrix(&flip(x.k, x.n)),
        Side::Right => x.mul_matrix(&flip(x.h, x.n)),
    }
}

/// The pencil `L(λ) = λX + Y`.
#[derive(Clone, PartialEq, Debug)]
pub struct Pencil<F: Field> {
    pub x: BlockMatrix<F>,
    pub y: BlockMatrix<F>,
    pub basis: Basis<F>,
}

impl<F: Field> Pencil<F> {
    pub fn new(x: BlockMatrix<F>, y: BlockMatrix<F>, basis: Basis<F>) -> Result<Self> {
        if x.k != x.h || y.k != y.h || x.k != y.k || x.n != y.n {
            return Err(mismatch(
                "Pencil::new",
                format!(
                    "X is {}x{} blocks of {}, Y is {}x{} blocks of {}",
                    x.k, x.h, x.n, y.k, y.h, y.n
                ),
            ));
        }
        Ok(Pencil { x, y, basis })
    }

    pub fn k(&self) -> usize {
        self.x.k
    }

    pub fn n(&self) -> usize {
        self.x.n
    }

    pub fn eval(&self, lambda: &F) -> Matrix<F> {
        &self.x.matrix().scale(lambda) + self.y.matrix()
    }

    pub fn det_at(&self, lambda: &F) -> Result<F> {
        self.eval(lambda).determinant()
    }

    pub fn is_block_symmetric(&self) -> bool {
        self.x.is_block_symmetric() && self.y.is_block_symmetric()
    }

    /// The pencil as a degree-one matrix polynomial in the monomial basis.
    pub fn as_matrix_polynomial(&self) -> Result<MatrixPolynomial<F>> {
        MatrixPolynomial::new(
            Basis::Monomial,
            vec![self.y.matrix().clone(), self.x.matrix().clone()],
        )
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Pencil::new(self.x.try_add(&other.x)?, self.y.try_add(&other.y)?, self.basis.clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Pencil {
            x: self.x.scale(s),
            y: self.y.scale(s),
            basis: self.basis.clone(),
        }
    }
}
