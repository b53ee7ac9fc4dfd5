//! Companion matrices, matrix polynomial division and the `BDL(P, v)`
//! pencils.
//!
//! Everything here works in the monomial basis with an invertible leading
//! coefficient `P_k`. `BDL(P, v) = DL(P, 1)·v(C¹)` is computed three ways
//! (right multiplication by `v(C¹)`, left multiplication by `v(C²)`, and the
//! Lerer–Tismenetsky Bézoutian of the ansatz matrix polynomials `Q`, `S`)
//! and the routes are compared exactly.

use crate::bases::Basis;
use crate::bezout::bezout_lt;
use crate::blockpoly::{
    apply_flip, apply_sigma, col_shift_sum, phi_map, row_shift_sum, Bivariate, BlockMatrix,
    MatrixPolynomial, Pencil, Side,
};
use crate::dl::{dl_pencil, Ansatz};
use crate::error::{Error, Result};
use crate::fields::{require_exact, Field};
use crate::matrix::Matrix;
use crate::poly::Poly;

fn require_monomial<F: Field>(p: &MatrixPolynomial<F>) -> Result<()> {
    if p.basis().is_monomial() {
        Ok(())
    } else {
        Err(Error::NonMonomialBasis)
    }
}

fn leading_inverse<F: Field>(p: &MatrixPolynomial<F>) -> Result<Matrix<F>> {
    require_monomial(p)?;
    if p.grade() == 0 {
        return Err(Error::ZeroDegree);
    }
    p.leading().inverse().map_err(|_| Error::SingularLeadingCoefficient)
}

/// `C¹`: first block row `−P_k⁻¹P_{k−1}, …, −P_k⁻¹P_0`, identities below the
/// diagonal.
pub fn companion_first<F: Field>(p: &MatrixPolynomial<F>) -> Result<Matrix<F>> {
    let inv = leading_inverse(p)?;
    let (n, k) = (p.n(), p.grade());
    let mut c = Matrix::zeros(n * k, n * k);
    for j in 0..k {
        c.set_submatrix(0, j * n, &-&(&inv * &p.coeff(k - 1 - j)));
    }
    for i in 1..k {
        c.set_submatrix(i * n, (i - 1) * n, &Matrix::identity(n));
    }
    Ok(c)
}

/// `C²`: first block column `−P_{k−1}P_k⁻¹, …, −P_0P_k⁻¹`, identities above
/// the diagonal.
pub fn companion_second<F: Field>(p: &MatrixPolynomial<F>) -> Result<Matrix<F>> {
    let inv = leading_inverse(p)?;
    let (n, k) = (p.n(), p.grade());
    let mut c = Matrix::zeros(n * k, n * k);
    for i in 0..k {
        c.set_submatrix(i * n, 0, &-&(&p.coeff(k - 1 - i) * &inv));
    }
    for i in 1..k {
        c.set_submatrix((i - 1) * n, i * n, &Matrix::identity(n));
    }
    Ok(c)
}

/// `V = A·P + remainder` (`Side::Left`) or `V = P·A + remainder`
/// (`Side::Right`), remainder of grade `k − 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct DivisionResult<F> {
    pub quotient: MatrixPolynomial<F>,
    pub remainder: MatrixPolynomial<F>,
    pub side: Side,
}

/// Euclidean division by `P` with invertible leading coefficient, solving
/// the block-Toeplitz triangular system for the quotient coefficients by
/// back substitution.
pub fn matdiv<F: Field>(v: &MatrixPolynomial<F>, p: &MatrixPolynomial<F>, side: Side) -> Result<DivisionResult<F>> {
    let inv = leading_inverse(p)?;
    require_monomial(v)?;
    if v.n() != p.n() {
        return Err(Error::DimensionMismatch {
            operation: "matdiv",
            detail: format!("sizes {} and {}", v.n(), p.n()),
        });
    }
    let (n, k) = (p.n(), p.grade());
    let dv = match v.degree() {
        Some(d) if d >= k => d,
        _ => {
            return Ok(DivisionResult {
                quotient: MatrixPolynomial::zero(Basis::Monomial, n, 0)?,
                remainder: v.with_grade(k - 1)?,
                side,
            })
        }
    };
    let da = dv - k;
    let mut a = vec![Matrix::zeros(n, n); da + 1];
    for i in (k..=dv).rev() {
        let mut rhs = v.coeff(i);
        for (j, aj) in a.iter().enumerate().take(i + 1).skip(i - k + 1) {
            let pc = p.coeff(i - j);
            rhs = match side {
                Side::Left => &rhs - &(aj * &pc),
                Side::Right => &rhs - &(&pc * aj),
            };
        }
        a[i - k] = match side {
            Side::Left => &rhs * &inv,
            Side::Right => &inv * &rhs,
        };
    }
    let quotient = MatrixPolynomial::new(Basis::Monomial, a)?;
    let product = match side {
        Side::Left => quotient.try_mul(p)?,
        Side::Right => p.try_mul(&quotient)?,
    };
    let remainder = v
        .try_sub(&product)?
        .with_grade(k - 1)
        .map_err(|_| Error::TheoremViolation("division remainder exceeds grade k−1".into()))?;
    Ok(DivisionResult {
        quotient,
        remainder,
        side,
    })
}

/// Right and left ansatz matrix polynomials of `BDL(P, v)`:
/// `v·I = A·P + Q = P·A + S`.
#[derive(Clone, PartialEq, Debug)]
pub struct BdlAnsatz<F> {
    pub q: MatrixPolynomial<F>,
    pub s: MatrixPolynomial<F>,
    pub a: MatrixPolynomial<F>,
}

pub fn bdl_ansatz<F: Field>(p: &MatrixPolynomial<F>, v: &Poly<F>) -> Result<BdlAnsatz<F>> {
    require_exact::<F>("bdl_ansatz")?;
    let n = p.n();
    let vi = MatrixPolynomial::scalar(Basis::Monomial, v.coeffs(), n)?;
    let left = matdiv(&vi, p, Side::Left)?;
    let right = matdiv(&vi, p, Side::Right)?;
    if left.quotient != right.quotient {
        return Err(Error::TheoremViolation("left and right quotients of v·I differ".into()));
    }
    let (q, s, a) = (left.remainder, right.remainder, left.quotient);
    if p.try_mul(&q)? != s.try_mul(p)? {
        return Err(Error::TheoremViolation("P·Q ≠ S·P".into()));
    }
    let commutator = a.try_mul(p)?.try_sub(&p.try_mul(&a)?)?.with_grade(s.grade());
    if commutator.ok().as_ref() != Some(&s.try_sub(&q)?) {
        return Err(Error::TheoremViolation("S − Q ≠ [A, P]".into()));
    }
    Ok(BdlAnsatz { q, s, a })
}

/// `w(C)` by Horner's scheme; `w` in ascending monomial coefficients.
pub fn poly_of_matrix<F: Field>(w: &Poly<F>, c: &Matrix<F>) -> Matrix<F> {
    let size = c.rows();
    let mut acc = Matrix::zeros(size, size);
    for coef in w.coeffs().iter().rev() {
        acc = &(&acc * c) + &Matrix::scalar(size, coef.clone());
    }
    acc
}

fn dl_one<F: Field>(p: &MatrixPolynomial<F>) -> Result<Pencil<F>> {
    dl_pencil(p, &Ansatz::one(Basis::Monomial, p.grade())?)
}

/// `DL(P, 1)·v(C¹)`.
pub fn bdl_by_first_companion<F: Field>(p: &MatrixPolynomial<F>, v: &Poly<F>) -> Result<Pencil<F>> {
    let l = dl_one(p)?;
    let w = poly_of_matrix(v, &companion_first(p)?);
    Pencil::new(l.x.mul_matrix(&w)?, l.y.mul_matrix(&w)?, Basis::Monomial)
}

/// `v(C²)·DL(P, 1)`.
pub fn bdl_by_second_companion<F: Field>(p: &MatrixPolynomial<F>, v: &Poly<F>) -> Result<Pencil<F>> {
    let l = dl_one(p)?;
    let w = poly_of_matrix(v, &companion_second(p)?);
    Pencil::new(l.x.left_mul_matrix(&w)?, l.y.left_mul_matrix(&w)?, Basis::Monomial)
}

/// `λ·B_{S,P}(Q, P) + B_{P,xS}(P, xQ)`.
pub fn bdl_by_bezout<F: Field>(p: &MatrixPolynomial<F>, ansatz: &BdlAnsatz<F>) -> Result<Pencil<F>> {
    let BdlAnsatz { q, s, .. } = ansatz;
    let x = bezout_lt(q, p, p, s)?.matrix;
    let xq = q.mul_x()?;
    let xs = s.mul_x()?;
    let y = bezout_lt(p, &xq, &xs, p)?.matrix;
    Pencil::new(x, y, Basis::Monomial)
}

#[derive(Clone, PartialEq, Debug)]
pub struct BdlPencil<F: Field> {
    pub pencil: Pencil<F>,
    /// Right ansatz `Q` (grade `k − 1`).
    pub q: MatrixPolynomial<F>,
    /// Left ansatz `S` (grade `k − 1`).
    pub s: MatrixPolynomial<F>,
    /// Shared quotient `A` with `v·I = A·P + Q = P·A + S`.
    pub a: MatrixPolynomial<F>,
    pub v: Poly<F>,
}

/// `[S_{k−1}; …; S_0]·[P_k, …, P_0]` and `[P_k; …; P_0]·[Q_{k−1}, …, Q_0]`.
pub fn bdl_shift_targets<F: Field>(
    p: &MatrixPolynomial<F>,
    q: &MatrixPolynomial<F>,
    s: &MatrixPolynomial<F>,
) -> (BlockMatrix<F>, BlockMatrix<F>) {
    let (n, k) = (p.n(), p.grade());
    let mut right = BlockMatrix::zeros(k, k + 1, n);
    let mut left = BlockMatrix::zeros(k + 1, k, n);
    for r in 0..k {
        for c in 0..=k {
            right.set_block(r, c, &(&s.coeff(k - 1 - r) * &p.coeff(k - c)));
            left.set_block(c, r, &(&p.coeff(k - c) * &q.coeff(k - 1 - r)));
        }
    }
    (right, left)
}

/// `BDL(P, v)` for a scalar polynomial `v` of any degree.
///
/// The two companion routes and the Bézoutian route are computed
/// independently and must agree exactly, as must both shift-sum relations.
pub fn bdl_pencil<F: Field>(p: &MatrixPolynomial<F>, v: &Poly<F>) -> Result<BdlPencil<F>> {
    require_exact::<F>("bdl_pencil")?;
    let ansatz = bdl_ansatz(p, v)?;
    let first = bdl_by_first_companion(p, v)?;
    if bdl_by_second_companion(p, v)? != first {
        return Err(Error::TheoremViolation("v(C²)·DL(P,1) ≠ DL(P,1)·v(C¹)".into()));
    }
    if bdl_by_bezout(p, &ansatz)? != first {
        return Err(Error::TheoremViolation("Bézoutian form of BDL disagrees".into()));
    }
    let (right, left) = bdl_shift_targets(p, &ansatz.q, &ansatz.s);
    if col_shift_sum(&first.x, &first.y, &Basis::Monomial)? != right
        || row_shift_sum(&first.x, &first.y, &Basis::Monomial)? != left
    {
        return Err(Error::TheoremViolation("BDL shift sums".into()));
    }
    Ok(BdlPencil {
        pencil: first,
        q: ansatz.q,
        s: ansatz.s,
        a: ansatz.a,
        v: v.clone(),
    })
}

#[derive(Clone, PartialEq, Debug)]
pub enum Barnett {
    Holds,
    /// First block where `DL(P, v)` and `DL(P, 1)·v(C¹)` differ.
    Differs { coefficient: char, block: (usize, usize) },
}

/// Compares `DL(P, v)` with `DL(P, 1)·v(C¹)` for `v` of grade `k − 1`.
pub fn barnett_check<F: Field>(p: &MatrixPolynomial<F>, v: &Ansatz<F>) -> Result<Barnett> {
    let direct = dl_pencil(p, v)?;
    let via = bdl_by_first_companion(p, &v.to_poly()?)?;
    if let Some(block) = direct.x.first_difference(&via.x) {
        return Ok(Barnett::Differs { coefficient: 'X', block });
    }
    if let Some(block) = direct.y.first_difference(&via.y) {
        return Ok(Barnett::Differs { coefficient: 'Y', block });
    }
    Ok(Barnett::Holds)
}

/// Block `(i, j)` depends only on `i + j`.
pub fn is_block_hankel<F: Field>(b: &BlockMatrix<F>) -> bool {
    let (k, h) = (b.block_rows(), b.block_cols());
    (0..k).all(|i| (0..h).all(|j| i == 0 || j + 1 == h || b.block(i, j) == b.block(i - 1, j + 1)))
}

/// Whether `B⁻¹` is block Hankel.
pub fn hankel_inverse_check<F: Field>(b: &BlockMatrix<F>) -> Result<bool> {
    require_exact::<F>("hankel_inverse_check")?;
    let inv = b.matrix().inverse()?;
    Ok(is_block_hankel(&BlockMatrix::from_matrix(inv, b.n())?))
}

/// `F(x, y)` reduced modulo the left ideal generated by `P(x)`: every
/// `y`-slice is replaced by its remainder of left division by `P`.
pub fn reduce_left_in_x<F: Field>(f: &Bivariate<F>, p: &MatrixPolynomial<F>) -> Result<Bivariate<F>> {
    let (n, k) = (p.n(), p.grade());
    let mut out = Bivariate::zero(Basis::Monomial, n, k - 1, f.grade_y());
    for i in 0..=f.grade_y() {
        let slice = MatrixPolynomial::new(Basis::Monomial, (0..=f.grade_x()).map(|j| f.get(i, j).clone()).collect())?;
        let r = matdiv(&slice, p, Side::Left)?.remainder;
        for j in 0..k {
            out.set(i, j, r.coeff(j));
        }
    }
    Ok(out)
}

/// `F(x, y)` reduced modulo the right ideal generated by `P(y)`.
pub fn reduce_right_in_y<F: Field>(f: &Bivariate<F>, p: &MatrixPolynomial<F>) -> Result<Bivariate<F>> {
    let (n, k) = (p.n(), p.grade());
    let mut out = Bivariate::zero(Basis::Monomial, n, f.grade_x(), k - 1);
    for j in 0..=f.grade_x() {
        let slice = MatrixPolynomial::new(Basis::Monomial, (0..=f.grade_y()).map(|i| f.get(i, j).clone()).collect())?;
        let r = matdiv(&slice, p, Side::Right)?.remainder;
        for i in 0..k {
            out.set(i, j, r.coeff(i));
        }
    }
    Ok(out)
}

/// Checks `φ(X·C¹) = φ(X)·x mod L_{P(x)}` and `φ(C²·X) = y·φ(X) mod R_{P(y)}`.
pub fn psi_consistency<F: Field>(x: &BlockMatrix<F>, p: &MatrixPolynomial<F>) -> Result<bool> {
    let basis = Basis::Monomial;
    let fx = phi_map(x, &basis);
    let right = phi_map(&x.mul_matrix(&companion_first(p)?)?, &basis);
    let left = phi_map(&x.left_mul_matrix(&companion_second(p)?)?, &basis);
    Ok(right == reduce_left_in_x(&fx.mul_x()?, p)? && left == reduce_right_in_y(&fx.mul_y()?, p)?)
}

/// Structures preserved by (possibly transformed) `BDL` pencils.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Structure {
    Hermitian,
    SkewHermitian,
    Symmetric,
    SkewSymmetric,
    StarEven,
    StarOdd,
    TEven,
    TOdd,
    StarPalindromic,
    StarAntipalindromic,
    TPalindromic,
    TAntipalindromic,
}

/// Transform applied to `BDL(P, v)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Transform {
    None,
    Sigma,
    Flip,
}

impl Structure {
    pub const ALL: [Structure; 12] = [
        Structure::Hermitian,
        Structure::SkewHermitian,
        Structure::Symmetric,
        Structure::SkewSymmetric,
        Structure::StarEven,
        Structure::StarOdd,
        Structure::TEven,
        Structure::TOdd,
        Structure::StarPalindromic,
        Structure::StarAntipalindromic,
        Structure::TPalindromic,
        Structure::TAntipalindromic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Structure::Hermitian => "hermitian",
            Structure::SkewHermitian => "skew-hermitian",
            Structure::Symmetric => "symmetric",
            Structure::SkewSymmetric => "skew-symmetric",
            Structure::StarEven => "star-even",
            Structure::StarOdd => "star-odd",
            Structure::TEven => "t-even",
            Structure::TOdd => "t-odd",
            Structure::StarPalindromic => "star-palindromic",
            Structure::StarAntipalindromic => "star-antipalindromic",
            Structure::TPalindromic => "t-palindromic",
            Structure::TAntipalindromic => "t-antipalindromic",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Structure::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown structure {s:?}")))
    }

    pub fn transform(self) -> Transform {
        use Structure::*;
        match self {
            Hermitian | SkewHermitian | Symmetric | SkewSymmetric => Transform::None,
            StarEven | StarOdd | TEven | TOdd => Transform::Sigma,
            _ => Transform::Flip,
        }
    }

    /// Uses conjugate transposition rather than transposition.
    pub fn is_star(self) -> bool {
        use Structure::*;
        matches!(self, Hermitian | SkewHermitian | StarEven | StarOdd | StarPalindromic | StarAntipalindromic)
    }

    /// Sign `s` in the defining relation (`−1` for the skew/odd/anti rows).
    pub fn sign<F: Field>(self) -> F {
        use Structure::*;
        match self {
            SkewHermitian | SkewSymmetric | StarOdd | TOdd | StarAntipalindromic | TAntipalindromic => -F::one(),
            _ => F::one(),
        }
    }

    /// `m*` or `mᵀ`.
    pub fn star<F: Field>(self, m: &Matrix<F>) -> Matrix<F> {
        if self.is_star() {
            m.adjoint()
        } else {
            m.transpose()
        }
    }

    pub fn star_scalar<F: Field>(self, c: &F) -> F {
        if self.is_star() {
            c.conj()
        } else {
            c.clone()
        }
    }

    /// The matrix coefficient that `P_i` must equal, up to the sign.
    fn partner_index(self, i: usize, k: usize) -> usize {
        if self.transform() == Transform::Flip {
            k - i
        } else {
            i
        }
    }

    fn parity<F: Field>(self, i: usize) -> F {
        if self.transform() == Transform::Sigma && i % 2 == 1 {
            -F::one()
        } else {
            F::one()
        }
    }

    /// Whether `P` has this structure, coefficientwise.
    pub fn holds_for<F: Field>(self, p: &MatrixPolynomial<F>) -> bool {
        let k = p.grade();
        (0..=k).all(|i| {
            let target = self.star(&p.coeff(self.partner_index(i, k))).scale(&(self.sign::<F>() * self.parity::<F>(i)));
            p.coeff(i) == target
        })
    }

    /// Whether the scalar polynomial `v` satisfies the requirement on `f`
    /// for degree-`k` polynomials.
    pub fn admits<F: Field>(self, v: &Poly<F>, k: usize) -> bool {
        use Structure::*;
        match self {
            Symmetric | SkewSymmetric => true,
            Hermitian | SkewHermitian => v.coeffs().iter().all(|c| c.conj() == *c),
            StarEven | StarOdd | TEven | TOdd => v.coeffs().iter().enumerate().all(|(i, c)| {
                let want = self.star_scalar(c);
                if i % 2 == 0 { want == *c } else { want == -c.clone() }
            }),
            _ => {
                v.degree().is_none_or(|d| d < k)
                    && (0..k).all(|i| v.coeff(i) == self.star_scalar(&v.coeff(k - 1 - i)))
            }
        }
    }

    /// Whether `λX + Y` has the pencil version of this structure.
    pub fn pencil_has<F: Field>(self, x: &BlockMatrix<F>, y: &BlockMatrix<F>) -> bool {
        let star = |b: &BlockMatrix<F>| if self.is_star() { b.adjoint() } else { b.transpose() };
        let s: F = self.sign();
        match self.transform() {
            // P(x) = s·P⋆(x): X = s·X⋆, Y = s·Y⋆.
            Transform::None => *x == star(x).scale(&s) && *y == star(y).scale(&s),
            // P(x) = s·P⋆(−x): X = −s·X⋆, Y = s·Y⋆.
            Transform::Sigma => *x == star(x).scale(&-s.clone()) && *y == star(y).scale(&s),
            // P(x) = s·x·P⋆(1/x): X = s·Y⋆.
            Transform::Flip => *x == star(y).scale(&s) && *y == star(x).scale(&s),
        }
    }
}

/// The structure-preserving pencil for `P` and `v`: `BDL(P, v)`, `Σ·BDL` or
/// `R·BDL` depending on the row of the structure table.
///
/// Both the preconditions on `P` and `v` and the structure of the result are
/// verified exactly.
pub fn structured_pencil<F: Field>(p: &MatrixPolynomial<F>, v: &Poly<F>, structure: Structure) -> Result<Pencil<F>> {
    require_monomial(p)?;
    if !structure.holds_for(p) {
        return Err(Error::StructurePrecondition(format!("P is not {}", structure.name())));
    }
    if !structure.admits(v, p.grade()) {
        return Err(Error::StructurePrecondition(format!(
            "v = {v} does not meet the {} requirement",
            structure.name()
        )));
    }
    let bdl = bdl_pencil(p, v)?.pencil;
    let (x, y) = match structure.transform() {
        Transform::None => (bdl.x, bdl.y),
        Transform::Sigma => (
            apply_sigma(&bdl.x, &Basis::Monomial, Side::Left)?,
            apply_sigma(&bdl.y, &Basis::Monomial, Side::Left)?,
        ),
        Transform::Flip => (
            apply_flip(&bdl.x, &Basis::Monomial, Side::Left)?,
            apply_flip(&bdl.y, &Basis::Monomial, Side::Left)?,
        ),
    };
    if !structure.pencil_has(&x, &y) {
        return Err(Error::TheoremViolation(format!("pencil is not {}", structure.name())));
    }
    Pencil::new(x, y, Basis::Monomial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{GaussianRational, Rational};
    use crate::random::Sampler;
    use proptest::prelude::*;

    type Q = Rational;
    type G = GaussianRational;

    fn mono(coeffs: Vec<Matrix<Q>>) -> MatrixPolynomial<Q> {
        MatrixPolynomial::new(Basis::Monomial, coeffs).unwrap()
    }

    #[test]
    fn scalar_companion() {
        let p = mono(vec![Matrix::from_i64(&[&[5]]), Matrix::from_i64(&[&[3]]), Matrix::from_i64(&[&[1]])]);
        assert_eq!(companion_first(&p).unwrap(), Matrix::from_i64(&[&[-3, -5], &[1, 0]]));
        assert_eq!(companion_second(&p).unwrap(), Matrix::from_i64(&[&[-3, 1], &[-5, 0]]));
    }

    #[test]
    fn monic_quadratic_companions() {
        let p = Sampler::new(4).monic::<Q>(2, 2);
        let (p1, p0) = (p.coeff(1), p.coeff(0));
        let (i, z) = (Matrix::identity(2), Matrix::zeros(2, 2));
        let c1 = BlockMatrix::from_blocks(vec![vec![-&p1, -&p0], vec![i.clone(), z.clone()]]).unwrap();
        let c2 = BlockMatrix::from_blocks(vec![vec![-&p1, i], vec![-&p0, z]]).unwrap();
        assert_eq!(&companion_first(&p).unwrap(), c1.matrix());
        assert_eq!(&companion_second(&p).unwrap(), c2.matrix());
    }

    #[test]
    fn companion_eigen_consistency() {
        let mut s = Sampler::new(6);
        let p = s.matrix_polynomial::<Q>(Basis::Monomial, 2, 3);
        let c = companion_first(&p).unwrap();
        let lead_det = p.leading().determinant().unwrap();
        for _ in 0..3 {
            let lam: Q = s.rational();
            let shifted = &Matrix::scalar(6, lam.clone()) - &c;
            let lhs = shifted.determinant().unwrap() * lead_det.clone();
            assert_eq!(lhs, p.eval(&lam).unwrap().determinant().unwrap());
        }
    }

    #[test]
    fn singular_leading_rejected() {
        let p = mono(vec![Matrix::identity(2), Matrix::from_i64(&[&[1, 1], &[1, 1]])]);
        assert_eq!(companion_first(&p), Err(Error::SingularLeadingCoefficient));
        let cheb = MatrixPolynomial::new(Basis::ChebyshevT, vec![Matrix::<Q>::identity(1); 2]).unwrap();
        assert_eq!(companion_first(&cheb), Err(Error::NonMonomialBasis));
    }

    #[test]
    fn division_examples() {
        let x2 = mono(vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1), Matrix::identity(1)]);
        let p = mono(vec![Matrix::identity(1), Matrix::identity(1)]);
        let d = matdiv(&x2, &p, Side::Left).unwrap();
        assert_eq!(d.quotient, mono(vec![Matrix::from_i64(&[&[-1]]), Matrix::from_i64(&[&[1]])]));
        assert_eq!(d.remainder, mono(vec![Matrix::from_i64(&[&[1]])]));

        let mut s = Sampler::new(12);
        let small = s.matrix_polynomial::<Q>(Basis::Monomial, 2, 1);
        let quad = s.monic::<Q>(2, 2);
        let d = matdiv(&small, &quad, Side::Right).unwrap();
        assert!(d.quotient.is_zero());
        assert_eq!(d.remainder, small);

        let v = s.matrix_polynomial::<Q>(Basis::Monomial, 2, 4);
        for side in [Side::Left, Side::Right] {
            let d = matdiv(&v, &quad, side).unwrap();
            let prod = match side {
                Side::Left => d.quotient.try_mul(&quad).unwrap(),
                Side::Right => quad.try_mul(&d.quotient).unwrap(),
            };
            assert_eq!(prod.try_add(&d.remainder).unwrap(), v);
        }
    }

    #[test]
    fn ansatz_cases() {
        let mut s = Sampler::new(21);
        let p = s.monic::<Q>(2, 2);
        let low = bdl_ansatz(&p, &Poly::from_i64(&[3, 2])).unwrap();
        assert_eq!(low.q, low.s);
        assert!(low.a.is_zero());
        let high = bdl_ansatz(&p, &Poly::from_i64(&[0, 0, 0, 1])).unwrap();
        assert_ne!(high.q, high.s);

        let scalar = s.monic::<Q>(1, 3);
        let a = bdl_ansatz(&scalar, &Poly::from_i64(&[1, 2, 3, 4, 5, 6])).unwrap();
        assert_eq!(a.q, a.s);
    }

    #[test]
    fn bdl_matches_dl_for_low_degree() {
        let mut s = Sampler::new(30);
        let p = s.monic::<Q>(2, 3);
        let one = bdl_pencil(&p, &Poly::constant(Q::from(1))).unwrap();
        assert_eq!(one.pencil, dl_pencil(&p, &Ansatz::one(Basis::Monomial, 3).unwrap()).unwrap());
        let v = Poly::from_i64(&[1, -2, 3]);
        let b = bdl_pencil(&p, &v).unwrap();
        let ans = Ansatz::new(Basis::Monomial, v.padded(2));
        assert_eq!(b.pencil, dl_pencil(&p, &ans).unwrap());
        // x^k genuinely leaves DL(P).
        let high = bdl_pencil(&p, &Poly::from_i64(&[0, 0, 0, 1])).unwrap();
        assert!(!high.pencil.is_block_symmetric());
    }

    #[test]
    fn barnett_examples() {
        let mut s = Sampler::new(40);
        let p = s.monic::<Q>(2, 3);
        for i in 1..=3 {
            assert_eq!(barnett_check(&p, &Ansatz::unit(Basis::Monomial, 3, i)).unwrap(), Barnett::Holds);
        }
        let q = s.monic::<Q>(2, 2);
        let vx = Ansatz::new(Basis::Monomial, vec![Q::from(0), Q::from(1)]);
        assert_eq!(barnett_check(&q, &vx).unwrap(), Barnett::Holds);
    }

    #[test]
    fn hankel_inverses() {
        let mut s = Sampler::new(50);
        let p = s.monic::<Q>(2, 2);
        let l = dl_one(&p).unwrap();
        assert!(hankel_inverse_check(&l.x).unwrap());
        let high = bdl_pencil(&p, &Poly::from_i64(&[0, 0, 1])).unwrap().pencil;
        if high.x.matrix().determinant().unwrap() != Q::from(0) {
            assert!(hankel_inverse_check(&high.x).unwrap());
        }
        if high.y.matrix().determinant().unwrap() != Q::from(0) {
            assert!(hankel_inverse_check(&high.y).unwrap());
        }
        assert!(!hankel_inverse_check(&BlockMatrix::<Q>::identity(3, 2)).unwrap());
    }

    #[test]
    fn worked_reduction() {
        let mut s = Sampler::new(60);
        let p = s.monic::<Q>(2, 2);
        let (p1, p0) = (p.coeff(1), p.coeff(0));
        let [a, b, c, d]: [Matrix<Q>; 4] = std::array::from_fn(|_| s.matrix(2, 2));
        let x = BlockMatrix::from_blocks(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
        let y = x
            .left_mul_matrix(&companion_second(&p).unwrap())
            .unwrap()
            .mul_matrix(&companion_first(&p).unwrap())
            .unwrap();
        let f = phi_map(&y, &Basis::Monomial);
        let xy = &(&(&(&p1 * &a) * &p1) + &d) - &(&(&p1 * &b) + &(&c * &p1));
        assert_eq!(f.get(1, 1), &xy);
        assert_eq!(f.get(1, 0), &(&(&(&p1 * &a) * &p0) - &(&c * &p0)));
        assert_eq!(f.get(0, 1), &(&(&(&p0 * &a) * &p1) - &(&p0 * &b)));
        assert_eq!(f.get(0, 0), &(&(&p0 * &a) * &p0));
        // Reducing y·φ(X)·x modulo both ideals gives the same element.
        let fx = phi_map(&x, &Basis::Monomial).mul_x().unwrap().mul_y().unwrap();
        let reduced = reduce_right_in_y(&reduce_left_in_x(&fx, &p).unwrap(), &p).unwrap();
        assert_eq!(reduced, f);
    }

    #[test]
    fn structures_over_gaussian_rationals() {
        let mut s = Sampler::new(70);
        for st in Structure::ALL {
            let n = if matches!(st, Structure::SkewSymmetric | Structure::TEven | Structure::TOdd) { 2 } else { 1 + s.below(2) };
            for k in 1..=3 {
                let p = s.structured::<G>(st, n, k).unwrap();
                assert!(st.holds_for(&p), "{st:?}");
                let v = s.structured_ansatz::<G>(st, k);
                assert!(st.admits(&v, k), "{st:?} {v}");
                structured_pencil(&p, &v, st).unwrap_or_else(|e| panic!("{st:?} k={k}: {e}"));
            }
        }
    }

    #[test]
    fn structure_preconditions() {
        let mut s = Sampler::new(71);
        let p = s.monic::<G>(2, 2);
        let err = structured_pencil(&p, &Poly::constant(G::from(Q::from(1))), Structure::Hermitian);
        assert!(matches!(err, Err(Error::StructurePrecondition(_))));
        let herm = s.structured::<G>(Structure::Hermitian, 2, 2).unwrap();
        let complex_v = Poly::new(vec![G::i()]);
        assert!(matches!(
            structured_pencil(&herm, &complex_v, Structure::Hermitian),
            Err(Error::StructurePrecondition(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn three_routes_agree(seed in 0u64..100_000, n in 1usize..3, k in 1usize..4, deg in 0usize..7) {
            let mut s = Sampler::new(seed);
            let p = s.monic::<Q>(n, k);
            let v = Poly::new((0..=deg.min(2 * k)).map(|_| s.small(4)).collect());
            let b = bdl_pencil(&p, &v).unwrap();
            prop_assert_eq!(b.pencil.clone(), bdl_by_second_companion(&p, &v).unwrap());
            prop_assert!(psi_consistency(&b.pencil.x, &p).unwrap());
        }
    }
}
