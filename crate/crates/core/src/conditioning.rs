//! Floating point conditioning of `DL(P, v)` eigenvalues on `[−1, 1]`.
//!
//! The ratio of the eigenvalue condition numbers of `L = λX + Y` and `P`
//! is
//!
//! `r̂ = ‖ŷ‖‖L(·)‖‖x̂‖ / (|v(λ)|·‖y‖‖P(·)‖‖x‖)`
//!
//! with `x̂ = Λ(λ) ⊗ x`, `ŷ = conj(Λ(λ)) ⊗ y` and `‖P(·)‖ = max_{[−1,1]}
//! ‖P(λ)‖₂`. For Chebyshev `P` and `v = 1` it never exceeds
//! `16n(e − 1)k⁴`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::bases::Basis;
use crate::blockpoly::{MatrixPolynomial, Pencil};
use crate::dl::{dl_pencil, Ansatz};
use crate::error::{Error, Result};
use crate::fields::C64;
use crate::matrix::Matrix;
use crate::random::Sampler;

type CMat = DMatrix<Complex64>;
type CVec = DVector<Complex64>;

/// Eigenvalues with `|Im λ|` at most this are treated as real.
pub const REAL_TOL: f64 = 1e-8;

const NEWTON_STEPS: usize = 30;

/// Simple eigenvalue `λ` of `P` with right and left eigenvectors,
/// `P(λ)x = 0`, `y*P(λ) = 0`, both of unit norm.
#[derive(Clone, Debug)]
pub struct EigenTriple {
    pub lambda: Complex64,
    pub x: CVec,
    pub y: CVec,
    /// `‖P(λ)x‖ / (‖P(·)‖‖x‖)`.
    pub residual: f64,
    /// No other computed eigenvalue within `1e−6·max(1, |λ|)`.
    pub simple: bool,
}

impl EigenTriple {
    /// Real and inside `[−1, 1]`.
    pub fn in_domain(&self) -> bool {
        self.lambda.im.abs() <= REAL_TOL && self.lambda.re.abs() <= 1.0 + REAL_TOL
    }
}

fn to_real(m: &Matrix<f64>) -> DMatrix<f64> {
    DMatrix::from_row_slice(m.rows(), m.cols(), m.entries())
}

fn spectral_norm(m: DMatrix<f64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.singular_values().max()
}

fn complex_basis(basis: &Basis<f64>) -> Basis<C64> {
    let lift = |v: &[f64]| v.iter().map(|&r| C64::new(r, 0.0)).collect::<Vec<_>>();
    match basis {
        Basis::Monomial => Basis::Monomial,
        Basis::ChebyshevT => Basis::ChebyshevT,
        Basis::Orthogonal { a, b, c } => Basis::Orthogonal {
            a: lift(a),
            b: lift(b),
            c: lift(c),
        },
        Basis::DegreeGraded { table } => Basis::DegreeGraded {
            table: table.iter().map(|row| lift(row)).collect(),
        },
    }
}

/// Values `φ_j(λ)` and derivatives `φ'_j(λ)`, `j < len`, at complex `λ`.
fn complex_phis(basis: &Basis<f64>, len: usize, lambda: Complex64) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let (v, d) = complex_basis(basis).eval_with_derivative(len, &C64(lambda))?;
    Ok((v.into_iter().map(|c| c.0).collect(), d.into_iter().map(|c| c.0).collect()))
}

fn combine(p: &MatrixPolynomial<f64>, weights: &[Complex64]) -> CMat {
    let n = p.n();
    let mut out = CMat::zeros(n, n);
    for (c, w) in p.coeffs().iter().zip(weights) {
        out += to_real(c).map(|r| Complex64::new(r, 0.0)) * *w;
    }
    out
}

/// `P(λ)` and `P'(λ)` at complex `λ`.
fn eval_complex(p: &MatrixPolynomial<f64>, lambda: Complex64) -> Result<(CMat, CMat)> {
    let (v, d) = complex_phis(p.basis(), p.grade() + 1, lambda)?;
    Ok((combine(p, &v), combine(p, &d)))
}

/// Smallest singular value and its right singular vector.
fn right_null(m: CMat) -> Result<(f64, CVec)> {
    let svd = m.svd(false, true);
    let vt = svd
        .v_t
        .ok_or_else(|| Error::Eigensolver("SVD did not return singular vectors".into()))?;
    let idx = svd.singular_values.imin();
    Ok((svd.singular_values[idx], vt.row(idx).adjoint()))
}

/// Approximate null vectors of a square matrix: smallest singular value,
/// right and left singular vectors. The left one comes from `m*`, since
/// the pairing of `U` columns with singular values is unreliable for
/// nearly rank-deficient input.
fn null_pair(m: CMat) -> Result<(f64, CVec, CVec)> {
    let (sigma, x) = right_null(m.clone())?;
    let (_, y) = right_null(m.adjoint())?;
    Ok((sigma, x, y))
}

/// Norm grid size `max(50, 10k²)`.
pub fn grid_size(k: usize) -> usize {
    (10 * k * k).max(50)
}

/// `cos(jπ/(N − 1))`, `j = 0, …, N − 1`: includes both endpoints.
pub fn norm_grid(k: usize) -> Vec<f64> {
    let m = grid_size(k);
    (0..m).map(|j| (j as f64 * std::f64::consts::PI / (m - 1) as f64).cos()).collect()
}

/// `max_{λ ∈ [−1,1]} ‖P(λ)‖₂` over the Chebyshev-point grid.
pub fn poly_norm(p: &MatrixPolynomial<f64>) -> Result<f64> {
    let mut best: f64 = 0.0;
    for lam in norm_grid(p.grade()) {
        best = best.max(spectral_norm(to_real(&p.eval(&lam)?)));
    }
    Ok(best)
}

/// `max_{λ ∈ [−1,1]} ‖λX + Y‖₂`.
pub fn pencil_norm(l: &Pencil<f64>) -> Result<f64> {
    poly_norm(&l.as_matrix_polynomial()?)
}

/// Newton's method on `det P` through `λ ← λ − y*P(λ)x / y*P'(λ)x`, with
/// the singular vectors of `P(λ)` recomputed at every step.
pub fn refine(p: &MatrixPolynomial<f64>, start: Complex64) -> Result<(Complex64, CVec, CVec)> {
    let mut lam = start;
    for _ in 0..NEWTON_STEPS {
        let (val, der) = eval_complex(p, lam)?;
        let (_, x, y) = null_pair(val.clone())?;
        let num = (y.adjoint() * &val * &x)[(0, 0)];
        let den = (y.adjoint() * &der * &x)[(0, 0)];
        if den.norm() == 0.0 {
            break;
        }
        let step = num / den;
        lam -= step;
        if step.norm() <= 4.0 * f64::EPSILON * lam.norm().max(1.0) {
            break;
        }
    }
    let (_, x, y) = null_pair(eval_complex(p, lam)?.0)?;
    Ok((lam, x, y))
}

/// Eigenvalues of a regular pencil `λX + Y` with invertible `X`, from the
/// standard problem for `−X⁻¹Y`.
pub fn pencil_eigenvalues(l: &Pencil<f64>) -> Result<Vec<Complex64>> {
    let x = to_real(l.x.matrix());
    let y = to_real(l.y.matrix());
    let inv = x
        .try_inverse()
        .ok_or_else(|| Error::Eigensolver("leading coefficient X is singular".into()))?;
    let a = -(inv * y);
    Ok(a.complex_eigenvalues().iter().copied().collect())
}

/// Eigentriples of `P` computed from the eigenvalues of the linearization
/// `L` and refined on `P` itself.
pub fn eigensolve(p: &MatrixPolynomial<f64>, l: &Pencil<f64>) -> Result<Vec<EigenTriple>> {
    let p_norm = poly_norm(p)?;
    let mut out = Vec::new();
    for start in pencil_eigenvalues(l)? {
        let (lambda, x, y) = refine(p, start)?;
        let (val, _) = eval_complex(p, lambda)?;
        let residual = (val * &x).norm() / p_norm.max(f64::MIN_POSITIVE);
        if !residual.is_finite() {
            return Err(Error::Eigensolver(format!("no convergence near {start}")));
        }
        out.push(EigenTriple {
            lambda,
            x,
            y,
            residual,
            simple: true,
        });
    }
    let lambdas: Vec<Complex64> = out.iter().map(|t| t.lambda).collect();
    for (i, t) in out.iter_mut().enumerate() {
        let tol = 1e-6 * t.lambda.norm().max(1.0);
        t.simple = lambdas.iter().enumerate().all(|(j, m)| j == i || (m - t.lambda).norm() > tol);
    }
    Ok(out)
}

/// `Λ(λ) ⊗ z`.
pub fn lift(basis: &Basis<f64>, k: usize, lambda: Complex64, z: &CVec) -> Result<CVec> {
    let (mut phis, _) = complex_phis(basis, k, lambda)?;
    phis.reverse();
    let n = z.len();
    Ok(CVec::from_fn(n * k, |r, _| phis[r / n] * z[r % n]))
}

/// `v(λ)` at complex `λ`.
fn ansatz_value(v: &Ansatz<f64>, lambda: Complex64) -> Result<Complex64> {
    let (phis, _) = complex_phis(v.basis(), v.k(), lambda)?;
    Ok(phis.iter().zip(v.coeffs()).map(|(p, c)| p * c).sum())
}

/// `r̂` for one eigentriple of `P` with the linearization `DL(P, v)`.
pub fn cond_ratio(p: &MatrixPolynomial<f64>, v: &Ansatz<f64>, t: &EigenTriple) -> Result<f64> {
    let l = dl_pencil(p, v)?;
    ratio_with_norms(p, v, t, poly_norm(p)?, pencil_norm(&l)?)
}

fn ratio_with_norms(p: &MatrixPolynomial<f64>, v: &Ansatz<f64>, t: &EigenTriple, p_norm: f64, l_norm: f64) -> Result<f64> {
    let k = p.grade();
    let vl = ansatz_value(v, t.lambda)?;
    if vl.norm() == 0.0 {
        return Err(Error::UndefinedRatio);
    }
    let xh = lift(p.basis(), k, t.lambda, &t.x)?;
    let yh = lift(p.basis(), k, t.lambda.conj(), &t.y)?;
    Ok(yh.norm() * l_norm * xh.norm() / (vl.norm() * t.y.norm() * p_norm * t.x.norm()))
}

/// `(ŷ*Xx̂, y*P'(λ)v(λ)x)`.
///
/// Differentiating `L(λ)(Λ(λ) ⊗ I) = v ⊗ P(λ)` and multiplying by the left
/// eigenvector `ŷ*` gives `ŷ*Xx̂ = v(λ)·y*P'(λ)x` for the pencils built
/// here; a Bézoutian written with the opposite orientation of `x − y`
/// negates `X` and flips the sign.
pub fn lhopital_terms(
    p: &MatrixPolynomial<f64>,
    v: &Ansatz<f64>,
    l: &Pencil<f64>,
    t: &EigenTriple,
) -> Result<(Complex64, Complex64)> {
    let k = p.grade();
    let xh = lift(p.basis(), k, t.lambda, &t.x)?;
    let yh = lift(p.basis(), k, t.lambda.conj(), &t.y)?;
    let x = to_real(l.x.matrix()).map(|r| Complex64::new(r, 0.0));
    let lhs = (yh.adjoint() * x * xh)[(0, 0)];
    let (_, der) = eval_complex(p, t.lambda)?;
    let rhs = (t.y.adjoint() * der * &t.x)[(0, 0)] * ansatz_value(v, t.lambda)?;
    Ok((lhs, rhs))
}

/// Relative error of `ŷ*Xx̂ = v(λ)·y*P'(λ)x`.
pub fn lhopital_error(p: &MatrixPolynomial<f64>, v: &Ansatz<f64>, l: &Pencil<f64>, t: &EigenTriple) -> Result<f64> {
    let (lhs, rhs) = lhopital_terms(p, v, l, t)?;
    Ok((lhs - rhs).norm() / rhs.norm().max(f64::MIN_POSITIVE))
}

/// One first-order perturbation experiment.
#[derive(Clone, Debug, Serialize)]
pub struct PerturbationCheck {
    pub epsilon: f64,
    /// `|λ(P + ΔP) − (λ − y*ΔP(λ)x / y*P'(λ)x)| / max(1, |λ|)`.
    pub error: f64,
    /// `max(1, κ²)` with `κ = ‖y‖‖x‖ / |y*P'(λ)x|` the absolute condition
    /// number; the second-order remainder scales with `(κε)²`.
    pub scale: f64,
    pub passes: bool,
}

/// Random direction `ΔP` with `‖ΔP(·)‖ = ε` in the basis of `P`.
pub fn random_direction(p: &MatrixPolynomial<f64>, eps: f64, sampler: &mut Sampler) -> Result<MatrixPolynomial<f64>> {
    let d = sampler.matrix_polynomial::<f64>(p.basis().clone(), p.n(), p.grade());
    let norm = poly_norm(&d)?;
    Ok(d.scale(&(eps / norm)))
}

/// Compares the perturbed eigenvalue near `t.lambda` with its first-order
/// prediction; passes when the error is at most `100·ε²·scale`.
pub fn perturbation_check(
    p: &MatrixPolynomial<f64>,
    t: &EigenTriple,
    delta: &MatrixPolynomial<f64>,
    eps: f64,
) -> Result<PerturbationCheck> {
    let (dval, _) = eval_complex(delta, t.lambda)?;
    let (_, der) = eval_complex(p, t.lambda)?;
    let den = (t.y.adjoint() * der * &t.x)[(0, 0)];
    let predicted = t.lambda - (t.y.adjoint() * dval * &t.x)[(0, 0)] / den;
    let (actual, _, _) = refine(&p.try_add(delta)?, t.lambda)?;
    let kappa = t.y.norm() * t.x.norm() / den.norm();
    let scale = kappa.powi(2).max(1.0);
    let error = (actual - predicted).norm() / t.lambda.norm().max(1.0);
    Ok(PerturbationCheck {
        epsilon: eps,
        error,
        scale,
        passes: error <= 100.0 * eps * eps * scale,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenReport {
    pub re: f64,
    pub im: f64,
    pub in_domain: bool,
    pub simple: bool,
    pub residual: f64,
    /// `None` outside `[−1, 1]`.
    pub ratio: Option<f64>,
    /// `‖x̂‖ / ‖x‖`, in `[1, √k]` on the domain.
    pub lift_ratio: f64,
    pub lhopital_error: f64,
    pub perturbations: Vec<PerturbationCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditioningReport {
    pub schema: &'static str,
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    pub grid: usize,
    pub p_norm: f64,
    pub l_norm: f64,
    pub x_norm: f64,
    pub y_norm: f64,
    /// `16n(e − 1)k³‖P(·)‖`.
    pub l_bound: f64,
    /// `8n(e − 1)k³‖P(·)‖`, shared by `‖X‖` and `‖Y‖`.
    pub coefficient_bound: f64,
    /// `16n(e − 1)k⁴`.
    pub ratio_bound: f64,
    pub max_ratio: Option<f64>,
    pub eigenvalues: Vec<EigenReport>,
    pub norm_ok: bool,
    pub ratios_ok: bool,
    pub passes: bool,
}

impl ConditioningReport {
    /// `bound − value` for the pencil norm; nonnegative when the bound holds.
    pub fn norm_margin(&self) -> f64 {
        self.l_bound - self.l_norm
    }

    pub fn ratio_margin(&self) -> Option<f64> {
        self.max_ratio.map(|r| self.ratio_bound - r)
    }
}

pub fn bound_constant(n: usize) -> f64 {
    n as f64 * (std::f64::consts::E - 1.0)
}

/// Conditioning report for `DL(P, 1)` of a Chebyshev polynomial: every
/// eigenvalue in `[−1, 1]` is checked against `16n(e − 1)k⁴`, the pencil
/// against `16n(e − 1)k³‖P(·)‖`, and each simple eigenvalue receives
/// `trials` first-order perturbation experiments with `ε = 1e−6` from the
/// given seed. Perturbation experiments are restricted to `[−1, 1]`, the
/// only place where `‖ΔP(λ)‖ ≤ ε` is guaranteed.
pub fn bound_report(p: &MatrixPolynomial<f64>, trials: usize, seed: u64) -> Result<ConditioningReport> {
    if !p.basis().is_chebyshev() {
        return Err(Error::InvalidBasis("conditioning bounds need the Chebyshev basis".into()));
    }
    let (n, k) = (p.n(), p.grade());
    let v = Ansatz::one(Basis::ChebyshevT, k)?;
    let l = dl_pencil(p, &v)?;
    let p_norm = poly_norm(p)?;
    let l_norm = pencil_norm(&l)?;
    let c = bound_constant(n);
    let kf = k as f64;
    let mut sampler = Sampler::new(seed);
    let mut eigenvalues = Vec::new();
    for t in eigensolve(p, &l)? {
        let in_domain = t.in_domain();
        let ratio = if in_domain { Some(ratio_with_norms(p, &v, &t, p_norm, l_norm)?) } else { None };
        let mut perturbations = Vec::new();
        if t.simple && in_domain {
            for _ in 0..trials {
                let delta = random_direction(p, 1e-6, &mut sampler)?;
                perturbations.push(perturbation_check(p, &t, &delta, 1e-6)?);
            }
        }
        eigenvalues.push(EigenReport {
            re: t.lambda.re,
            im: t.lambda.im,
            in_domain,
            simple: t.simple,
            residual: t.residual,
            ratio,
            lift_ratio: lift(p.basis(), k, t.lambda, &t.x)?.norm() / t.x.norm(),
            lhopital_error: lhopital_error(p, &v, &l, &t)?,
            perturbations,
        });
    }
    let ratio_bound = 16.0 * c * kf.powi(4);
    let max_ratio = eigenvalues.iter().filter_map(|e| e.ratio).reduce(f64::max);
    let l_bound = 16.0 * c * kf.powi(3) * p_norm;
    let coefficient_bound = 8.0 * c * kf.powi(3) * p_norm;
    let x_norm = spectral_norm(to_real(l.x.matrix()));
    let y_norm = spectral_norm(to_real(l.y.matrix()));
    let norm_ok = l_norm <= l_bound && x_norm <= coefficient_bound && y_norm <= coefficient_bound;
    let ratios_ok = max_ratio.is_none_or(|r| r <= ratio_bound);
    Ok(ConditioningReport {
        schema: "v1",
        seed,
        n,
        k,
        grid: grid_size(k),
        p_norm,
        l_norm,
        x_norm,
        y_norm,
        l_bound,
        coefficient_bound,
        ratio_bound,
        max_ratio,
        eigenvalues,
        norm_ok,
        ratios_ok,
        passes: norm_ok && ratios_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cheb(coeffs: Vec<Matrix<f64>>) -> MatrixPolynomial<f64> {
        MatrixPolynomial::new(Basis::ChebyshevT, coeffs).unwrap()
    }

    fn scalar(c: f64) -> Matrix<f64> {
        Matrix::scalar(1, c)
    }

    #[test]
    fn norm_examples() {
        assert!((poly_norm(&cheb(vec![Matrix::identity(2)])).unwrap() - 1.0).abs() < 1e-14);
        let t2 = cheb(vec![Matrix::zeros(2, 2), Matrix::zeros(2, 2), Matrix::identity(2)]);
        assert!((poly_norm(&t2).unwrap() - 1.0).abs() < 1e-14);
        let lam = cheb(vec![Matrix::zeros(3, 3), Matrix::identity(3)]);
        assert!((poly_norm(&lam).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn left_and_right_residuals() {
        for seed in 0..40 {
            let p = Sampler::new(seed).matrix_polynomial::<f64>(Basis::ChebyshevT, 2, 3);
            let l = dl_pencil(&p, &Ansatz::one(Basis::ChebyshevT, 3).unwrap()).unwrap();
            for t in eigensolve(&p, &l).unwrap().iter().filter(|t| t.simple) {
                let (val, _) = eval_complex(&p, t.lambda).unwrap();
                assert!((&val * &t.x).norm() < 1e-12, "seed {seed}");
                assert!((t.y.adjoint() * &val).norm() < 1e-12, "seed {seed}: left residual");
            }
        }
    }

    #[test]
    fn diagonal_pencil() {
        let a = Matrix::from_rows(vec![vec![0.5, 0.0], vec![0.0, -0.25]]).unwrap();
        let p = MatrixPolynomial::new(Basis::Monomial, vec![-&a, Matrix::identity(2)]).unwrap();
        let l = dl_pencil(&p, &Ansatz::one(Basis::Monomial, 1).unwrap()).unwrap();
        let mut eig: Vec<f64> = eigensolve(&p, &l).unwrap().iter().map(|t| t.lambda.re).collect();
        eig.sort_by(f64::total_cmp);
        assert!((eig[0] + 0.25).abs() < 1e-14 && (eig[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn chebyshev_cubic_roots() {
        let p = cheb(vec![scalar(0.0), scalar(0.0), scalar(0.0), scalar(1.0)]);
        let report = bound_report(&p, 0, 1).unwrap();
        let mut roots: Vec<f64> = report.eigenvalues.iter().map(|e| e.re).collect();
        roots.sort_by(f64::total_cmp);
        let mut want: Vec<f64> = (0..3).map(|j| ((2 * j + 1) as f64 * std::f64::consts::PI / 6.0).cos()).collect();
        want.sort_by(f64::total_cmp);
        for (r, w) in roots.iter().zip(&want) {
            assert!((r - w).abs() < 1e-10, "{r} vs {w}");
        }
        assert!(report.passes);
        assert!(report.max_ratio.unwrap() <= 16.0 * (std::f64::consts::E - 1.0) * 81.0);
    }

    #[test]
    fn linear_scalar_ratio_is_one() {
        let p = cheb(vec![scalar(-0.3), scalar(1.0)]);
        let report = bound_report(&p, 0, 1).unwrap();
        assert_eq!(report.eigenvalues.len(), 1);
        assert!((report.max_ratio.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identity_is_vacuous() {
        let p = cheb(vec![Matrix::zeros(2, 2), Matrix::identity(2)]);
        let report = bound_report(&p, 0, 1).unwrap();
        assert!(report.passes);
        let q = cheb(vec![Matrix::identity(2), Matrix::scalar(2, 0.1)]);
        let report = bound_report(&q, 0, 1).unwrap();
        assert!(report.max_ratio.is_none() && report.norm_ok);
    }

    #[test]
    fn residuals_and_identities() {
        let mut s = Sampler::new(5);
        let p = s.matrix_polynomial::<f64>(Basis::ChebyshevT, 2, 3);
        let v = Ansatz::one(Basis::ChebyshevT, 3).unwrap();
        let l = dl_pencil(&p, &v).unwrap();
        for t in eigensolve(&p, &l).unwrap() {
            assert!(t.residual <= 1e-8, "{}", t.residual);
            assert!(lhopital_error(&p, &v, &l, &t).unwrap() <= 1e-8);
            if t.in_domain() {
                let r = lift(p.basis(), 3, t.lambda, &t.x).unwrap().norm() / t.x.norm();
                assert!((1.0 - 1e-12..=3f64.sqrt() + 1e-12).contains(&r));
            }
        }
    }

    #[test]
    fn symmetric_cubic_bound() {
        let mut s = Sampler::new(8);
        let p = s.matrix_polynomial::<f64>(Basis::ChebyshevT, 2, 3).map_coeffs(|c| c + &c.transpose());
        let report = bound_report(&p, 2, 8).unwrap();
        assert!(report.passes);
        for e in &report.eigenvalues {
            assert!(e.perturbations.iter().all(|c| c.passes), "{e:?}");
        }
    }

    #[test]
    fn ratio_undefined_when_v_vanishes() {
        // v(x) = x vanishes at the eigenvalue 0 of P(x) = x² + x/2.
        let p = cheb(vec![scalar(0.5), scalar(0.5), scalar(0.5)]);
        let v = Ansatz::new(Basis::ChebyshevT, vec![0.0, 1.0]);
        let l = dl_pencil(&p, &Ansatz::one(Basis::ChebyshevT, 2).unwrap()).unwrap();
        let zero = eigensolve(&p, &l).unwrap().into_iter().find(|t| t.lambda.norm() < 1e-12).unwrap();
        assert_eq!(cond_ratio(&p, &v, &zero), Err(Error::UndefinedRatio));
    }

    #[test]
    fn finite_difference_derivative() {
        let mut s = Sampler::new(11);
        let p = s.matrix_polynomial::<f64>(Basis::ChebyshevT, 2, 4);
        let lam = Complex64::new(0.3, 0.0);
        let h = 1e-6;
        let (_, der) = eval_complex(&p, lam).unwrap();
        let fd = (eval_complex(&p, lam + h).unwrap().0 - eval_complex(&p, lam - h).unwrap().0) / Complex64::new(2.0 * h, 0.0);
        assert!((der - fd).norm() < 1e-6);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn bounds_hold(seed in 0u64..10_000, n in 1usize..4, k in 2usize..5) {
            let p = Sampler::new(seed).matrix_polynomial::<f64>(Basis::ChebyshevT, n, k);
            let report = bound_report(&p, 0, seed).unwrap();
            prop_assert!(report.passes, "{:?}", report);
        }
    }
}
