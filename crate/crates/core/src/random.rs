//! Seeded random instances for tests, the `condition` command and demos.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bases::Basis;
use crate::bdl::{Structure, Transform};
use crate::blockpoly::{BlockMatrix, MatrixPolynomial};
use crate::fields::{Field, GaussianRational, Gf, Rational, C64};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Fields that can be sampled.
///
/// Rationals have numerator in `[−100, 100]` and denominator in `[1, 100]`;
/// floats are uniform on `(−1, 1)` (real and imaginary parts separately).
pub trait Sample: Field {
    fn sample(rng: &mut ChaCha8Rng) -> Self;
}

impl Sample for Rational {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        Rational::new(rng.gen_range(-100..=100), rng.gen_range(1..=100))
    }
}

impl<const P: u64> Sample for Gf<P> {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        Gf::new(rng.gen_range(0..P) as i64)
    }
}

impl Sample for GaussianRational {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        GaussianRational::new(Rational::sample(rng), Rational::sample(rng))
    }
}

impl Sample for f64 {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        rng.gen_range(-1.0..1.0)
    }
}

impl Sample for C64 {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Uniform in `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    pub fn scalar<F: Sample>(&mut self) -> F {
        F::sample(&mut self.rng)
    }

    pub fn rational(&mut self) -> Rational {
        self.scalar()
    }

    /// Small integer in `[−bound, bound]`, embedded in `F`.
    pub fn small<F: Field>(&mut self, bound: i64) -> F {
        F::from_i64(self.rng.gen_range(-bound..=bound))
    }

    /// A nonzero sample.
    pub fn nonzero<F: Sample>(&mut self) -> F {
        loop {
            let v = self.scalar::<F>();
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn matrix<F: Sample>(&mut self, rows: usize, cols: usize) -> Matrix<F> {
        let data = (0..rows * cols).map(|_| self.scalar()).collect();
        Matrix::from_vec(rows, cols, data).expect("sized to fit")
    }

    pub fn rational_matrix(&mut self, rows: usize, cols: usize) -> Matrix<Rational> {
        self.matrix(rows, cols)
    }

    /// Square matrix with nonzero determinant.
    pub fn invertible<F: Sample>(&mut self, n: usize) -> Matrix<F> {
        loop {
            let m = self.matrix(n, n);
            if m.determinant().is_ok_and(|d: F| !d.is_zero()) {
                return m;
            }
        }
    }

    pub fn block_matrix<F: Sample>(&mut self, k: usize, h: usize, n: usize) -> BlockMatrix<F> {
        BlockMatrix::from_matrix(self.matrix(n * k, n * h), n).expect("sized to fit")
    }

    pub fn vector<F: Sample>(&mut self, len: usize) -> Vec<F> {
        (0..len).map(|_| self.scalar()).collect()
    }

    pub fn matrix_polynomial<F: Sample>(
        &mut self,
        basis: Basis<F>,
        n: usize,
        grade: usize,
    ) -> MatrixPolynomial<F> {
        let coeffs = (0..=grade).map(|_| self.matrix(n, n)).collect();
        MatrixPolynomial::new(basis, coeffs).expect("valid basis for this grade")
    }

    /// Monomial-basis polynomial with `P_k = I`.
    pub fn monic<F: Sample>(&mut self, n: usize, k: usize) -> MatrixPolynomial<F> {
        let mut coeffs: Vec<Matrix<F>> = (0..k).map(|_| self.matrix(n, n)).collect();
        coeffs.push(Matrix::identity(n));
        MatrixPolynomial::new(Basis::Monomial, coeffs).expect("monomial basis")
    }

    /// Monomial-basis polynomial of grade `k` with the given structure and
    /// invertible leading coefficient.
    pub fn structured<F: Sample>(&mut self, structure: Structure, n: usize, k: usize) -> Result<MatrixPolynomial<F>> {
        let s: F = structure.sign();
        for _ in 0..32 {
            let mut coeffs = vec![Matrix::zeros(n, n); k + 1];
            match structure.transform() {
                Transform::None | Transform::Sigma => {
                    for (i, c) in coeffs.iter_mut().enumerate() {
                        let a = self.matrix(n, n);
                        let sign = if structure.transform() == Transform::Sigma && i % 2 == 1 { -s.clone() } else { s.clone() };
                        *c = &a + &structure.star(&a).scale(&sign);
                    }
                }
                Transform::Flip => {
                    for i in 0..=k / 2 {
                        let a = self.matrix(n, n);
                        if 2 * i == k {
                            coeffs[i] = &a + &structure.star(&a).scale(&s);
                        } else {
                            coeffs[k - i] = structure.star(&a).scale(&s);
                            coeffs[i] = a;
                        }
                    }
                }
            }
            let p = MatrixPolynomial::new(Basis::Monomial, coeffs)?;
            if p.leading().determinant().is_ok_and(|d| !d.is_zero()) {
                return Ok(p);
            }
        }
        Err(Error::StructurePrecondition(format!(
            "no {} polynomial with invertible leading coefficient found for n = {n}, k = {k}",
            structure.name()
        )))
    }

    /// A scalar `v` meeting the requirement of `structure` for grade-`k`
    /// polynomials.
    pub fn structured_ansatz<F: Sample>(&mut self, structure: Structure, k: usize) -> Poly<F> {
        let mut v: Vec<F> = Vec::new();
        match structure.transform() {
            Transform::Flip => {
                v = vec![F::zero(); k];
                for i in 0..k.div_ceil(2) {
                    let c: F = self.scalar();
                    if 2 * i + 1 == k {
                        v[i] = c.clone() + structure.star_scalar(&c);
                    } else {
                        v[k - 1 - i] = structure.star_scalar(&c);
                        v[i] = c;
                    }
                }
            }
            transform => {
                for i in 0..=self.below(k + 1) {
                    let c: F = self.scalar();
                    let odd = transform == Transform::Sigma && i % 2 == 1;
                    v.push(match structure {
                        Structure::Symmetric | Structure::SkewSymmetric => c,
                        _ if odd => c.clone() - structure.star_scalar(&c),
                        _ => c.clone() + c.conj(),
                    });
                }
            }
        }
        Poly::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a: Matrix<Rational> = Sampler::new(9).matrix(3, 3);
        let b: Matrix<Rational> = Sampler::new(9).matrix(3, 3);
        assert_eq!(a, b);
        let x: f64 = Sampler::new(1).scalar();
        assert!(x.abs() < 1.0);
    }
}
