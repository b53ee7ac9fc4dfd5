#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use polylin::{BlockMatrix, Matrix, MatrixPolynomial, Rational};
use polylin::Basis;

pub type Q = Rational;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn polylin(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_polylin"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn mono(coeffs: Vec<Matrix<Q>>) -> MatrixPolynomial<Q> {
    MatrixPolynomial::new(Basis::Monomial, coeffs).unwrap()
}

/// Matrix polynomial from a table of ascending entry polynomials.
pub fn entries(table: &[&[&[i64]]]) -> MatrixPolynomial<Q> {
    let g = table.iter().flat_map(|r| r.iter()).map(|p| p.len()).max().unwrap() - 1;
    let coeffs = (0..=g)
        .map(|d| {
            let rows: Vec<Vec<i64>> = table
                .iter()
                .map(|r| r.iter().map(|p| p.get(d).copied().unwrap_or(0)).collect())
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            Matrix::from_i64(&refs)
        })
        .collect();
    mono(coeffs)
}

/// Pair whose one-sided Bézoutian is singular.
pub fn naive_pair_one() -> (MatrixPolynomial<Q>, MatrixPolynomial<Q>) {
    (
        entries(&[&[&[0, 1], &[0]], &[&[0], &[-1, 1]]]),
        entries(&[&[&[-6, 1], &[-1]], &[&[12], &[1, 1]]]),
    )
}

pub fn naive_pair_two() -> (MatrixPolynomial<Q>, MatrixPolynomial<Q>) {
    (
        entries(&[&[&[0, 1], &[1]], &[&[0], &[0, 1]]]),
        entries(&[&[&[0], &[0, 1]], &[&[0, 1], &[1]]]),
    )
}

/// Multipliers with `M1·P1 = M2·P2` for [`naive_pair_one`].
pub fn lt_multipliers() -> (MatrixPolynomial<Q>, MatrixPolynomial<Q>) {
    (
        entries(&[&[&[6, -3, 1], &[0, 1]], &[&[-12, 14], &[0, 2, 1]]]),
        entries(&[&[&[0, 3, 1], &[0, 2]], &[&[0, 2], &[0, 0, 1]]]),
    )
}

fn grid(rows: Vec<Vec<Matrix<Q>>>) -> BlockMatrix<Q> {
    BlockMatrix::from_blocks(rows).unwrap()
}

/// Reference `DL(P, e_which)` pencils of a cubic Chebyshev polynomial,
/// as `(X, Y)`.
pub fn cubic_chebyshev_pencil(p: &MatrixPolynomial<Q>, which: usize) -> (BlockMatrix<Q>, BlockMatrix<Q>) {
    let c = |i: usize| p.coeff(i);
    let z = Matrix::zeros(p.n(), p.n());
    let s = |m: Matrix<Q>, f: i64| m.scale(&Q::from(f));
    match which {
        1 => (
            grid(vec![
                vec![s(c(3), 2), z.clone(), z.clone()],
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
