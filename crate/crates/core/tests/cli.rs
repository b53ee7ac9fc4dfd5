mod common;

use common::*;
use polylin::cli::document::{matrix_from_value, parse_pencil, parse_poly, serialize_poly};
use polylin::{BlockMatrix, Matrix, MatrixPolynomial, Pencil};
use serde_json::Value;

fn json_of(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = polylin(&full);
    (out.code, serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout)))
}

fn cubic_poly() -> MatrixPolynomial<Q> {
    parse_poly(&std::fs::read_to_string(fixture("cubic_chebyshev.json")).unwrap()).unwrap()
}

#[test]
fn dl_reproduces_cubic_chebyshev_pencils() {
    let p = cubic_poly();
    for (which, ansatz) in [(1, "0,0,1"), (2, "0,1,0"), (3, "1,0,0")] {
        let (code, v) = json_of(&["dl", fixture("cubic_chebyshev.json").to_str().unwrap(), "--ansatz", ansatz]);
        assert_eq!(code, 0);
        let l: Pencil<Q> = parse_pencil(&v["pencil"].to_string()).unwrap();
        let (x, y) = cubic_chebyshev_pencil(&p, which);
        assert_eq!((l.x, l.y), (x, y), "row {which}");
    }
}

#[test]
fn dl_text_and_determinism() {
    let path = fixture("cubic_chebyshev.json");
    let args = ["dl", path.to_str().unwrap(), "--ansatz", "0,0,1"];
    let a = polylin(&args);
    let b = polylin(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.contains("X =") && a.stdout.contains("verdict:"));
}

#[test]
fn dl_exclusion_rejection() {
    // P = diag(x² − 1, x² − 4) shares the root 1 with v = x − 1.
    let p = mono(vec![
        Matrix::from_i64(&[&[-1, 0], &[0, -4]]),
        Matrix::zeros(2, 2),
        Matrix::identity(2),
    ]);
    let path = scratch("shared_root.json");
    std::fs::write(&path, serialize_poly(&p)).unwrap();
    let (code, v) = json_of(&["dl", path.to_str().unwrap(), "--ansatz", "-1,1"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "shared-finite-root");
    assert_eq!(v["detail"]["gcd"], serde_json::json!(["-1", "1"]));
}

#[test]
fn gf2_bezout() {
    let (code, v) = json_of(&["bezout", "x^2", "x+1", "--grade", "3", "--field", "gf2"]);
    assert_eq!(code, 0);
    assert_eq!(v["kernel_dim"], 1);
    let m: Matrix<polylin::Gf<2>> = matrix_from_value(&v["matrix"]).unwrap();
    assert_eq!((m.rows(), m.cols()), (3, 3));
}

#[test]
fn lt_and_onesided_from_files() {
    let (p1, p2) = naive_pair_one();
    let (m1, m2) = lt_multipliers();
    let files: Vec<String> = [("p1", &p1), ("p2", &p2), ("m1", &m1), ("m2", &m2)]
        .iter()
        .map(|(name, p)| {
            let path = scratch(&format!("lt_{name}.json"));
            std::fs::write(&path, serialize_poly(p)).unwrap();
            path.to_str().unwrap().to_string()
        })
        .collect();
    let (code, v) = json_of(&["bezout", &files[0], &files[1], "--lt", &files[2], &files[3]]);
    assert_eq!(code, 0);
    assert_eq!(v["kernel_dim"], 0);
    let m: Matrix<Q> = matrix_from_value(&v["matrix"]).unwrap();
    assert_eq!(m, Matrix::from_i64(&[&[6, 1], &[-12, -2], &[-6, 0], &[12, 0]]));
    let (_, v) = json_of(&["bezout", &files[0], &files[1], "--onesided"]);
    assert_eq!(v["kernel_dim"], 1);
    let (code, _) = json_of(&["bezout", &files[0], &files[1], "--commuting"]);
    assert_eq!(code, 2);
}

#[test]
fn check_membership_and_rejection() {
    let p_path = fixture("cubic_chebyshev.json");
    let (_, v) = json_of(&["dl", p_path.to_str().unwrap(), "--ansatz", "1,2,-1"]);
    let pencil_path = scratch("member.json");
    std::fs::write(&pencil_path, v["pencil"].to_string()).unwrap();
    let (code, r) = json_of(&["check", pencil_path.to_str().unwrap(), p_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["ansatz"], serde_json::json!(["1", "2", "-1"]));

    let mut l: Pencil<Q> = parse_pencil(&v["pencil"].to_string()).unwrap();
    let mut y = l.y.matrix().clone();
    y[(0, 0)] = y[(0, 0)].clone() + Q::from(1);
    l.y = BlockMatrix::from_matrix(y, 2).unwrap();
    let bad = scratch("perturbed.json");
    std::fs::write(&bad, polylin::cli::document::serialize_pencil(&l)).unwrap();
    let (code, r) = json_of(&["check", bad.to_str().unwrap(), p_path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(r["witness"]["space"], "L1");
    assert_eq!(r["witness"]["block_row"], 0);
    let text = polylin(&["check", bad.to_str().unwrap(), p_path.to_str().unwrap()]);
    assert!(text.stdout.contains("block row 0"));
}

#[test]
fn bdl_and_divide_round_trip() {
    let p_path = fixture("monic_quadratic.json");
    let p: MatrixPolynomial<Q> = parse_poly(&std::fs::read_to_string(&p_path).unwrap()).unwrap();
    let (code, v) = json_of(&["bdl", p_path.to_str().unwrap(), "--v", "0,0,0,1"]);
    assert_eq!(code, 0);
    let q: MatrixPolynomial<Q> = parse_poly(&v["Q"].to_string()).unwrap();
    let s: MatrixPolynomial<Q> = parse_poly(&v["S"].to_string()).unwrap();
    assert_eq!(p.try_mul(&q).unwrap(), s.try_mul(&p).unwrap());

    let v_path = fixture("quartic.json");
    let vv: MatrixPolynomial<Q> = parse_poly(&std::fs::read_to_string(&v_path).unwrap()).unwrap();
    for side in ["left", "right"] {
        let (code, d) = json_of(&["divide", v_path.to_str().unwrap(), p_path.to_str().unwrap(), "--side", side]);
        assert_eq!(code, 0);
        let a: MatrixPolynomial<Q> = parse_poly(&d["quotient"].to_string()).unwrap();
        let r: MatrixPolynomial<Q> = parse_poly(&d["remainder"].to_string()).unwrap();
        let prod = if side == "left" { a.try_mul(&p) } else { p.try_mul(&a) }.unwrap();
        assert_eq!(prod.try_add(&r).unwrap(), vv);
    }
}

#[test]
fn companion_and_structure_errors() {
    let p_path = fixture("monic_quadratic.json");
    let (code, v) = json_of(&["companion", p_path.to_str().unwrap(), "--which", "2"]);
    assert_eq!(code, 0);
    let c: Matrix<Q> = matrix_from_value(&v["matrix"]).unwrap();
    assert_eq!(c[(0, 2)], Q::from(1));
    let (code, v) = json_of(&["bdl", p_path.to_str().unwrap(), "--v", "1", "--structure", "hermitian"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "structure_precondition");
    let out = polylin(&["companion", fixture("cubic_chebyshev.json").to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("non_monomial_basis"));
}

#[test]
fn condition_report() {
    let path = fixture("cheb_f64.json");
    let (code, v) = json_of(&["condition", path.to_str().unwrap(), "--trials", "2", "--seed", "7"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["schema"], "v1");
    assert_eq!(v["passes"], true);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 6);
    let text = polylin(&["condition", path.to_str().unwrap()]);
    assert!(text.stdout.contains("bounds: hold"));
    let out = polylin(&["condition", fixture("cubic_chebyshev.json").to_str().unwrap()]);
    assert_eq!(out.code, 2);
}
