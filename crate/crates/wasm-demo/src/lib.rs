//! Browser bindings for three operations: the DL pencil builder, the
//! scalar Bézout matrix and the conditioning explorer.
//!
//! Each binding is a thin wrapper over a plain function returning JSON
//! text, so the logic is testable off the browser.

use polylin::cli::document::{matrix_value, parse_poly, pencil_value, scalars_value, SCHEMA};
use polylin::conditioning::bound_report;
use polylin::dl::{dl_pencil, exclusion_check, Ansatz, Exclusion};
use polylin::random::Sampler;
use polylin::{bezout::bezout_scalar, Basis, Field, Poly, Rational};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn msg(e: polylin::Error) -> String {
    format!("{}: {e}", e.kind())
}

fn parse_ansatz(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Rational::parse_literal(s).map_err(msg))
        .collect()
}

/// DL pencil of a rational polynomial document, ansatz given ascending.
pub fn dl(document: &str, ansatz: &str) -> Result<String, String> {
    let p = parse_poly::<Rational>(document).map_err(msg)?;
    let v = Ansatz::new(p.basis().clone(), parse_ansatz(ansatz)?);
    let l = dl_pencil(&p, &v).map_err(msg)?;
    let verdict = match exclusion_check(&p, &v).map_err(msg)? {
        Exclusion::Linearization => json!("linearization"),
        Exclusion::SharedFiniteRoot(g) => json!({ "shared-finite-root": scalars_value(g.coeffs()) }),
        Exclusion::SharedInfiniteEigenvalue => json!("shared-infinite-eigenvalue"),
    };
    let out = json!({
        "schema": SCHEMA,
        "pencil": pencil_value(&l),
        "X": l.x.to_string(),
        "Y": l.y.to_string(),
        "verdict": verdict,
    });
    Ok(out.to_string())
}

/// Scalar Bézout matrix of two monomial-grammar polynomials. A negative
/// grade means the larger degree.
pub fn bezout(p1: &str, p2: &str, grade: i32, chebyshev: bool) -> Result<String, String> {
    let a = Poly::<Rational>::parse(p1).map_err(msg)?;
    let b = Poly::<Rational>::parse(p2).map_err(msg)?;
    let deg = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    let k = usize::try_from(grade).unwrap_or(deg);
    if k < deg {
        return Err(format!("grade {k} is below degree {deg}"));
    }
    let basis = if chebyshev { Basis::ChebyshevT } else { Basis::Monomial };
    let a = basis.from_monomial(&a.padded(k)).map_err(msg)?;
    let b = basis.from_monomial(&b.padded(k)).map_err(msg)?;
    let r = bezout_scalar(&a, &b, k, &basis).map_err(msg)?;
    let m = r.scalar_matrix();
    let det = if m.rows() > 0 { Some(m.determinant().map_err(msg)?.to_string()) } else { None };
    let out = json!({
        "schema": SCHEMA,
        "matrix": matrix_value(m),
        "text": m.to_string(),
        "kernel_dim": r.kernel_dim().map_err(msg)?,
        "determinant": det,
    });
    Ok(out.to_string())
}

/// Conditioning report for a seeded random Chebyshev polynomial.
pub fn condition(seed: u64, n: usize, k: usize, trials: usize) -> Result<String, String> {
    if !(1..=4).contains(&n) || !(1..=6).contains(&k) {
        return Err("size must satisfy 1 ≤ n ≤ 4 and 1 ≤ k ≤ 6".into());
    }
    let p = Sampler::new(seed).matrix_polynomial::<f64>(Basis::ChebyshevT, n, k);
    let r = bound_report(&p, trials, seed).map_err(msg)?;
    serde_json::to_string(&r).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = dlPencil)]
pub fn dl_js(document: &str, ansatz: &str) -> Result<String, JsValue> {
    dl(document, ansatz).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = bezoutMatrix)]
pub fn bezout_js(p1: &str, p2: &str, grade: i32, chebyshev: bool) -> Result<String, JsValue> {
    bezout(p1, p2, grade, chebyshev).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = conditionReport)]
pub fn condition_js(seed: u32, n: u32, k: u32, trials: u32) -> Result<String, JsValue> {
    condition(seed.into(), n as usize, k as usize, trials as usize).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    const CUBIC: &str = r#"{"field":"rational","basis":"chebyshev","n":1,"grade":3,
        "coeffs":[[["1"]],[["0"]],[["-2"]],[["1"]]]}"#;

    #[test]
    fn dl_builder() {
        let v: Value = serde_json::from_str(&dl(CUBIC, "1,0,0").unwrap()).unwrap();
        assert_eq!(v["verdict"], "linearization");
        assert_eq!(v["pencil"]["k"], 3);
        assert!(dl(CUBIC, "1,x").is_err());
        assert!(dl("{}", "1").is_err());
    }

    #[test]
    fn scalar_bezout() {
        let v: Value = serde_json::from_str(&bezout("x^2", "x+1", 3, false).unwrap()).unwrap();
        assert_eq!(v["kernel_dim"], 1);
        let v: Value = serde_json::from_str(&bezout("x^2-1", "x-1", -1, false).unwrap()).unwrap();
        assert_eq!(v["kernel_dim"], 1);
        assert_eq!(v["determinant"], "0");
        assert!(bezout("x^3", "1", 2, true).is_err());
    }

    #[test]
    fn page_defaults_run() {
        let page = include_str!("../www/index.html");
        let between = |a: &str, b: &str| {
            let start = page.find(a).unwrap() + a.len();
            page[start..start + page[start..].find(b).unwrap()].to_string()
        };
        let doc = between(r#"<textarea id="dl-doc" rows="6">"#, "</textarea>");
        let ansatz = between(r#"<input id="dl-ansatz" value=""#, "\"");
        let v: Value = serde_json::from_str(&dl(&doc, &ansatz).unwrap()).unwrap();
        assert_eq!(v["verdict"], "linearization");
    }

    #[test]
    fn explorer() {
        let v: Value = serde_json::from_str(&condition(3, 2, 3, 1).unwrap()).unwrap();
        assert_eq!(v["passes"], true);
        assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 6);
        assert!(condition(0, 0, 3, 0).is_err());
    }
}
