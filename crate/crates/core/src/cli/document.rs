//! JSON documents, schema `v1`.
//!
//! A matrix polynomial document lists coefficients in ascending order,
//! `coeffs[i] = P_i`, each an `n × n` array of scalar literals:
//!
//! ```json
//! {"schema": "v1", "field": "rational", "basis": "chebyshev", "n": 1,
//!  "grade": 2, "coeffs": [[["1"]], [["0"]], [["1/2"]]]}
//! ```
//!
//! Pencil documents carry the full `nk × nk` matrices `X` and `Y` of
//! `λX + Y`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bases::Basis;
use crate::blockpoly::{BlockMatrix, MatrixPolynomial, Pencil};
use crate::error::{Error, Result};
use crate::fields::Field;
use crate::matrix::Matrix;

pub const SCHEMA: &str = "v1";

/// Primes with a compiled `GF(p)` instance.
pub const PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 257, 65537, 2147483647];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldTag {
    Rational,
    Gf(u64),
    GaussianRational,
    F64,
    C64,
}

impl FieldTag {
    pub fn of<F: Field>() -> FieldTag {
        match F::name().as_str() {
            "rational" => FieldTag::Rational,
            "gaussian-rational" => FieldTag::GaussianRational,
            "f64" => FieldTag::F64,
            "c64" => FieldTag::C64,
            _ => FieldTag::Gf(F::characteristic()),
        }
    }

    /// Command-line spelling: `rational`, `gaussian`, `f64`, `c64`, `gf7`.
    pub fn parse(s: &str) -> Result<FieldTag> {
        let tag = match s.to_ascii_lowercase().as_str() {
            "rational" | "q" => FieldTag::Rational,
            "gaussian" | "gaussian-rational" => FieldTag::GaussianRational,
            "f64" | "real" => FieldTag::F64,
            "c64" | "complex" => FieldTag::C64,
            other => {
                let digits = other
                    .strip_prefix("gf")
                    .map(|d| d.trim_matches(|c| c == '(' || c == ')'))
                    .ok_or_else(|| Error::Parse(format!("unknown field {s:?}")))?;
                FieldTag::Gf(digits.parse().map_err(|_| Error::Parse(format!("unknown field {s:?}")))?)
            }
        };
        tag.check()?;
        Ok(tag)
    }

    fn check(self) -> Result<()> {
        match self {
            FieldTag::Gf(p) if !PRIMES.contains(&p) => Err(Error::Parse(format!(
                "GF({p}) is not available; supported primes are {PRIMES:?}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn to_json(self) -> Value {
        match self {
            FieldTag::Rational => json!("rational"),
            FieldTag::Gf(p) => json!({ "gf": p }),
            FieldTag::GaussianRational => json!("gaussian-rational"),
            FieldTag::F64 => json!("f64"),
            FieldTag::C64 => json!("c64"),
        }
    }

    pub fn from_json(v: &Value) -> Result<FieldTag> {
        let tag = match v {
            Value::String(s) => match s.as_str() {
                "rational" => FieldTag::Rational,
                "gaussian-rational" => FieldTag::GaussianRational,
                "f64" => FieldTag::F64,
                "c64" => FieldTag::C64,
                _ => return Err(Error::Parse(format!("unknown field tag {s:?}"))),
            },
            Value::Object(m) => match m.get("gf").and_then(Value::as_u64) {
                Some(p) if m.len() == 1 => FieldTag::Gf(p),
                _ => return Err(Error::Parse(format!("unknown field tag {v}"))),
            },
            _ => return Err(Error::Parse(format!("unknown field tag {v}"))),
        };
        tag.check()?;
        Ok(tag)
    }
}

/// Scalar literal: a string, or a bare JSON number for convenience.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Literal {
    Text(String),
    Number(serde_json::Number),
}

impl Literal {
    fn parse<F: Field>(&self) -> Result<F> {
        match self {
            Literal::Text(s) => F::parse_literal(s),
            Literal::Number(n) => F::parse_literal(&n.to_string()),
        }
    }
}

type Rows = Vec<Vec<Literal>>;

#[derive(Debug, Serialize, Deserialize)]
struct PolyDoc {
    #[serde(default = "schema")]
    schema: String,
    field: Value,
    basis: Value,
    n: usize,
    grade: usize,
    coeffs: Vec<Rows>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PencilDoc {
    #[serde(default = "schema")]
    schema: String,
    field: Value,
    basis: Value,
    n: usize,
    k: usize,
    #[serde(rename = "X")]
    x: Rows,
    #[serde(rename = "Y")]
    y: Rows,
}

fn schema() -> String {
    SCHEMA.into()
}

fn check_schema(s: &str) -> Result<()> {
    if s == SCHEMA {
        Ok(())
    } else {
        Err(Error::Parse(format!("unsupported schema {s:?}, expected {SCHEMA:?}")))
    }
}

fn floats<F: Field>(v: &Value, what: &str) -> Result<Vec<F>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array")))?;
    arr.iter()
        .map(|x| {
            let lit: Literal = serde_json::from_value(x.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            lit.parse()
        })
        .collect()
}

/// `"monomial"`, `"chebyshev"`, `"legendre"`, `{"orthogonal": {"a", "b",
/// "c"}}` or `{"degree-graded": [[…], …]}`. Legendre is expanded to its
/// recurrence for `len` polynomials.
pub fn basis_from_json<F: Field>(v: &Value, len: usize) -> Result<Basis<F>> {
    match v {
        Value::String(s) => match s.as_str() {
            "monomial" => Ok(Basis::Monomial),
            "chebyshev" => Ok(Basis::ChebyshevT),
            "legendre" => Basis::legendre(len),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        },
        Value::Object(m) if m.len() == 1 => {
            if let Some(o) = m.get("orthogonal") {
                let get = |key: &str| -> Result<Vec<F>> {
                    floats(o.get(key).ok_or_else(|| Error::Parse(format!("orthogonal basis lacks {key:?}")))?, key)
                };
                Basis::orthogonal(get("a")?, get("b")?, get("c")?)
            } else if let Some(t) = m.get("degree-graded") {
                let rows = t
                    .as_array()
                    .ok_or_else(|| Error::Parse("degree-graded table must be an array".into()))?;
                Basis::degree_graded(rows.iter().map(|r| floats(r, "degree-graded row")).collect::<Result<_>>()?)
            } else {
                Err(Error::Parse(format!("unknown basis {v}")))
            }
        }
        _ => Err(Error::Parse(format!("unknown basis {v}"))),
    }
}

pub fn basis_to_json<F: Field>(b: &Basis<F>) -> Value {
    let lits = |v: &[F]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    match b {
        Basis::Monomial => json!("monomial"),
        Basis::ChebyshevT => json!("chebyshev"),
        Basis::Orthogonal { a, b, c } => json!({ "orthogonal": { "a": lits(a), "b": lits(b), "c": lits(c) } }),
        Basis::DegreeGraded { table } => {
            json!({ "degree-graded": table.iter().map(|r| lits(r)).collect::<Vec<_>>() })
        }
    }
}

fn rows_of<F: Field>(m: &Matrix<F>) -> Rows {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(|c| Literal::Text(c.to_string())).collect())
        .collect()
}

fn matrix_of<F: Field>(rows: &Rows, rows_n: usize, cols_n: usize, what: &str) -> Result<Matrix<F>> {
    let mismatch = || Error::DimensionMismatch {
        operation: "document",
        detail: format!("{what} must be {rows_n}x{cols_n}"),
    };
    if rows.len() != rows_n || rows.iter().any(|r| r.len() != cols_n) {
        return Err(mismatch());
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(Literal::parse).collect::<Result<Vec<F>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows_n == 0 {
        return Ok(Matrix::zeros(0, cols_n));
    }
    Matrix::from_rows(parsed)
}

/// Field tag of a document without parsing the rest.
pub fn peek_field(text: &str) -> Result<FieldTag> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    FieldTag::from_json(v.get("field").ok_or_else(|| Error::Parse("document lacks \"field\"".into()))?)
}

fn expect_field<F: Field>(v: &Value) -> Result<()> {
    let tag = FieldTag::from_json(v)?;
    if tag == FieldTag::of::<F>() {
        Ok(())
    } else {
        Err(Error::Parse(format!("document field {v} differs from {}", F::name())))
    }
}

pub fn parse_poly<F: Field>(text: &str) -> Result<MatrixPolynomial<F>> {
    let doc: PolyDoc = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid document: {e}")))?;
    check_schema(&doc.schema)?;
    expect_field::<F>(&doc.field)?;
    if doc.coeffs.len() != doc.grade + 1 {
        return Err(Error::DimensionMismatch {
            operation: "document",
            detail: format!("grade {} needs {} coefficients, got {}", doc.grade, doc.grade + 1, doc.coeffs.len()),
        });
    }
    let basis = basis_from_json(&doc.basis, doc.grade + 1)?;
    let coeffs = doc
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| matrix_of(c, doc.n, doc.n, &format!("coefficient {i}")))
        .collect::<Result<Vec<_>>>()?;
    MatrixPolynomial::new(basis, coeffs)
}

fn poly_doc<F: Field>(p: &MatrixPolynomial<F>) -> PolyDoc {
    PolyDoc {
        schema: schema(),
        field: FieldTag::of::<F>().to_json(),
        basis: basis_to_json(p.basis()),
        n: p.n(),
        grade: p.grade(),
        coeffs: p.coeffs().iter().map(rows_of).collect(),
    }
}

pub fn poly_value<F: Field>(p: &MatrixPolynomial<F>) -> Value {
    serde_json::to_value(poly_doc(p)).expect("documents serialize")
}

pub fn serialize_poly<F: Field>(p: &MatrixPolynomial<F>) -> String {
    serde_json::to_string_pretty(&poly_doc(p)).expect("documents serialize")
}

pub fn parse_pencil<F: Field>(text: &str) -> Result<Pencil<F>> {
    let doc: PencilDoc = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid document: {e}")))?;
    check_schema(&doc.schema)?;
    expect_field::<F>(&doc.field)?;
    if doc.n == 0 {
        return Err(Error::Parse("n must be positive".into()));
    }
    let size = doc.n * doc.k;
    let basis = basis_from_json(&doc.basis, doc.k + 1)?;
    let x = BlockMatrix::from_matrix(matrix_of(&doc.x, size, size, "X")?, doc.n)?;
    let y = BlockMatrix::from_matrix(matrix_of(&doc.y, size, size, "Y")?, doc.n)?;
    Pencil::new(x, y, basis)
}

fn pencil_doc<F: Field>(l: &Pencil<F>) -> PencilDoc {
    PencilDoc {
        schema: schema(),
        field: FieldTag::of::<F>().to_json(),
        basis: basis_to_json(&l.basis),
        n: l.n(),
        k: l.k(),
        x: rows_of(l.x.matrix()),
        y: rows_of(l.y.matrix()),
    }
}

pub fn pencil_value<F: Field>(l: &Pencil<F>) -> Value {
    serde_json::to_value(pencil_doc(l)).expect("documents serialize")
}

pub fn serialize_pencil<F: Field>(l: &Pencil<F>) -> String {
    serde_json::to_string_pretty(&pencil_doc(l)).expect("documents serialize")
}

pub fn matrix_value<F: Field>(m: &Matrix<F>) -> Value {
    serde_json::to_value(rows_of(m)).expect("documents serialize")
}

/// Inverse of [`matrix_value`].
pub fn matrix_from_value<F: Field>(v: &Value) -> Result<Matrix<F>> {
    let rows: Rows = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let cols = rows.first().map_or(0, Vec::len);
    matrix_of(&rows, rows.len(), cols, "matrix")
}

pub fn scalars_value<F: Field>(v: &[F]) -> Value {
    json!(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{GaussianRational, Gf, Rational, C64};
    use crate::random::{Sample, Sampler};
    use proptest::prelude::*;

    fn round_trip<F: Sample>(basis: Basis<F>, seed: u64) {
        let p = Sampler::new(seed).matrix_polynomial::<F>(basis, 2, 3);
        let text = serialize_poly(&p);
        let q: MatrixPolynomial<F> = parse_poly(&text).unwrap();
        assert_eq!(q, p);
        assert_eq!(serialize_poly(&q), text);
    }

    #[test]
    fn poly_round_trips() {
        round_trip::<Rational>(Basis::ChebyshevT, 1);
        round_trip::<Rational>(Basis::legendre(4).unwrap(), 2);
        round_trip::<Gf<7>>(Basis::Monomial, 3);
        round_trip::<GaussianRational>(Basis::Monomial, 4);
        round_trip::<f64>(Basis::ChebyshevT, 5);
        round_trip::<C64>(Basis::Monomial, 6);
    }

    #[test]
    fn key_order_and_tags() {
        let p = Sampler::new(1).matrix_polynomial::<Gf<2>>(Basis::Monomial, 1, 1);
        let text = serde_json::to_string(&poly_doc(&p)).unwrap();
        assert!(text.starts_with(r#"{"schema":"v1","field":{"gf":2},"basis":"monomial","n":1,"grade":1,"coeffs":"#));
        assert_eq!(peek_field(&text).unwrap(), FieldTag::Gf(2));
        assert_eq!(FieldTag::parse("gf2").unwrap(), FieldTag::Gf(2));
        assert!(FieldTag::parse("gf4").is_err());
    }

    #[test]
    fn literals_and_errors() {
        let doc = r#"{"field":"rational","basis":"monomial","n":1,"grade":1,"coeffs":[[["1/2"]],[[3]]]}"#;
        let p: MatrixPolynomial<Rational> = parse_poly(doc).unwrap();
        assert_eq!(p.coeff(0)[(0, 0)], Rational::new(1, 2));
        assert_eq!(p.coeff(1)[(0, 0)], Rational::from(3));
        let bad = doc.replace("\"1/2\"", "\"1/0\"");
        assert!(matches!(parse_poly::<Rational>(&bad), Err(Error::Parse(_))));
        let short = doc.replace("\"grade\":1", "\"grade\":2");
        assert!(matches!(parse_poly::<Rational>(&short), Err(Error::DimensionMismatch { .. })));
        let gf2 = r#"{"field":{"gf":2},"basis":"chebyshev","n":1,"grade":1,"coeffs":[[["1"]],[["1"]]]}"#;
        assert_eq!(parse_poly::<Gf<2>>(gf2), Err(Error::ChebyshevCharacteristic2));
        assert!(parse_poly::<f64>(doc).is_err());
    }

    #[test]
    fn pencil_round_trip() {
        let mut s = Sampler::new(9);
        let l = Pencil::new(s.block_matrix::<Rational>(2, 2, 2), s.block_matrix(2, 2, 2), Basis::ChebyshevT).unwrap();
        let text = serialize_pencil(&l);
        assert_eq!(parse_pencil::<Rational>(&text).unwrap(), l);
    }

    proptest! {
        #[test]
        fn rational_round_trip(seed in 0u64..1000, n in 1usize..3, grade in 0usize..4) {
            let p = Sampler::new(seed).matrix_polynomial::<Rational>(Basis::Monomial, n, grade);
            prop_assert_eq!(parse_poly::<Rational>(&serialize_poly(&p)).unwrap(), p);
        }
    }
}
