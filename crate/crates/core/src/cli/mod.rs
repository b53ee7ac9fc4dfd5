//! The `polylin` command line.
//!
//! Exit codes: 0 success, 1 mathematical rejection, 2 input error,
//! 3 internal assertion failure. Ansatz and scalar coefficient lists are
//! given in ascending degree (`v_0` first).

pub mod document;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bases::Basis;
use crate::bdl::{bdl_pencil, companion_first, companion_second, matdiv, structured_pencil, Structure};
use crate::bezout::{bezout_commuting, bezout_lt, bezout_onesided, bezout_scalar, BezoutResult};
use crate::blockpoly::{MatrixPolynomial, Pencil, Side};
use crate::conditioning::{bound_report, ConditioningReport};
use crate::dl::{dl_pencil, exclusion_check, recover_ansatz, Ansatz, Exclusion, Recovery, Rejection};
use crate::error::{Error, Result};
use crate::fields::{Field, GaussianRational, Gf, Rational, C64};
use crate::poly::Poly;
use document::{
    matrix_value, parse_pencil, parse_poly, pencil_value, peek_field, poly_value, scalars_value, FieldTag, PRIMES,
};

#[derive(Parser, Debug)]
#[command(name = "polylin", version, about = "Linearizations of matrix polynomials")]
pub struct Cli {
    /// Emit a machine-readable JSON report (schema v1) instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the DL(P, v) pencil and decide whether it is a linearization.
    Dl {
        file: PathBuf,
        /// Ansatz coefficients v_0,…,v_{k−1} in the basis of P.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        ansatz: Vec<String>,
    },
    /// Build BDL(P, v) for a monomial polynomial with invertible leading coefficient.
    Bdl {
        file: PathBuf,
        /// Monomial coefficients c_0,c_1,… of v.
        #[arg(long = "v", value_delimiter = ',', allow_hyphen_values = true)]
        v: Vec<String>,
        /// Apply the structure-preserving transform for this structure.
        #[arg(long)]
        structure: Option<String>,
    },
    /// Bézout matrix of two scalar polynomials or two matrix polynomial files.
    Bezout {
        p1: String,
        p2: String,
        /// Grade for scalar inputs; defaults to the larger degree.
        #[arg(long)]
        grade: Option<usize>,
        /// Field for scalar inputs: rational, gaussian, f64, c64, gf<p>.
        #[arg(long, default_value = "rational")]
        field: String,
        /// Basis for scalar inputs (coefficients are always read as monomials).
        #[arg(long, value_enum, default_value_t = ScalarBasis::Monomial)]
        basis: ScalarBasis,
        /// Lerer–Tismenetsky Bézoutian with multipliers read from two files.
        #[arg(long, num_args = 2, value_names = ["M1", "M2"], conflicts_with_all = ["onesided", "commuting"])]
        lt: Option<Vec<PathBuf>>,
        /// One-sided (P1(y)P2(x) − P1(x)P2(y))/(x − y).
        #[arg(long, conflicts_with = "commuting")]
        onesided: bool,
        /// Commuting pair, M1 = P2 and M2 = P1 (the default for files).
        #[arg(long)]
        commuting: bool,
    },
    /// First or second companion matrix.
    Companion {
        file: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Divide V by P: V = A·P + R (left) or V = P·A + R (right).
    Divide {
        v: PathBuf,
        p: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Recover the ansatz of a pencil in DL(P), or reject it.
    Check { pencil: PathBuf, p: PathBuf },
    /// Conditioning report for DL(P, 1) of a Chebyshev f64 polynomial.
    Condition {
        file: PathBuf,
        /// Random first-order perturbation experiments per eigenvalue in [−1, 1].
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ScalarBasis {
    Monomial,
    Chebyshev,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Command output before the exit code is decided.
struct Report {
    text: String,
    json: Value,
    rejected: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, rejected: false }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TheoremViolation(_) => 3,
        _ => 2,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(&cli.command) {
        Ok(r) => {
            let code = if r.rejected { 1 } else { 0 };
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&r.json).expect("reports serialize");
                s.push('\n');
                s
            } else {
                r.text
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let stderr = format!("error[{}]: {e}\n", e.kind());
            let stdout = if cli.json {
                let v = json!({ "schema": document::SCHEMA, "error": { "kind": e.kind(), "message": e.to_string() } });
                format!("{}\n", serde_json::to_string_pretty(&v).expect("reports serialize"))
            } else {
                String::new()
            };
            Outcome { code: exit_code(&e), stdout, stderr }
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

/// Calls `$f::<F>($args…)` with `F` chosen by a [`FieldTag`].
macro_rules! with_field {
    ($tag:expr, $f:ident $args:tt) => {
        match $tag {
            FieldTag::Rational => $f::<Rational> $args,
            FieldTag::GaussianRational => $f::<GaussianRational> $args,
            FieldTag::F64 => $f::<f64> $args,
            FieldTag::C64 => $f::<C64> $args,
            FieldTag::Gf(p) => with_field!(@gf p, $f $args; 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 257, 65537, 2147483647),
        }
    };
    (@gf $p:ident, $f:ident $args:tt; $($q:literal),*) => {
        match $p {
            $($q => $f::<Gf<$q>> $args,)*
            other => Err(Error::Parse(format!("GF({other}) is not available; supported primes are {PRIMES:?}"))),
        }
    };
}

fn dispatch(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Dl { file, ansatz } => {
            let text = read(file)?;
            with_field!(peek_field(&text)?, cmd_dl(&text, ansatz))
        }
        Command::Bdl { file, v, structure } => {
            let text = read(file)?;
            let structure = structure.as_deref().map(Structure::parse).transpose()?;
            with_field!(peek_field(&text)?, cmd_bdl(&text, v, structure))
        }
        Command::Bezout { p1, p2, grade, field, basis, lt, onesided, .. } => {
            let files = [p1, p2].map(|s| std::path::Path::new(s).is_file());
            if files[0] && files[1] {
                let a = read(&PathBuf::from(p1))?;
                let b = read(&PathBuf::from(p2))?;
                let multipliers = match lt {
                    Some(m) => Some((read(&m[0])?, read(&m[1])?)),
                    None => None,
                };
                let mode = match (&multipliers, onesided) {
                    (Some((m1, m2)), _) => Mode::Lt(m1, m2),
                    (None, true) => Mode::OneSided,
                    (None, false) => Mode::Commuting,
                };
                with_field!(peek_field(&a)?, cmd_bezout_files(&a, &b, &mode))
            } else if files[0] || files[1] {
                Err(Error::Parse("give two scalar polynomials or two matrix polynomial files".into()))
            } else if lt.is_some() || *onesided {
                Err(Error::Parse("--lt and --onesided need matrix polynomial files".into()))
            } else {
                with_field!(FieldTag::parse(field)?, cmd_bezout_scalar(p1, p2, *grade, *basis))
            }
        }
        Command::Companion { file, which } => {
            let text = read(file)?;
            with_field!(peek_field(&text)?, cmd_companion(&text, *which))
        }
        Command::Divide { v, p, side } => {
            let (v, p) = (read(v)?, read(p)?);
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            with_field!(peek_field(&v)?, cmd_divide(&v, &p, side))
        }
        Command::Check { pencil, p } => {
            let (l, p) = (read(pencil)?, read(p)?);
            with_field!(peek_field(&l)?, cmd_check(&l, &p))
        }
        Command::Condition { file, trials, seed } => cmd_condition(&read(file)?, *trials, *seed),
    }
}

fn scalars<F: Field>(items: &[String]) -> Result<Vec<F>> {
    items.iter().map(|s| F::parse_literal(s)).collect()
}

fn poly_text<F: Field>(name: &str, p: &MatrixPolynomial<F>) -> String {
    let mut s = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        let _ = writeln!(s, "{name}_{i} =");
        let _ = write!(s, "{c}");
    }
    s
}

fn pencil_text<F: Field>(l: &Pencil<F>) -> String {
    format!("X =\n{}\nY =\n{}", l.x, l.y)
}

fn cmd_dl<F: Field>(text: &str, ansatz: &[String]) -> Result<Report> {
    let p = parse_poly::<F>(text)?;
    let v = Ansatz::new(p.basis().clone(), scalars(ansatz)?);
    let l = dl_pencil(&p, &v)?;
    let (verdict, detail, rejected) = if F::EXACT {
        match exclusion_check(&p, &v)? {
            Exclusion::Linearization => ("linearization", Value::Null, false),
            Exclusion::SharedFiniteRoot(g) => (
                "shared-finite-root",
                json!({ "gcd": scalars_value(g.coeffs()) }),
                true,
            ),
            Exclusion::SharedInfiniteEigenvalue => ("shared-infinite-eigenvalue", Value::Null, true),
        }
    } else {
        ("unchecked", Value::Null, false)
    };
    let mut s = pencil_text(&l);
    let _ = writeln!(s, "\nansatz (ascending): {}", join(v.coeffs()));
    let _ = match verdict {
        "linearization" => writeln!(s, "verdict: linearization"),
        "shared-finite-root" => writeln!(
            s,
            "verdict: not a linearization, v and det P share the roots of {}",
            Poly::new(scalars::<F>(&json_strings(&detail["gcd"]))?)
        ),
        "shared-infinite-eigenvalue" => writeln!(s, "verdict: not a linearization, v and P share the eigenvalue ∞"),
        _ => writeln!(s, "verdict: unchecked (floating point field)"),
    };
    Ok(Report {
        text: s,
        json: json!({
            "schema": document::SCHEMA,
            "command": "dl",
            "ansatz": scalars_value(v.coeffs()),
            "pencil": pencil_value(&l),
            "verdict": verdict,
            "detail": detail,
        }),
        rejected,
    })
}

fn json_strings(v: &Value) -> Vec<String> {
    v.as_array()
        .map(|a| a.iter().filter_map(|x| x.as_str().map(String::from)).collect())
        .unwrap_or_default()
}

fn join<F: Field>(v: &[F]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn cmd_bdl<F: Field>(text: &str, v: &[String], structure: Option<Structure>) -> Result<Report> {
    let p = parse_poly::<F>(text)?;
    let v = Poly::new(scalars(v)?);
    let b = bdl_pencil(&p, &v)?;
    let pencil = match structure {
        Some(st) => structured_pencil(&p, &v, st)?,
        None => b.pencil.clone(),
    };
    let mut s = String::new();
    if let Some(st) = structure {
        let _ = writeln!(s, "structure: {}", st.name());
    }
    let _ = writeln!(s, "{}", pencil_text(&pencil));
    for (name, m) in [("Q", &b.q), ("S", &b.s), ("A", &b.a)] {
        s.push_str(&poly_text(name, m));
    }
    Ok(Report::ok(
        s,
        json!({
            "schema": document::SCHEMA,
            "command": "bdl",
            "v": scalars_value(v.coeffs()),
            "structure": structure.map(Structure::name),
            "pencil": pencil_value(&pencil),
            "Q": poly_value(&b.q),
            "S": poly_value(&b.s),
            "A": poly_value(&b.a),
        }),
    ))
}

enum Mode<'a> {
    Commuting,
    OneSided,
    Lt(&'a str, &'a str),
}

fn bezout_report<F: Field>(b: &BezoutResult<F>, kind: &str) -> Result<Report> {
    let kernel = b.kernel_dim()?;
    let m = b.scalar_matrix();
    let det = if m.is_square() { Some(m.determinant()?) } else { None };
    let mut s = format!("{m}");
    let _ = writeln!(s, "kernel dimension: {kernel}");
    if let Some(d) = &det {
        let _ = writeln!(s, "determinant: {d}");
    }
    Ok(Report::ok(
        s,
        json!({
            "schema": document::SCHEMA,
            "command": "bezout",
            "kind": kind,
            "n": b.matrix.n(),
            "matrix": matrix_value(m),
            "kernel_dim": kernel,
            "determinant": det.map(|d| d.to_string()),
        }),
    ))
}

fn cmd_bezout_scalar<F: Field>(p1: &str, p2: &str, grade: Option<usize>, basis: ScalarBasis) -> Result<Report> {
    let a = Poly::<F>::parse(p1)?;
    let b = Poly::<F>::parse(p2)?;
    let k = grade.unwrap_or_else(|| a.degree().unwrap_or(0).max(b.degree().unwrap_or(0)));
    let basis = match basis {
        ScalarBasis::Monomial => Basis::Monomial,
        ScalarBasis::Chebyshev => Basis::ChebyshevT,
    };
    let to_basis = |p: &Poly<F>| basis.from_monomial(&p.padded(k));
    if [&a, &b].iter().any(|p| p.degree().unwrap_or(0) > k) {
        return Err(Error::GradeTooSmall {
            grade: k,
            degree: a.degree().unwrap_or(0).max(b.degree().unwrap_or(0)),
        });
    }
    bezout_report(&bezout_scalar(&to_basis(&a)?, &to_basis(&b)?, k, &basis)?, "scalar")
}

fn cmd_bezout_files<F: Field>(a: &str, b: &str, mode: &Mode) -> Result<Report> {
    let p1 = parse_poly::<F>(a)?;
    let p2 = parse_poly::<F>(b)?;
    match mode {
        Mode::Commuting => bezout_report(&bezout_commuting(&p1, &p2)?, "commuting"),
        Mode::OneSided => bezout_report(&bezout_onesided(&p1, &p2)?, "one-sided"),
        Mode::Lt(m1, m2) => bezout_report(&bezout_lt(&p1, &p2, &parse_poly(m1)?, &parse_poly(m2)?)?, "lerer-tismenetsky"),
    }
}

fn cmd_companion<F: Field>(text: &str, which: u8) -> Result<Report> {
    let p = parse_poly::<F>(text)?;
    let c = if which == 1 { companion_first(&p)? } else { companion_second(&p)? };
    Ok(Report::ok(
        format!("{c}"),
        json!({ "schema": document::SCHEMA, "command": "companion", "which": which, "matrix": matrix_value(&c) }),
    ))
}

fn cmd_divide<F: Field>(v: &str, p: &str, side: Side) -> Result<Report> {
    let d = matdiv(&parse_poly::<F>(v)?, &parse_poly::<F>(p)?, side)?;
    let side_name = if side == Side::Left { "left" } else { "right" };
    let mut s = format!(
        "{}\n",
        if side == Side::Left { "V = A·P + R" } else { "V = P·A + R" }
    );
    s.push_str(&poly_text("A", &d.quotient));
    s.push_str(&poly_text("R", &d.remainder));
    Ok(Report::ok(
        s,
        json!({
            "schema": document::SCHEMA,
            "command": "divide",
            "side": side_name,
            "quotient": poly_value(&d.quotient),
            "remainder": poly_value(&d.remainder),
        }),
    ))
}

fn cmd_check<F: Field>(l: &str, p: &str) -> Result<Report> {
    let l = parse_pencil::<F>(l)?;
    let p = parse_poly::<F>(p)?;
    Ok(match recover_ansatz(&l, &p)? {
        Recovery::Member(v) => Report::ok(
            format!("in DL(P) with ansatz (ascending): {}\n", join(v.coeffs())),
            json!({ "schema": document::SCHEMA, "command": "check", "member": true, "ansatz": scalars_value(v.coeffs()) }),
        ),
        Recovery::Rejected(r) => {
            let (text, witness) = match &r {
                Rejection::NotInL1 { block_row } => (
                    format!("not in L1(P): block row {block_row} of X ⊞→ Y is not a multiple of [P_k … P_0]"),
                    json!({ "space": "L1", "block_row": block_row }),
                ),
                Rejection::NotInL2 { block_row } => (
                    format!("not in L2(P): block row {block_row} of (X ⊞↓ Y)^B is not a multiple of [P_k … P_0]"),
                    json!({ "space": "L2", "block_row": block_row }),
                ),
                Rejection::AnsatzMismatch { right, left } => (
                    format!("in L1(P) and L2(P) with different ansatz vectors [{}] and [{}]", right.join(", "), left.join(", ")),
                    json!({ "space": "DL", "right": right, "left": left }),
                ),
            };
            Report {
                text: format!("{text}\n"),
                json: json!({ "schema": document::SCHEMA, "command": "check", "member": false, "witness": witness }),
                rejected: true,
            }
        }
    })
}

fn condition_text(r: &ConditioningReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n = {}, k = {}, seed = {}, grid = {}", r.n, r.k, r.seed, r.grid);
    let _ = writeln!(s, "‖P‖ = {:.6e}", r.p_norm);
    let _ = writeln!(s, "‖L‖ = {:.6e}  bound {:.6e}  margin {:.6e}", r.l_norm, r.l_bound, r.norm_margin());
    let _ = writeln!(s, "‖X‖ = {:.6e}  ‖Y‖ = {:.6e}  bound {:.6e}", r.x_norm, r.y_norm, r.coefficient_bound);
    let _ = writeln!(s, "ratio bound {:.6e}", r.ratio_bound);
    let _ = writeln!(s, "{:>24} {:>24} {:>12} {:>12} {:>10}", "re λ", "im λ", "r̂", "residual", "perturb");
    for e in &r.eigenvalues {
        let ratio = e.ratio.map_or("-".to_string(), |x| format!("{x:.4e}"));
        let pert = if e.perturbations.is_empty() {
            "-".to_string()
        } else {
            format!("{}/{}", e.perturbations.iter().filter(|c| c.passes).count(), e.perturbations.len())
        };
        let _ = writeln!(s, "{:>24.16e} {:>24.16e} {:>12} {:>12.2e} {:>10}", e.re, e.im, ratio, e.residual, pert);
    }
    let _ = writeln!(s, "bounds: {}", if r.passes { "hold" } else { "VIOLATED" });
    s
}

fn cmd_condition(text: &str, trials: usize, seed: u64) -> Result<Report> {
    let tag = peek_field(text)?;
    if tag != FieldTag::F64 {
        return Err(Error::Parse(format!("condition needs an f64 document, got {}", tag.to_json())));
    }
    let p = parse_poly::<f64>(text)?;
    let r = bound_report(&p, trials, seed)?;
    let perturbation_failed = r.eigenvalues.iter().flat_map(|e| &e.perturbations).any(|c| !c.passes);
    if !r.passes {
        return Err(Error::TheoremViolation(format!(
            "conditioning bound violated: max r̂ = {:?}, ‖L‖ = {} > {}",
            r.max_ratio, r.l_norm, r.l_bound
        )));
    }
    let mut json = serde_json::to_value(&r).expect("reports serialize");
    json["command"] = json!("condition");
    Ok(Report {
        text: condition_text(&r),
        json,
        rejected: perturbation_failed,
    })
}
