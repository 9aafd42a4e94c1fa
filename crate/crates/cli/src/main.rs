//! Command-line front end: classification, rationalization certificates,
//! hypergeometric evaluation, antiderivative comparison, and the Fermat
//! desk-scale demonstrations.
//!
//! Exit codes: 0 ok, 1 domain/validation error, 2 syntax error,
//! 3 nonconvergence. Structured (`--json`) output carries no wall-clock
//! metadata, so identical invocations are byte-identical.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chebint_core::{
    antider_closed_n2, antider_hyper, check_certificate, classify, exceptionality_report,
    gauss_2f1, parse_integrand, quadrature_oracle, rationalize, report_tsv, search_triples,
    AntiderivativeResult, ChebyshevClass, CheckReport, DifferentialBinomial, Error,
    FermatTriple, HypergeomParams, Rational, ReportRow, SeriesResult, SubstitutionCertificate,
};

#[derive(Parser)]
#[command(name = "chebint", version, about = "Chebyshev integrability of differential binomials")]
struct Cli {
    /// Emit structured JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    /// Tolerance for series summation and quadrature.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an integrand against Chebyshev's three conditions.
    Classify { expr: String },
    /// Produce and check a rationalizing-substitution certificate.
    Rationalize { expr: String },
    /// Evaluate the Gauss hypergeometric function 2F1(p,q;r;z).
    Hyper {
        #[arg(allow_hyphen_values = true)]
        p: Rational,
        #[arg(allow_hyphen_values = true)]
        q: Rational,
        #[arg(allow_hyphen_values = true)]
        r: Rational,
        #[arg(allow_hyphen_values = true)]
        z: f64,
    },
    /// Evaluate I(x) = integral of (1-t^n)^(1/n) from 0 to x.
    Integrate {
        n: u32,
        x: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Exhaustive exact search for X^n + Y^n = Z^n with Z bounded.
    FltScan { n: u32, z_max: u64 },
    /// Chebyshev class of the Fermat-family integrand for each n in a range.
    Report { n_lo: u32, n_hi: u32 },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Hyper,
    Closed,
    Quad,
    All,
}

/// 15 significant digits, for reproducible text output.
fn g15(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v:.14e}")
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Syntax { .. } => 2,
        Error::NonConvergence(_) => 3,
        _ => 1,
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: String) {
    if json {
        println!("{}", serde_json::to_string(value).expect("serializable"));
    } else {
        print!("{text}");
    }
}

#[derive(Serialize)]
struct ClassifyOut {
    expr: String,
    binomial: DifferentialBinomial,
    class: ChebyshevClass,
}

fn cmd_classify(expr: &str, json: bool) -> Result<(), Error> {
    let db = parse_integrand(expr)?;
    let class = classify(&db);
    let mut text = format!(
        "integrand: {db}\na = {}, b = {}, c = {}, alpha = {}, beta = {}\n",
        db.a, db.b, db.c, db.alpha, db.beta
    );
    for (name, w) in [
        ("case1 (c)", class.case1),
        ("case2 ((a+1)/b)", class.case2),
        ("case3 ((a+1)/b + c)", class.case3),
    ] {
        if let Some(w) = w {
            text.push_str(&format!("{name}: witness {w}\n"));
        }
    }
    text.push_str(&format!(
        "elementary: {}\n",
        if class.elementary { "yes" } else { "no" }
    ));
    let out = ClassifyOut {
        expr: db.to_string(),
        binomial: db,
        class,
    };
    emit(json, &out, text);
    Ok(())
}

#[derive(Serialize)]
struct RationalizeOut {
    expr: String,
    class: ChebyshevClass,
    certificate: SubstitutionCertificate,
    check: CheckReport,
}

fn cmd_rationalize(expr: &str, json: bool) -> Result<(), Error> {
    let db = parse_integrand(expr)?;
    let class = classify(&db);
    let cert = rationalize(&db, &class)?;
    let check = check_certificate(&db, &cert, 100)?;
    let text = format!(
        "integrand: {db}\ncase: {:?} (root order m = {})\nsubstitution: {}\ntransformed: {}\ndomain: x in [{}, {}] -> t in [{}, {}]\ncheck: max_rel_err = {} over 100 samples -> {}\n",
        cert.case_tag,
        cert.m,
        cert.forward_map,
        cert.transformed,
        g15(cert.domain_map.x_lo),
        g15(cert.domain_map.x_hi),
        g15(cert.domain_map.t_lo),
        g15(cert.domain_map.t_hi),
        g15(check.max_rel_err),
        if check.pass { "pass" } else { "FAIL" }
    );
    let out = RationalizeOut {
        expr: db.to_string(),
        class,
        certificate: cert,
        check,
    };
    emit(json, &out, text);
    Ok(())
}

#[derive(Serialize)]
struct HyperOut {
    p: Rational,
    q: Rational,
    r: Rational,
    z: f64,
    result: SeriesResult,
}

fn cmd_hyper(p: Rational, q: Rational, r: Rational, z: f64, tol: f64, json: bool) -> Result<(), Error> {
    let params = HypergeomParams {
        p: p.clone(),
        q: q.clone(),
        r: r.clone(),
        z,
    };
    let result = gauss_2f1(&params, tol)?;
    let text = format!(
        "2F1({p}, {q}; {r}; {}) = {}\nterms used: {}, truncation bound: {}\n",
        g15(z),
        g15(result.value),
        result.terms_used,
        g15(result.truncation_bound)
    );
    emit(json, &HyperOut { p, q, r, z, result }, text);
    Ok(())
}

#[derive(Serialize)]
struct IntegrateOut {
    n: u32,
    x: f64,
    results: Vec<AntiderivativeResult>,
    max_discrepancy: Option<f64>,
}

fn cmd_integrate(n: u32, x: f64, method: MethodArg, tol: f64, json: bool) -> Result<(), Error> {
    if n < 2 {
        return Err(Error::Domain("n must be at least 2".into()));
    }
    let mut results = Vec::new();
    match method {
        MethodArg::Hyper => results.push(antider_hyper(n, x, tol)?),
        MethodArg::Closed => {
            if n != 2 {
                return Err(Error::Domain(
                    "the closed form exists only for n = 2".into(),
                ));
            }
            results.push(antider_closed_n2(x)?);
        }
        MethodArg::Quad => results.push(quadrature_oracle(n, x, tol)?),
        MethodArg::All => {
            results.push(antider_hyper(n, x, tol)?);
            if n == 2 {
                results.push(antider_closed_n2(x)?);
            }
            results.push(quadrature_oracle(n, x, tol)?);
        }
    }
    let max_discrepancy = (results.len() > 1).then(|| {
        let mut d = 0.0_f64;
        for i in 0..results.len() {
            for j in i + 1..results.len() {
                d = d.max((results[i].value - results[j].value).abs());
            }
        }
        d
    });
    let mut text = format!("I({}) with n = {n}:\n", g15(x));
    for r in &results {
        text.push_str(&format!(
            "  {:14} {}  (err_est {})\n",
            format!("{:?}:", r.method),
            g15(r.value),
            g15(r.err_est)
        ));
    }
    if let Some(d) = max_discrepancy {
        text.push_str(&format!("max pairwise discrepancy: {}\n", g15(d)));
    }
    emit(
        json,
        &IntegrateOut {
            n,
            x,
            results,
            max_discrepancy,
        },
        text,
    );
    Ok(())
}

#[derive(Serialize)]
struct FltScanOut {
    n: u32,
    z_max: u64,
    count: usize,
    triples: Vec<FermatTriple>,
}

fn cmd_flt_scan(n: u32, z_max: u64, json: bool) -> Result<(), Error> {
    if n < 2 || z_max < 2 {
        return Err(Error::Domain("need n >= 2 and z_max >= 2".into()));
    }
    let triples = search_triples(n, z_max);
    let mut text = format!(
        "{} solution(s) of X^{n} + Y^{n} = Z^{n} with Z <= {z_max}\n",
        triples.len()
    );
    for t in &triples {
        text.push_str(&format!("  ({}, {}, {})\n", t.x, t.y, t.z));
    }
    let out = FltScanOut {
        n,
        z_max,
        count: triples.len(),
        triples,
    };
    emit(json, &out, text);
    Ok(())
}

#[derive(Serialize)]
struct ReportOut {
    n_lo: u32,
    n_hi: u32,
    rows: Vec<ReportRow>,
}

fn cmd_report(n_lo: u32, n_hi: u32, json: bool) -> Result<(), Error> {
    if !(2 <= n_lo && n_lo <= n_hi) {
        return Err(Error::Domain("need 2 <= n_lo <= n_hi".into()));
    }
    let rows = exceptionality_report(n_lo, n_hi);
    let text = report_tsv(&rows);
    emit(json, &ReportOut { n_lo, n_hi, rows }, text);
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { ref expr } => cmd_classify(expr, cli.json),
        Command::Rationalize { ref expr } => cmd_rationalize(expr, cli.json),
        Command::Hyper { p, q, r, z } => cmd_hyper(p, q, r, z, cli.tol, cli.json),
        Command::Integrate { n, x, method } => cmd_integrate(n, x, method, cli.tol, cli.json),
        Command::FltScan { n, z_max } => cmd_flt_scan(n, z_max, cli.json),
        Command::Report { n_lo, n_hi } => cmd_report(n_lo, n_hi, cli.json),
    };
    if let Err(err) = result {
        eprintln!("error: {err}");
        std::process::exit(exit_code(&err));
    }
}
