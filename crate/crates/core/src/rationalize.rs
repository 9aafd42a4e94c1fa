//! Rationalizing substitutions for the elementary cases of Chebyshev's
//! criterion, packaged as machine-checkable certificates.
//!
//! Constructions:
//! - Case 1 (c ∈ ℤ): x = t^s with s = lcm(den a, den b), then expand.
//! - Case 2 ((a+1)/b = k ∈ ℤ): u = x^b reduces the integral to
//!   (1/b) ∫ u^{k−1} (α+βu)^c du, then t^m = α+βu with m = den c gives
//!   (m/(bβ)) B(t)^{k−1} t^{num(c)+m−1}, B(t) = (t^m − α)/β.
//! - Case 3 ((a+1)/b + c = k ∈ ℤ): w = x^{−b} gives
//!   −(1/b) ∫ w^{−k−1} (αw+β)^c dw, then t^m = αx^{−b}+β yields
//!   −(m/(bα)) W(t)^{−k−1} t^{num(c)+m−1}, W(t) = (t^m − β)/α.
//!
//! The certificate is validated numerically: the transformed rational
//! function must equal eval(db, x(t)) · x'(t) pointwise on the mapped
//! domain. No symbolic integration of the result is attempted.

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::binomial::{real_pow, DifferentialBinomial};
use crate::chebyshev::ChebyshevClass;
use crate::error::{Error, Result};
use crate::exact::{Polynomial, Rational, RationalFunction};

/// Largest admitted exponent denominator; beyond this the expansions blow up.
pub const DENOMINATOR_BOUND: u32 = 12;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CaseTag {
    Case1,
    Case2,
    Case3,
}

#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct DomainMap {
    pub x_lo: f64,
    pub x_hi: f64,
    pub t_lo: f64,
    pub t_hi: f64,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SubstitutionCertificate {
    pub case_tag: CaseTag,
    /// Root order of the substitution t^m = g(x).
    pub m: u32,
    pub forward_map: String,
    pub transformed: RationalFunction,
    pub jacobian_note: String,
    pub domain_map: DomainMap,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub max_rel_err: f64,
    pub pass: bool,
}

fn denom_checked(q: &Rational) -> Result<u32> {
    let d = q
        .denom_u32()
        .ok_or(Error::ExponentTooComplex { bound: DENOMINATOR_BOUND })?;
    if d > DENOMINATOR_BOUND {
        return Err(Error::ExponentTooComplex { bound: DENOMINATOR_BOUND });
    }
    Ok(d)
}

/// Integer power of a polynomial as a rational function; negative powers go
/// to the denominator.
fn poly_ipow(p: &Polynomial, k: i64) -> Result<RationalFunction> {
    if k >= 0 {
        Ok(RationalFunction::from_polynomial(p.pow(k as u32)))
    } else {
        RationalFunction::new(Polynomial::one(), p.pow((-k) as u32))
    }
}

fn xpow_str(e: &Rational) -> String {
    match e.as_integer() {
        Some(n) if n >= 1.into() => format!("x^{n}"),
        Some(n) => format!("x^({n})"),
        None => format!("x^({}/{})", e.numer(), e.denom()),
    }
}

/// "α + β·x^e" with signs folded in, e.g. "x^(-2) - 1".
fn linear_str(alpha: &Rational, beta: &Rational, xpow: &str) -> String {
    let babs = beta.abs();
    let xterm = if babs == Rational::one() {
        xpow.to_string()
    } else {
        format!("{babs}*{xpow}")
    };
    if alpha.is_zero() {
        return if beta.is_negative() {
            format!("-{xterm}")
        } else {
            xterm
        };
    }
    if alpha.is_negative() && !beta.is_negative() {
        return format!("{xterm} - {}", alpha.abs());
    }
    format!(
        "{alpha} {} {xterm}",
        if beta.is_negative() { "-" } else { "+" }
    )
}

/// Picks an x-interval on which α + βx^b keeps one sign (positive when
/// possible) and is bounded away from zero. Returns the interval and the
/// sign of the base on it.
fn base_interval(db: &DifferentialBinomial) -> (f64, f64, f64) {
    let alpha = db.alpha.to_f64();
    let beta = db.beta.to_f64();
    let binv = db.b.recip().expect("b nonzero");
    if beta > 0.0 {
        if alpha >= 0.0 {
            (0.1, 1.6, 1.0)
        } else {
            // root at (−α/β)^{1/b}; base positive beyond it
            let r = real_pow(-alpha / beta, &binv).expect("positive base");
            (1.05 * r, 2.0 * r, 1.0)
        }
    } else if alpha > 0.0 {
        // base positive below the root
        let r = real_pow(alpha / -beta, &binv).expect("positive base");
        (0.10 * r, 0.95 * r, 1.0)
    } else {
        // base negative for every x > 0
        (0.1, 1.6, -1.0)
    }
}

fn forward_t(db: &DifferentialBinomial, tag: CaseTag, m: u32, x: f64) -> Result<f64> {
    let root = Rational::new(1, m as i64);
    match tag {
        CaseTag::Case1 => real_pow(x, &root),
        CaseTag::Case2 => {
            let base = db.alpha.to_f64() + db.beta.to_f64() * real_pow(x, &db.b)?;
            real_pow(base, &root)
        }
        CaseTag::Case3 => {
            let base = db.alpha.to_f64() * real_pow(x, &(-&db.b))? + db.beta.to_f64();
            real_pow(base, &root)
        }
    }
}

/// The forward substitution value t(x) for a certificate's map.
pub fn forward_value(
    db: &DifferentialBinomial,
    tag: CaseTag,
    m: u32,
    x: f64,
) -> Result<f64> {
    forward_t(db, tag, m, x)
}

/// Inverse map x(t) and its derivative dx/dt.
pub fn inverse_map(
    db: &DifferentialBinomial,
    tag: CaseTag,
    m: u32,
    t: f64,
) -> Result<(f64, f64)> {
    let mf = m as f64;
    let alpha = db.alpha.to_f64();
    let beta = db.beta.to_f64();
    let b = db.b.to_f64();
    match tag {
        CaseTag::Case1 => {
            let x = t.powi(m as i32);
            Ok((x, mf * t.powi(m as i32 - 1)))
        }
        CaseTag::Case2 => {
            let u = (t.powi(m as i32) - alpha) / beta;
            if u <= 0.0 {
                return Err(Error::Domain("u = x^b must be positive".into()));
            }
            let x = u.powf(1.0 / b);
            let du = mf * t.powi(m as i32 - 1) / beta;
            Ok((x, u.powf(1.0 / b - 1.0) * du / b))
        }
        CaseTag::Case3 => {
            let w = (t.powi(m as i32) - beta) / alpha;
            if w <= 0.0 {
                return Err(Error::Domain("w = x^-b must be positive".into()));
            }
            let x = w.powf(-1.0 / b);
            let dw = mf * t.powi(m as i32 - 1) / alpha;
            Ok((x, -w.powf(-1.0 / b - 1.0) * dw / b))
        }
    }
}

pub fn rationalize(
    db: &DifferentialBinomial,
    cls: &ChebyshevClass,
) -> Result<SubstitutionCertificate> {
    if !cls.elementary {
        return Err(Error::NotElementary);
    }
    let da = denom_checked(&db.a)?;
    let dbden = denom_checked(&db.b)?;
    let dc = denom_checked(&db.c)?;

    // cheapest applicable construction first
    if let Some(k) = cls.case1 {
        return case1(db, da, dbden, k);
    }
    if let Some(k) = cls.case2 {
        return case2(db, dc, k);
    }
    if let Some(k) = cls.case3 {
        if db.alpha.is_zero() {
            return Err(Error::Domain(
                "case 3 substitution needs alpha != 0".into(),
            ));
        }
        return case3(db, dc, k);
    }
    Err(Error::NotElementary)
}

fn finish(
    db: &DifferentialBinomial,
    tag: CaseTag,
    m: u32,
    forward_map: String,
    jacobian_note: String,
    transformed: RationalFunction,
) -> Result<SubstitutionCertificate> {
    let (x_lo, x_hi, _sign) = match tag {
        // Case 1 only needs x > 0 with the base nonvanishing
        CaseTag::Case1 => base_interval(db),
        _ => {
            let (lo, hi, sign) = base_interval(db);
            if sign < 0.0 && m % 2 == 0 {
                return Err(Error::Domain(
                    "base is negative for all x > 0 and the root order is even".into(),
                ));
            }
            (lo, hi, sign)
        }
    };
    let ta = forward_t(db, tag, m, x_lo)?;
    let tb = forward_t(db, tag, m, x_hi)?;
    let (t_lo, t_hi) = if ta <= tb { (ta, tb) } else { (tb, ta) };
    Ok(SubstitutionCertificate {
        case_tag: tag,
        m,
        forward_map,
        transformed,
        jacobian_note,
        domain_map: DomainMap { x_lo, x_hi, t_lo, t_hi },
    })
}

fn case1(
    db: &DifferentialBinomial,
    da: u32,
    dbden: u32,
    k: i64,
) -> Result<SubstitutionCertificate> {
    let s = da.lcm(&dbden);
    let si = s as i64;
    let sa = (&db.a * &Rational::from_int(si))
        .as_i64()
        .ok_or(Error::ExponentTooComplex { bound: DENOMINATOR_BOUND })?;
    let sb = (&db.b * &Rational::from_int(si))
        .as_i64()
        .ok_or(Error::ExponentTooComplex { bound: DENOMINATOR_BOUND })?;
    // base polynomial α + β t^{sb}
    let base = Polynomial::from_coeffs(vec![db.alpha.clone()])
        .add(&Polynomial::monomial(db.beta.clone(), sb as usize));
    let transformed = poly_ipow(&base, k)?
        .scale(&Rational::from_int(si))
        .mul_monomial(sa + si - 1);
    finish(
        db,
        CaseTag::Case1,
        s,
        format!("t^{s} = x"),
        format!("x = t^{s}, dx = {s} t^{} dt", s - 1),
        transformed,
    )
}

fn case2(db: &DifferentialBinomial, m: u32, k: i64) -> Result<SubstitutionCertificate> {
    let nc = db
        .c
        .numer()
        .to_i64()
        .ok_or(Error::ExponentTooComplex { bound: DENOMINATOR_BOUND })?;
    let mi = m as i64;
    // B(t) = (t^m − α)/β
    let beta_inv = db.beta.recip()?;
    let base = Polynomial::from_coeffs(vec![-&(&db.alpha * &beta_inv)])
        .add(&Polynomial::monomial(beta_inv.clone(), m as usize));
    let coeff = &Rational::from_int(mi) / &(&db.b * &db.beta);
    let transformed = poly_ipow(&base, k - 1)?
        .scale(&coeff)
        .mul_monomial(nc + mi - 1);
    finish(
        db,
        CaseTag::Case2,
        m,
        format!(
            "t^{m} = {}",
            linear_str(&db.alpha, &db.beta, &xpow_str(&db.b))
        ),
        format!(
            "u = {}, t^{m} = {}, dx = u^(1/b - 1) du / b with b = {}",
            xpow_str(&db.b),
            linear_str(&db.alpha, &db.beta, "u"),
            db.b
        ),
        transformed,
    )
}

fn case3(db: &DifferentialBinomial, m: u32, k: i64) -> Result<SubstitutionCertificate> {
    let nc = db
        .c
        .numer()
        .to_i64()
        .ok_or(Error::ExponentTooComplex { bound: DENOMINATOR_BOUND })?;
    let mi = m as i64;
    // W(t) = (t^m − β)/α
    let alpha_inv = db.alpha.recip()?;
    let base = Polynomial::from_coeffs(vec![-&(&db.beta * &alpha_inv)])
        .add(&Polynomial::monomial(alpha_inv.clone(), m as usize));
    let coeff = -&(&Rational::from_int(mi) / &(&db.b * &db.alpha));
    let transformed = poly_ipow(&base, -k - 1)?
        .scale(&coeff)
        .mul_monomial(nc + mi - 1);
    finish(
        db,
        CaseTag::Case3,
        m,
        format!(
            "t^{m} = {}",
            linear_str(&db.beta, &db.alpha, &xpow_str(&-&db.b))
        ),
        format!(
            "w = {}, t^{m} = {}, dx = -w^(-1/b - 1) dw / b with b = {}",
            xpow_str(&-&db.b),
            linear_str(&db.beta, &db.alpha, "w"),
            db.b
        ),
        transformed,
    )
}

/// Samples the mapped domain (shrunk 1% inward to dodge branch points) and
/// compares the transformed integrand against the chain-rule value.
pub fn check_certificate(
    db: &DifferentialBinomial,
    cert: &SubstitutionCertificate,
    samples: usize,
) -> Result<CheckReport> {
    if samples < 1 {
        return Err(Error::Domain("samples must be >= 1".into()));
    }
    let span = cert.domain_map.t_hi - cert.domain_map.t_lo;
    let lo = cert.domain_map.t_lo + 0.01 * span;
    let hi = cert.domain_map.t_hi - 0.01 * span;
    let mut max_rel_err = 0.0_f64;
    for i in 0..samples {
        let frac = (i as f64 + 0.5) / samples as f64;
        let t = lo + frac * (hi - lo);
        let (x, dxdt) = inverse_map(db, cert.case_tag, cert.m, t)?;
        let lhs = db.eval(x)? * dxdt;
        let rhs = cert.transformed.eval_f64(t);
        let scale = lhs.abs().max(rhs.abs()).max(1e-300);
        let rel = (lhs - rhs).abs() / scale;
        if rel > max_rel_err {
            max_rel_err = rel;
        }
    }
    Ok(CheckReport {
        max_rel_err,
        pass: max_rel_err <= 1e-10,
    })
}
