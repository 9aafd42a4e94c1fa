//! The differential-binomial integrand x^a (α + β x^b)^c.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Integrand of the form `x^a (alpha + beta x^b)^c` with exact rational
/// exponents and coefficients. Stored canonicalized with `b > 0`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DifferentialBinomial {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub alpha: Rational,
    pub beta: Rational,
}

impl DifferentialBinomial {
    /// Validates and canonicalizes. A negative `b` is flipped via
    /// x^a (α + β x^b)^c = x^{a+bc} (β + α x^{-b})^c.
    pub fn new(
        a: Rational,
        b: Rational,
        c: Rational,
        alpha: Rational,
        beta: Rational,
    ) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::DegenerateIntegrand(
                "inner exponent b must be nonzero".into(),
            ));
        }
        if beta.is_zero() {
            return Err(Error::DegenerateIntegrand(
                "beta must be nonzero (pure power otherwise)".into(),
            ));
        }
        if b.is_negative() {
            if alpha.is_zero() {
                // the flip would leave beta = 0, a pure power
                return Err(Error::DegenerateIntegrand(
                    "alpha must be nonzero when b < 0 (pure power otherwise)".into(),
                ));
            }
            let a2 = &a + &(&b * &c);
            return Ok(DifferentialBinomial {
                a: a2,
                b: -&b,
                c,
                alpha: beta,
                beta: alpha,
            });
        }
        Ok(DifferentialBinomial { a, b, c, alpha, beta })
    }

    /// Evaluates the integrand at `x > 0` with real principal powers.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let base = self.alpha.to_f64() + self.beta.to_f64() * real_pow(x, &self.b)?;
        Ok(real_pow(x, &self.a)? * real_pow(base, &self.c)?)
    }
}

/// `base^e` for rational `e`, using the real principal branch. A negative
/// base is admitted only when `e` has an odd denominator (real odd root).
pub fn real_pow(base: f64, e: &Rational) -> Result<f64> {
    if let Some(k) = e.as_i64() {
        if base == 0.0 && k < 0 {
            return Err(Error::Domain("zero base with negative exponent".into()));
        }
        return Ok(base.powi(k as i32));
    }
    let ef = e.to_f64();
    if base > 0.0 {
        return Ok(base.powf(ef));
    }
    if base == 0.0 {
        if e.is_negative() {
            return Err(Error::Domain("zero base with negative exponent".into()));
        }
        return Ok(0.0);
    }
    // negative base: real value exists only for odd denominator
    if e.denom().is_even() {
        return Err(Error::Domain(format!(
            "negative base {base} under exponent {e} (even root)"
        )));
    }
    let mag = (-base).powf(ef);
    let numer_odd = e.numer().is_odd();
    Ok(if numer_odd { -mag } else { mag })
}

fn fmt_exponent(f: &mut fmt::Formatter<'_>, e: &Rational) -> fmt::Result {
    match e.as_integer() {
        Some(n) => {
            if n.to_i64() != Some(1) {
                write!(f, "^{n}")?;
            }
            Ok(())
        }
        None => write!(f, "^({}/{})", e.numer(), e.denom()),
    }
}

impl fmt::Display for DifferentialBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = Rational::one();
        let mut leading = true;
        if !self.a.is_zero() {
            write!(f, "x")?;
            fmt_exponent(f, &self.a)?;
            leading = false;
        }
        if !leading {
            write!(f, "*")?;
        }
        write!(f, "(")?;
        if !self.alpha.is_zero() {
            write!(f, "{}", self.alpha)?;
            write!(f, " {} ", if self.beta.is_negative() { "-" } else { "+" })?;
        } else if self.beta.is_negative() {
            write!(f, "-")?;
        }
        let babs = self.beta.abs();
        if babs != one {
            write!(f, "{babs}*")?;
        }
        write!(f, "x")?;
        fmt_exponent(f, &self.b)?;
        write!(f, ")")?;
        fmt_exponent(f, &self.c)
    }
}
