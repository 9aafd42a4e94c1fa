//! The antiderivative I(x) = ∫₀ˣ (1 − t^n)^{1/n} dt, computed three
//! independent ways: the hypergeometric representation
//! x·F(−1/n, 1/n; 1+1/n; x^n), the closed form available at n = 2, and an
//! adaptive quadrature oracle. I(0) = 0 fixes the integration constant so
//! the methods are directly comparable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::hypergeom::{gauss_2f1, HypergeomParams};
use crate::quadrature;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Method {
    Hypergeometric,
    ClosedFormN2,
    Quadrature,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct AntiderivativeResult {
    pub n: u32,
    pub x: f64,
    pub value: f64,
    pub method: Method,
    pub err_est: f64,
}

/// (1 − x^n)^{1/n} for x ∈ [0, 1].
pub fn integrand(n: u32, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [0, 1]")));
    }
    Ok((1.0 - x.powi(n as i32)).powf(1.0 / n as f64))
}

/// Hypergeometric evaluation, valid for x ∈ [0, 0.95].
pub fn antider_hyper(n: u32, x: f64, tol: f64) -> Result<AntiderivativeResult> {
    if n < 2 {
        return Err(Error::Domain("n must be at least 2".into()));
    }
    if !(0.0..=0.95).contains(&x) {
        return Err(Error::Domain(format!(
            "x = {x} outside [0, 0.95] for the series path"
        )));
    }
    let params = HypergeomParams {
        p: Rational::new(-1, n as i64),
        q: Rational::new(1, n as i64),
        r: &Rational::one() + &Rational::new(1, n as i64),
        z: x.powi(n as i32),
    };
    let series = gauss_2f1(&params, tol)?;
    Ok(AntiderivativeResult {
        n,
        x,
        value: x * series.value,
        method: Method::Hypergeometric,
        err_est: x * series.truncation_bound + 4.0 * f64::EPSILON,
    })
}

/// The elementary antiderivative at n = 2: ½(x√(1−x²) + arcsin x).
pub fn antider_closed_n2(x: f64) -> Result<AntiderivativeResult> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [0, 1]")));
    }
    let value = 0.5 * (x * (1.0 - x * x).sqrt() + x.asin());
    Ok(AntiderivativeResult {
        n: 2,
        x,
        value,
        method: Method::ClosedFormN2,
        err_est: 4.0 * f64::EPSILON * (1.0 + value.abs()),
    })
}

/// Adaptive-quadrature ground truth, valid on all of [0, 1].
pub fn quadrature_oracle(n: u32, x: f64, tol: f64) -> Result<AntiderivativeResult> {
    if n < 1 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [0, 1]")));
    }
    let nf = n as i32;
    let f = move |t: f64| (1.0 - t.powi(nf)).max(0.0).powf(1.0 / nf as f64);
    let quad = quadrature::integrate(&f, 0.0, x, tol)?;
    Ok(AntiderivativeResult {
        n,
        x,
        value: quad.value,
        method: Method::Quadrature,
        err_est: quad.err_est,
    })
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct DerivativeReport {
    pub fd_derivative: f64,
    pub integrand_value: f64,
    pub abs_err: f64,
}

/// Central finite difference of the hypergeometric antiderivative against
/// the integrand itself: I'(x) must reproduce (1 − x^n)^{1/n}.
pub fn derivative_check(n: u32, x: f64, h: f64) -> Result<DerivativeReport> {
    if h <= 0.0 {
        return Err(Error::Domain("step h must be positive".into()));
    }
    if x - h <= 0.0 || x + h >= 0.95 {
        return Err(Error::Domain(format!(
            "stencil [{}, {}] outside (0, 0.95)",
            x - h,
            x + h
        )));
    }
    let tol = 1e-14;
    let hi = antider_hyper(n, x + h, tol)?.value;
    let lo = antider_hyper(n, x - h, tol)?.value;
    let fd = (hi - lo) / (2.0 * h);
    let truth = integrand(n, x)?;
    Ok(DerivativeReport {
        fd_derivative: fd,
        integrand_value: truth,
        abs_err: (fd - truth).abs(),
    })
}
