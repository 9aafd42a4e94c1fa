//! Gauss hypergeometric function ₂F₁(p,q;r;z) by direct series summation,
//! with the Pfaff transformation
//! F(p,q;r;z) = (1−z)^{−p} F(p, r−q; r; z/(z−1))
//! mapping negative arguments into (0, 1/2) where the terms decay
//! geometrically.

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

const MAX_TERMS: usize = 1_000_000;
/// Direct summation is refused at or beyond this argument magnitude.
const Z_CAP: f64 = 0.95;

#[derive(Clone, Debug)]
pub struct HypergeomParams {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub z: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    /// Estimated bound on the absolute value of the discarded tail.
    pub truncation_bound: f64,
}

/// Non-positive-integer test; such a value in `p` or `q` terminates the
/// series, in `r` it is a pole.
fn nonpositive_integer(x: &Rational) -> Option<u64> {
    x.as_integer()
        .filter(|n| !n.is_positive())
        .and_then(|n| (-n).to_u64())
}

pub fn gauss_2f1(params: &HypergeomParams, tol: f64) -> Result<SeriesResult> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::Domain(format!("tolerance {tol} outside (0,1)")));
    }
    if nonpositive_integer(&params.r).is_some() {
        return Err(Error::Pole);
    }
    if params.z.abs() >= 1.0 {
        return Err(Error::Divergence {
            z_abs: params.z.abs(),
        });
    }
    if params.z == 0.0 {
        return Ok(SeriesResult {
            value: 1.0,
            terms_used: 1,
            truncation_bound: 0.0,
        });
    }

    // A terminating series is summed exactly regardless of sign of z.
    let terminates = nonpositive_integer(&params.p)
        .into_iter()
        .chain(nonpositive_integer(&params.q))
        .min();
    if let Some(last) = terminates {
        return sum_series(
            params.p.to_f64(),
            params.q.to_f64(),
            params.r.to_f64(),
            params.z,
            tol,
            Some(last),
        );
    }

    if params.z < 0.0 {
        // Pfaff transformation; the new argument lies in (0, 1/2).
        let w = params.z / (params.z - 1.0);
        let q2 = &params.r - &params.q;
        let prefactor = (1.0 - params.z).powf(-params.p.to_f64());
        let inner_last = nonpositive_integer(&q2);
        let inner = sum_series(
            params.p.to_f64(),
            q2.to_f64(),
            params.r.to_f64(),
            w,
            tol,
            inner_last,
        )?;
        return Ok(SeriesResult {
            value: prefactor * inner.value,
            terms_used: inner.terms_used,
            truncation_bound: prefactor.abs() * inner.truncation_bound,
        });
    }

    if params.z >= Z_CAP {
        return Err(Error::Divergence {
            z_abs: params.z.abs(),
        });
    }
    sum_series(
        params.p.to_f64(),
        params.q.to_f64(),
        params.r.to_f64(),
        params.z,
        tol,
        None,
    )
}

/// Direct summation with no Pfaff transformation, for cross-validating the
/// transformed route. Converges for |z| < Z_CAP, slowly near the boundary.
pub fn gauss_2f1_direct(params: &HypergeomParams, tol: f64) -> Result<SeriesResult> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::Domain(format!("tolerance {tol} outside (0,1)")));
    }
    if nonpositive_integer(&params.r).is_some() {
        return Err(Error::Pole);
    }
    if params.z.abs() >= Z_CAP {
        return Err(Error::Divergence {
            z_abs: params.z.abs(),
        });
    }
    if params.z == 0.0 {
        return Ok(SeriesResult {
            value: 1.0,
            terms_used: 1,
            truncation_bound: 0.0,
        });
    }
    let last = nonpositive_integer(&params.p)
        .into_iter()
        .chain(nonpositive_integer(&params.q))
        .min();
    sum_series(
        params.p.to_f64(),
        params.q.to_f64(),
        params.r.to_f64(),
        params.z,
        tol,
        last,
    )
}

/// Sums 1 + Σ term_k with term_{k+1} = term_k (p+k)(q+k) z / ((r+k)(k+1)).
///
/// `last_index`, when given, is the index of the final nonzero term of a
/// terminating series; summation then runs exactly that far and the
/// stopping rule is bypassed.
fn sum_series(
    p: f64,
    q: f64,
    r: f64,
    z: f64,
    tol: f64,
    last_index: Option<u64>,
) -> Result<SeriesResult> {
    let mut term = 1.0_f64;
    let mut prev_term;
    let mut sum = 1.0_f64;
    let mut small_streak = 0u32;
    let mut k = 0usize;
    loop {
        if let Some(last) = last_index {
            if k as u64 >= last {
                return Ok(SeriesResult {
                    value: sum,
                    terms_used: k + 1,
                    truncation_bound: 0.0,
                });
            }
        }
        let kf = k as f64;
        prev_term = term;
        term *= (p + kf) * (q + kf) * z / ((r + kf) * (kf + 1.0));
        sum += term;
        k += 1;
        if last_index.is_none() {
            // 3 consecutive small terms guard against a Pochhammer factor
            // accidentally crossing zero
            if term.abs() <= tol * sum.abs() {
                small_streak += 1;
                if small_streak >= 3 {
                    // geometric tail estimate; the ratio is taken from the
                    // asymptotic |z| or the last observed ratio, whichever
                    // is worse
                    let observed = if prev_term != 0.0 {
                        (term / prev_term).abs()
                    } else {
                        0.0
                    };
                    let rho = z.abs().max(observed).min(0.98);
                    let bound = 2.0 * term.abs() * rho / (1.0 - rho)
                        + 4.0 * f64::EPSILON * sum.abs();
                    return Ok(SeriesResult {
                        value: sum,
                        terms_used: k + 1,
                        truncation_bound: bound,
                    });
                }
            } else {
                small_streak = 0;
            }
        }
        if k >= MAX_TERMS {
            return Err(Error::NonConvergence(MAX_TERMS));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn qi(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn f21(p: Rational, qq: Rational, r: Rational, z: f64) -> SeriesResult {
        gauss_2f1(&HypergeomParams { p, q: qq, r, z }, 1e-15).unwrap()
    }

    #[test]
    fn z_zero_is_one() {
        let res = f21(q(1, 3), q(5, 7), q(9, 2), 0.0);
        assert_eq!(res.value, 1.0);
        assert_eq!(res.terms_used, 1);
    }

    #[test]
    fn log_identity() {
        // F(1,1;2;z) = -ln(1-z)/z
        let res = f21(qi(1), qi(1), qi(2), 0.5);
        assert!((res.value - 2.0 * std::f64::consts::LN_2).abs() < 1e-13);
    }

    #[test]
    fn binomial_degeneration_negative_z() {
        // q = r: F(p,q;q;z) = (1-z)^{-p}, here (1.5)^{-1/3}
        let res = f21(q(1, 3), q(5, 7), q(5, 7), -0.5);
        let expect = 1.5_f64.powf(-1.0 / 3.0);
        assert!((res.value - expect).abs() < 1e-13);
        assert!((res.value - 0.8735804647).abs() < 1e-9);
    }

    #[test]
    fn arcsin_identity() {
        // F(1/2,1/2;3/2;z^2) = arcsin(z)/z
        let res = f21(q(1, 2), q(1, 2), q(3, 2), 0.25);
        assert!((res.value - 0.5_f64.asin() / 0.5).abs() < 1e-13);
    }

    #[test]
    fn pole_and_divergence_errors() {
        let p = HypergeomParams {
            p: qi(1),
            q: qi(1),
            r: qi(-2),
            z: 0.1,
        };
        assert_eq!(gauss_2f1(&p, 1e-12), Err(Error::Pole));
        let p = HypergeomParams {
            p: qi(1),
            q: qi(1),
            r: qi(2),
            z: 1.0,
        };
        assert!(matches!(gauss_2f1(&p, 1e-12), Err(Error::Divergence { .. })));
        let p = HypergeomParams {
            p: qi(1),
            q: qi(1),
            r: qi(2),
            z: 0.97,
        };
        assert!(matches!(gauss_2f1(&p, 1e-12), Err(Error::Divergence { .. })));
    }

    #[test]
    fn terminating_series_is_exact() {
        // F(-2, q; r; z) is a quadratic in z
        let res = f21(qi(-2), qi(3), qi(5), 0.7);
        // 1 + (-2)(3)/5 z + ((-2)(-1)(3)(4)/(5*6*2)) z^2 = 1 - 1.2 z + 0.4 z^2
        let expect = 1.0 - 1.2 * 0.7 + 0.4 * 0.49;
        assert!((res.value - expect).abs() < 1e-15);
        assert_eq!(res.terms_used, 3);
        assert_eq!(res.truncation_bound, 0.0);
    }

    #[test]
    fn pfaff_matches_direct_small_negative_z() {
        // direct alternating series still converges for |z|<1; compare
        for &z in &[-0.3, -0.6, -0.85] {
            let viapfaff = f21(q(1, 3), q(2, 5), q(7, 4), z).value;
            let direct =
                sum_series(1.0 / 3.0, 0.4, 1.75, z, 1e-15, None).unwrap().value;
            assert!(
                (viapfaff - direct).abs() <= 1e-11 * direct.abs().max(1.0),
                "z = {z}: {viapfaff} vs {direct}"
            );
        }
    }

    #[test]
    fn truncation_bound_is_honest() {
        let params = HypergeomParams {
            p: q(1, 3),
            q: q(2, 5),
            r: q(7, 4),
            z: 0.8,
        };
        let loose = gauss_2f1(&params, 1e-8).unwrap();
        let tight = gauss_2f1(&params, 1e-10).unwrap();
        assert!((loose.value - tight.value).abs() <= loose.truncation_bound);
    }
}
