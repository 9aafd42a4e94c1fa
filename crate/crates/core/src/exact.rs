//! Exact arithmetic foundation: arbitrary-precision naturals, rationals in
//! lowest terms, and univariate polynomials / rational functions over ℚ.
//!
//! Rationals are eagerly reduced (gcd) on every operation so structural
//! equality and the ∈ ℤ test are trivial. Polynomial coefficients are exact
//! rationals, never floats: certificates built on top of these types must be
//! bit-exactly reproducible.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer, the carrier for Fermat triples.
pub type BigNatural = BigUint;

/// Exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as an exact rational. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "denominator must be nonzero");
        Rational(BigRational::new(num, den))
    }

    pub fn from_biguint(n: &BigUint) -> Self {
        Rational(BigRational::from_integer(BigInt::from_biguint(
            Sign::Plus,
            n.clone(),
        )))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The integer value when the denominator is 1, else `None`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.0.denom().is_one() {
            Some(self.0.numer().clone())
        } else {
            None
        }
    }

    /// `as_integer` narrowed to `i64`.
    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    /// Denominator as `u32` when it fits (exponent denominators are small).
    pub fn denom_u32(&self) -> Option<u32> {
        self.0.denom().to_u32()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Exact integer power; negative exponents require a nonzero base.
    pub fn pow_i(&self, exp: i64) -> Result<Self> {
        if self.is_zero() && exp < 0 {
            return Err(Error::ZeroToNegativePower);
        }
        if exp == 0 {
            return Ok(Rational::one());
        }
        let mag = exp.unsigned_abs() as u32;
        let p = Rational(self.0.pow(mag as i32));
        if exp < 0 {
            p.recip()
        } else {
            Ok(p)
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // fall back to a quotient of lossy conversions for huge operands
            let n = self.0.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.0.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    /// Panics on a zero divisor; use `checked_div` where the divisor is data.
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `p` or `p/q` with optional sign, exactly.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Syntax {
            pos: 0,
            msg: msg.to_string(),
        };
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad("invalid numerator"))?;
                let d: BigInt = d.trim().parse().map_err(|_| bad("invalid denominator"))?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Rational(BigRational::new(n, d)))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad("invalid integer"))?;
                Ok(Rational(BigRational::from_integer(n)))
            }
        }
    }
}

// Serialized as the "p/q" string form so certificates are bit-exact.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// Univariate polynomial over ℚ; `coeffs[i]` is the coefficient of `t^i`.
/// No trailing zero coefficients; the zero polynomial has an empty list.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial { coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Polynomial { coeffs }.trimmed()
    }

    /// `c · t^deg`
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial { coeffs }
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Polynomial) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        let z = Rational::zero();
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&z);
            let b = rhs.coeffs.get(i).unwrap_or(&z);
            coeffs.push(a + b);
        }
        Polynomial { coeffs }.trimmed()
    }

    pub fn mul(&self, rhs: &Polynomial) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial { coeffs }.trimmed()
    }

    /// Exact expansion of `self^k`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation in floating point.
    /// Compensated Horner evaluation. High-degree expanded powers such as
    /// (t^2 - 2)^9 cancel catastrophically under plain Horner near their
    /// roots; tracking the rounding errors with error-free transformations
    /// keeps the result accurate to a few ulps of the true value.
    pub fn eval_f64(&self, t: f64) -> f64 {
        let mut iter = self.coeffs.iter().rev();
        let Some(first) = iter.next() else {
            return 0.0;
        };
        let mut s = first.to_f64();
        let mut comp = 0.0_f64;
        for c in iter {
            let p = s * t;
            let pi = s.mul_add(t, -p);
            let a = c.to_f64();
            let s_new = p + a;
            let z = s_new - p;
            let sigma = (p - (s_new - z)) + (a - z);
            comp = comp.mul_add(t, pi + sigma);
            s = s_new;
        }
        s + comp
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * t) + c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != Rational::one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Quotient of two polynomials; denominator nonzero and kept monic.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // normalize: divide both by the denominator's leading coefficient
        let lead = den.leading().expect("nonzero").clone();
        let inv = lead.recip()?;
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == Polynomial::one()
    }

    pub fn mul(&self, rhs: &RationalFunction) -> Self {
        RationalFunction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("nonzero denominators")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiply by `t^k`; negative `k` grows the denominator.
    pub fn mul_monomial(&self, k: i64) -> Self {
        if k >= 0 {
            RationalFunction {
                num: self.num.mul(&Polynomial::monomial(Rational::one(), k as usize)),
                den: self.den.clone(),
            }
        } else {
            RationalFunction {
                num: self.num.clone(),
                den: self
                    .den
                    .mul(&Polynomial::monomial(Rational::one(), (-k) as usize)),
            }
        }
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    /// Exact evaluation; errors when `t` is a pole.
    pub fn eval_rational(&self, t: &Rational) -> Result<Rational> {
        let d = self.den.eval_rational(t);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.num.eval_rational(t) / &d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rational_arith_examples() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(q(3, 5).pow_i(2).unwrap(), q(9, 25));
        assert_eq!(&q(7, 3) * &q(3, 7), Rational::one());
    }

    #[test]
    fn rational_errors() {
        assert_eq!(
            q(1, 2).checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            Rational::zero().pow_i(-1),
            Err(Error::ZeroToNegativePower)
        );
        // negative power of nonzero base is fine
        assert_eq!(q(2, 3).pow_i(-2).unwrap(), q(9, 4));
    }

    #[test]
    fn is_integer_examples() {
        assert_eq!(q(2, 1).as_i64(), Some(2));
        assert_eq!(q(2, 3).as_i64(), None);
        assert_eq!(q(-4, 2).as_i64(), Some(-2));
    }

    #[test]
    fn reduction_is_eager() {
        assert_eq!(q(6, 8), q(3, 4));
        assert_eq!(q(2, -4), q(-1, 2));
        assert!(q(2, -4).denom() > &num_bigint::BigInt::from(0));
    }

    #[test]
    fn rational_parse_roundtrip() {
        for s in ["5/6", "-7/3", "42", "0", "-1"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn poly_eval_examples() {
        let p = Polynomial::from_coeffs(vec![q(1, 1), q(2, 1)]); // 1 + 2t
        assert_eq!(p.eval_f64(3.0), 7.0);
        assert_eq!(Polynomial::zero().eval_f64(123.0), 0.0);
        let p2 = Polynomial::from_coeffs(vec![q(-1, 1), q(0, 1), q(1, 1)]); // t^2 - 1
        assert_eq!(p2.eval_f64(1.0), 0.0);
        assert_eq!(p2.eval_rational(&q(1, 1)), Rational::zero());
    }

    #[test]
    fn poly_pow_examples() {
        let p = Polynomial::from_coeffs(vec![q(1, 1), q(1, 1)]); // 1 + t
        assert_eq!(
            p.pow(2),
            Polynomial::from_coeffs(vec![q(1, 1), q(2, 1), q(1, 1)])
        );
        assert_eq!(p.pow(0), Polynomial::one());
        let m = Polynomial::from_coeffs(vec![q(1, 1), q(-1, 1)]); // 1 - t
        assert_eq!(
            m.pow(3),
            Polynomial::from_coeffs(vec![q(1, 1), q(-3, 1), q(3, 1), q(-1, 1)])
        );
    }

    #[test]
    fn zero_poly_degree_sentinel() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::one().degree(), Some(0));
        // trailing zeros are trimmed
        let p = Polynomial::from_coeffs(vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(0));
    }

    #[test]
    fn rational_function_monic_denominator() {
        let num = Polynomial::from_coeffs(vec![q(2, 1)]);
        let den = Polynomial::from_coeffs(vec![q(0, 1), q(4, 1)]); // 4t
        let rf = RationalFunction::new(num, den).unwrap();
        assert_eq!(rf.denominator().leading(), Some(&Rational::one()));
        assert_eq!(rf.eval_f64(1.0), 0.5);
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::zero()).is_err());
    }
}
