//! Chebyshev's integrability criterion for differential binomials:
//! ∫ x^a (α + β x^b)^c dx is elementary iff one of
//! c ∈ ℤ, (a+1)/b ∈ ℤ, or (a+1)/b + c ∈ ℤ holds.
//!
//! ℤ here is all integers, negatives included.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::binomial::DifferentialBinomial;
use crate::error::Result;
use crate::exact::Rational;

/// Outcome of the criterion. All three conditions are evaluated
/// independently; they are not mutually exclusive.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChebyshevClass {
    /// Witness `c` when c ∈ ℤ.
    pub case1: Option<i64>,
    /// Witness `(a+1)/b` when it is an integer.
    pub case2: Option<i64>,
    /// Witness `(a+1)/b + c` when it is an integer.
    pub case3: Option<i64>,
    pub elementary: bool,
}

pub fn classify(db: &DifferentialBinomial) -> ChebyshevClass {
    let ratio = &(&db.a + &Rational::one()) / &db.b;
    let case1 = db.c.as_integer().and_then(|n| n.to_i64());
    let case2 = ratio.as_integer().and_then(|n| n.to_i64());
    let case3 = (&ratio + &db.c).as_integer().and_then(|n| n.to_i64());
    ChebyshevClass {
        case1,
        case2,
        case3,
        elementary: case1.is_some() || case2.is_some() || case3.is_some(),
    }
}

/// The Fermat family a=0, b=n, c=1/n, α=1, β=−1: the antiderivative of
/// (1 − x^n)^{1/n}.
pub fn flt_binomial(n: u32) -> Result<DifferentialBinomial> {
    DifferentialBinomial::new(
        Rational::zero(),
        Rational::from_int(n as i64),
        Rational::new(1, n as i64),
        Rational::one(),
        Rational::from_int(-1),
    )
}

pub fn flt_exponent_class(n: u32) -> ChebyshevClass {
    assert!(n >= 1);
    classify(&flt_binomial(n).expect("n >= 1 is nondegenerate"))
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

    fn db(a: Rational, b: Rational, c: Rational) -> DifferentialBinomial {
        DifferentialBinomial::new(a, b, c, qi(1), qi(-1)).unwrap()
    }

    #[test]
    fn n2_is_case3() {
        let cls = classify(&db(qi(0), qi(2), q(1, 2)));
        assert_eq!(cls.case1, None);
        assert_eq!(cls.case2, None);
        assert_eq!(cls.case3, Some(1));
        assert!(cls.elementary);
    }

    #[test]
    fn n3_is_nonelementary() {
        let cls = classify(&db(qi(0), qi(3), q(1, 3)));
        assert_eq!(cls, ChebyshevClass {
            case1: None,
            case2: None,
            case3: None,
            elementary: false
        });
    }

    #[test]
    fn case2_witness() {
        let cls = classify(&db(qi(1), qi(2), q(-1, 2)));
        assert_eq!(cls.case2, Some(1));
        assert!(cls.elementary);
    }

    #[test]
    fn multiple_cases_reported() {
        // a=1/3, b=1/3, c=5: c integer and (a+1)/b = 4
        let cls = classify(&db(q(1, 3), q(1, 3), qi(5)));
        assert_eq!(cls.case1, Some(5));
        assert_eq!(cls.case2, Some(4));
        assert_eq!(cls.case3, Some(9));
        assert!(cls.elementary);
    }

    #[test]
    fn negative_witness_counts() {
        // a = -3, b = 2: (a+1)/b = -1 ∈ ℤ
        let cls = classify(&db(qi(-3), qi(2), q(1, 2)));
        assert_eq!(cls.case2, Some(-1));
        assert!(cls.elementary);
    }

    #[test]
    fn flt_small_exponents() {
        let c2 = flt_exponent_class(2);
        assert_eq!(c2.case3, Some(1));
        assert!(c2.elementary);
        assert!(!flt_exponent_class(3).elementary);
        let c1 = flt_exponent_class(1);
        assert_eq!(c1.case1, Some(1));
        assert!(c1.elementary);
    }

    #[test]
    fn flt_unique_up_to_1000() {
        for n in 3..=1000 {
            assert!(!flt_exponent_class(n).elementary, "n = {n}");
        }
    }
}
