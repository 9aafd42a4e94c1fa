//! Exact arithmetic on candidate Fermat triples X^n + Y^n = Z^n,
//! normalization onto the curve x^n + y^n = 1, a desk-scale exhaustive
//! search, and the exceptionality report tying exponents to their
//! Chebyshev class.
//!
//! Nothing here proves anything about Fermat's Last Theorem; the search is
//! an illustration at bounded scale.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chebyshev::{flt_exponent_class, ChebyshevClass};
use crate::exact::{BigNatural, Rational};

mod big_serde {
    //! Big integers serialize as decimal strings.
    use super::BigNatural;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        n: &BigNatural,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BigNatural, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| D::Error::custom("invalid decimal"))
    }
}

/// A candidate triple for X^n + Y^n = Z^n, stored with X ≤ Y.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FermatTriple {
    #[serde(with = "big_serde")]
    pub x: BigNatural,
    #[serde(with = "big_serde")]
    pub y: BigNatural,
    #[serde(with = "big_serde")]
    pub z: BigNatural,
    pub n: u32,
}

impl FermatTriple {
    /// Orders the first two components so X ≤ Y. All components must be ≥ 1.
    pub fn new(x: BigNatural, y: BigNatural, z: BigNatural, n: u32) -> Self {
        assert!(!x.is_zero() && !y.is_zero() && !z.is_zero(), "components must be >= 1");
        assert!(n >= 2);
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        FermatTriple { x, y, z, n }
    }

    pub fn from_u64(x: u64, y: u64, z: u64, n: u32) -> Self {
        FermatTriple::new(BigNatural::from(x), BigNatural::from(y), BigNatural::from(z), n)
    }

    /// X = Y, the case the paper's strict X < Y excludes.
    pub fn is_tie(&self) -> bool {
        self.x == self.y
    }
}

/// Exact test of X^n + Y^n = Z^n.
pub fn flt_check(t: &FermatTriple) -> bool {
    t.x.pow(t.n) + t.y.pow(t.n) == t.z.pow(t.n)
}

/// The normalized point (X/Z, Y/Z) with flags instead of hard errors for
/// off-curve or tied input.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NormalizedPoint {
    pub x: Rational,
    pub y: Rational,
    pub on_curve: bool,
    pub tie: bool,
}

pub fn normalize(t: &FermatTriple) -> NormalizedPoint {
    let z = Rational::from_biguint(&t.z);
    NormalizedPoint {
        x: &Rational::from_biguint(&t.x) / &z,
        y: &Rational::from_biguint(&t.y) / &z,
        on_curve: flt_check(t),
        tie: t.is_tie(),
    }
}

/// Exact x^n + y^n − 1; zero iff the point lies on the curve.
pub fn curve_residual(p: &NormalizedPoint, n: u32) -> Rational {
    let xn = p.x.pow_i(n as i64).expect("non-negative exponent");
    let yn = p.y.pow_i(n as i64).expect("non-negative exponent");
    &(&xn + &yn) - &Rational::one()
}

fn pow_table(n: u32, z_max: u64) -> Vec<BigNatural> {
    (0..=z_max).map(|k| BigNatural::from(k).pow(n)).collect()
}

fn triples_for_z(pows: &[BigNatural], z: u64, n: u32) -> Vec<FermatTriple> {
    let mut found = Vec::new();
    for y in 1..z {
        if &pows[y as usize] >= &pows[z as usize] {
            break;
        }
        let rest = &pows[z as usize] - &pows[y as usize];
        for x in 1..=y {
            match pows[x as usize].cmp(&rest) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => {
                    found.push(FermatTriple::from_u64(x, y, z, n))
                }
                std::cmp::Ordering::Greater => break,
            }
        }
    }
    // emitted as (z, y, x) ascending
    found.sort_by(|a, b| (&a.y, &a.x).cmp(&(&b.y, &b.x)));
    found
}

/// All triples with 1 ≤ X ≤ Y < Z ≤ z_max and X^n + Y^n = Z^n, in exact
/// arithmetic, sorted by (Z, Y, X).
pub fn search_triples(n: u32, z_max: u64) -> Vec<FermatTriple> {
    assert!(n >= 2 && z_max >= 2);
    let pows = pow_table(n, z_max);
    (2..=z_max)
        .flat_map(|z| triples_for_z(&pows, z, n))
        .collect()
}

/// Parallel variant; output is identical to `search_triples`.
pub fn search_triples_parallel(n: u32, z_max: u64) -> Vec<FermatTriple> {
    assert!(n >= 2 && z_max >= 2);
    let pows = pow_table(n, z_max);
    (2..=z_max)
        .into_par_iter()
        .flat_map_iter(|z| triples_for_z(&pows, z, n))
        .collect()
}

/// One row of the exceptionality report.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: u32,
    pub class: ChebyshevClass,
    pub elementary: bool,
}

/// Chebyshev class of the Fermat-family integrand for each n in the range.
pub fn exceptionality_report(n_lo: u32, n_hi: u32) -> Vec<ReportRow> {
    assert!(2 <= n_lo && n_lo <= n_hi);
    (n_lo..=n_hi)
        .map(|n| {
            let class = flt_exponent_class(n);
            let elementary = class.elementary;
            ReportRow { n, class, elementary }
        })
        .collect()
}

/// Tab-separated rendering of the report, one row per exponent.
pub fn report_tsv(rows: &[ReportRow]) -> String {
    let mut out = String::from("n\tcase1\tcase2\tcase3\telementary\n");
    let cell = |w: Option<i64>| w.map_or("-".to_string(), |v| v.to_string());
    for row in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            row.n,
            cell(row.class.case1),
            cell(row.class.case2),
            cell(row.class.case3),
            row.elementary
        ));
    }
    out
}
