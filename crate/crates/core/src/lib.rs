//! Decides elementary integrability of differential binomials
//! x^a (α + β x^b)^c via Chebyshev's criterion, constructs verifiable
//! rationalizing-substitution certificates in the elementary cases,
//! evaluates the remaining cases through the Gauss hypergeometric series,
//! and demonstrates that n = 2 is the unique exponent for which
//! ∫ (1 − x^n)^{1/n} dx is an elementary function — the normalization of
//! the Fermat equation X^n + Y^n = Z^n.

pub mod antiderivative;
pub mod binomial;
pub mod chebyshev;
pub mod error;
pub mod exact;
pub mod fermat;
pub mod hypergeom;
pub mod parser;
pub mod quadrature;
pub mod rationalize;

pub use antiderivative::{
    antider_closed_n2, antider_hyper, derivative_check, integrand, quadrature_oracle,
    AntiderivativeResult, DerivativeReport, Method,
};
pub use binomial::DifferentialBinomial;
pub use chebyshev::{classify, flt_binomial, flt_exponent_class, ChebyshevClass};
pub use error::{Error, Result};
pub use exact::{BigNatural, Polynomial, Rational, RationalFunction};
pub use fermat::{
    curve_residual, exceptionality_report, flt_check, normalize, report_tsv, search_triples,
    search_triples_parallel, FermatTriple, NormalizedPoint, ReportRow,
};
pub use hypergeom::{gauss_2f1, gauss_2f1_direct, HypergeomParams, SeriesResult};
pub use parser::parse_integrand;
pub use rationalize::{
    check_certificate, forward_value, rationalize, CaseTag, CheckReport,
    SubstitutionCertificate,
};
