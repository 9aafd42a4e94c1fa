//! Text parser for differential-binomial integrands.
//!
//! Grammar (whitespace insignificant; the variable is fixed to `x`):
//!
//! ```text
//! expr   := factor ('*' factor)*
//! factor := 'x' pow? | '(' linear ')' pow?
//! linear := term (('+'|'-') term)*
//! term   := rat ('*'? 'x' pow?)? | 'x' pow?
//! pow    := '^' ( sint | '(' sint ('/' int)? ')' )
//! rat    := sint ('/' int)?
//! ```
//!
//! Syntax errors carry the byte offset of the offending character. An
//! expression may parse but still fail shape-matching against
//! x^a (α + β x^b)^c; that is the `NotABinomial` error.

use num_bigint::BigInt;

use crate::binomial::DifferentialBinomial;
use crate::error::{Error, Result};
use crate::exact::Rational;

pub fn parse_integrand(text: &str) -> Result<DifferentialBinomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let factors = p.parse_expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    assemble(factors)
}

enum Factor {
    /// x^e
    XPow(Rational),
    /// (linear)^e
    Paren { terms: Vec<Term>, exp: Rational },
}

/// `coeff * x^exp`; a constant term has `exp = None`.
struct Term {
    coeff: Rational,
    exp: Option<Rational>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn syntax(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, ch: u8) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", ch as char)))
        }
    }

    /// A run of letters. The variable `x` is the only admitted word.
    fn word(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected a number"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .unwrap())
    }

    fn sint(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        let n = self.uint()?;
        Ok(if neg { -n } else { n })
    }

    /// `sint` or `sint/int`.
    fn rational(&mut self) -> Result<Rational> {
        let n = self.sint()?;
        if self.eat(b'/') {
            self.skip_ws();
            let dpos = self.pos;
            let d = self.uint()?;
            if d == BigInt::from(0) {
                return Err(Error::Syntax {
                    pos: dpos,
                    msg: "zero denominator".into(),
                });
            }
            Ok(Rational::from_big(n, d))
        } else {
            Ok(Rational::from_big(n, BigInt::from(1)))
        }
    }

    /// Optional `^` exponent; defaults to 1.
    fn power(&mut self) -> Result<Rational> {
        if !self.eat(b'^') {
            return Ok(Rational::one());
        }
        if self.eat(b'(') {
            let r = self.rational()?;
            self.expect(b')')?;
            Ok(r)
        } else {
            Ok(Rational::from_big(self.sint()?, BigInt::from(1)))
        }
    }

    fn parse_expr(&mut self) -> Result<Vec<Factor>> {
        let mut factors = vec![self.parse_factor()?];
        while self.eat(b'*') {
            factors.push(self.parse_factor()?);
        }
        Ok(factors)
    }

    fn parse_factor(&mut self) -> Result<Factor> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let terms = self.parse_linear()?;
                self.expect(b')')?;
                let exp = self.power()?;
                Ok(Factor::Paren { terms, exp })
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let wpos = self.pos;
                let w = self.word().unwrap();
                if w != "x" {
                    return Err(Error::NotABinomial(format!(
                        "unknown symbol '{w}' at position {wpos}"
                    )));
                }
                Ok(Factor::XPow(self.power()?))
            }
            _ => Err(self.syntax("expected 'x' or '('")),
        }
    }

    fn parse_linear(&mut self) -> Result<Vec<Term>> {
        let mut terms = vec![self.parse_term(false)?];
        loop {
            if self.eat(b'+') {
                terms.push(self.parse_term(false)?);
            } else if self.eat(b'-') {
                terms.push(self.parse_term(true)?);
            } else {
                return Ok(terms);
            }
        }
    }

    fn parse_term(&mut self, mut negated: bool) -> Result<Term> {
        if self.eat(b'-') {
            negated = !negated;
        }
        let mut term = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.rational()?;
                let has_star = self.eat(b'*');
                let followed_by_x = matches!(self.peek(), Some(c) if c.is_ascii_alphabetic());
                if has_star && !followed_by_x {
                    return Err(self.syntax("expected 'x' after '*'"));
                }
                if followed_by_x {
                    let wpos = self.pos;
                    let w = self.word().unwrap();
                    if w != "x" {
                        return Err(Error::NotABinomial(format!(
                            "unknown symbol '{w}' at position {wpos}"
                        )));
                    }
                    Term {
                        coeff,
                        exp: Some(self.power()?),
                    }
                } else {
                    Term { coeff, exp: None }
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let wpos = self.pos;
                let w = self.word().unwrap();
                if w != "x" {
                    return Err(Error::NotABinomial(format!(
                        "unknown symbol '{w}' at position {wpos}"
                    )));
                }
                Term {
                    coeff: Rational::one(),
                    exp: Some(self.power()?),
                }
            }
            _ => return Err(self.syntax("expected a term")),
        };
        if negated {
            term.coeff = -term.coeff;
        }
        // x^0 is a constant
        if term.exp.as_ref().is_some_and(Rational::is_zero) {
            term.exp = None;
        }
        Ok(term)
    }
}

fn assemble(factors: Vec<Factor>) -> Result<DifferentialBinomial> {
    let mut a = Rational::zero();
    let mut binomial: Option<(Rational, Rational, Rational, Rational)> = None; // (alpha, beta, b, c)

    for f in factors {
        match f {
            Factor::XPow(e) => a = &a + &e,
            Factor::Paren { terms, exp } => {
                let mut alpha = Rational::zero();
                let mut xterm: Option<(Rational, Rational)> = None;
                for t in terms {
                    match t.exp {
                        None => alpha = &alpha + &t.coeff,
                        Some(b) => match &mut xterm {
                            None => xterm = Some((t.coeff, b)),
                            Some((coeff, b0)) if *b0 == b => *coeff = &*coeff + &t.coeff,
                            Some(_) => {
                                return Err(Error::NotABinomial(
                                    "more than one power of x inside parentheses".into(),
                                ))
                            }
                        },
                    }
                }
                let Some((beta, b)) = xterm else {
                    return Err(Error::NotABinomial(
                        "parenthesized factor has no x term".into(),
                    ));
                };
                if binomial.is_some() {
                    return Err(Error::NotABinomial(
                        "more than one binomial factor".into(),
                    ));
                }
                binomial = Some((alpha, beta, b, exp));
            }
        }
    }

    let Some((alpha, beta, b, c)) = binomial else {
        return Err(Error::NotABinomial(
            "no (alpha + beta*x^b) factor present".into(),
        ));
    };
    DifferentialBinomial::new(a, b, c, alpha, beta).map_err(|e| match e {
        Error::DegenerateIntegrand(msg) => Error::NotABinomial(msg),
        other => other,
    })
}
