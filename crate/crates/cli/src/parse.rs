//! Expression parser for polynomials in x over the rationals.
//!
//! Grammar: sums and differences of terms, terms are products joined by
//! an explicit `*`, exponentiation with `^` binds tightest and is
//! right-associative with nonnegative integer exponents, parentheses
//! group, and literals are integers or rationals written `p/q`.

use std::fmt;

use rootclusters::{BigInt, Rat, RatPoly};

/// Positioned syntax error with the set of tokens that would have been
/// accepted at that point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character position in the source string.
    pub pos: usize,
    pub found: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: found {}, expected {}",
            self.pos,
            self.found,
            self.expected.join(" | ")
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer {s}"),
            Tok::X => "x".into(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Slash => "/".into(),
            Tok::Caret => "^".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((start + 1, Tok::Int(chars[start..i].iter().collect())));
            }
            'x' => {
                toks.push((pos, Tok::X));
                i += 1;
            }
            '+' => {
                toks.push((pos, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((pos, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((pos, Tok::Star));
                i += 1;
            }
            '/' => {
                toks.push((pos, Tok::Slash));
                i += 1;
            }
            '^' => {
                toks.push((pos, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((pos, Tok::RParen));
                i += 1;
            }
            other => {
                return Err(ParseError {
                    pos,
                    found: format!("character {other:?}"),
                    expected: vec!["integer", "x", "+", "-", "*", "/", "^", "(", ")"],
                });
            }
        }
    }
    toks.push((chars.len() + 1, Tok::End));
    Ok(Lexer { toks, at: 0 })
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            pos: self.pos(),
            found: self.peek().describe(),
            expected,
        }
    }
}

/// Parse a polynomial expression, producing its exact coefficients.
pub fn parse_poly(src: &str) -> Result<RatPoly, ParseError> {
    if src.trim().is_empty() {
        return Err(ParseError {
            pos: 1,
            found: "end of input".into(),
            expected: vec!["integer", "x", "-", "("],
        });
    }
    let mut lx = lex(src)?;
    let p = expr(&mut lx)?;
    match lx.peek() {
        Tok::End => Ok(p),
        _ => Err(lx.fail(vec!["+", "-", "*", "^", "end of input"])),
    }
}

fn expr(lx: &mut Lexer) -> Result<RatPoly, ParseError> {
    let mut acc = term(lx)?;
    loop {
        match lx.peek() {
            Tok::Plus => {
                lx.bump();
                let t = term(lx)?;
                acc = &acc + &t;
            }
            Tok::Minus => {
                lx.bump();
                let t = term(lx)?;
                acc = &acc - &t;
            }
            _ => return Ok(acc),
        }
    }
}

fn term(lx: &mut Lexer) -> Result<RatPoly, ParseError> {
    let mut acc = signed_power(lx)?;
    while matches!(lx.peek(), Tok::Star) {
        lx.bump();
        let f = signed_power(lx)?;
        acc = &acc * &f;
    }
    Ok(acc)
}

fn signed_power(lx: &mut Lexer) -> Result<RatPoly, ParseError> {
    let mut negate = false;
    while matches!(lx.peek(), Tok::Minus) {
        lx.bump();
        negate = !negate;
    }
    let p = power(lx)?;
    Ok(if negate { -&p } else { p })
}

fn power(lx: &mut Lexer) -> Result<RatPoly, ParseError> {
    let base = atom(lx)?;
    if matches!(lx.peek(), Tok::Caret) {
        lx.bump();
        let e = exponent(lx)?;
        return Ok(base.pow(e));
    }
    Ok(base)
}

const EXPONENT_LIMIT: u64 = 10_000;

/// A nonnegative integer, with `^` chaining right-associatively.
fn exponent(lx: &mut Lexer) -> Result<usize, ParseError> {
    if matches!(lx.peek(), Tok::Minus) {
        return Err(lx.fail(vec!["nonnegative integer exponent"]));
    }
    let pos = lx.pos();
    let digits = match lx.bump() {
        Tok::Int(s) => s,
        other => {
            return Err(ParseError {
                pos,
                found: other.describe(),
                expected: vec!["nonnegative integer exponent"],
            });
        }
    };
    let base: u64 = digits.parse().map_err(|_| ParseError {
        pos,
        found: format!("integer {digits}"),
        expected: vec!["exponent below 10000"],
    })?;
    let value = if matches!(lx.peek(), Tok::Caret) {
        lx.bump();
        let upper = exponent(lx)?;
        base.checked_pow(upper as u32).unwrap_or(u64::MAX)
    } else {
        base
    };
    if value > EXPONENT_LIMIT {
        return Err(ParseError {
            pos,
            found: format!("exponent {value}"),
            expected: vec!["exponent below 10000"],
        });
    }
    Ok(value as usize)
}

fn atom(lx: &mut Lexer) -> Result<RatPoly, ParseError> {
    let pos = lx.pos();
    match lx.bump() {
        Tok::Int(n) => {
            let numer: BigInt = n.parse().expect("digits");
            if matches!(lx.peek(), Tok::Slash) {
                lx.bump();
                let dpos = lx.pos();
                match lx.bump() {
                    Tok::Int(d) => {
                        let denom: BigInt = d.parse().expect("digits");
                        if denom == 0.into() {
                            return Err(ParseError {
                                pos: dpos,
                                found: "integer 0".into(),
                                expected: vec!["nonzero denominator"],
                            });
                        }
                        Ok(RatPoly::constant(Rat::new(numer, denom)))
                    }
                    other => Err(ParseError {
                        pos: dpos,
                        found: other.describe(),
                        expected: vec!["integer denominator"],
                    }),
                }
            } else {
                Ok(RatPoly::constant(Rat::from_integer(numer)))
            }
        }
        Tok::X => Ok(RatPoly::x()),
        Tok::LParen => {
            let inner = expr(lx)?;
            match lx.bump() {
                Tok::RParen => Ok(inner),
                other => Err(ParseError {
                    pos,
                    found: other.describe(),
                    expected: vec![")"],
                }),
            }
        }
        other => Err(ParseError {
            pos,
            found: other.describe(),
            expected: vec!["integer", "x", "(", "-"],
        }),
    }
}
