//! Expression language for operators.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := 'x' | 'd' | 'i' | 'H' | 'e' '(' nat ',' nat ')' | rational | '(' expr ')'
//! ```
//!
//! `d` is `∂` and `i` is `∫`; `D`, `I`, `∂` and `∫` are accepted as
//! synonyms. Products keep their left-to-right order.

use num_traits::One;

use crate::error::{Error, Result};
use crate::operator::{CanonicalOperator, Generator, XPoly};
use crate::rational::{parse_rational, Rational};

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Gen(Generator),
    Num(Rational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom(Atom),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    Sum(Vec<(Sign, Expr)>),
    Paren(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Gen(Generator),
    Num(Rational),
    Nat(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    E,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut toks = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, ch) = chars[k];
        k += 1;
        let tok = match ch {
            c if c.is_whitespace() => continue,
            'x' => Tok::Gen(Generator::X),
            'd' | 'D' | '∂' => Tok::Gen(Generator::Del),
            'i' | 'I' | '∫' => Tok::Gen(Generator::Int),
            'H' => Tok::Gen(Generator::H),
            'e' => Tok::E,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            c if c.is_ascii_digit() => {
                let start = pos;
                let mut end = pos + 1;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    end = chars[k].0 + 1;
                    k += 1;
                }
                let is_fraction = k + 1 < chars.len() && chars[k].1 == '/' && chars[k + 1].1.is_ascii_digit();
                if is_fraction {
                    k += 1;
                    while k < chars.len() && chars[k].1.is_ascii_digit() {
                        end = chars[k].0 + 1;
                        k += 1;
                    }
                    let lit = &text[start..end];
                    let r = parse_rational(lit).map_err(|_| Error::Syntax {
                        pos,
                        msg: format!("bad rational {lit:?}"),
                    })?;
                    Tok::Num(r)
                } else {
                    Tok::Nat(text[start..end].to_string())
                }
            }
            other => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        };
        toks.push((pos, tok));
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn nat(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Nat(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => self.err("expected a natural number"),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                Sign::Minus
            }
            Some(Tok::Plus) => {
                self.at += 1;
                Sign::Plus
            }
            _ => Sign::Plus,
        };
        loop {
            terms.push((sign, self.term()?));
            sign = match self.peek() {
                Some(Tok::Plus) => Sign::Plus,
                Some(Tok::Minus) => Sign::Minus,
                _ => break,
            };
            self.at += 1;
        }
        if terms.len() == 1 && terms[0].0 == Sign::Plus {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor"));
        }
        Ok(Expr::Product(factors))
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        let digits = self.nat()?;
        let exp: u32 = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| Error::Syntax {
                pos,
                msg: format!("exponent must be at most {MAX_EXPONENT}"),
            })?;
        Ok(Expr::Power(Box::new(base), exp))
    }

    fn atom(&mut self) -> Result<Expr> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.at += 1;
        match tok {
            Tok::Gen(g) => Ok(Expr::Atom(Atom::Gen(g))),
            Tok::Num(r) => Ok(Expr::Atom(Atom::Num(r))),
            Tok::Nat(s) => Ok(Expr::Atom(Atom::Num(parse_rational(&s)?))),
            Tok::E => {
                self.expect(Tok::LParen, "'(' after e")?;
                let pos = self.pos();
                let i = self.nat()?;
                self.expect(Tok::Comma, "','")?;
                let j = self.nat()?;
                self.expect(Tok::RParen, "')'")?;
                let idx = |s: &str| {
                    s.parse::<usize>().map_err(|_| Error::Syntax {
                        pos,
                        msg: "matrix-unit index too large".into(),
                    })
                };
                Ok(Expr::Atom(Atom::Gen(Generator::E(idx(&i)?, idx(&j)?))))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::Paren(Box::new(inner)))
            }
            _ => {
                self.at -= 1;
                self.err("expected an operand")
            }
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

pub fn eval_ast(e: &Expr) -> CanonicalOperator {
    match e {
        Expr::Atom(Atom::Gen(g)) => g.to_operator(),
        Expr::Atom(Atom::Num(r)) => CanonicalOperator::scalar(r.clone()),
        Expr::Product(fs) => fs
            .iter()
            .fold(CanonicalOperator::one(), |acc, f| &acc * &eval_ast(f)),
        Expr::Power(base, k) => {
            let b = eval_ast(base);
            (0..*k).fold(CanonicalOperator::one(), |acc, _| &acc * &b)
        }
        Expr::Sum(terms) => terms.iter().fold(CanonicalOperator::zero(), |acc, (s, t)| {
            let v = eval_ast(t);
            match s {
                Sign::Plus => &acc + &v,
                Sign::Minus => &acc - &v,
            }
        }),
        Expr::Paren(inner) => eval_ast(inner),
    }
}

/// Parses and normalises in one step.
pub fn parse_operator(text: &str) -> Result<CanonicalOperator> {
    Ok(eval_ast(&parse(text)?))
}

pub fn pretty_print(a: &CanonicalOperator) -> String {
    a.to_string()
}

fn only_x(e: &Expr) -> bool {
    match e {
        Expr::Atom(Atom::Gen(g)) => *g == Generator::X,
        Expr::Atom(Atom::Num(_)) => true,
        Expr::Product(fs) => fs.iter().all(only_x),
        Expr::Power(b, _) => only_x(b),
        Expr::Sum(ts) => ts.iter().all(|(_, t)| only_x(t)),
        Expr::Paren(b) => only_x(b),
    }
}

/// Parses a polynomial in `x`, such as `1/2*x^2 - 3`.
pub fn parse_polynomial(text: &str) -> Result<XPoly> {
    let e = parse(text)?;
    if !only_x(&e) {
        return Err(Error::Syntax {
            pos: 0,
            msg: "a polynomial may only contain x and rational numbers".into(),
        });
    }
    // multiplication operators applied to the constant 1
    let one = XPoly::from_coeffs(vec![Rational::one()]);
    Ok(eval_ast(&e).apply(&one))
}
