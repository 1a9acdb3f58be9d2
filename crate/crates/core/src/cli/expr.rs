//! A small arithmetic expression language for ansatz coefficients.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' unary)?
//! atom    := number | 'r' | 'eps' | 'm' | '(' expr ')'
//! ```
//!
//! `×`, `÷` and `−` are accepted as spellings of `*`, `/` and `-`.

use crate::error::{Result, SpinError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    /// `|p⃗|`.
    R,
    /// Energy sign, `±1`.
    Eps,
    /// Mass.
    M,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, r: f64, eps: f64, m: f64) -> f64 {
        match self {
            Expr::Num(x) => *x,
            Expr::Var(Var::R) => r,
            Expr::Var(Var::Eps) => eps,
            Expr::Var(Var::M) => m,
            Expr::Neg(a) => -a.eval(r, eps, m),
            Expr::Add(a, b) => a.eval(r, eps, m) + b.eval(r, eps, m),
            Expr::Sub(a, b) => a.eval(r, eps, m) - b.eval(r, eps, m),
            Expr::Mul(a, b) => a.eval(r, eps, m) * b.eval(r, eps, m),
            Expr::Div(a, b) => a.eval(r, eps, m) / b.eval(r, eps, m),
            Expr::Pow(a, b) => a.eval(r, eps, m).powf(b.eval(r, eps, m)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> SpinError {
    SpinError::Parse { pos, msg: msg.into() }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' | '.' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '.') {
                    i += 1;
                }
                if i < chars.len() && matches!(chars[i].1, 'e' | 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && matches!(chars[j].1, '+' | '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].1.is_ascii_digit() {
                        i = j;
                        while i < chars.len() && chars[i].1.is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
                let value = text
                    .parse::<f64>()
                    .map_err(|_| err(pos, format!("malformed number '{text}'")))?;
                out.push((pos, Tok::Num(value)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                out.push((pos, Tok::Ident(chars[start..i].iter().map(|(_, c)| c).collect())));
            }
            '+' | '-' | '*' | '/' | '^' => {
                out.push((pos, Tok::Op(c)));
                i += 1;
            }
            '−' => {
                out.push((pos, Tok::Op('-')));
                i += 1;
            }
            '×' => {
                out.push((pos, Tok::Op('*')));
                i += 1;
            }
            '÷' => {
                out.push((pos, Tok::Op('/')));
                i += 1;
            }
            '(' => {
                out.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Tok::RParen));
                i += 1;
            }
            other => return Err(err(pos, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
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

    fn eat_op(&mut self, ops: &[char]) -> Option<char> {
        match self.peek() {
            Some(Tok::Op(c)) if ops.contains(c) => {
                let c = *c;
                self.at += 1;
                Some(c)
            }
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(op) = self.eat_op(&['+', '-']) {
            let rhs = self.term()?;
            lhs = if op == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(op) = self.eat_op(&['*', '/']) {
            let rhs = self.unary()?;
            lhs = if op == '*' {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_op(&['-']).is_some() {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat_op(&['+']).is_some() {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat_op(&['^']).is_some() {
            let exponent = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        let tok = self.peek().cloned();
        self.at += 1;
        match tok {
            Some(Tok::Num(x)) => Ok(Expr::Num(x)),
            Some(Tok::Ident(name)) => match name.as_str() {
                "r" => Ok(Expr::Var(Var::R)),
                "eps" => Ok(Expr::Var(Var::Eps)),
                "m" => Ok(Expr::Var(Var::M)),
                _ => Err(err(pos, format!("unknown variable '{name}' (expected r, eps or m)"))),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => Err(err(self.pos(), "expected ')'")),
                }
            }
            Some(Tok::RParen) => Err(err(pos, "unexpected ')'")),
            Some(Tok::Op(c)) => Err(err(pos, format!("unexpected operator '{c}'"))),
            None => Err(err(pos, "unexpected end of expression")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(err(p.pos(), "trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str, r: f64) -> f64 {
        parse(s).unwrap().eval(r, 1.0, 1.0)
    }

    #[test]
    fn literals_and_precedence() {
        assert_eq!(ev("0.5", 0.0), 0.5);
        assert_eq!(ev("1/2", 0.0), 0.5);
        assert_eq!(ev("1 + 2*3", 0.0), 7.0);
        assert_eq!(ev("(1 + 2)*3", 0.0), 9.0);
        assert_eq!(ev("2^3^2", 0.0), 512.0);
        assert_eq!(ev("-2^2", 0.0), -4.0);
        assert_eq!(ev("2^-1", 0.0), 0.5);
        assert_eq!(ev("1e-3 * 1E3", 0.0), 1.0);
        assert_eq!(ev("8 − 2 × 3 ÷ 2", 0.0), 5.0);
    }

    #[test]
    fn variables() {
        assert_eq!(ev("1/r^2", 2.0), 0.25);
        let e = parse("eps*m + r").unwrap();
        assert_eq!(e.eval(3.0, -1.0, 2.0), 1.0);
    }

    #[test]
    fn errors_report_position() {
        for (src, pos) in [
            ("1 +", 3),
            ("x", 0),
            ("(1", 2),
            ("1 2", 2),
            ("2 $ 3", 2),
            (")", 0),
            ("", 0),
        ] {
            match parse(src) {
                Err(SpinError::Parse { pos: p, .. }) => assert_eq!(p, pos, "{src}"),
                other => panic!("{src}: {other:?}"),
            }
        }
    }
}
