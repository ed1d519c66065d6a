//! Expression grammar:
//!
//! ```text
//! expr  := ['-'] term (('+' | '-') term)*
//! term  := power (('*' | '/') power)*
//! power := atom ['^' (INT | '(' INT ')')]
//! atom  := INT | IDENT | '(' expr ')'
//! ```
//!
//! `y^(k)` denotes the jet variable `y_k` when the table has one; a plain
//! power otherwise.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RationalFunction, Table};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    col: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    table: &'a Table,
    line: usize,
    end_col: usize,
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, col });
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                col,
            });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
        } else {
            return Err(Error::Syntax {
                line,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

impl<'a> Parser<'a> {
    fn err<T>(&self, col: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.line,
            column: col,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        match self.peek() {
            Some(t) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => {
                let msg = format!("expected {}, found {}", describe(&want), describe(t));
                self.err(self.col(), msg)
            }
            None => self.err(
                self.col(),
                format!("expected {}, found end of input", describe(&want)),
            ),
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.checked_mul(&self.power()?)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn exponent(&mut self) -> Result<(u32, bool)> {
        let col = self.col();
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.pos += 1;
        }
        let n = match self.bump() {
            Some(Token {
                tok: Tok::Int(n), ..
            }) => n,
            Some(t) => {
                return self.err(
                    t.col,
                    format!("expected an integer exponent, found {}", describe(&t.tok)),
                )
            }
            None => {
                return self.err(
                    self.end_col,
                    "expected an integer exponent, found end of input",
                )
            }
        };
        if paren {
            self.expect(Tok::RParen)?;
        }
        match u32::try_from(&n) {
            Ok(k) => Ok((k, paren)),
            Err(_) => self.err(col, "exponent too large"),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let start = self.pos;
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let (k, paren) = self.exponent()?;
        if paren {
            if let Tok::Ident(name) = &self.toks[start].tok {
                let jet = format!("{name}_{k}");
                if let Some(i) = self.table.index_of(&jet) {
                    return Ok(RationalFunction::var(self.table, i));
                }
            }
        }
        base.pow(k as i32)
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        let col = self.col();
        match self.bump() {
            Some(Token {
                tok: Tok::Int(n), ..
            }) => Ok(RationalFunction::constant(
                self.table,
                BigRational::from_integer(n),
            )),
            Some(Token {
                tok: Tok::Ident(name),
                ..
            }) => match self.table.index_of(&name) {
                Some(i) => Ok(RationalFunction::var(self.table, i)),
                None => self.err(col, format!("unknown identifier `{name}`")),
            },
            Some(Token {
                tok: Tok::LParen, ..
            }) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(t) => self.err(t.col, format!("unexpected {}", describe(&t.tok))),
            None => self.err(self.end_col, "unexpected end of input"),
        }
    }
}

/// Parses `text` located at `line`, column `col0` (both 1-based) of some
/// larger document.
pub fn parse_rational_at(
    text: &str,
    table: &Table,
    line: usize,
    col0: usize,
) -> Result<RationalFunction> {
    let toks = tokenize(text, line, col0)?;
    let mut p = Parser {
        toks,
        pos: 0,
        table,
        line,
        end_col: col0 + text.chars().count(),
    };
    if p.toks.is_empty() {
        return p.err(col0, "empty expression");
    }
    let e = p.expr()?;
    if let Some(t) = p.toks.get(p.pos) {
        let msg = format!("unexpected {}", describe(&t.tok));
        return p.err(t.col, msg);
    }
    Ok(e)
}

pub fn parse_rational(text: &str, table: &Table) -> Result<RationalFunction> {
    parse_rational_at(text, table, 1, 1)
}

pub fn parse_polynomial_at(
    text: &str,
    table: &Table,
    line: usize,
    col0: usize,
) -> Result<Polynomial> {
    let f = parse_rational_at(text, table, line, col0)?;
    f.to_polynomial().ok_or_else(|| Error::Syntax {
        line,
        column: col0,
        message: format!("`{}` is not a polynomial", text.trim()),
    })
}

pub fn parse_polynomial(text: &str, table: &Table) -> Result<Polynomial> {
    parse_polynomial_at(text, table, 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{VarRole, VarTable};

    fn t() -> Table {
        VarTable::new([
            ("a", VarRole::GroupParam),
            ("b", VarRole::GroupParam),
            ("c", VarRole::GroupParam),
            ("s", VarRole::GroupParam),
            ("x", VarRole::Source),
            ("y", VarRole::Source),
            ("y_1", VarRole::Jet),
        ])
        .unwrap()
    }

    #[test]
    fn relation() {
        assert_eq!(
            parse_polynomial("a*b - 1", &t()).unwrap().to_string(),
            "a*b - 1"
        );
    }

    #[test]
    fn jet_sugar() {
        let p = parse_polynomial("(c - s*y^(1))^3", &t()).unwrap();
        let q = parse_polynomial("(c - s*y_1)^3", &t()).unwrap();
        assert_eq!(p, q);
        assert_eq!(parse_polynomial("x^(2)", &t()).unwrap().to_string(), "x^2");
    }

    #[test]
    fn double_minus_is_rejected() {
        match parse_rational("--x", &t()) {
            Err(Error::Syntax {
                line: 1, column: 2, ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        assert!(matches!(
            parse_rational("2x", &t()),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_rational("x y", &t()),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(
            parse_rational("x/(y - y)", &t()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn unknown_identifier() {
        match parse_rational("x + z", &t()) {
            Err(Error::Syntax {
                column: 5, message, ..
            }) => assert!(message.contains("`z`")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn precedence() {
        let f = parse_rational("-x^2 + 3/4*x", &t()).unwrap();
        assert_eq!(f.to_string(), "(-4*x^2 + 3*x)/4");
        let g = parse_rational("2^3 - 8", &t()).unwrap();
        assert!(g.is_zero());
    }
}
