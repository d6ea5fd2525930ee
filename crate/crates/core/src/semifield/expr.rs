//! Subtraction-free arithmetic expressions.
//!
//! Grammar (juxtaposition is multiplication, `*` `/` and juxtaposition share a
//! precedence level and associate to the left, `{}` may stand for `()`):
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := power (('*' | '/')? power)*
//! power  := atom ('^' integer)?
//! atom   := integer | ident | '(' expr ')'
//! ```
//!
//! Identifiers are a single letter optionally followed by digits (`x1`,
//! `x_1`), or one of the words `alpha` / `eps`. The Greek letters `α` and `ε`
//! are read as `alpha` and `eps`. So `ab^2c/eps` is `((a·b²)·c)/eps`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use super::{Semifield, SemifieldError, SymRat, Vars};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected character {0:?} at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of expression")]
    UnexpectedEnd,
    #[error("unexpected token {0}")]
    UnexpectedToken(String),
    #[error("integer constant must be positive")]
    ZeroConstant,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error(transparent)]
    Semifield(#[from] SemifieldError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(u64),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Num(u64),
    Ident(String),
    Plus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Num(n) => write!(f, "{n}"),
            Token::Ident(s) => write!(f, "{s}"),
            Token::Plus => write!(f, "+"),
            Token::Star => write!(f, "*"),
            Token::Slash => write!(f, "/"),
            Token::Caret => write!(f, "^"),
            Token::Open => write!(f, "("),
            Token::Close => write!(f, ")"),
        }
    }
}

const WORDS: [(&str, &str); 3] = [("epsilon", "eps"), ("alpha", "alpha"), ("eps", "eps")];

fn lex(src: &str) -> Result<Vec<Token>, ExprError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (off, ch) = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' | '{' => {
                out.push(Token::Open);
                i += 1;
            }
            ')' | '}' => {
                out.push(Token::Close);
                i += 1;
            }
            'α' => {
                out.push(Token::Ident("alpha".into()));
                i += 1;
            }
            'ε' => {
                out.push(Token::Ident("eps".into()));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
                let n: u64 = text.parse().map_err(|_| ExprError::UnexpectedToken(text))?;
                out.push(Token::Num(n));
            }
            c if c.is_ascii_alphabetic() => {
                let rest = &src[off..];
                if let Some((word, canon)) = WORDS.iter().find(|(w, _)| rest.starts_with(w)) {
                    out.push(Token::Ident(canon.to_string()));
                    i += word.chars().count();
                    continue;
                }
                let mut name = c.to_string();
                i += 1;
                if i + 1 < chars.len() && chars[i].1 == '_' && chars[i + 1].1.is_ascii_digit() {
                    name.push('_');
                    i += 1;
                }
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    name.push(chars[i].1);
                    i += 1;
                }
                out.push(Token::Ident(name));
            }
            c => return Err(ExprError::UnexpectedChar(c, off)),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?));
                }
                Some(Token::Num(_)) | Some(Token::Ident(_)) | Some(Token::Open) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp = match self.next() {
            Some(Token::Num(n)) => n,
            Some(Token::Open) => {
                let n = match self.next() {
                    Some(Token::Num(n)) => n,
                    Some(t) => return Err(ExprError::UnexpectedToken(t.to_string())),
                    None => return Err(ExprError::UnexpectedEnd),
                };
                match self.next() {
                    Some(Token::Close) => n,
                    Some(t) => return Err(ExprError::UnexpectedToken(t.to_string())),
                    None => return Err(ExprError::UnexpectedEnd),
                }
            }
            Some(t) => return Err(ExprError::UnexpectedToken(t.to_string())),
            None => return Err(ExprError::UnexpectedEnd),
        };
        let exp = u32::try_from(exp).map_err(|_| ExprError::UnexpectedToken(exp.to_string()))?;
        Ok(Expr::Pow(Box::new(base), exp))
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.next() {
            Some(Token::Num(0)) => Err(ExprError::ZeroConstant),
            Some(Token::Num(n)) => Ok(Expr::Num(n)),
            Some(Token::Ident(s)) => Ok(Expr::Var(s)),
            Some(Token::Open) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(e),
                    Some(t) => Err(ExprError::UnexpectedToken(t.to_string())),
                    None => Err(ExprError::UnexpectedEnd),
                }
            }
            Some(t) => Err(ExprError::UnexpectedToken(t.to_string())),
            None => Err(ExprError::UnexpectedEnd),
        }
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, ExprError> {
        let mut p = Parser {
            tokens: lex(src)?,
            pos: 0,
        };
        let e = p.expr()?;
        match p.peek() {
            None => Ok(e),
            Some(t) => Err(ExprError::UnexpectedToken(t.to_string())),
        }
    }

    /// Variable names in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        fn walk(e: &Expr, out: &mut Vec<String>) {
            match e {
                Expr::Num(_) => {}
                Expr::Var(v) => {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
                Expr::Add(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Expr::Pow(a, _) => walk(a, out),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// Evaluates in any semifield; `one` fixes the model for constants.
    pub fn eval<K: Semifield>(
        &self,
        lookup: &dyn Fn(&str) -> Option<K>,
        one: &K,
    ) -> Result<K, ExprError> {
        Ok(match self {
            Expr::Num(n) => one.nfold_sum(*n)?,
            Expr::Var(v) => lookup(v).ok_or_else(|| ExprError::UnknownVariable(v.clone()))?,
            Expr::Add(a, b) => a.eval(lookup, one)?.add(&b.eval(lookup, one)?)?,
            Expr::Mul(a, b) => a.eval(lookup, one)?.mul(&b.eval(lookup, one)?)?,
            Expr::Div(a, b) => a.eval(lookup, one)?.div(&b.eval(lookup, one)?)?,
            Expr::Pow(a, 0) => {
                a.eval(lookup, one)?;
                one.clone()
            }
            Expr::Pow(a, k) => a.eval(lookup, one)?.pow(*k)?,
        })
    }

    /// Evaluates symbolically over `vars`; `abbrevs` take precedence.
    pub fn eval_symbolic(
        &self,
        vars: &Vars,
        abbrevs: &HashMap<String, SymRat>,
    ) -> Result<SymRat, ExprError> {
        let gens = vars.generators();
        let lookup = |name: &str| {
            abbrevs
                .get(name)
                .cloned()
                .or_else(|| vars.index_of(name).map(|i| gens[i].clone()))
        };
        let one = SymRat::constant(vars, 1)?;
        self.eval(&lookup, &one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semifield::{PosRat, TropInt};

    fn abcd() -> Vars {
        Vars::new(["a", "b", "c", "d"])
    }

    #[test]
    fn implicit_multiplication_and_precedence() {
        let vars = abcd();
        let e = Expr::parse("ab^2c/eps").unwrap();
        assert_eq!(e.variables(), vec!["a", "b", "c", "eps"]);
        let mut ab = HashMap::new();
        ab.insert("eps".to_string(), SymRat::constant(&vars, 1).unwrap());
        let v = e.eval_symbolic(&vars, &ab).unwrap();
        assert_eq!(v.to_string(), "a*b^2*c");
    }

    #[test]
    fn juxtaposed_fractions() {
        let vars = abcd();
        let lhs = Expr::parse("d(b+d)(a+c)/α").unwrap();
        let rhs = Expr::parse("(d*(b+d))*(a+c)/alpha").unwrap();
        assert_eq!(lhs, rhs);
        let e = Expr::parse("2bc/{a+c}")
            .unwrap()
            .eval_symbolic(&vars, &HashMap::new())
            .unwrap();
        assert_eq!(e.to_string(), "2*b*c / (a + c)");
    }

    #[test]
    fn evaluates_in_numeric_models() {
        let e = Expr::parse("xy/(x+z)").unwrap();
        let look = |n: &str| match n {
            "x" => Some(TropInt(1)),
            "y" => Some(TropInt(5)),
            "z" => Some(TropInt(2)),
            _ => None,
        };
        assert_eq!(e.eval(&look, &TropInt(0)).unwrap(), TropInt(5));
        let lookq = |n: &str| match n {
            "x" | "z" => Some(PosRat::from_int(2).unwrap()),
            "y" => Some(PosRat::from_int(3).unwrap()),
            _ => None,
        };
        let one = PosRat::from_int(1).unwrap();
        assert_eq!(
            e.eval(&lookq, &one).unwrap(),
            PosRat::from_frac(3, 2).unwrap()
        );
    }

    #[test]
    fn errors() {
        assert_eq!(Expr::parse("a-b"), Err(ExprError::UnexpectedChar('-', 1)));
        assert_eq!(Expr::parse("(a+b"), Err(ExprError::UnexpectedEnd));
        assert_eq!(Expr::parse("0a"), Err(ExprError::ZeroConstant));
        let e = Expr::parse("q").unwrap();
        assert!(matches!(
            e.eval_symbolic(&abcd(), &HashMap::new()),
            Err(ExprError::UnknownVariable(_))
        ));
    }
}
