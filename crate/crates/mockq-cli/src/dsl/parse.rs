//! Lexer and LL(1) recursive-descent parser.
//!
//! ```text
//! stmt     = expr [ "==" expr ] EOF
//! expr     = term { ("+" | "-") term }
//! term     = unary { ("*" | "/") unary }
//! unary    = "-" unary | power
//! power    = atom [ "^" exponent ]
//! exponent = INT | IDENT | "q" | "-" exponent | "(" expr ")"
//! atom     = INT | "q" | "(" expr ")"
//!          | "poch" "(" expr ";" expr ";" ( expr | "inf" ) ")"
//!          | "qbin" "(" expr "," expr ")"
//!          | "sum" "(" IDENT "=" expr ".." ( expr | "inf" ) "," expr ")"
//!          | "qtheta" "(" IDENT "," expr "," expr ")"
//!          | IDENT [ "." IDENT ] "(" expr ")"
//!          | IDENT
//! ```

use super::ast::{BinOp, Expr, Stmt};
use mockq::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Semi,
    Comma,
    Assign,
    EqEq,
    DotDot,
    Dot,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
            t => format!("`{}`", t.text()),
        }
    }

    fn text(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Semi => ";",
            Tok::Comma => ",",
            Tok::Assign => "=",
            Tok::EqEq => "==",
            Tok::DotDot => "..",
            Tok::Dot => ".",
            _ => "",
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, col, msg: msg.into() })
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = vec![];
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let next = chars.get(i + 1).copied();
        let (n, t) = match c {
            '+' => (1, Tok::Plus),
            '-' | '−' => (1, Tok::Minus),
            '*' => (1, Tok::Star),
            '/' => (1, Tok::Slash),
            '^' => (1, Tok::Caret),
            '(' => (1, Tok::LParen),
            ')' => (1, Tok::RParen),
            ';' => (1, Tok::Semi),
            ',' => (1, Tok::Comma),
            '=' if next == Some('=') => (2, Tok::EqEq),
            '=' => (1, Tok::Assign),
            '.' if next == Some('.') => (2, Tok::DotDot),
            '.' => (1, Tok::Dot),
            d if d.is_ascii_digit() => {
                let s: String = chars[i..].iter().take_while(|c| c.is_ascii_digit()).collect();
                let v = s.parse::<i64>().or_else(|_| err(l0, c0, format!("integer literal {s} out of range")))?;
                (s.len(), Tok::Int(v))
            }
            a if a.is_alphabetic() || a == '_' => {
                let s: String = chars[i..].iter().take_while(|c| c.is_alphanumeric() || **c == '_').collect();
                (s.chars().count(), Tok::Ident(s))
            }
            other => return err(l0, c0, format!("unexpected character `{other}`")),
        };
        out.push(Spanned { tok: t, line: l0, col: c0 });
        i += n;
        col += n;
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

const RESERVED: &[&str] = &["q", "inf", "poch", "qbin", "sum", "qtheta"];

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        let s = &self.toks[self.pos];
        err(s.line, s.col, format!("expected one of {{{}}}, found {}", expected.join(", "), s.tok.describe()))
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("`{}`", t.text())])
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => {
                self.bump();
                Ok(s)
            }
            _ => self.fail(&["identifier"]),
        }
    }

    fn is_inf(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == "inf")
    }

    fn stmt(&mut self) -> Result<Stmt> {
        let a = self.expr()?;
        let s = if *self.peek() == Tok::EqEq {
            self.bump();
            Stmt::Eq(a, self.expr()?)
        } else {
            Stmt::Value(a)
        };
        match self.peek() {
            Tok::Eof => Ok(s),
            _ => self.fail(&["`+`", "`-`", "`*`", "`/`", "`==`", "end of input"]),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut a = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(a),
            };
            self.bump();
            a = Expr::bin(op, a, self.term()?);
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut a = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(a),
            };
            self.bump();
            a = Expr::bin(op, a, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let b = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            return Ok(Expr::Pow(Box::new(b), Box::new(self.exponent()?)));
        }
        Ok(b)
    }

    fn exponent(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.exponent()?)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(s) if s == "q" => {
                self.bump();
                Ok(Expr::Q)
            }
            Tok::Ident(_) => Ok(Expr::Var(self.ident()?)),
            _ => self.fail(&["integer", "identifier", "`-`", "`(`"]),
        }
    }

    fn upper(&mut self) -> Result<Option<Box<Expr>>> {
        if self.is_inf() {
            self.bump();
            Ok(None)
        } else {
            Ok(Some(Box::new(self.expr()?)))
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        match t {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(s) => {
                match s.as_str() {
                    "q" => {
                        self.bump();
                        return Ok(Expr::Q);
                    }
                    "poch" => {
                        self.bump();
                        self.expect(Tok::LParen)?;
                        let z = Box::new(self.expr()?);
                        self.expect(Tok::Semi)?;
                        let step = Box::new(self.expr()?);
                        self.expect(Tok::Semi)?;
                        let n = self.upper()?;
                        self.expect(Tok::RParen)?;
                        return Ok(Expr::Poch { z, step, n });
                    }
                    "qbin" => {
                        self.bump();
                        self.expect(Tok::LParen)?;
                        let n = self.expr()?;
                        self.expect(Tok::Comma)?;
                        let m = self.expr()?;
                        self.expect(Tok::RParen)?;
                        return Ok(Expr::QBin(Box::new(n), Box::new(m)));
                    }
                    "sum" => {
                        self.bump();
                        self.expect(Tok::LParen)?;
                        let var = self.ident()?;
                        self.expect(Tok::Assign)?;
                        let lo = Box::new(self.expr()?);
                        self.expect(Tok::DotDot)?;
                        let hi = self.upper()?;
                        self.expect(Tok::Comma)?;
                        let body = Box::new(self.expr()?);
                        self.expect(Tok::RParen)?;
                        return Ok(Expr::Sum { var, lo, hi, body });
                    }
                    "qtheta" => {
                        self.bump();
                        self.expect(Tok::LParen)?;
                        let chi = self.ident()?;
                        self.expect(Tok::Comma)?;
                        let den = Box::new(self.expr()?);
                        self.expect(Tok::Comma)?;
                        let shift = Box::new(self.expr()?);
                        self.expect(Tok::RParen)?;
                        return Ok(Expr::QTheta { chi, den, shift });
                    }
                    "inf" => return self.fail(&["expression"]),
                    _ => {}
                }
                let name = self.ident()?;
                match self.peek() {
                    Tok::LParen => {
                        self.bump();
                        let arg = Box::new(self.expr()?);
                        self.expect(Tok::RParen)?;
                        Ok(Expr::Call { name, variant: None, arg })
                    }
                    Tok::Dot => {
                        self.bump();
                        let variant = Some(self.ident()?);
                        self.expect(Tok::LParen)?;
                        let arg = Box::new(self.expr()?);
                        self.expect(Tok::RParen)?;
                        Ok(Expr::Call { name, variant, arg })
                    }
                    _ => Ok(Expr::Var(name)),
                }
            }
            _ => self.fail(&["integer", "`q`", "`(`", "identifier", "`poch`", "`qbin`", "`sum`", "`qtheta`"]),
        }
    }
}

pub fn parse(src: &str) -> Result<Stmt> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    p.stmt()
}

/// Parse a value expression (no `==`).
pub fn parse_expr(src: &str) -> Result<Expr> {
    match parse(src)? {
        Stmt::Value(e) => Ok(e),
        Stmt::Eq(..) => Err(Error::Parse { line: 1, col: 1, msg: "`==` is only allowed in identities".into() }),
    }
}
