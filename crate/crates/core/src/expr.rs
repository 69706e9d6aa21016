//! Surface syntax for q-series expressions.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := atom ("^" INT)?
//! atom   := INT | MONO | CALL | "(" expr ")"
//! CALL   := NAME "(" args ")"
//! MONO   := "-"? "q" ("^" INT)?
//! NAME   := E | phi | psi | f | G | H | QF
//! ```
//!
//! `E`, `phi`, `psi`, `G` and `H` take one monomial `±q^k` with `k >= 1`;
//! `f` takes two signed monomials; `QF(a, b, c)` is the theta series of the
//! binary form `ax² + bxy + cy²`. A leading minus is only accepted as the
//! sign of a monomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qfunctions::{self, Monomial};
use crate::repcount::{bqf_theta, BinaryForm};
use crate::series::{format_rational, LaurentSeries, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Name {
    E,
    Phi,
    Psi,
    F,
    G,
    H,
    QF,
}

impl Name {
    fn parse(s: &str) -> Option<Name> {
        Some(match s {
            "E" => Name::E,
            "phi" => Name::Phi,
            "psi" => Name::Psi,
            "f" => Name::F,
            "G" => Name::G,
            "H" => Name::H,
            "QF" => Name::QF,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Name::E => "E",
            Name::Phi => "phi",
            Name::Psi => "psi",
            Name::F => "f",
            Name::G => "G",
            Name::H => "H",
            Name::QF => "QF",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arg {
    Monomial(Monomial),
    Int(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AddOp {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Sum(Box<Expr>, AddOp, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, u32),
    Scalar(Rational),
    Monomial(Monomial),
    Call(Name, Vec<Arg>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "{v}"),
            Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Sym(c) => write!(f, "{:?}", c.to_string()),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (off, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = bytes[start..i].iter().map(|&(_, c)| c).collect();
            out.push((off, Tok::Int(digits.parse().expect("decimal digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].1.is_ascii_alphanumeric() || bytes[i].1 == '_') {
                i += 1;
            }
            out.push((off, Tok::Ident(bytes[start..i].iter().map(|&(_, c)| c).collect())));
        } else if "+-*/^(),".contains(c) {
            out.push((off, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { offset: off, token: format!("{:?}", c.to_string()) });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self) -> Error {
        let (offset, tok) = &self.toks[self.pos];
        Error::Syntax { offset: *offset, token: tok.to_string() }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn small_int<T: TryFrom<BigInt>>(&mut self) -> Result<T> {
        match self.peek().clone() {
            Tok::Int(v) => {
                let r = T::try_from(v).map_err(|_| self.error())?;
                self.bump();
                Ok(r)
            }
            _ => Err(self.error()),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => AddOp::Plus,
                Tok::Sym('-') => AddOp::Minus,
                _ => return Ok(acc),
            };
            self.bump();
            acc = Expr::Sum(Box::new(acc), op, Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = Expr::Product(Box::new(acc), Box::new(self.factor()?));
            } else if self.eat('/') {
                acc = Expr::Quotient(Box::new(acc), Box::new(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let k: u32 = self.small_int()?;
            return Ok(Expr::Power(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr::Scalar(Rational::from_integer(v)))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('-') => Ok(Expr::Monomial(self.monomial()?)),
            Tok::Ident(s) if s == "q" => Ok(Expr::Monomial(self.monomial()?)),
            Tok::Ident(s) => match Name::parse(&s) {
                Some(name) => {
                    self.bump();
                    self.call(name)
                }
                None => Err(self.error()),
            },
            _ => Err(self.error()),
        }
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let sign = if self.eat('-') { -1 } else { 1 };
        if *self.peek() != Tok::Ident("q".into()) {
            return Err(self.error());
        }
        self.bump();
        let exponent = if self.eat('^') { self.small_int::<i64>()? } else { 1 };
        Ok(Monomial { sign, exponent })
    }

    fn arg(&mut self) -> Result<Arg> {
        let negative = *self.peek() == Tok::Sym('-');
        let int_follows = matches!(self.peek_at(usize::from(negative)), Tok::Int(_));
        if int_follows {
            if negative {
                self.bump();
            }
            let v: i64 = self.small_int()?;
            return Ok(Arg::Int(if negative { -v } else { v }));
        }
        Ok(Arg::Monomial(self.monomial()?))
    }

    fn call(&mut self, name: Name) -> Result<Expr> {
        self.expect('(')?;
        let mut args = vec![self.arg()?];
        while self.eat(',') {
            args.push(self.arg()?);
        }
        self.expect(')')?;
        check_call(name, &args)?;
        Ok(Expr::Call(name, args))
    }
}

fn check_call(name: Name, args: &[Arg]) -> Result<()> {
    let want = match name {
        Name::F => 2,
        Name::QF => 3,
        _ => 1,
    };
    if args.len() != want {
        return Err(Error::Arity(format!("{} takes {want} argument(s), got {}", name.as_str(), args.len())));
    }
    for a in args {
        match (name, a) {
            (Name::QF, Arg::Int(_)) => {}
            (Name::QF, Arg::Monomial(m)) => {
                return Err(Error::Arity(format!("QF takes integers, got {}", MonoText(*m))));
            }
            (_, Arg::Int(v)) => {
                return Err(Error::InvalidMonomial(format!("{} expects a monomial, got {v}", name.as_str())));
            }
            (Name::F, Arg::Monomial(_)) => {}
            (_, Arg::Monomial(m)) if m.exponent < 1 => {
                return Err(Error::InvalidMonomial(format!(
                    "{} expects ±q^k with k >= 1, got {}",
                    name.as_str(),
                    MonoText(*m)
                )));
            }
            _ => {}
        }
    }
    Ok(())
}

/// Parse an expression.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error());
    }
    Ok(e)
}

struct MonoText(Monomial);

impl fmt::Display for MonoText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.0.sign < 0 { "-" } else { "" };
        match self.0.exponent {
            1 => write!(f, "{s}q"),
            e => write!(f, "{s}q^{e}"),
        }
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Monomial(m) => write!(f, "{}", MonoText(*m)),
            Arg::Int(v) => write!(f, "{v}"),
        }
    }
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(..) => 1,
            Expr::Product(..) | Expr::Quotient(..) => 2,
            Expr::Power(..) => 3,
            Expr::Scalar(r) if !r.is_integer() || r < &Rational::zero() => 0,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Sum(a, op, b) => {
                a.write_at(f, 1)?;
                write!(f, " {} ", if *op == AddOp::Plus { '+' } else { '-' })?;
                b.write_at(f, 2)
            }
            Expr::Product(a, b) => {
                a.write_at(f, 2)?;
                write!(f, " * ")?;
                b.write_at(f, 3)
            }
            Expr::Quotient(a, b) => {
                a.write_at(f, 2)?;
                write!(f, " / ")?;
                b.write_at(f, 3)
            }
            Expr::Power(base, k) => {
                // `q^2` would read back as a monomial, so monomial bases keep parentheses.
                if matches!(**base, Expr::Monomial(_)) {
                    write!(f, "(")?;
                    base.write_at(f, 0)?;
                    write!(f, ")")?;
                } else {
                    base.write_at(f, 4)?;
                }
                write!(f, "^{k}")
            }
            Expr::Scalar(r) if r < &Rational::zero() => write!(f, "0 - {}", format_rational(&-r)),
            Expr::Scalar(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Expr::Scalar(r) => write!(f, "{} / {}", r.numer(), r.denom()),
            Expr::Monomial(m) => write!(f, "{}", MonoText(*m)),
            Expr::Call(name, args) => {
                write!(f, "{}(", name.as_str())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// `g(±q^k)` to `order`, building `g` at the reduced order first.
fn substitute(m: Monomial, order: i64, g: impl Fn(i64) -> LaurentSeries) -> LaurentSeries {
    let k = m.exponent as u32;
    let mut s = g(order.div_euclid(k as i64) + 1);
    if m.sign < 0 {
        s = s.negate_variable();
    }
    s.compose_power(k).truncate(order)
}

fn mono(a: &Arg) -> Monomial {
    match a {
        Arg::Monomial(m) => *m,
        Arg::Int(_) => unreachable!("validated by check_call"),
    }
}

fn int(a: &Arg) -> i64 {
    match a {
        Arg::Int(v) => *v,
        Arg::Monomial(_) => unreachable!("validated by check_call"),
    }
}

fn eval_call(name: Name, args: &[Arg], order: i64) -> Result<LaurentSeries> {
    check_call(name, args)?;
    let one_arg = |g: fn(i64) -> LaurentSeries| substitute(mono(&args[0]), order, g);
    Ok(match name {
        Name::E => one_arg(|n| qfunctions::euler_e(1, n)),
        Name::Phi => one_arg(|n| qfunctions::phi(1, n)),
        Name::Psi => one_arg(|n| qfunctions::psi(1, n)),
        Name::G => one_arg(qfunctions::rr_g),
        Name::H => one_arg(qfunctions::rr_h),
        Name::F => qfunctions::theta_f(mono(&args[0]), mono(&args[1]), order)?,
        Name::QF => bqf_theta(BinaryForm::new(int(&args[0]), int(&args[1]), int(&args[2]))?, order),
    })
}

/// Evaluate an expression as a series known through `order` (division by
/// a series with positive valuation lowers the known order accordingly).
pub fn eval_expr(ast: &Expr, order: i64) -> Result<LaurentSeries> {
    Ok(match ast {
        Expr::Sum(a, AddOp::Plus, b) => eval_expr(a, order)? + eval_expr(b, order)?,
        Expr::Sum(a, AddOp::Minus, b) => eval_expr(a, order)? - eval_expr(b, order)?,
        Expr::Product(a, b) => eval_expr(a, order)? * eval_expr(b, order)?,
        Expr::Quotient(a, b) => eval_expr(a, order)?.div(&eval_expr(b, order)?)?,
        Expr::Power(a, k) => {
            if *k == 0 {
                LaurentSeries::one(order)
            } else {
                eval_expr(a, order)?.pow(*k)
            }
        }
        Expr::Scalar(r) => LaurentSeries::constant(r.clone(), order),
        Expr::Monomial(m) => m.to_series(order),
        Expr::Call(name, args) => eval_call(*name, args, order)?,
    })
}

/// Parse and evaluate in one step.
pub fn expand(text: &str, order: i64) -> Result<LaurentSeries> {
    eval_expr(&parse_expr(text)?, order)
}
