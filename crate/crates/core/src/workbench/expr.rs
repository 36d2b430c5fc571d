//! Expressions over the two alphabets.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-' term | power ('*' power)*
//! power  := primary ('^' '-'? int)?
//! primary:= number | atom | '(' expr ')'
//! ```
//!
//! Numbers are integers or `p/q` literals. Enveloping-algebra atoms are `P1`,
//! `P2`, `J`, `E(b)` and the named elements (`Hplus`, `Jscript`, ...);
//! function-algebra atoms are `Th(l)`, `a1`, `a2`, `x`, `xbar`, `chi`, `chibar`.
//! Scalars are `i`, `z`, `h+`, `h-`, `k`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::envalg::{e_pow, jgen, named_element, p1, p2, NamedElement, UElement};
use crate::error::{Error, Result};
use crate::funalg::{a1, a2, th, x, xbar, FElement};
use crate::qplane::{chi_in_f, chibar_in_f};
use crate::scalar::ParamScalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Atom {
    P1,
    P2,
    J,
    E(i64),
    Named(NamedElement),
    Th(i64),
    A1,
    A2,
    X,
    XBar,
    Chi,
    ChiBar,
    I,
    Z,
    Hp,
    Hm,
    K,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Alphabet {
    Scalar,
    U,
    F,
}

impl Atom {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Atom::P1 | Atom::P2 | Atom::J | Atom::E(_) | Atom::Named(_) => Alphabet::U,
            Atom::Th(_) | Atom::A1 | Atom::A2 | Atom::X | Atom::XBar | Atom::Chi | Atom::ChiBar => Alphabet::F,
            Atom::I | Atom::Z | Atom::Hp | Atom::Hm | Atom::K => Alphabet::Scalar,
        }
    }

    fn from_ident(s: &str) -> Option<Atom> {
        Some(match s {
            "P1" => Atom::P1,
            "P2" => Atom::P2,
            "J" => Atom::J,
            "a1" => Atom::A1,
            "a2" => Atom::A2,
            "x" => Atom::X,
            "xbar" => Atom::XBar,
            "chi" => Atom::Chi,
            "chibar" => Atom::ChiBar,
            "i" => Atom::I,
            "z" => Atom::Z,
            "h+" => Atom::Hp,
            "h-" => Atom::Hm,
            "k" => Atom::K,
            other => Atom::Named(NamedElement::from_name(other)?),
        })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::P1 => write!(f, "P1"),
            Atom::P2 => write!(f, "P2"),
            Atom::J => write!(f, "J"),
            Atom::E(b) => write!(f, "E({b})"),
            Atom::Named(n) => write!(f, "{}", n.name()),
            Atom::Th(l) => write!(f, "Th({l})"),
            Atom::A1 => write!(f, "a1"),
            Atom::A2 => write!(f, "a2"),
            Atom::X => write!(f, "x"),
            Atom::XBar => write!(f, "xbar"),
            Atom::Chi => write!(f, "chi"),
            Atom::ChiBar => write!(f, "chibar"),
            Atom::I => write!(f, "i"),
            Atom::Z => write!(f, "z"),
            Atom::Hp => write!(f, "h+"),
            Atom::Hm => write!(f, "h-"),
            Atom::K => write!(f, "k"),
        }
    }
}

/// Syntax tree; parenthesization is implied by the tree shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    /// Nonnegative rational literal.
    Num(BigRational),
    Atom(Atom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    fn visit_atoms(&self, f: &mut impl FnMut(Atom)) {
        match self {
            Expr::Num(_) => {}
            Expr::Atom(a) => f(*a),
            Expr::Neg(e) | Expr::Pow(e, _) => e.visit_atoms(f),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.visit_atoms(f);
                b.visit_atoms(f);
            }
        }
    }

    /// The non-scalar alphabet used, if any.
    pub fn alphabet(&self) -> Alphabet {
        let mut out = Alphabet::Scalar;
        self.visit_atoms(&mut |a| {
            if a.alphabet() != Alphabet::Scalar {
                out = a.alphabet();
            }
        });
        out
    }

    fn check_alphabet(&self) -> Result<()> {
        let (mut u, mut f) = (None, None);
        self.visit_atoms(&mut |a| match a.alphabet() {
            Alphabet::U => {
                u.get_or_insert(a);
            }
            Alphabet::F => {
                f.get_or_insert(a);
            }
            Alphabet::Scalar => {}
        });
        match (u, f) {
            (Some(u), Some(f)) => Err(Error::AlphabetMix { u_atom: u.to_string(), f_atom: f.to_string() }),
            _ => Ok(()),
        }
    }

    fn level(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Neg(_) | Expr::Mul(..) => 2,
            Expr::Pow(..) => 3,
            Expr::Num(_) | Expr::Atom(_) => 4,
        }
    }

    pub fn eval(&self) -> Result<Value> {
        match self {
            Expr::Num(r) => Ok(Value::Scalar(ParamScalar::rational(r.clone()))),
            Expr::Atom(a) => Ok(atom_value(*a)),
            Expr::Neg(e) => Ok(e.eval()?.scale(&ParamScalar::int(-1))),
            Expr::Add(a, b) => a.eval()?.add(b.eval()?, 1),
            Expr::Sub(a, b) => a.eval()?.add(b.eval()?, -1),
            Expr::Mul(a, b) => a.eval()?.mul(b.eval()?),
            Expr::Pow(base, e) => {
                if *e < 0 {
                    if **base == Expr::Atom(Atom::Z) {
                        return Ok(Value::Scalar(ParamScalar::z_pow(*e as i32)));
                    }
                    return Err(Error::InvalidArgument(format!("negative exponent on `{base}`; only z admits one")));
                }
                let v = base.eval()?;
                let e = *e as u32;
                Ok(match v {
                    Value::Scalar(s) => Value::Scalar(s.pow(e)),
                    Value::U(u) => Value::U(u.pow(e)),
                    Value::F(f) => Value::F(f.pow(e)),
                })
            }
        }
    }
}

/// Writes `e`, parenthesized unless its level is at least `min`.
fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.level() >= min {
        write!(f, "{e}")
    } else {
        write!(f, "({e})")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Expr::Num(r) => write!(f, "({}/{})", r.numer(), r.denom()),
            Expr::Atom(a) => write!(f, "{a}"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                write_at(f, e, 2)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_at(f, a, 1)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { "+" } else { "-" })?;
                write_at(f, b, 2)
            }
            Expr::Mul(a, b) => {
                if matches!(**a, Expr::Neg(_)) {
                    write!(f, "({a})")?;
                } else {
                    write_at(f, a, 2)?;
                }
                write!(f, "*")?;
                write_at(f, b, 3)
            }
            Expr::Pow(b, e) => {
                write_at(f, b, 4)?;
                write!(f, "^{e}")
            }
        }
    }
}

/// An evaluated expression.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value {
    Scalar(ParamScalar),
    U(UElement),
    F(FElement),
}

fn atom_value(a: Atom) -> Value {
    match a {
        Atom::P1 => Value::U(p1()),
        Atom::P2 => Value::U(p2()),
        Atom::J => Value::U(jgen()),
        Atom::E(b) => Value::U(e_pow(b as i32)),
        Atom::Named(n) => Value::U(named_element(n)),
        Atom::Th(l) => Value::F(th(l)),
        Atom::A1 => Value::F(a1()),
        Atom::A2 => Value::F(a2()),
        Atom::X => Value::F(x()),
        Atom::XBar => Value::F(xbar()),
        Atom::Chi => Value::F(chi_in_f()),
        Atom::ChiBar => Value::F(chibar_in_f()),
        Atom::I => Value::Scalar(ParamScalar::i()),
        Atom::Z => Value::Scalar(ParamScalar::z()),
        Atom::Hp => Value::Scalar(ParamScalar::hp()),
        Atom::Hm => Value::Scalar(ParamScalar::hm()),
        Atom::K => Value::Scalar(ParamScalar::k()),
    }
}

fn mix() -> Error {
    Error::AlphabetMix { u_atom: "U element".into(), f_atom: "F element".into() }
}

impl Value {
    fn scale(self, c: &ParamScalar) -> Value {
        match self {
            Value::Scalar(s) => Value::Scalar(&s * c),
            Value::U(u) => Value::U(u.scale(c)),
            Value::F(f) => Value::F(f.scale(c)),
        }
    }

    fn add(self, rhs: Value, sign: i64) -> Result<Value> {
        let rhs = rhs.scale(&ParamScalar::int(sign));
        Ok(match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a + &b),
            (Value::U(a), Value::U(b)) => Value::U(&a + &b),
            (Value::F(a), Value::F(b)) => Value::F(&a + &b),
            (Value::Scalar(s), Value::U(u)) | (Value::U(u), Value::Scalar(s)) => Value::U(&u + &UElement::scalar(s)),
            (Value::Scalar(s), Value::F(f)) | (Value::F(f), Value::Scalar(s)) => Value::F(&f + &FElement::scalar(s)),
            _ => return Err(mix()),
        })
    }

    fn mul(self, rhs: Value) -> Result<Value> {
        Ok(match (self, rhs) {
            (Value::Scalar(a), b) => b.scale(&a),
            (a, Value::Scalar(b)) => a.scale(&b),
            (Value::U(a), Value::U(b)) => Value::U(a.product(&b)),
            (Value::F(a), Value::F(b)) => Value::F(a.product(&b)),
            _ => return Err(mix()),
        })
    }

    pub fn into_u(self) -> Result<UElement> {
        match self {
            Value::U(u) => Ok(u),
            Value::Scalar(s) => Ok(UElement::scalar(s)),
            Value::F(_) => Err(Error::InvalidArgument("expected an enveloping-algebra expression".into())),
        }
    }

    pub fn into_f(self) -> Result<FElement> {
        match self {
            Value::F(f) => Ok(f),
            Value::Scalar(s) => Ok(FElement::scalar(s)),
            Value::U(_) => Err(Error::InvalidArgument("expected a function-algebra expression".into())),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Num(BigRational),
    Ident(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Caret,
    End,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let syntax = |pos: usize, msg: &str| Error::Syntax { pos, msg: msg.to_string() };
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < chars.len() && chars[*i].1.is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().map(|c| c.1).collect::<String>()
    };
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '(' | ')' | '+' | '-' | '−' | '*' | '^' => {
                out.push((
                    pos,
                    match c {
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        '+' => Tok::Plus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        _ => Tok::Minus,
                    },
                ));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let num: BigInt = digits(&mut i).parse().expect("ascii digits");
                let mut value = BigRational::from_integer(num);
                if i + 1 < chars.len() && chars[i].1 == '/' && chars[i + 1].1.is_ascii_digit() {
                    i += 1;
                    let den: BigInt = digits(&mut i).parse().expect("ascii digits");
                    if den.is_zero() {
                        return Err(syntax(pos, "zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                out.push((pos, Tok::Num(value)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let mut name: String = chars[start..i].iter().map(|c| c.1).collect();
                if name == "h" && i < chars.len() && matches!(chars[i].1, '+' | '-' | '−') {
                    name.push(if chars[i].1 == '+' { '+' } else { '-' });
                    i += 1;
                }
                out.push((pos, Tok::Ident(name)));
            }
            _ => return Err(syntax(pos, &format!("unexpected character `{c}`"))),
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Num(r) if r.is_integer() => {
                let v = r.to_integer().to_i64();
                match v {
                    Some(v) => {
                        self.bump();
                        Ok(if neg { -v } else { v })
                    }
                    None => self.err("integer out of range"),
                }
            }
            _ => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.term()?)));
        }
        let mut lhs = self.power()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let e = self.signed_int()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Num(r) => {
                self.bump();
                Ok(Expr::Num(r))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let pos = self.pos();
                self.bump();
                if name == "E" || name == "Th" {
                    self.expect(Tok::LParen, "`(`")?;
                    let v = self.signed_int()?;
                    self.expect(Tok::RParen, "`)`")?;
                    return Ok(Expr::Atom(if name == "E" { Atom::E(v) } else { Atom::Th(v) }));
                }
                match Atom::from_ident(&name) {
                    Some(a) => Ok(Expr::Atom(a)),
                    None => Err(Error::Syntax { pos, msg: format!("unknown atom `{name}`") }),
                }
            }
            Tok::End => self.err("unexpected end of input"),
            t => self.err(format!("unexpected token {t:?}")),
        }
    }
}

/// Parses and alphabet-checks an expression.
pub fn parse_expression(src: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("trailing input");
    }
    e.check_alphabet()?;
    Ok(e)
}

pub fn eval_u(src: &str) -> Result<UElement> {
    parse_expression(src)?.eval()?.into_u()
}

pub fn eval_f(src: &str) -> Result<FElement> {
    parse_expression(src)?.eval()?.into_f()
}

/// Literal for a nonnegative rational, used by generators of random trees.
pub fn num(n: i64, d: i64) -> Expr {
    let r = BigRational::new(BigInt::from(n.abs()), BigInt::from(d.abs().max(1)));
    debug_assert!(!r.is_negative());
    Expr::Num(if r.is_zero() { BigRational::one() } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funalg::FMonomial;

    #[test]
    fn a1_th1_example() {
        let got = eval_f("a1*Th(1)").unwrap();
        let half_z = &ParamScalar::ratio(1, 2) * &ParamScalar::z();
        let mut want = FElement::basis(FMonomial::new(1, 1, 0));
        want.add_term(FMonomial::new(0, 0, 0), &-&half_z);
        want.add_term(FMonomial::new(1, 0, 0), &ParamScalar::z());
        want.add_term(FMonomial::new(2, 0, 0), &-&half_z);
        assert_eq!(got, want);
    }

    #[test]
    fn single_term_u() {
        let u = eval_u("(1/2)*i*z^-1*P1").unwrap();
        assert_eq!(u.len(), 1);
        assert_eq!(u, p1().scale(&(&ParamScalar::imag(1, 2) * &ParamScalar::z_pow(-1))));
    }

    #[test]
    fn alphabet_mix_rejected() {
        assert!(matches!(parse_expression("a1*P1"), Err(Error::AlphabetMix { .. })));
        assert!(matches!(parse_expression("Hplus + chi"), Err(Error::AlphabetMix { .. })));
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse_expression("a1 * * a2") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expression("foo"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_expression("(a1"), Err(Error::Syntax { .. })));
        assert!(eval_f("a1^-1").is_err());
    }

    #[test]
    fn scalars_and_parameters() {
        assert_eq!(parse_expression("h+ - h-").unwrap().eval().unwrap(), Value::Scalar(&ParamScalar::hp() - &ParamScalar::hm()));
        let v = parse_expression("-k*z^2").unwrap().eval().unwrap();
        assert_eq!(v, Value::Scalar(-(&ParamScalar::k() * &ParamScalar::z_pow(2))));
    }

    #[test]
    fn print_round_trip_examples() {
        for src in ["a1*Th(1)", "-a1*a2 - (a1 - a2)", "(1/2)*i*z^-1*P1", "(-a1)*a2", "(a1 + a2)^3*x", "E(-2)*J - -Hplus"] {
            let e = parse_expression(src).unwrap();
            assert_eq!(parse_expression(&e.to_string()).unwrap(), e, "{src} -> {e}");
        }
    }
}
