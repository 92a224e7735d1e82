//! Expression language: AST, parser and printer.
//!
//! Shortcut atoms stay in the tree so that printing round-trips; they are
//! expanded into polynomials by [`Expr::eval`].

use std::fmt;

use num::{BigInt, BigRational, Signed};

use crate::cg::Cg;
use crate::error::{Error, Result};
use crate::grading::Gl;
use crate::scalar::{gaussian, One, Rational, Scalar, Zero};
use crate::spherical::{c_block, c_pair, r, theta, z, zbar, LeviProfile};
use crate::superpoly::Poly;
use crate::ugl::{UElement, Ugl};

/// Expression tree. Literals are real or purely imaginary rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Lit { value: Rational, imag: bool },
    T(usize, usize),
    Tb(usize, usize),
    E(usize, usize),
    Z(usize),
    Zb(usize),
    R,
    C { block: usize, a: usize, b: usize },
    Cp(usize, usize),
    Theta(u32),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Which algebra an expression lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideKind {
    Scalar,
    Functions,
    Enveloping,
}

/// Evaluated expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Poly(Poly),
    U(UElement),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Poly(p) => p.fmt(f),
            Value::U(u) => u.fmt(f),
        }
    }
}

impl Expr {
    pub fn int(k: i64) -> Self {
        Expr::Lit { value: BigRational::from_integer(BigInt::from(k)), imag: false }
    }

    /// Side of the expression; literals are compatible with both.
    pub fn side(&self) -> SideKind {
        match self {
            Expr::Lit { .. } => SideKind::Scalar,
            Expr::E(..) => SideKind::Enveloping,
            Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) => match (x.side(), y.side()) {
                (SideKind::Scalar, s) | (s, SideKind::Scalar) => s,
                (s, _) => s,
            },
            Expr::Pow(x, _) => x.side(),
            _ => SideKind::Functions,
        }
    }

    /// Expands shortcuts. `C[...]` and `CP[...]` need `profile`.
    pub fn eval(&self, gl: &Gl, profile: Option<&LeviProfile>) -> Result<Value> {
        match self.side() {
            SideKind::Enveloping => Ok(Value::U(self.eval_u(&Ugl::new(*gl))?)),
            _ => {
                let cg = Cg::new(*gl);
                let ctx = Ctx { gl, cg: &cg, profile };
                Ok(Value::Poly(self.eval_poly(&ctx)?))
            }
        }
    }

    fn eval_poly(&self, ctx: &Ctx<'_>) -> Result<Poly> {
        let gl = ctx.gl;
        let need = || ctx.profile.ok_or_else(|| Error::Usage("C[..] and CP[..] need --profile".into()));
        Ok(match self {
            Expr::Lit { .. } => Poly::constant(self.literal().expect("literal")),
            Expr::T(a, b) => ctx.cg.t(*a, *b)?,
            Expr::Tb(a, b) => ctx.cg.tbar(*a, *b)?,
            Expr::E(..) => return Err(Error::MixedSides),
            Expr::Z(a) => z(gl, *a)?,
            Expr::Zb(a) => zbar(gl, *a)?,
            Expr::R => r(gl),
            Expr::C { block, a, b } => c_block(need()?, *block, *a, *b)?,
            Expr::Cp(i, j) => c_pair(need()?, *i, *j)?,
            Expr::Theta(k) => theta(gl, *k),
            Expr::Add(x, y) => &x.eval_poly(ctx)? + &y.eval_poly(ctx)?,
            Expr::Sub(x, y) => &x.eval_poly(ctx)? - &y.eval_poly(ctx)?,
            Expr::Mul(x, y) => x.eval_poly(ctx)?.mul(&y.eval_poly(ctx)?),
            Expr::Pow(x, k) => x.eval_poly(ctx)?.pow(*k),
        })
    }

    fn eval_u(&self, ugl: &Ugl) -> Result<UElement> {
        Ok(match self {
            Expr::Lit { .. } => UElement::scalar(self.literal().expect("literal")),
            Expr::E(a, b) => UElement::letter(ugl.letter(*a, *b)?),
            Expr::Add(x, y) => {
                let mut out = x.eval_u(ugl)?;
                out.add_scaled(&y.eval_u(ugl)?, &Scalar::one());
                out
            }
            Expr::Sub(x, y) => {
                let mut out = x.eval_u(ugl)?;
                out.add_scaled(&y.eval_u(ugl)?, &-Scalar::one());
                out
            }
            Expr::Mul(x, y) => ugl.mul(&x.eval_u(ugl)?, &y.eval_u(ugl)?)?,
            Expr::Pow(x, k) => {
                let base = x.eval_u(ugl)?;
                let mut out = UElement::one();
                for _ in 0..*k {
                    out = ugl.mul(&out, &base)?;
                }
                out
            }
            _ => return Err(Error::MixedSides),
        })
    }

    fn literal(&self) -> Option<Scalar> {
        match self {
            Expr::Lit { value, imag: false } => Some(gaussian(value.clone(), Rational::zero())),
            Expr::Lit { value, imag: true } => Some(gaussian(Rational::zero(), value.clone())),
            _ => None,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        let own = match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            _ => 3,
        };
        if own < prec {
            f.write_str("(")?;
        }
        match self {
            Expr::Lit { value, imag } => {
                if *imag && value.is_one() {
                    f.write_str("i")?;
                } else {
                    if value.is_negative() {
                        f.write_str("-")?;
                    }
                    write!(f, "{}", value.numer().abs())?;
                    if !value.denom().is_one() {
                        write!(f, "/{}", value.denom())?;
                    }
                    if *imag {
                        f.write_str("i")?;
                    }
                }
            }
            Expr::T(a, b) => write!(f, "t[{a},{b}]")?,
            Expr::Tb(a, b) => write!(f, "tb[{a},{b}]")?,
            Expr::E(a, b) => write!(f, "E[{a},{b}]")?,
            Expr::Z(a) => write!(f, "z[{a}]")?,
            Expr::Zb(a) => write!(f, "zb[{a}]")?,
            Expr::R => f.write_str("r")?,
            Expr::C { block, a, b } => write!(f, "C[{block};{a},{b}]")?,
            Expr::Cp(i, j) => write!(f, "CP[{i},{j}]")?,
            Expr::Theta(k) => write!(f, "theta[{k}]")?,
            Expr::Add(x, y) | Expr::Sub(x, y) => {
                x.write(f, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                y.write(f, 2)?;
            }
            Expr::Mul(x, y) => {
                x.write(f, 2)?;
                f.write_str("*")?;
                y.write(f, 3)?;
            }
            Expr::Pow(x, k) => {
                // The base must be an atom; a power base gets parentheses too.
                x.write(f, if matches!(**x, Expr::Pow(..)) { 4 } else { 3 })?;
                write!(f, "^{k}")?;
            }
        }
        if own < prec {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

struct Ctx<'a> {
    gl: &'a Gl,
    cg: &'a Cg,
    profile: Option<&'a LeviProfile>,
}

/// Parses `text`, checking generator indices against `gl`.
pub fn parse(text: &str, gl: &Gl) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, gl, first_side: None };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gl: &'a Gl,
    /// First non-scalar side seen; later atoms must agree.
    first_side: Option<SideKind>,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let k = self.uint()?;
            let k = u32::try_from(k).map_err(|_| self.error("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits"))
    }

    fn small_uint(&mut self) -> Result<usize> {
        self.skip_ws();
        let at = self.pos;
        let v = self.uint()?;
        usize::try_from(v).map_err(|_| Error::Parse { pos: at, msg: "index too large".into() })
    }

    fn index(&mut self) -> Result<usize> {
        let a = self.small_uint()?;
        if a == 0 || a > self.gl.dim() {
            return Err(Error::IndexOutOfRange { index: a, dim: self.gl.dim() });
        }
        Ok(a)
    }

    fn pair(&mut self) -> Result<(usize, usize)> {
        self.expect(b'[')?;
        let a = self.index()?;
        self.expect(b',')?;
        let b = self.index()?;
        self.expect(b']')?;
        Ok((a, b))
    }

    fn note_side(&mut self, side: SideKind) -> Result<()> {
        match self.first_side {
            None => self.first_side = Some(side),
            Some(s) if s != side => return Err(Error::MixedSides),
            _ => {}
        }
        Ok(())
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii letters")
    }

    fn scalar(&mut self) -> Result<Expr> {
        let neg = self.eat(b'-');
        self.skip_ws();
        let num = self.uint()?;
        let den = if self.eat(b'/') {
            self.skip_ws();
            let at = self.pos;
            let d = self.uint()?;
            if d.is_zero() {
                return Err(Error::Parse { pos: at, msg: "zero denominator".into() });
            }
            d
        } else {
            BigInt::one()
        };
        let imag = self.peek() == Some(b'i') && !self.src.get(self.pos + 1).is_some_and(u8::is_ascii_alphabetic);
        if imag {
            self.pos += 1;
        }
        let value = BigRational::new(if neg { -num } else { num }, den);
        Ok(Expr::Lit { value, imag })
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => self.scalar(),
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident().to_owned();
                let e = match name.as_str() {
                    "i" => Expr::Lit { value: BigRational::one(), imag: true },
                    "r" => Expr::R,
                    "t" => {
                        let (a, b) = self.pair()?;
                        Expr::T(a, b)
                    }
                    "tb" => {
                        let (a, b) = self.pair()?;
                        Expr::Tb(a, b)
                    }
                    "E" => {
                        let (a, b) = self.pair()?;
                        Expr::E(a, b)
                    }
                    "z" | "zb" => {
                        self.expect(b'[')?;
                        let a = self.index()?;
                        self.expect(b']')?;
                        if name == "z" {
                            Expr::Z(a)
                        } else {
                            Expr::Zb(a)
                        }
                    }
                    "C" => {
                        self.expect(b'[')?;
                        let block = self.small_uint()?;
                        self.expect(b';')?;
                        let a = self.index()?;
                        self.expect(b',')?;
                        let b = self.index()?;
                        self.expect(b']')?;
                        Expr::C { block, a, b }
                    }
                    "CP" => {
                        self.expect(b'[')?;
                        let i = self.small_uint()?;
                        self.expect(b',')?;
                        let j = self.small_uint()?;
                        self.expect(b']')?;
                        Expr::Cp(i, j)
                    }
                    "theta" => {
                        self.expect(b'[')?;
                        let at = self.pos;
                        let k = self.small_uint()?;
                        let k = u32::try_from(k).map_err(|_| Error::Parse { pos: at, msg: "index too large".into() })?;
                        self.expect(b']')?;
                        Expr::Theta(k)
                    }
                    _ => return Err(Error::Parse { pos: at, msg: format!("unknown symbol `{name}`") }),
                };
                match e.side() {
                    SideKind::Scalar => {}
                    s => self.note_side(s)?,
                }
                Ok(e)
            }
            Some(c) => Err(self.error(format!("unexpected character `{}`", c as char))),
        }
    }
}
