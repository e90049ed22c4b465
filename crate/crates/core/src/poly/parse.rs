use num_bigint::BigInt;

use crate::arith::Field;

use super::{MultiPoly, PolyError, Vars};

/// Parses a polynomial over `field` in the declared variables.
///
/// Accepted syntax: integer and decimal-free rational constants, `+ - * /`,
/// `^` with a non-negative integer exponent, parentheses, and implicit
/// multiplication by juxtaposition (`2x^2y`, `(x+y)(x-y)`). An identifier
/// that is not a declared name is read as a run of single-letter variables,
/// each optionally followed by a digit exponent, so `D2E` means `D^2*E`.
/// Division is only allowed by nonzero constants.
pub fn parse_poly<F: Field>(src: &str, field: &F, vars: &Vars) -> Result<MultiPoly<F>, PolyError> {
    Parser::new(src, field, vars, None)?.run()
}

/// Like [`parse_poly`], with `name` standing for the field element `value`
/// (typically the generator of an algebraic extension).
pub fn parse_poly_with_generator<F: Field>(
    src: &str,
    field: &F,
    vars: &Vars,
    name: &str,
    value: F::Elem,
) -> Result<MultiPoly<F>, PolyError> {
    Parser::new(src, field, vars, Some((name.to_string(), value)))?.run()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

struct Parser<'a, F: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    field: &'a F,
    vars: &'a Vars,
    generator: Option<(String, F::Elem)>,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(PolyError::Parse { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

impl<'a, F: Field> Parser<'a, F> {
    fn new(src: &str, field: &'a F, vars: &'a Vars, generator: Option<(String, F::Elem)>) -> Result<Self, PolyError> {
        Ok(Self { toks: lex(src)?, pos: 0, end: src.len(), field, vars, generator })
    }

    fn run(mut self) -> Result<MultiPoly<F>, PolyError> {
        if self.toks.is_empty() {
            return Err(self.error("empty input"));
        }
        let p = self.expr()?;
        if self.pos < self.toks.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(p)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.here(), msg: msg.to_string() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly<F>, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<F>, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let at = self.here();
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(PolyError::Parse { pos: at, msg: "division by a non-constant or zero".into() });
                }
                let inv = self.field.inv(&d.constant_term())?;
                acc = acc.scale(&inv);
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))) {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly<F>, PolyError> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<MultiPoly<F>, PolyError> {
        let (head, last) = self.atom()?;
        if self.eat('^') {
            let e = self.exponent()?;
            Ok(head.mul(&last.pow(e)))
        } else {
            Ok(head.mul(&last))
        }
    }

    fn exponent(&mut self) -> Result<u32, PolyError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                u32::try_from(n).map_err(|_| self.error("exponent too large"))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.exponent()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            _ => Err(self.error("expected a non-negative integer exponent")),
        }
    }

    /// An atom split as `head * last`, where an exponent applies to `last`
    /// only; `head` is one except inside letter runs such as `BE^2`.
    fn atom(&mut self) -> Result<(MultiPoly<F>, MultiPoly<F>), PolyError> {
        let one = MultiPoly::one(self.field, self.vars);
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok((one, MultiPoly::constant(self.field, self.vars, self.field.from_bigint(&n))))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let p = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok((one, p))
            }
            Some(Tok::Ident(name)) => {
                let at = self.here();
                self.pos += 1;
                self.identifier(&name).map_err(|msg| PolyError::Parse { pos: at, msg })
            }
            Some(Tok::Op(c)) => Err(self.error(&format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn symbol(&self, name: &str) -> Option<MultiPoly<F>> {
        if let Some(i) = self.vars.index_of(name) {
            return Some(MultiPoly::var(self.field, self.vars, i));
        }
        match &self.generator {
            Some((g, v)) if g == name => Some(MultiPoly::constant(self.field, self.vars, v.clone())),
            _ => None,
        }
    }

    fn identifier(&self, name: &str) -> Result<(MultiPoly<F>, MultiPoly<F>), String> {
        let one = MultiPoly::one(self.field, self.vars);
        if let Some(p) = self.symbol(name) {
            return Ok((one, p));
        }
        // run of single letters with optional digit exponents
        let chars: Vec<char> = name.chars().collect();
        let mut factors = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let letter = chars[i].to_string();
            let sym = self.symbol(&letter).ok_or_else(|| format!("unknown identifier `{name}`"))?;
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let e: u32 = if start == i {
                1
            } else {
                chars[start..i].iter().collect::<String>().parse().map_err(|_| "exponent too large".to_string())?
            };
            factors.push(sym.pow(e));
        }
        let last = factors.pop().expect("nonempty identifier");
        Ok((factors.iter().fold(one, |acc, f| acc.mul(f)), last))
    }
}
