//! The plain-text input format shared by the fixtures and the command line.
//!
//! A document is a sequence of blocks separated by `---` lines. `#` starts a
//! comment line. `key: value` lines set headers (`field`, `vars`, `order`,
//! `name`); headers carry over into later blocks. Every other nonblank line
//! is one object: a polynomial, or for line files a triple `a, b, c`.
//!
//! ```
//! use quartics::input::{parse_document, FieldSpec};
//!
//! let doc = parse_document("field: Q\nx^4 + y^4 + x*z^3\n").unwrap();
//! let FieldSpec::Rationals = doc[0].field().unwrap() else { panic!() };
//! let polys = doc[0].polys(&quartics::arith::Rationals).unwrap();
//! assert_eq!(polys[0].to_string(), "x^4 + x*z^3 + y^4");
//! ```

use std::collections::BTreeMap;

use num_rational::BigRational;
use thiserror::Error;

use crate::arith::{ExtensionField, Field, PrimeField, Rationals};
use crate::curvelab::{CurveError, ProjectiveLine};
use crate::poly::{parse_poly, parse_poly_with_generator, MultiPoly, PolyError, Vars};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("line {line}: expected 3 coefficients, found {found}")]
    Arity { line: usize, found: usize },
    #[error("bad field header: {0}")]
    Field(String),
    #[error("line {line}: {msg}")]
    Invalid { line: usize, msg: String },
}

/// Fields whose elements can be written in the polynomial grammar.
pub trait TextField: Field {
    fn parse(&self, src: &str, vars: &Vars) -> Result<MultiPoly<Self>, PolyError>;
}

impl TextField for Rationals {
    fn parse(&self, src: &str, vars: &Vars) -> Result<MultiPoly<Self>, PolyError> {
        parse_poly(src, self, vars)
    }
}

impl TextField for PrimeField {
    fn parse(&self, src: &str, vars: &Vars) -> Result<MultiPoly<Self>, PolyError> {
        parse_poly(src, self, vars)
    }
}

impl TextField for ExtensionField<Rationals> {
    fn parse(&self, src: &str, vars: &Vars) -> Result<MultiPoly<Self>, PolyError> {
        parse_poly_with_generator(src, self, vars, self.generator_name(), self.generator())
    }
}

/// The value of a `field:` header.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldSpec {
    Rationals,
    Prime(PrimeField),
    Extension(ExtensionField<Rationals>),
}

impl FieldSpec {
    /// Parses `Q`, `Fp(<p>)` or `Q[<name>]/(<monic polynomial in name>)`.
    pub fn parse(src: &str) -> Result<Self, InputError> {
        let s = src.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp(").and_then(|r| r.strip_suffix(')')) {
            let p: u64 = p.trim().parse().map_err(|_| InputError::Field(format!("bad modulus in `{s}`")))?;
            return PrimeField::new(p).map(FieldSpec::Prime).map_err(|e| InputError::Field(e.to_string()));
        }
        let rest = s.strip_prefix("Q[").ok_or_else(|| InputError::Field(format!("unrecognized field `{s}`")))?;
        let (name, rest) = rest.split_once(']').ok_or_else(|| InputError::Field("missing `]`".into()))?;
        let body = rest
            .trim()
            .strip_prefix("/(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| InputError::Field("expected `/(<polynomial>)`".into()))?;
        let name = name.trim();
        let m = parse_poly(body, &Rationals, &Vars::new(&[name])).map_err(|e| InputError::Field(e.to_string()))?;
        let deg = m.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![BigRational::from_integer(0.into()); deg + 1];
        for (mono, c) in m.terms() {
            coeffs[mono.exp(0) as usize] = c.clone();
        }
        ExtensionField::new(Rationals, coeffs, name)
            .map(FieldSpec::Extension)
            .map_err(|e| InputError::Field(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    /// One-based line number in the document.
    pub line: usize,
    pub text: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Block {
    pub headers: BTreeMap<String, String>,
    pub items: Vec<Item>,
}

const HEADER_KEYS: [&str; 4] = ["field", "vars", "order", "name"];

pub fn parse_document(text: &str) -> Result<Vec<Block>, InputError> {
    let mut blocks = Vec::new();
    let mut cur = Block::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "---" {
            let headers = cur.headers.clone();
            blocks.push(std::mem::take(&mut cur));
            cur.headers = headers;
            continue;
        }
        if let Some((k, v)) = line.split_once(':') {
            if HEADER_KEYS.contains(&k.trim()) {
                cur.headers.insert(k.trim().to_string(), v.trim().to_string());
                continue;
            }
        }
        cur.items.push(Item { line: i + 1, text: line.to_string() });
    }
    blocks.push(cur);
    Ok(blocks)
}

fn syntax(item: &Item, offset: usize, e: PolyError) -> InputError {
    match e {
        PolyError::Parse { pos, msg } => InputError::Syntax { line: item.line, column: offset + pos + 1, msg },
        other => InputError::Invalid { line: item.line, msg: other.to_string() },
    }
}

/// Splits at commas outside parentheses, with the byte offset of each part.
fn split_top_level(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

impl Block {
    pub fn header(&self, key: &str) -> Option<&str> {
        self.headers.get(key).map(String::as_str)
    }

    pub fn name(&self) -> Option<&str> {
        self.header("name")
    }

    /// Defaults to `Q`.
    pub fn field(&self) -> Result<FieldSpec, InputError> {
        self.header("field").map_or(Ok(FieldSpec::Rationals), FieldSpec::parse)
    }

    /// Defaults to `x, y, z`.
    pub fn vars(&self) -> Vars {
        match self.header("vars") {
            None => Vars::xyz(),
            Some(v) => Vars::new(&v.split(',').map(str::trim).collect::<Vec<_>>()),
        }
    }

    pub fn polys<F: TextField>(&self, field: &F) -> Result<Vec<MultiPoly<F>>, InputError> {
        let vars = self.vars();
        self.items.iter().map(|it| field.parse(&it.text, &vars).map_err(|e| syntax(it, 0, e))).collect()
    }

    /// Reads every item as a coefficient triple `a, b, c`.
    pub fn lines<F: TextField>(&self, field: &F) -> Result<Vec<ProjectiveLine<F>>, InputError> {
        let none = Vars::new::<&str>(&[]);
        let mut out = Vec::new();
        for it in &self.items {
            let parts = split_top_level(&it.text);
            if parts.len() != 3 {
                return Err(InputError::Arity { line: it.line, found: parts.len() });
            }
            let mut c = Vec::with_capacity(3);
            for (off, part) in parts {
                let p = field.parse(part, &none).map_err(|e| syntax(it, off, e))?;
                c.push(p.constant_term());
            }
            let coeffs: [F::Elem; 3] = c.try_into().expect("three parts");
            let line = ProjectiveLine::new(field, coeffs)
                .map_err(|e: CurveError| InputError::Invalid { line: it.line, msg: e.to_string() })?;
            out.push(line);
        }
        Ok(out)
    }
}
