//! Parsers for the quiver DSL, section literals, representations and
//! multiplicity profiles.
//!
//! ```text
//! spec    := "cyclic" "t=" int "nodes=(" int ("," int)* ")"
//!          | "k1" "t=" int "split=(" int ("," int)* ")" "tail=" int
//! section := rational "*" point* | rational | point+ | "[" rational ("," rational)* "]"
//! point   := "(" rational ":" rational ")" ["^" int] | "inf" ["^" int]
//! rep     := "phi" int "=" section (";" "phi" int "=" section)* [";"]
//! ```
//!
//! Whitespace between tokens is ignored. Positions are reported as a
//! one-based line and a zero-based column.

use std::fmt;

use cyclic_moduli::{
    to_coeffs, CoeffForm, CyclicQuiver, Divisor, Error as DomainError, K1Quiver, ProjPoint, Rational, Section,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{0}")]
    Semantic(String),
}

type PResult<T> = Result<T, ParseError>;

/// A parsed quiver description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuiverSpec {
    Cyclic { twist: i64, nodes: Vec<i64> },
    K1 { twist: i64, split: Vec<i64>, tail: i64 },
}

impl QuiverSpec {
    pub fn cyclic(&self) -> Option<CyclicQuiver> {
        match self {
            QuiverSpec::Cyclic { twist, nodes } => CyclicQuiver::new(*twist, nodes.clone()).ok(),
            QuiverSpec::K1 { .. } => None,
        }
    }

    pub fn k1(&self) -> Option<K1Quiver> {
        match self {
            QuiverSpec::K1 { twist, split, tail } => K1Quiver::new(*twist, split.clone(), *tail).ok(),
            QuiverSpec::Cyclic { .. } => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            QuiverSpec::Cyclic { .. } => "cyclic",
            QuiverSpec::K1 { .. } => "k1",
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl fmt::Display for QuiverSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverSpec::Cyclic { twist, nodes } => {
                write!(f, "cyclic t={twist} nodes=")?;
                write_list(f, nodes)
            }
            QuiverSpec::K1 { twist, split, tail } => {
                write!(f, "k1 t={twist} split=")?;
                write_list(f, split)?;
                write!(f, " tail={tail}")
            }
        }
    }
}

impl From<&CyclicQuiver> for QuiverSpec {
    fn from(q: &CyclicQuiver) -> Self {
        QuiverSpec::Cyclic {
            twist: q.twist(),
            nodes: q.degrees().to_vec(),
        }
    }
}

/// A section as written, before its ambient degree is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SectionLiteral {
    Zero,
    Split { scale: Rational, points: Vec<(ProjPoint, u32)> },
    Coeffs(Vec<Rational>),
}

impl SectionLiteral {
    /// Resolves to a split section of `O(degree)`.
    pub fn to_section(&self, degree: i64) -> Result<Section, DomainError> {
        match self {
            SectionLiteral::Zero => Ok(Section::zero(degree)),
            SectionLiteral::Split { scale, points } => {
                let s = Section::new(scale.clone(), Divisor::from_pairs(points.iter().cloned()))?;
                check_degree(s.degree(), degree)?;
                Ok(s)
            }
            SectionLiteral::Coeffs(c) => {
                check_degree(c.len() as i64 - 1, degree)?;
                cyclic_moduli::from_coeffs(&CoeffForm::new(degree, c.clone())?)
            }
        }
    }

    /// Resolves to a coefficient form of degree `degree`.
    pub fn to_form(&self, degree: i64) -> Result<CoeffForm, DomainError> {
        match self {
            SectionLiteral::Coeffs(c) => {
                check_degree(c.len() as i64 - 1, degree)?;
                CoeffForm::new(degree, c.clone())
            }
            _ => Ok(to_coeffs(&self.to_section(degree)?)),
        }
    }
}

fn check_degree(got: i64, want: i64) -> Result<(), DomainError> {
    if got != want {
        return Err(DomainError::DegreeMismatch(format!(
            "expected a section of O({want}), got degree {got}"
        )));
    }
    Ok(())
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn error<T>(&self, message: impl Into<String>) -> PResult<T> {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count());
        Err(ParseError::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn found(&self) -> String {
        match self.rest().chars().next() {
            None => "end of input".into(),
            Some(c) => format!("'{c}'"),
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> PResult<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            self.error(format!("expected '{lit}', found {}", self.found()))
        }
    }

    fn expect_end(&mut self) -> PResult<()> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            self.error(format!("unexpected trailing input {}", self.found()))
        }
    }

    /// Optional sign followed by ASCII digits.
    fn signed_digits(&mut self) -> PResult<String> {
        self.skip_ws();
        let rest = self.rest();
        let sign_len = usize::from(rest.starts_with(['-', '+']));
        let digits = rest[sign_len..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.error(format!("expected a number, found {}", self.found()));
        }
        let text = rest[..sign_len + digits].trim_start_matches('+').to_string();
        self.pos += sign_len + digits;
        Ok(text)
    }

    fn int(&mut self) -> PResult<i64> {
        let start = self.pos;
        let text = self.signed_digits()?;
        text.parse().or_else(|_| {
            self.pos = start;
            self.skip_ws();
            self.error("integer out of range")
        })
    }

    fn uint(&mut self) -> PResult<u32> {
        self.skip_ws();
        let start = self.pos;
        let v = self.int()?;
        u32::try_from(v).or_else(|_| {
            self.pos = start;
            self.error(format!("expected a nonnegative integer, got {v}"))
        })
    }

    fn rational(&mut self) -> PResult<Rational> {
        let numer = self.signed_digits()?;
        let text = if self.rest().starts_with('/') {
            self.pos += 1;
            let denom_at = self.pos;
            let denom = self.rest().bytes().take_while(u8::is_ascii_digit).count();
            if denom == 0 {
                return self.error(format!("expected a denominator, found {}", self.found()));
            }
            let d = &self.rest()[..denom];
            if d.bytes().all(|b| b == b'0') {
                self.pos = denom_at;
                return self.error("zero denominator");
            }
            self.pos += denom;
            format!("{numer}/{d}")
        } else {
            numer
        };
        Ok(text.parse().expect("validated rational literal"))
    }

    fn int_list(&mut self) -> PResult<Vec<i64>> {
        self.expect("(")?;
        let mut out = vec![self.int()?];
        while self.eat(",") {
            out.push(self.int()?);
        }
        self.expect(")")?;
        Ok(out)
    }

    fn point(&mut self) -> PResult<(ProjPoint, u32)> {
        let p = if self.eat("inf") {
            ProjPoint::Infinity
        } else {
            self.expect("(")?;
            let a = self.rational()?;
            self.expect(":")?;
            let b = self.rational()?;
            self.expect(")")?;
            ProjPoint::new(a, b).map_err(|e| ParseError::Semantic(e.to_string()))?
        };
        let m = if self.eat("^") { self.uint()? } else { 1 };
        if m == 0 {
            return Err(ParseError::Semantic("point multiplicity must be positive".into()));
        }
        Ok((p, m))
    }

    fn points(&mut self) -> PResult<Vec<(ProjPoint, u32)>> {
        let mut out = Vec::new();
        while matches!(self.peek(), Some('(') | Some('i')) {
            out.push(self.point()?);
        }
        Ok(out)
    }

    fn section(&mut self) -> PResult<SectionLiteral> {
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let mut coeffs = vec![self.rational()?];
                while self.eat(",") {
                    coeffs.push(self.rational()?);
                }
                self.expect("]")?;
                Ok(SectionLiteral::Coeffs(coeffs))
            }
            Some('(') | Some('i') => Ok(SectionLiteral::Split {
                scale: Rational::from_integer(1.into()),
                points: self.points()?,
            }),
            _ => {
                let scale = self.rational()?;
                let zero = scale == Rational::from_integer(0.into());
                if self.eat("*") {
                    if zero {
                        return Err(ParseError::Semantic("scale of a nonzero section must be nonzero".into()));
                    }
                    Ok(SectionLiteral::Split {
                        scale,
                        points: self.points()?,
                    })
                } else if zero {
                    Ok(SectionLiteral::Zero)
                } else {
                    Ok(SectionLiteral::Split { scale, points: Vec::new() })
                }
            }
        }
    }
}

pub fn parse_spec(text: &str) -> PResult<QuiverSpec> {
    let mut c = Cursor::new(text);
    let spec = if c.eat("cyclic") {
        c.expect("t")?;
        c.expect("=")?;
        let twist = c.int()?;
        c.expect("nodes")?;
        c.expect("=")?;
        let nodes = c.int_list()?;
        QuiverSpec::Cyclic { twist, nodes }
    } else if c.eat("k1") {
        c.expect("t")?;
        c.expect("=")?;
        let twist = c.int()?;
        c.expect("split")?;
        c.expect("=")?;
        let split = c.int_list()?;
        c.expect("tail")?;
        c.expect("=")?;
        let tail = c.int()?;
        QuiverSpec::K1 { twist, split, tail }
    } else {
        return c.error(format!("expected 'cyclic' or 'k1', found {}", c.found()));
    };
    c.expect_end()?;
    validate(&spec)?;
    Ok(spec)
}

fn validate(spec: &QuiverSpec) -> PResult<()> {
    let res = match spec {
        QuiverSpec::Cyclic { twist, nodes } => CyclicQuiver::new(*twist, nodes.clone()).map(drop),
        QuiverSpec::K1 { twist, split, tail } => K1Quiver::new(*twist, split.clone(), *tail).map(drop),
    };
    res.map_err(|e| ParseError::Semantic(e.to_string()))
}

pub fn parse_section(text: &str) -> PResult<SectionLiteral> {
    let mut c = Cursor::new(text);
    let s = c.section()?;
    c.expect_end()?;
    Ok(s)
}

/// Parses `phi1=...; phi2=...` into literals ordered by index, requiring
/// exactly the maps `phi1..phi{n}`.
pub fn parse_rep(text: &str, n: usize) -> PResult<Vec<SectionLiteral>> {
    let mut c = Cursor::new(text);
    let mut slots: Vec<Option<SectionLiteral>> = vec![None; n];
    loop {
        c.skip_ws();
        if c.rest().is_empty() {
            break;
        }
        c.expect("phi")?;
        let at = c.pos;
        let i = c.uint()? as usize;
        if i == 0 || i > n {
            c.pos = at;
            return c.error(format!("map index must lie in 1..={n}, got {i}"));
        }
        if slots[i - 1].is_some() {
            c.pos = at;
            return c.error(format!("phi{i} given twice"));
        }
        c.expect("=")?;
        slots[i - 1] = Some(c.section()?);
        if !c.eat(";") {
            c.expect_end()?;
            break;
        }
    }
    let missing: Vec<String> = (1..=n).filter(|i| slots[i - 1].is_none()).map(|i| format!("phi{i}")).collect();
    if !missing.is_empty() {
        return Err(ParseError::Semantic(format!("missing maps: {}", missing.join(", "))));
    }
    Ok(slots.into_iter().map(|s| s.expect("checked")).collect())
}

/// A multiplicity profile such as `1,1,2` or `(1,1,2)`; `zero` stands for the
/// zero residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProfileArg {
    Parts(Vec<u32>),
    Zero,
}

pub fn parse_profile(text: &str) -> PResult<ProfileArg> {
    let mut c = Cursor::new(text);
    if c.eat("zero") {
        c.expect_end()?;
        return Ok(ProfileArg::Zero);
    }
    let paren = c.eat("(");
    let mut parts = vec![c.uint()?];
    while c.eat(",") {
        parts.push(c.uint()?);
    }
    if paren {
        c.expect(")")?;
    }
    c.expect_end()?;
    Ok(ProfileArg::Parts(parts))
}
