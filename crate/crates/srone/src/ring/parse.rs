//! Recursive-descent parser for ring-spec strings.
//!
//! Products associate left; parentheses may group a sub-spec. Literal
//! arguments of `corner` and `quot` use the element-literal syntax of the
//! base ring being constructed.

use std::fmt;
use std::sync::Arc;

use super::literal::{self, ElementError};
use super::{ElementId, Ring, RingError};

/// Error from constructing a ring out of a spec string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    /// Syntax error at a byte offset of the input.
    Parse { offset: usize, message: String },
    /// Spec parsed, but the named ring cannot be built.
    Ring(RingError),
    /// Spec parsed, but an embedded element literal does not fit its ring.
    Element(ElementError),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Parse { offset, message } => {
                write!(f, "parse error at offset {offset}: {message}")
            }
            SpecError::Ring(e) => write!(f, "{e}"),
            SpecError::Element(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SpecError {}

impl From<RingError> for SpecError {
    fn from(e: RingError) -> Self {
        SpecError::Ring(e)
    }
}

impl From<ElementError> for SpecError {
    fn from(e: ElementError) -> Self {
        match e {
            // Literal syntax errors keep their offset.
            ElementError::Parse { offset, message } => SpecError::Parse { offset, message },
            other => SpecError::Element(other),
        }
    }
}

const MAX_DEPTH: usize = 32;

pub fn parse_spec(text: &str) -> Result<Arc<Ring>, SpecError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0, depth: 0 };
    let ring = p.ring()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(ring)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> SpecError {
        SpecError::Parse { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        literal::skip_ws(self.bytes, &mut self.pos);
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.bytes[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), SpecError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn uint(&mut self) -> Result<usize, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse().map_err(|_| SpecError::Parse {
            offset: start,
            message: format!("integer `{s}` out of range"),
        })
    }

    /// spec := term (" x " term)*
    fn ring(&mut self) -> Result<Arc<Ring>, SpecError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("spec nesting too deep"));
        }
        let mut acc = self.term()?;
        loop {
            let save = self.pos;
            self.skip_ws();
            // Product separator: a bare `x` not followed by an alphanumeric.
            let is_sep = self.peek() == Some(b'x')
                && !self.bytes.get(self.pos + 1).is_some_and(|c| c.is_ascii_alphanumeric());
            if !is_sep {
                self.pos = save;
                break;
            }
            self.pos += 1;
            let rhs = self.term()?;
            acc = Ring::product(acc, rhs)?;
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Arc<Ring>, SpecError> {
        self.skip_ws();
        if self.eat("Z/") {
            let n = self.uint()?;
            return Ok(Ring::modular(n)?);
        }
        if self.eat("M(") {
            let k = self.dimension()?;
            self.expect(b',')?;
            let base = self.ring()?;
            self.expect(b')')?;
            return Ok(Ring::matrix(k, base)?);
        }
        if self.eat("T(") {
            let k = self.dimension()?;
            self.expect(b',')?;
            let base = self.ring()?;
            self.expect(b')')?;
            return Ok(Ring::triangular(k, base)?);
        }
        if self.eat("corner(") {
            let base = self.ring()?;
            self.expect(b',')?;
            let e = self.element_of(&base)?;
            self.expect(b')')?;
            return Ok(Ring::corner(&base, e)?);
        }
        if self.eat("op(") {
            let base = self.ring()?;
            self.expect(b')')?;
            return Ok(Ring::opposite(base)?);
        }
        if self.eat("quot(") {
            let base = self.ring()?;
            let mut gens = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(b',') => {
                        self.pos += 1;
                        gens.push(self.element_of(&base)?);
                    }
                    Some(b')') => {
                        if gens.is_empty() {
                            return Err(self.err("quot needs at least one generator"));
                        }
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected `,` or `)`")),
                }
            }
            return Ok(Ring::quotient(&base, &gens)?);
        }
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let inner = self.ring()?;
            self.expect(b')')?;
            return Ok(inner);
        }
        Err(self.err("expected a ring spec (Z/n, M(..), T(..), corner(..), op(..), quot(..))"))
    }

    fn dimension(&mut self) -> Result<usize, SpecError> {
        let at = self.pos;
        let k = self.uint()?;
        if k == 0 {
            return Err(SpecError::Parse {
                offset: at,
                message: "matrix dimension must be at least 1".into(),
            });
        }
        Ok(k)
    }

    fn element_of(&mut self, ring: &Arc<Ring>) -> Result<ElementId, SpecError> {
        self.skip_ws();
        let lit = literal::parse_at(self.bytes, &mut self.pos)?;
        Ok(ring.encode(&lit)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_the_grammar() {
        for (spec, order) in [
            ("Z/6", 6),
            ("M(2,Z/2)", 16),
            ("T(2,Z/3)", 27),
            ("Z/2 x Z/3", 6),
            ("corner(M(2,Z/2),E11)", 2),
            ("corner(M(2,Z/2), [[1,0],[0,0]])", 2),
            ("op(M(2,Z/3))", 81),
            ("quot(Z/12,4)", 4),
            ("quot(Z/12,4,6)", 2),
            ("(Z/2 x Z/3) x Z/2", 12),
            ("M(2, Z/2 x Z/2)", 256),
        ] {
            let r = parse_spec(spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
            assert_eq!(r.order(), order, "order of {spec}");
        }
    }

    #[test]
    fn rejects_with_positions() {
        let cases: &[(&str, usize)] = &[
            ("M(2 Z/4", 4),
            ("", 0),
            ("Z/", 2),
            ("M(0,Z/2)", 2),
            ("Z/6 Z/6", 4),
            ("quot(Z/12)", 9),
        ];
        for &(spec, offset) in cases {
            match parse_spec(spec) {
                Err(SpecError::Parse { offset: at, .. }) => {
                    assert_eq!(at, offset, "offset for {spec:?}");
                }
                other => panic!("{spec:?}: expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn depth_guard_fires() {
        let mut spec = String::new();
        for _ in 0..40 {
            spec.push_str("op(");
        }
        spec.push_str("Z/2");
        for _ in 0..40 {
            spec.push(')');
        }
        match parse_spec(&spec) {
            Err(SpecError::Parse { message, .. }) => {
                assert!(message.contains("deep"), "got message {message:?}");
            }
            other => panic!("expected depth error, got {other:?}"),
        }
    }

    #[test]
    fn product_ids_reparse_to_same_association() {
        let l = parse_spec("Z/2 x Z/3").unwrap();
        let r = parse_spec("Z/5").unwrap();
        let nested = Ring::product(r, l).unwrap();
        assert_eq!(nested.id(), "Z/5 x (Z/2 x Z/3)");
        let back = parse_spec(nested.id()).unwrap();
        assert_eq!(back.id(), nested.id());
        assert_eq!(back.parse_element("(0,(1,2))").unwrap(), nested.parse_element("(0,(1,2))").unwrap());
    }
}
