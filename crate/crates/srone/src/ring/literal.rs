//! Element literals: the textual form of ring elements.
//!
//! A literal is one of
//!
//! * an integer (`5`, `-3`) for modular rings,
//! * a nested list (`[[1,0],[0,0]]`) for matrix and triangular rings,
//! * a tuple (`(1,2)`) for product rings,
//! * a basis symbol (`E12`) for a matrix unit: 1 in row i, column j, zero elsewhere.
//!
//! Corner, opposite and quotient rings reuse the literal form of their base ring.

use std::fmt;

/// Parsed element literal, independent of any particular ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Int(i64),
    List(Vec<Literal>),
    Tuple(Vec<Literal>),
    /// Matrix unit E_ij, 1-based row and column.
    Basis(usize, usize),
}

/// Error for element parsing and encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementError {
    /// Textual form is malformed; `offset` is a byte position into the input.
    Parse { offset: usize, message: String },
    /// Literal is well-formed but does not denote an element of the ring at hand.
    Mismatch { message: String },
}

impl fmt::Display for ElementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementError::Parse { offset, message } => {
                write!(f, "element parse error at offset {offset}: {message}")
            }
            ElementError::Mismatch { message } => write!(f, "element mismatch: {message}"),
        }
    }
}

impl std::error::Error for ElementError {}

fn err(offset: usize, message: impl Into<String>) -> ElementError {
    ElementError::Parse { offset, message: message.into() }
}

/// Parse a complete literal; trailing non-space input is an error.
pub fn parse_literal(text: &str) -> Result<Literal, ElementError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let lit = parse_at(bytes, &mut pos)?;
    skip_ws(bytes, &mut pos);
    if pos != bytes.len() {
        return Err(err(pos, "unexpected trailing input"));
    }
    Ok(lit)
}

pub(crate) fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

/// Parse one literal starting at `pos`, advancing `pos` past it.
/// Shared with the ring-spec parser, which embeds literals in `corner` and `quot`.
pub(crate) fn parse_at(bytes: &[u8], pos: &mut usize) -> Result<Literal, ElementError> {
    skip_ws(bytes, pos);
    let start = *pos;
    match bytes.get(start) {
        None => Err(err(start, "expected element literal, found end of input")),
        Some(b'[') => {
            *pos += 1;
            let items = parse_seq(bytes, pos, b']')?;
            Ok(Literal::List(items))
        }
        Some(b'(') => {
            *pos += 1;
            let items = parse_seq(bytes, pos, b')')?;
            if items.len() < 2 {
                return Err(err(start, "tuple needs at least two components"));
            }
            Ok(Literal::Tuple(items))
        }
        Some(b'E') => {
            let i = digit_at(bytes, start + 1)?;
            let j = digit_at(bytes, start + 2)?;
            *pos += 3;
            Ok(Literal::Basis(i, j))
        }
        Some(c) if c.is_ascii_digit() || *c == b'-' => {
            let mut end = start + 1;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            let s = std::str::from_utf8(&bytes[start..end]).unwrap();
            let v: i64 = s
                .parse()
                .map_err(|_| err(start, format!("integer literal `{s}` out of range")))?;
            *pos = end;
            Ok(Literal::Int(v))
        }
        Some(c) => Err(err(start, format!("expected element literal, found `{}`", *c as char))),
    }
}

fn digit_at(bytes: &[u8], pos: usize) -> Result<usize, ElementError> {
    match bytes.get(pos) {
        Some(c) if c.is_ascii_digit() && *c != b'0' => Ok((c - b'0') as usize),
        _ => Err(err(pos, "basis symbol needs two nonzero digits, as in E12")),
    }
}

fn parse_seq(bytes: &[u8], pos: &mut usize, close: u8) -> Result<Vec<Literal>, ElementError> {
    let mut items = Vec::new();
    loop {
        items.push(parse_at(bytes, pos)?);
        skip_ws(bytes, pos);
        match bytes.get(*pos) {
            Some(b',') => {
                *pos += 1;
            }
            Some(c) if *c == close => {
                *pos += 1;
                return Ok(items);
            }
            _ => {
                return Err(err(*pos, format!("expected `,` or `{}`", close as char)));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers() {
        assert_eq!(parse_literal("5"), Ok(Literal::Int(5)));
        assert_eq!(parse_literal("-3"), Ok(Literal::Int(-3)));
        assert_eq!(parse_literal("  12 "), Ok(Literal::Int(12)));
    }

    #[test]
    fn parses_nested_lists_and_tuples() {
        let m = parse_literal("[[1,0],[0,0]]").unwrap();
        assert_eq!(
            m,
            Literal::List(vec![
                Literal::List(vec![Literal::Int(1), Literal::Int(0)]),
                Literal::List(vec![Literal::Int(0), Literal::Int(0)]),
            ])
        );
        let t = parse_literal("(1, 2)").unwrap();
        assert_eq!(t, Literal::Tuple(vec![Literal::Int(1), Literal::Int(2)]));
        let nested = parse_literal("((1,0),2)").unwrap();
        assert_eq!(
            nested,
            Literal::Tuple(vec![
                Literal::Tuple(vec![Literal::Int(1), Literal::Int(0)]),
                Literal::Int(2),
            ])
        );
    }

    #[test]
    fn parses_basis_symbols() {
        assert_eq!(parse_literal("E12"), Ok(Literal::Basis(1, 2)));
        assert_eq!(parse_literal("E21"), Ok(Literal::Basis(2, 1)));
        assert!(parse_literal("E0").is_err());
        assert!(parse_literal("E1").is_err());
    }

    #[test]
    fn reports_offsets() {
        match parse_literal("[[1,0],[0,0]") {
            Err(ElementError::Parse { offset, .. }) => assert_eq!(offset, 12),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_literal("abc") {
            Err(ElementError::Parse { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_trailing_input() {
        assert!(parse_literal("5x").is_err());
        assert!(parse_literal("(1,2)(3,4)").is_err());
    }
}
