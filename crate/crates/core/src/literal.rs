//! Text form of neutrosophic numbers: `-8+I`, `5-I`, `23-2I`, `inf+infI`.
//!
//! ```text
//! nn     := sign? term (sign term)?
//! term   := number 'I'? | 'I'
//! number := 'inf' | digits ('.' digits)?
//! sign   := '+' | '-'
//! ```
//!
//! A term ending in `I` is the coefficient `b` (bare `I` means 1), any other
//! term is `a`. Each kind appears at most once, and a literal contains no
//! whitespace.

use crate::error::ParseError;
use crate::number::NeutroNumber;
use crate::scalar::ExtReal;

pub fn parse_nn(text: &str) -> Result<NeutroNumber, ParseError> {
    let mut cursor = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    if cursor.bytes.is_empty() {
        return Err(ParseError::new(0, "empty literal"));
    }

    let mut a = None;
    let mut b = None;
    let mut first = true;
    while !cursor.at_end() {
        let term_start = cursor.pos;
        let negative = match cursor.peek() {
            Some(b'+') => {
                cursor.pos += 1;
                false
            }
            Some(b'-') => {
                cursor.pos += 1;
                true
            }
            Some(c) if !first => {
                return Err(ParseError::new(
                    cursor.pos,
                    format!("expected '+' or '-', found {:?}", c as char),
                ))
            }
            _ => false,
        };
        let (magnitude, is_indeterminate) = cursor.term()?;
        let value = if negative {
            ExtReal::new(-magnitude.value()).expect("negated non-NaN")
        } else {
            magnitude
        };
        let slot = if is_indeterminate { &mut b } else { &mut a };
        if slot.replace(value).is_some() {
            let kind = if is_indeterminate {
                "indeterminate"
            } else {
                "determinate"
            };
            return Err(ParseError::new(term_start, format!("second {kind} term")));
        }
        first = false;
    }

    Ok(NeutroNumber {
        a: a.unwrap_or(ExtReal::ZERO),
        b: b.unwrap_or(ExtReal::ZERO),
    })
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    /// Unsigned term; returns its magnitude and whether it carried `I`.
    fn term(&mut self) -> Result<(ExtReal, bool), ParseError> {
        let start = self.pos;
        let number = self.number()?;
        let has_i = self.peek() == Some(b'I');
        if has_i {
            self.pos += 1;
        }
        match (number, has_i) {
            (Some(v), i) => Ok((v, i)),
            (None, true) => Ok((ExtReal::from(1), true)),
            (None, false) => Err(ParseError::new(
                start,
                match self.peek() {
                    Some(c) => format!("expected a number or 'I', found {:?}", c as char),
                    None => "expected a number or 'I' after sign".to_string(),
                },
            )),
        }
    }

    fn number(&mut self) -> Result<Option<ExtReal>, ParseError> {
        let rest = &self.bytes[self.pos..];
        if rest.starts_with(b"inf") {
            self.pos += 3;
            return Ok(Some(ExtReal::POS_INF));
        }
        let start = self.pos;
        self.digits();
        if self.pos == start {
            return Ok(None);
        }
        if self.peek() == Some(b'.') {
            self.pos += 1;
            let frac_start = self.pos;
            self.digits();
            if self.pos == frac_start {
                return Err(ParseError::new(self.pos, "expected digits after '.'"));
            }
        }
        // Only ASCII digits and '.' were consumed.
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        let value: f64 = text
            .parse()
            .map_err(|_| ParseError::new(start, "invalid number"))?;
        if value.is_infinite() {
            return Err(ParseError::new(start, "number out of range"));
        }
        Ok(Some(
            ExtReal::new(value).expect("decimal literal is not NaN"),
        ))
    }

    fn digits(&mut self) {
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
    }
}

/// Canonical text form; [`parse_nn`] inverts it exactly.
pub fn format_nn(x: &NeutroNumber) -> String {
    let a_zero = x.a == ExtReal::ZERO;
    if x.b == ExtReal::ZERO {
        return x.a.to_string();
    }
    let i_term = if x.b == ExtReal::from(1) {
        "I".to_string()
    } else if x.b == ExtReal::from(-1) {
        "-I".to_string()
    } else {
        format!("{}I", x.b)
    };
    if a_zero {
        i_term
    } else if i_term.starts_with('-') {
        format!("{}{i_term}", x.a)
    } else {
        format!("{}+{i_term}", x.a)
    }
}
