//! Tokenizer for the s-expression command language.
//!
//! Comments run from `;` to end of line. Numbers, string literals, bare
//! `@name@` placeholders and symbols are distinguished at this level so the
//! parser never re-inspects raw text.

use crate::decimal::Decimal;

use super::ast::{placeholder_at, ParseDiagnostic, Span, StringLit};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    LParen,
    RParen,
    Number(Decimal),
    Str(StringLit),
    Symbol(String),
    Placeholder(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { bytes: text.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn mark(&self) -> (usize, u32, u32) {
        (self.pos, self.line, self.col)
    }

    fn span_from(&self, mark: (usize, u32, u32)) -> Span {
        Span {
            byte_start: mark.0,
            byte_end: self.pos,
            start_line: mark.1,
            start_col: mark.2,
            end_line: self.line,
            end_col: self.col,
        }
    }
}

fn is_delimiter(b: u8) -> bool {
    b.is_ascii_whitespace() || matches!(b, b'(' | b')' | b';' | b'"')
}

fn starts_number(bytes: &[u8], pos: usize) -> bool {
    let b = bytes[pos];
    if b.is_ascii_digit() {
        return true;
    }
    if matches!(b, b'+' | b'-' | b'.') {
        let next = bytes.get(pos + 1).copied();
        if b == b'.' {
            return next.map(|n| n.is_ascii_digit()).unwrap_or(false);
        }
        return matches!(next, Some(n) if n.is_ascii_digit() || n == b'.');
    }
    false
}

/// Tokenizes a deck body. Errors are accumulated; any error makes the whole
/// result an `Err` so later stages never see a partial stream.
pub fn tokenize(body: &str) -> Result<Vec<Token>, Vec<ParseDiagnostic>> {
    let mut cur = Cursor::new(body);
    let mut tokens = Vec::new();
    let mut errors = Vec::new();

    while let Some(b) = cur.peek() {
        if b.is_ascii_whitespace() {
            cur.bump();
            continue;
        }
        if b == b';' {
            while let Some(c) = cur.peek() {
                if c == b'\n' {
                    break;
                }
                cur.bump();
            }
            continue;
        }
        let mark = cur.mark();
        match b {
            b'(' => {
                cur.bump();
                tokens.push(Token { kind: TokenKind::LParen, span: cur.span_from(mark) });
            }
            b')' => {
                cur.bump();
                tokens.push(Token { kind: TokenKind::RParen, span: cur.span_from(mark) });
            }
            b'"' => {
                cur.bump();
                let mut value = String::new();
                let mut closed = false;
                while let Some(c) = cur.peek() {
                    match c {
                        b'"' => {
                            cur.bump();
                            closed = true;
                            break;
                        }
                        b'\\' => {
                            cur.bump();
                            match cur.bump() {
                                Some(b'"') => value.push('"'),
                                Some(b'\\') => value.push('\\'),
                                Some(other) => {
                                    value.push('\\');
                                    value.push(other as char);
                                }
                                None => break,
                            }
                        }
                        _ => {
                            value.push(cur.bump().unwrap() as char);
                        }
                    }
                }
                if closed {
                    tokens.push(Token {
                        kind: TokenKind::Str(StringLit::new(value)),
                        span: cur.span_from(mark),
                    });
                } else {
                    errors.push(ParseDiagnostic::error(
                        "unterminated-string",
                        "string literal never closes",
                        cur.span_from(mark),
                    ));
                }
            }
            b'@' => {
                if let Some((name, end)) = placeholder_at(cur.bytes, cur.pos) {
                    while cur.pos < end {
                        cur.bump();
                    }
                    tokens.push(Token {
                        kind: TokenKind::Placeholder(name),
                        span: cur.span_from(mark),
                    });
                } else {
                    cur.bump();
                    errors.push(ParseDiagnostic::error(
                        "illegal-character",
                        "stray `@` does not open a placeholder",
                        cur.span_from(mark),
                    ));
                }
            }
            _ if starts_number(cur.bytes, cur.pos) => {
                let start = cur.pos;
                while let Some(c) = cur.peek() {
                    if is_delimiter(c) {
                        break;
                    }
                    cur.bump();
                }
                let text = &body[start..cur.pos];
                match text.parse::<Decimal>() {
                    Ok(value) => tokens.push(Token {
                        kind: TokenKind::Number(value),
                        span: cur.span_from(mark),
                    }),
                    Err(_) => errors.push(ParseDiagnostic::error(
                        "invalid-number",
                        format!("`{text}` is not a valid number"),
                        cur.span_from(mark),
                    )),
                }
            }
            _ if b.is_ascii_graphic() => {
                let start = cur.pos;
                while let Some(c) = cur.peek() {
                    if is_delimiter(c) || c == b'@' || !c.is_ascii_graphic() {
                        break;
                    }
                    cur.bump();
                }
                tokens.push(Token {
                    kind: TokenKind::Symbol(body[start..cur.pos].to_string()),
                    span: cur.span_from(mark),
                });
            }
            _ => {
                cur.bump();
                errors.push(ParseDiagnostic::error(
                    "illegal-character",
                    format!("illegal byte 0x{b:02x} outside a string literal"),
                    cur.span_from(mark),
                ));
            }
        }
    }

    if errors.is_empty() {
        Ok(tokens)
    } else {
        Err(errors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refinement_line_has_ten_tokens() {
        let tokens =
            tokenize(r#"(sdedr:define-refinement-size "global" 10 10 0.0001 1 1 0.0001)"#)
                .unwrap();
        assert_eq!(tokens.len(), 10);
        assert_eq!(tokens[0].kind, TokenKind::LParen);
        assert!(matches!(&tokens[1].kind, TokenKind::Symbol(s) if s == "sdedr:define-refinement-size"));
        assert!(matches!(&tokens[2].kind, TokenKind::Str(s) if s.value == "global"));
        let numbers = tokens[3..9]
            .iter()
            .filter(|t| matches!(t.kind, TokenKind::Number(_)))
            .count();
        assert_eq!(numbers, 6);
        assert_eq!(tokens[9].kind, TokenKind::RParen);
    }

    #[test]
    fn empty_body_yields_no_tokens() {
        assert!(tokenize("").unwrap().is_empty());
    }

    #[test]
    fn comments_are_dropped() {
        let tokens = tokenize("; header\n(a) ; trailing\n").unwrap();
        assert_eq!(tokens.len(), 3);
    }

    #[test]
    fn string_placeholders_are_scanned() {
        let tokens = tokenize(r#""@node@.tdr""#).unwrap();
        assert_eq!(tokens.len(), 1);
        match &tokens[0].kind {
            TokenKind::Str(s) => {
                assert_eq!(s.value, "@node@.tdr");
                assert_eq!(s.placeholders, vec!["node".to_string()]);
            }
            other => panic!("expected string token, got {other:?}"),
        }
    }

    #[test]
    fn bare_placeholder_token() {
        let tokens = tokenize("(f @height@)").unwrap();
        assert!(matches!(&tokens[2].kind, TokenKind::Placeholder(n) if n == "height"));
    }

    #[test]
    fn unterminated_string_is_an_error() {
        let errs = tokenize("(\"oops").unwrap_err();
        assert_eq!(errs[0].code, "unterminated-string");
        assert_eq!(errs[0].span.start_line, 1);
        assert_eq!(errs[0].span.start_col, 2);
    }

    #[test]
    fn illegal_character_is_an_error() {
        let errs = tokenize("(a \u{7f})").unwrap_err();
        assert_eq!(errs[0].code, "illegal-character");
    }

    #[test]
    fn negative_and_exponent_numbers() {
        let tokens = tokenize("(-1.5 +2 3e-7 .5)").unwrap();
        let numbers: Vec<_> = tokens
            .iter()
            .filter_map(|t| match &t.kind {
                TokenKind::Number(n) => Some(n.canonical()),
                _ => None,
            })
            .collect();
        assert_eq!(numbers, vec!["-1.5", "2", "3e-07", "0.5"]);
    }
}
