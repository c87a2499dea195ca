//! Syntax tree for SDE-subset command scripts.

use serde::{Deserialize, Serialize};

use crate::decimal::Decimal;

/// Where a deck came from. Rendered decks get stricter treatment in the
/// checker than raw model output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeckOrigin {
    VerifiedCorpus,
    ModelOutput,
    Rendered,
}

/// One deck script plus its identifying name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceDeck {
    pub name: String,
    pub body: String,
    pub origin: DeckOrigin,
}

impl SourceDeck {
    /// Builds a deck, normalizing CRLF/CR line endings to LF.
    pub fn new(name: impl Into<String>, body: impl Into<String>, origin: DeckOrigin) -> Self {
        let body = body.into().replace("\r\n", "\n").replace('\r', "\n");
        SourceDeck { name: name.into(), body, origin }
    }
}

/// Source range in both byte offsets (for slicing) and 1-based line/column
/// (for diagnostics). `end` is exclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Span {
    pub byte_start: usize,
    pub byte_end: usize,
    pub start_line: u32,
    pub start_col: u32,
    pub end_line: u32,
    pub end_col: u32,
}

impl Span {
    pub fn merge(a: Span, b: Span) -> Span {
        Span {
            byte_start: a.byte_start.min(b.byte_start),
            byte_end: a.byte_end.max(b.byte_end),
            start_line: a.start_line,
            start_col: a.start_col,
            end_line: b.end_line,
            end_col: b.end_col,
        }
    }
}

/// A string literal with the `@name@` placeholders found inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringLit {
    pub value: String,
    pub placeholders: Vec<String>,
}

impl StringLit {
    pub fn new(value: impl Into<String>) -> Self {
        let value = value.into();
        let placeholders = scan_placeholders(&value);
        StringLit { value, placeholders }
    }
}

/// One argument of a command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arg {
    Number(Decimal),
    Str(StringLit),
    Symbol(String),
    /// A bare `@name@` in value position.
    Placeholder(String),
    /// A `(position x y z)` coordinate triple.
    Position([Decimal; 3]),
    Node(CommandNode),
}

impl Arg {
    pub fn as_number(&self) -> Option<&Decimal> {
        match self {
            Arg::Number(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            Arg::Str(s) => Some(&s.value),
            _ => None,
        }
    }
}

/// One parsed command form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandNode {
    pub head: String,
    pub args: Vec<Arg>,
    #[serde(default, skip_serializing_if = "is_default_span")]
    pub span: Span,
}

fn is_default_span(s: &Span) -> bool {
    *s == Span::default()
}

impl CommandNode {
    pub fn new(head: impl Into<String>, args: Vec<Arg>) -> Self {
        CommandNode { head: head.into(), args, span: Span::default() }
    }

    /// Structural equality ignoring source spans.
    pub fn tree_eq(&self, other: &CommandNode) -> bool {
        self.head == other.head
            && self.args.len() == other.args.len()
            && self.args.iter().zip(&other.args).all(|(a, b)| arg_eq(a, b))
    }
}

fn arg_eq(a: &Arg, b: &Arg) -> bool {
    match (a, b) {
        (Arg::Node(x), Arg::Node(y)) => x.tree_eq(y),
        _ => a == b,
    }
}

/// Diagnostic severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Warning,
}

/// A parse or check finding with a stable code and pinned source span.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseDiagnostic {
    pub severity: Severity,
    pub code: String,
    pub message: String,
    pub span: Span,
}

impl ParseDiagnostic {
    pub fn error(code: &str, message: impl Into<String>, span: Span) -> Self {
        ParseDiagnostic {
            severity: Severity::Error,
            code: code.to_string(),
            message: message.into(),
            span,
        }
    }

    pub fn warning(code: &str, message: impl Into<String>, span: Span) -> Self {
        ParseDiagnostic {
            severity: Severity::Warning,
            code: code.to_string(),
            message: message.into(),
            span,
        }
    }

    /// Line-oriented rendering: `file:line:col: severity code message`.
    pub fn render(&self, file: &str) -> String {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        format!(
            "{}:{}:{}: {} {} {}",
            file, self.span.start_line, self.span.start_col, sev, self.code, self.message
        )
    }
}

/// Collects `@name@` placeholder names from text by a single left-to-right
/// scan. Names match `[A-Za-z_][A-Za-z0-9_]*`.
pub fn scan_placeholders(text: &str) -> Vec<String> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'@' {
            if let Some((name, end)) = placeholder_at(bytes, i) {
                out.push(name);
                i = end;
                continue;
            }
        }
        i += 1;
    }
    out
}

/// Tries to read `@name@` starting at `start` (which must index a `@`).
/// Returns the name and the offset one past the closing `@`.
pub(crate) fn placeholder_at(bytes: &[u8], start: usize) -> Option<(String, usize)> {
    let mut i = start + 1;
    if i >= bytes.len() || !(bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
        return None;
    }
    i += 1;
    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
        i += 1;
    }
    if i < bytes.len() && bytes[i] == b'@' {
        let name = String::from_utf8_lossy(&bytes[start + 1..i]).into_owned();
        Some((name, i + 1))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn placeholder_scan_finds_names() {
        assert_eq!(scan_placeholders("n@node@.tdr"), vec!["node".to_string()]);
        assert_eq!(
            scan_placeholders("@a@-@b_2@"),
            vec!["a".to_string(), "b_2".to_string()]
        );
        assert!(scan_placeholders("user@example.com").is_empty());
        assert!(scan_placeholders("@@").is_empty());
        assert!(scan_placeholders("plain").is_empty());
    }

    #[test]
    fn line_endings_normalized() {
        let deck = SourceDeck::new("d", "(a)\r\n(b)\r", DeckOrigin::VerifiedCorpus);
        assert_eq!(deck.body, "(a)\n(b)\n");
    }

    #[test]
    fn diagnostic_rendering() {
        let d = ParseDiagnostic::error(
            "unterminated-string",
            "string literal never closes",
            Span { start_line: 3, start_col: 7, ..Span::default() },
        );
        assert_eq!(
            d.render("deck.cmd"),
            "deck.cmd:3:7: error unterminated-string string literal never closes"
        );
    }
}
