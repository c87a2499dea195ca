//! Recursive-descent parser from tokens to command trees.

use super::ast::{Arg, CommandNode, ParseDiagnostic, SourceDeck, Span};
use super::lexer::{tokenize, Token, TokenKind};
use super::registry;

/// Parse result: command trees in source order plus non-fatal warnings.
#[derive(Debug, Clone, PartialEq)]
pub struct Parsed {
    pub nodes: Vec<CommandNode>,
    pub warnings: Vec<ParseDiagnostic>,
}

/// Parses a whole deck into top-level command forms.
pub fn parse_deck(deck: &SourceDeck) -> Result<Parsed, Vec<ParseDiagnostic>> {
    parse_text(&deck.body)
}

/// Same as [`parse_deck`] for already-normalized text.
pub fn parse_text(body: &str) -> Result<Parsed, Vec<ParseDiagnostic>> {
    let tokens = tokenize(body)?;
    let mut parser = Parser { tokens: &tokens, pos: 0, warnings: Vec::new() };
    let mut nodes = Vec::new();
    let mut errors = Vec::new();

    while let Some(token) = parser.peek() {
        match &token.kind {
            TokenKind::LParen => match parser.node() {
                Ok(node) => nodes.push(node),
                Err(e) => {
                    errors.push(e);
                    break;
                }
            },
            TokenKind::RParen => {
                errors.push(ParseDiagnostic::error(
                    "unbalanced-paren",
                    "unmatched closing parenthesis",
                    token.span,
                ));
                break;
            }
            _ => {
                errors.push(ParseDiagnostic::error(
                    "toplevel-atom",
                    "top-level form must be a parenthesized command",
                    token.span,
                ));
                break;
            }
        }
    }

    if errors.is_empty() {
        Ok(Parsed { nodes, warnings: parser.warnings })
    } else {
        Err(errors)
    }
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
    warnings: Vec<ParseDiagnostic>,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&'t Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    /// Parses one `( head args... )` form; the opening paren is current.
    fn node(&mut self) -> Result<CommandNode, ParseDiagnostic> {
        let open = self.bump().expect("caller checked for lparen");
        debug_assert_eq!(open.kind, TokenKind::LParen);

        let head = match self.peek() {
            Some(t) => match &t.kind {
                TokenKind::Symbol(s) => {
                    let head = s.clone();
                    self.bump();
                    head
                }
                TokenKind::RParen => {
                    return Err(ParseDiagnostic::error(
                        "empty-command",
                        "command form has no head symbol",
                        t.span,
                    ))
                }
                _ => {
                    return Err(ParseDiagnostic::error(
                        "bad-head",
                        "command head must be a symbol",
                        t.span,
                    ))
                }
            },
            None => {
                return Err(ParseDiagnostic::error(
                    "unbalanced-paren",
                    "unmatched opening parenthesis",
                    open.span,
                ))
            }
        };

        let mut args = Vec::new();
        loop {
            let Some(token) = self.peek() else {
                return Err(ParseDiagnostic::error(
                    "unbalanced-paren",
                    "unmatched opening parenthesis",
                    open.span,
                ));
            };
            match &token.kind {
                TokenKind::RParen => {
                    let close = self.bump().unwrap();
                    let span = Span::merge(open.span, close.span);
                    let node = CommandNode { head, args, span };
                    if !registry::is_supported(&node.head) && node.head != "position" {
                        self.warnings.push(ParseDiagnostic::warning(
                            "unknown-command",
                            format!("`{}` is not in the supported-command set", node.head),
                            node.span,
                        ));
                    }
                    return Ok(node);
                }
                TokenKind::LParen => {
                    let inner = self.node()?;
                    args.push(classify_nested(inner));
                }
                TokenKind::Number(n) => {
                    args.push(Arg::Number(n.clone()));
                    self.bump();
                }
                TokenKind::Str(s) => {
                    args.push(Arg::Str(s.clone()));
                    self.bump();
                }
                TokenKind::Symbol(s) => {
                    args.push(Arg::Symbol(s.clone()));
                    self.bump();
                }
                TokenKind::Placeholder(p) => {
                    args.push(Arg::Placeholder(p.clone()));
                    self.bump();
                }
            }
        }
    }
}

/// `(position x y z)` becomes a dedicated argument kind; everything else
/// nests as a plain node.
fn classify_nested(node: CommandNode) -> Arg {
    if node.head == "position" && node.args.len() == 3 {
        let nums: Vec<_> = node.args.iter().filter_map(Arg::as_number).cloned().collect();
        if nums.len() == 3 {
            return Arg::Position([nums[0].clone(), nums[1].clone(), nums[2].clone()]);
        }
    }
    Arg::Node(node)
}
