//! Lexing, parsing and canonical printing of SDE-subset deck scripts.

pub mod ast;
pub mod lexer;
pub mod parse;
pub mod registry;
pub mod unparse;

pub use ast::{
    scan_placeholders, Arg, CommandNode, DeckOrigin, ParseDiagnostic, Severity, SourceDeck, Span,
    StringLit,
};
pub use lexer::{tokenize, Token, TokenKind};
pub use parse::{parse_deck, parse_text, Parsed};
pub use unparse::{unparse, unparse_node};
