//! Canonical pretty-printer: one top-level command per line, single spaces,
//! numbers in canonical form. Rendered and re-rendered decks are byte-equal,
//! so textual diffs between samples stay confined to real differences.

use std::fmt::Write as _;

use super::ast::{Arg, CommandNode};

/// Prints command trees back to canonical deck text. Empty input prints as
/// empty text; otherwise every command ends with a newline.
pub fn unparse(nodes: &[CommandNode]) -> String {
    let mut out = String::new();
    for node in nodes {
        write_node(&mut out, node);
        out.push('\n');
    }
    out
}

/// Prints a single command without the trailing newline.
pub fn unparse_node(node: &CommandNode) -> String {
    let mut out = String::new();
    write_node(&mut out, node);
    out
}

fn write_node(out: &mut String, node: &CommandNode) {
    out.push('(');
    out.push_str(&node.head);
    for arg in &node.args {
        out.push(' ');
        write_arg(out, arg);
    }
    out.push(')');
}

fn write_arg(out: &mut String, arg: &Arg) {
    match arg {
        Arg::Number(n) => out.push_str(&n.canonical()),
        Arg::Str(s) => {
            out.push('"');
            for c in s.value.chars() {
                match c {
                    '"' => out.push_str("\\\""),
                    '\\' => out.push_str("\\\\"),
                    _ => out.push(c),
                }
            }
            out.push('"');
        }
        Arg::Symbol(s) => out.push_str(s),
        Arg::Placeholder(name) => {
            let _ = write!(out, "@{name}@");
        }
        Arg::Position(coords) => {
            let _ = write!(
                out,
                "(position {} {} {})",
                coords[0].canonical(),
                coords[1].canonical(),
                coords[2].canonical()
            );
        }
        Arg::Node(n) => write_node(out, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse::parse_text;

    #[test]
    fn refinement_line_round_trips_byte_exact() {
        let line = r#"(sdedr:define-refinement-size "global" 10 10 0.0001 1 1 0.0001)"#;
        let parsed = parse_text(line).unwrap();
        assert_eq!(unparse(&parsed.nodes), format!("{line}\n"));
    }

    #[test]
    fn empty_list_prints_empty_text() {
        assert_eq!(unparse(&[]), "");
    }

    #[test]
    fn canonical_layout_collapses_whitespace_and_number_style() {
        let messy = "(a   1.50   \"x\"\n   (position 0   0.5 0E0))";
        let parsed = parse_text(messy).unwrap();
        assert_eq!(unparse(&parsed.nodes), "(a 1.5 \"x\" (position 0 0.5 0))\n");
    }

    #[test]
    fn string_escapes_survive() {
        let text = "(a \"he said \\\"hi\\\"\")\n";
        let parsed = parse_text(text).unwrap();
        assert_eq!(unparse(&parsed.nodes), text);
    }

    #[test]
    fn placeholders_survive_unparse() {
        let text = "(f @height@ \"n@node@.tdr\")\n";
        let parsed = parse_text(text).unwrap();
        assert_eq!(unparse(&parsed.nodes), text);
    }
}
