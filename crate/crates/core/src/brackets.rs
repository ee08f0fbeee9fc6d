//! Textual renderings of constituency trees.
//!
//! The bracket form is a single line with single spaces, suitable for
//! golden comparisons and machine diffing:
//!
//! ```text
//! node := "(" CAT BAR node... ")"      e.g. (N1 (Adj1 (Adj0 red)) (N0 house))
//! leaf := "(" CAT "0" " " FORM ")"     e.g. (N0 house)
//! ```
//!
//! The ASCII form is the same tree one node per line, children indented two
//! spaces, for reading by eye. Both renderings are exact: equal strings iff
//! equal label/arity structure (for forms free of parentheses).

use crate::xbar::{XBarNode, XBarTree};

/// Render a constituency tree as canonical single-line bracket notation.
pub fn write_brackets(xbar: &XBarTree) -> String {
    let mut out = String::new();
    bracket_node(&xbar.root, &mut out);
    out
}

fn bracket_node(node: &XBarNode, out: &mut String) {
    out.push('(');
    out.push_str(node.category.as_str());
    out.push_str(&node.bar.to_string());
    if let Some(token) = &node.token {
        out.push(' ');
        out.push_str(&token.form);
    } else {
        for child in &node.children {
            out.push(' ');
            bracket_node(child, out);
        }
    }
    out.push(')');
}

/// Render a constituency tree as an indented multi-line listing, one node
/// per line (no trailing newline).
pub fn render_ascii(xbar: &XBarTree) -> String {
    let mut lines = Vec::new();
    ascii_lines(&xbar.root, 0, &mut lines);
    lines.join("\n")
}

fn ascii_lines(node: &XBarNode, depth: usize, lines: &mut Vec<String>) {
    let mut line = "  ".repeat(depth);
    line.push_str(node.category.as_str());
    line.push_str(&node.bar.to_string());
    if let Some(token) = &node.token {
        line.push(' ');
        line.push_str(&token.form);
    }
    lines.push(line);
    for child in &node.children {
        ascii_lines(child, depth + 1, lines);
    }
}
