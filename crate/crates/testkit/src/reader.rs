//! A minimal reader for the single-line bracket notation, used to check
//! that emitted strings parse back to the tree they came from.

use barstack::XBarNode;

/// The label/arity skeleton of a constituency tree, as recovered from (or
/// projected for comparison with) bracket notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketNode {
    Phrase {
        label: String,
        children: Vec<BracketNode>,
    },
    Word {
        label: String,
        form: String,
    },
}

/// Project an [`XBarNode`] to its skeleton: labels become category plus bar
/// digit, exactly as the bracket writer prints them.
pub fn skeleton(node: &XBarNode) -> BracketNode {
    let label = format!("{}{}", node.category, node.bar);
    match &node.token {
        Some(token) => BracketNode::Word {
            label,
            form: token.form.clone(),
        },
        None => BracketNode::Phrase {
            label,
            children: node.children.iter().map(skeleton).collect(),
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(text: &str) -> Vec<Tok<'_>> {
    let mut tokens = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, '(')) => {
                tokens.push(Tok::Open);
                rest = &rest[1..];
            }
            Some((_, ')')) => {
                tokens.push(Tok::Close);
                rest = &rest[1..];
            }
            Some((_, c)) if c.is_whitespace() => {
                rest = rest.trim_start();
            }
            Some(_) => {
                let end = rest
                    .find(|c: char| c == '(' || c == ')' || c.is_whitespace())
                    .unwrap_or(rest.len());
                tokens.push(Tok::Atom(&rest[..end]));
                rest = &rest[end..];
            }
            None => break,
        }
    }
    tokens
}

/// Parse one bracketed tree. A node whose first element after the label is
/// an atom is a word (atoms up to the closing paren join as its form);
/// otherwise its elements are child nodes.
pub fn parse_brackets(text: &str) -> Result<BracketNode, String> {
    let tokens = tokenize(text);
    let (node, rest) = parse_node(&tokens)?;
    if rest.is_empty() {
        Ok(node)
    } else {
        Err(format!("{} trailing tokens after the tree", rest.len()))
    }
}

fn parse_node<'a, 't>(tokens: &'a [Tok<'t>]) -> Result<(BracketNode, &'a [Tok<'t>]), String> {
    let [Tok::Open, Tok::Atom(label), rest @ ..] = tokens else {
        return Err("expected `(` and a label".to_string());
    };
    let label = label.to_string();
    match rest.first() {
        Some(Tok::Atom(_)) => {
            let mut words = Vec::new();
            let mut rest = rest;
            while let [Tok::Atom(word), more @ ..] = rest {
                words.push(*word);
                rest = more;
            }
            let [Tok::Close, rest @ ..] = rest else {
                return Err(format!("unclosed word node `{label}`"));
            };
            Ok((
                BracketNode::Word {
                    label,
                    form: words.join(" "),
                },
                rest,
            ))
        }
        Some(Tok::Open) => {
            let mut children = Vec::new();
            let mut rest = rest;
            while let Some(Tok::Open) = rest.first() {
                let (child, more) = parse_node(rest)?;
                children.push(child);
                rest = more;
            }
            let [Tok::Close, rest @ ..] = rest else {
                return Err(format!("unclosed phrase node `{label}`"));
            };
            Ok((BracketNode::Phrase { label, children }, rest))
        }
        _ => Err(format!("empty or unclosed node `{label}`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_nested_phrase() {
        let parsed = parse_brackets("(N1 (Adj1 (Adj0 red)) (N0 house))").unwrap();
        assert_eq!(
            parsed,
            BracketNode::Phrase {
                label: "N1".to_string(),
                children: vec![
                    BracketNode::Phrase {
                        label: "Adj1".to_string(),
                        children: vec![BracketNode::Word {
                            label: "Adj0".to_string(),
                            form: "red".to_string(),
                        }],
                    },
                    BracketNode::Word {
                        label: "N0".to_string(),
                        form: "house".to_string(),
                    },
                ],
            }
        );
    }

    #[test]
    fn rejects_malformed_notation() {
        assert!(parse_brackets("").is_err());
        assert!(parse_brackets("(N1").is_err());
        assert!(parse_brackets("(N1 (N0 dog)) extra").is_err());
        assert!(parse_brackets("(N1 (N0 dog)))").is_err());
    }
}
