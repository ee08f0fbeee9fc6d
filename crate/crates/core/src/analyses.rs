//! Two diagnostics built on the stacked conversion: antecedent candidates
//! for the proform *one*, and modifier scope bracketings.
//!
//! Both walk every stacked tree the input licenses and read answers off the
//! bar-1 layers, so they surface exactly the ambiguity the stacking scheme
//! creates — no more, no less.

use std::collections::BTreeSet;

use crate::model::DependencyTree;
use crate::xbar::{XBarError, XBarNode, enumerate_stacked};

/// The spans the proform *one* could pick up when it replaces a bar-1
/// projection of `head`: one string per distinct bar-1 yield across all
/// licensed stacked trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntecedentSet {
    pub head: usize,
    pub candidates: BTreeSet<String>,
}

/// One way of nesting a head's modifiers, written with literal brackets
/// over surface forms, e.g. `[ intentionally [ knocked twice ] ]`.
///
/// Each stacked bar-1 layer contributes one bracket pair; the head together
/// with its complements renders bare, and so does each modifier. The bar-2
/// level (and with it the specifier) is outside the rendered chain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ScopeBracketing {
    pub text: String,
}

/// Every bar-1 yield headed by `head` in any licensed stacked tree.
///
/// A head with `m` modifiers on one side and `n` on the other yields
/// `m*n + m + n + 1` candidates when all spans spell differently; the bare
/// innermost projection (head plus complements) is always among them.
pub fn one_antecedents(tree: &DependencyTree, head: usize) -> Result<AntecedentSet, XBarError> {
    if tree.token(head).is_none() {
        return Err(XBarError::UnknownIndex(head));
    }
    let mut candidates = BTreeSet::new();
    for stacked in enumerate_stacked(tree)? {
        stacked.root.walk(&mut |node| {
            if node.bar == 1 && node.head == head {
                candidates.insert(node.yield_text());
            }
        });
    }
    Ok(AntecedentSet { head, candidates })
}

/// Every distinct bracketing of the modifiers of `head` across the licensed
/// stacked trees. A head with no modifiers gets the degenerate single pair
/// around its innermost projection.
pub fn scope_bracketings(
    tree: &DependencyTree,
    head: usize,
) -> Result<BTreeSet<ScopeBracketing>, XBarError> {
    if tree.token(head).is_none() {
        return Err(XBarError::UnknownIndex(head));
    }
    let mut bracketings = BTreeSet::new();
    for stacked in enumerate_stacked(tree)? {
        let maximal = find_maximal(&stacked.root, head)
            .expect("every token has a bar-2 projection in stacked form");
        let chain_top = maximal
            .children
            .iter()
            .find(|c| c.bar == 1 && c.head == head)
            .expect("every bar-2 node continues into a bar-1 chain");
        let text = match chain_top.stack_child() {
            // No modifier layers: one pair around the innermost projection.
            None => format!("[ {} ]", chain_top.yield_text()),
            Some(_) => render_chain(chain_top),
        };
        bracketings.insert(ScopeBracketing { text });
    }
    Ok(bracketings)
}

/// Locate the bar-2 projection of `head`.
fn find_maximal<'a>(node: &'a XBarNode, head: usize) -> Option<&'a XBarNode> {
    if node.bar == 2 && node.head == head {
        return Some(node);
    }
    node.children.iter().find_map(|c| find_maximal(c, head))
}

/// Render a bar-1 chain: each stacked layer becomes one bracket pair, the
/// innermost layer and every dependent render as bare yield text.
fn render_chain(node: &XBarNode) -> String {
    match node.stack_child() {
        None => node.yield_text(),
        Some(_) => {
            let parts: Vec<String> = node
                .children
                .iter()
                .map(|child| {
                    if child.bar == 1 && child.head == node.head {
                        render_chain(child)
                    } else {
                        child.yield_text()
                    }
                })
                .collect();
            format!("[ {} ]", parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Arc, Category, DepType, Token};

    fn token(index: usize, form: &str, category: &str) -> Token {
        Token::new(index, form, Category::new(category).unwrap())
    }

    fn modifier_chain(forms: &[&str], head_slot: usize, head_category: &str) -> DependencyTree {
        // All non-head tokens modify the head; handy for small examples.
        let tokens: Vec<Token> = forms
            .iter()
            .enumerate()
            .map(|(i, form)| {
                let category = if i + 1 == head_slot {
                    head_category
                } else {
                    "Adj"
                };
                token(i + 1, form, category)
            })
            .collect();
        let arcs: Vec<Arc> = (1..=forms.len())
            .filter(|&i| i != head_slot)
            .map(|i| Arc::new(head_slot, i, DepType::Modifier))
            .collect();
        DependencyTree::new(tokens, arcs).unwrap()
    }

    fn candidate_set(strings: &[&str]) -> BTreeSet<String> {
        strings.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn antecedents_of_a_one_sided_modifier_stack() {
        let tree = modifier_chain(&["young", "long-haired", "student"], 3, "N");
        let antecedents = one_antecedents(&tree, 3).unwrap();
        assert_eq!(
            antecedents.candidates,
            candidate_set(&[
                "student",
                "long-haired student",
                "young long-haired student",
            ])
        );
    }

    #[test]
    fn antecedents_of_a_two_sided_modifier_pair() {
        let tokens = vec![
            token(1, "the", "D"),
            token(2, "long-haired", "Adj"),
            token(3, "student", "N"),
            token(4, "from", "P"),
            token(5, "Cambridge", "N"),
        ];
        let arcs = vec![
            Arc::new(3, 1, DepType::Specifier),
            Arc::new(3, 2, DepType::Modifier),
            Arc::new(3, 4, DepType::Modifier),
            Arc::new(4, 5, DepType::Complement),
        ];
        let tree = DependencyTree::new(tokens, arcs).unwrap();
        let antecedents = one_antecedents(&tree, 3).unwrap();
        assert_eq!(
            antecedents.candidates,
            candidate_set(&[
                "student",
                "student from Cambridge",
                "long-haired student",
                "long-haired student from Cambridge",
            ])
        );
    }

    #[test]
    fn antecedents_of_a_bare_noun() {
        let tree = DependencyTree::new(vec![token(1, "dog", "N")], Vec::new()).unwrap();
        let antecedents = one_antecedents(&tree, 1).unwrap();
        assert_eq!(antecedents.candidates, candidate_set(&["dog"]));
        assert_eq!(one_antecedents(&tree, 2), Err(XBarError::UnknownIndex(2)));
    }

    #[test]
    fn one_sided_modifiers_force_a_single_bracketing() {
        let tree = modifier_chain(&["typical", "French", "house"], 3, "N");
        let bracketings = scope_bracketings(&tree, 3).unwrap();
        let texts: Vec<&str> = bracketings.iter().map(|b| b.text.as_str()).collect();
        assert_eq!(texts, vec!["[ typical [ French house ] ]"]);
    }

    #[test]
    fn two_sided_modifiers_are_scope_ambiguous() {
        let tokens = vec![
            token(1, "intentionally", "Adv"),
            token(2, "knocked", "V"),
            token(3, "twice", "Adv"),
        ];
        let arcs = vec![
            Arc::new(2, 1, DepType::Modifier),
            Arc::new(2, 3, DepType::Modifier),
        ];
        let tree = DependencyTree::new(tokens, arcs).unwrap();
        let bracketings = scope_bracketings(&tree, 2).unwrap();
        let texts: BTreeSet<String> = bracketings.into_iter().map(|b| b.text).collect();
        assert_eq!(
            texts,
            candidate_set(&[
                "[ [ intentionally knocked ] twice ]",
                "[ intentionally [ knocked twice ] ]",
            ])
        );
    }

    #[test]
    fn unmodified_head_gets_the_degenerate_bracketing() {
        let tokens = vec![
            token(1, "into", "P"),
            token(2, "the", "D"),
            token(3, "garden", "N"),
        ];
        let arcs = vec![
            Arc::new(3, 2, DepType::Specifier),
            Arc::new(1, 3, DepType::Complement),
        ];
        let tree = DependencyTree::new(tokens, arcs).unwrap();
        let bracketings = scope_bracketings(&tree, 1).unwrap();
        let texts: Vec<&str> = bracketings.iter().map(|b| b.text.as_str()).collect();
        assert_eq!(texts, vec!["[ into the garden ]"]);
    }
}
