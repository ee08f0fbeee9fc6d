//! Structural checkers for conversion output, written against the shape
//! rules directly rather than the conversion code.

use barstack::{DepType, XBarNode, XBarTree};

use crate::oracles::modifier_count;

/// Every leaf, left to right, must be the source's token sequence.
pub fn check_leaf_order(xbar: &XBarTree) -> Result<(), String> {
    let leaves = xbar.root.leaves();
    let tokens = xbar.source().tokens();
    if leaves.len() != tokens.len() {
        return Err(format!(
            "{} leaves for {} tokens",
            leaves.len(),
            tokens.len()
        ));
    }
    for (leaf, token) in leaves.iter().zip(tokens) {
        if *leaf != token {
            return Err(format!(
                "leaf {:?} out of place; expected {:?}",
                leaf.form, token.form
            ));
        }
    }
    Ok(())
}

fn all_nodes(xbar: &XBarTree) -> Vec<&XBarNode> {
    let mut nodes = Vec::new();
    xbar.root.walk(&mut |node| nodes.push(node));
    nodes
}

fn check_leaf_node(node: &XBarNode) -> Result<(), String> {
    let token = node.token.as_ref().ok_or("bar-0 node without a token")?;
    if !node.children.is_empty() {
        return Err(format!("leaf for token {} has children", token.index));
    }
    if node.head != token.index || node.category != token.category {
        return Err(format!("leaf for token {} mislabeled", token.index));
    }
    Ok(())
}

/// Shape rules for flat output: bar levels 0 and 1 only, one projection per
/// word holding its leaf directly, dependents' projections role-annotated,
/// no projection nested in another projection of the same head, and exactly
/// 2n nodes overall.
pub fn check_flat_shape(xbar: &XBarTree) -> Result<(), String> {
    check_leaf_order(xbar)?;
    let nodes = all_nodes(xbar);
    if nodes.len() != 2 * xbar.source().len() {
        return Err(format!(
            "{} nodes for {} tokens; flat form has exactly 2n",
            nodes.len(),
            xbar.source().len()
        ));
    }
    if xbar.root.bar != 1 || xbar.root.role.is_some() {
        return Err("root must be an unannotated bar-1 node".to_string());
    }
    for node in nodes {
        match node.bar {
            0 => check_leaf_node(node)?,
            1 => {
                if node.token.is_some() {
                    return Err(format!("bar-1 node {} carries a token", node.head));
                }
                let mut own_leaves = 0;
                for child in &node.children {
                    if child.head == node.head {
                        if child.bar != 0 {
                            return Err(format!(
                                "projection of token {} nests another projection of the same head",
                                node.head
                            ));
                        }
                        own_leaves += 1;
                    } else {
                        // A dependent's projection: flat, role-annotated.
                        if child.bar != 1 || child.role.is_none() {
                            return Err(format!(
                                "dependent {} under {} is not a role-annotated bar-1 node",
                                child.head, node.head
                            ));
                        }
                    }
                }
                if own_leaves != 1 {
                    return Err(format!(
                        "projection of token {} has {} lexical children",
                        node.head, own_leaves
                    ));
                }
            }
            bar => return Err(format!("bar-{bar} node in flat output")),
        }
    }
    Ok(())
}

fn is_interval(positions: &[usize]) -> bool {
    match (positions.first(), positions.last()) {
        (Some(first), Some(last)) => last - first + 1 == positions.len(),
        _ => true,
    }
}

/// Shape rules for stacked output: n bar-2 and n bar-0 nodes, n plus one
/// bar-1 node per modifier, every bar-1 yield a contiguous interval around
/// its head, every bar-2 yield the head's full constituent, specifiers
/// attached at bar-2 only, and each maximal projection role-annotated
/// (except the root's).
pub fn check_stacked_shape(xbar: &XBarTree) -> Result<(), String> {
    check_leaf_order(xbar)?;
    let source = xbar.source();
    let n = source.len();
    let nodes = all_nodes(xbar);

    let count_of = |bar: u8| nodes.iter().filter(|node| node.bar == bar).count();
    if count_of(0) != n || count_of(2) != n {
        return Err(format!(
            "{} bar-0 and {} bar-2 nodes for {n} tokens",
            count_of(0),
            count_of(2)
        ));
    }
    let expected_bar1 = n + modifier_count(source);
    if count_of(1) != expected_bar1 {
        return Err(format!(
            "{} bar-1 nodes; expected n + modifiers = {expected_bar1}",
            count_of(1)
        ));
    }
    if xbar.root.bar != 2 || xbar.root.head != source.root() || xbar.root.role.is_some() {
        return Err("root must be the unannotated bar-2 node of the sentence root".to_string());
    }

    for node in nodes {
        let positions = node.positions();
        match node.bar {
            0 => check_leaf_node(node)?,
            1 => {
                if node.role.is_some() {
                    return Err(format!("bar-1 node of {} carries a role", node.head));
                }
                if !is_interval(&positions) || !positions.contains(&node.head) {
                    return Err(format!(
                        "bar-1 yield {:?} of head {} is not an interval around it",
                        positions, node.head
                    ));
                }
                // Either an innermost layer (leaf plus complement
                // projections) or one modifier layer over the next bar-1.
                let same_head: Vec<&XBarNode> = node
                    .children
                    .iter()
                    .filter(|c| c.head == node.head)
                    .collect();
                let [continuation] = same_head.as_slice() else {
                    return Err(format!(
                        "bar-1 node of {} continues into {} same-head children",
                        node.head,
                        same_head.len()
                    ));
                };
                let dependents: Vec<&XBarNode> = node
                    .children
                    .iter()
                    .filter(|c| c.head != node.head)
                    .collect();
                match continuation.bar {
                    0 => {
                        for dependent in dependents {
                            if dependent.bar != 2 || dependent.role != Some(DepType::Complement) {
                                return Err(format!(
                                    "innermost layer of {} holds a non-complement",
                                    node.head
                                ));
                            }
                        }
                    }
                    1 => {
                        let [modifier] = dependents.as_slice() else {
                            return Err(format!(
                                "modifier layer of {} has {} dependents",
                                node.head,
                                dependents.len()
                            ));
                        };
                        if modifier.bar != 2 || modifier.role != Some(DepType::Modifier) {
                            return Err(format!(
                                "modifier layer of {} holds a non-modifier",
                                node.head
                            ));
                        }
                    }
                    bar => {
                        return Err(format!(
                            "bar-1 node of {} continues into a bar-{bar} node",
                            node.head
                        ));
                    }
                }
            }
            2 => {
                let constituent = source.constituent(node.head).map_err(|e| e.to_string())?;
                if positions != constituent.positions {
                    return Err(format!(
                        "bar-2 yield {:?} of head {} is not its constituent",
                        positions, node.head
                    ));
                }
                if node.head != source.root() && node.role.is_none() {
                    return Err(format!(
                        "maximal projection of {} is missing its role",
                        node.head
                    ));
                }
                for child in &node.children {
                    let ok = (child.bar == 1 && child.head == node.head)
                        || (child.bar == 2
                            && child.role == Some(DepType::Specifier)
                            && source.specifier_of(node.head) == Some(child.head));
                    if !ok {
                        return Err(format!(
                            "bar-2 node of {} has an unexpected child for {}",
                            node.head, child.head
                        ));
                    }
                }
                let continuations = node
                    .children
                    .iter()
                    .filter(|c| c.bar == 1 && c.head == node.head)
                    .count();
                if continuations != 1 {
                    return Err(format!(
                        "bar-2 node of {} continues into {} bar-1 chains",
                        node.head, continuations
                    ));
                }
            }
            bar => return Err(format!("bar-{bar} node in stacked output")),
        }
    }
    Ok(())
}
