//! Constituency readings of dependency trees.
//!
//! A projective dependency tree maps onto X-bar constituency in two ways.
//! The *flat* form gives every word one bar-1 projection with the lexical
//! head and all dependent phrases side by side beneath it; it is unique and
//! invertible. The *stacked* form restores binary-style structure: the head
//! and its complements form an innermost bar-1 node, each modifier adds one
//! more bar-1 layer, and a bar-2 node (holding the specifier, if any) always
//! tops the stack. When a head has modifiers on both sides, the layers may
//! be stacked in any order that works outward from the head on each side,
//! so one dependency tree licenses a whole family of stacked trees. This
//! module builds both forms and enumerates that family.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::model::{Category, DepType, DependencyTree, Token, TreeError, Violation};

/// One node of an X-bar constituency tree.
///
/// `bar` is 0 for lexical leaves, 1 for intermediate projections, and 2 for
/// maximal projections. `head` is the surface position of the word the node
/// projects. Exactly the bar-0 nodes carry a `token`. `role` is set on the
/// outermost projection of a dependent and records the arc it realizes;
/// keeping it on the node is what makes the flat form invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XBarNode {
    pub category: Category,
    pub bar: u8,
    pub head: usize,
    pub role: Option<DepType>,
    pub token: Option<Token>,
    pub children: Vec<XBarNode>,
}

impl XBarNode {
    fn leaf(token: &Token) -> Self {
        XBarNode {
            category: token.category.clone(),
            bar: 0,
            head: token.index,
            role: None,
            token: Some(token.clone()),
            children: Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.token.is_some()
    }

    /// Tokens under this node in surface order.
    pub fn leaves(&self) -> Vec<&Token> {
        let mut out = Vec::new();
        self.walk(&mut |node| {
            if let Some(token) = &node.token {
                out.push(token);
            }
        });
        out
    }

    /// Surface positions of the tokens under this node, ascending if the
    /// tree preserves surface order (conversion output always does).
    pub fn positions(&self) -> Vec<usize> {
        self.leaves().iter().map(|t| t.index).collect()
    }

    /// The forms under this node in surface order, joined by spaces.
    pub fn yield_text(&self) -> String {
        let forms: Vec<&str> = self.leaves().iter().map(|t| t.form.as_str()).collect();
        forms.join(" ")
    }

    /// Leftmost surface position under this node. Used to order siblings.
    fn first_position(&self) -> usize {
        let mut node = self;
        while let Some(first) = node.children.first() {
            node = first;
        }
        node.head
    }

    /// Total number of nodes in this subtree, this node included.
    pub fn node_count(&self) -> usize {
        let mut count = 0;
        self.walk(&mut |_| count += 1);
        count
    }

    /// The child that continues this node's own projection at bar level 1.
    /// Stacked bar-1 nodes have exactly one; innermost bar-1 nodes and flat
    /// projections have none.
    pub fn stack_child(&self) -> Option<&XBarNode> {
        if self.bar != 1 {
            return None;
        }
        self.children
            .iter()
            .find(|c| c.bar == 1 && c.head == self.head)
    }

    /// Visit this node and all descendants in preorder.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a XBarNode)) {
        visit(self);
        for child in &self.children {
            child.walk(visit);
        }
    }
}

/// A constituency tree paired with the dependency tree it was derived from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XBarTree {
    pub root: XBarNode,
    source: DependencyTree,
}

impl XBarTree {
    pub(crate) fn new(root: XBarNode, source: DependencyTree) -> Self {
        XBarTree { root, source }
    }

    pub fn source(&self) -> &DependencyTree {
        &self.source
    }
}

/// One licensed stacking order for a head's modifiers: surface positions
/// listed from the innermost layer outward. On each side of the head the
/// order must work outward (nearest modifier first), but the two sides may
/// interleave freely.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interleaving {
    pub order: Vec<usize>,
}

impl Interleaving {
    pub fn new(order: Vec<usize>) -> Self {
        Interleaving { order }
    }
}

/// Errors from the constituency conversions.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum XBarError {
    #[error("non-projective input: {}", summarize_violations(.0))]
    NonProjective(Vec<Violation>),
    #[error("token index {0} is out of range")]
    UnknownIndex(usize),
    #[error("invalid or missing interleaving for head {head}")]
    InvalidInterleaving { head: usize },
    #[error("not a flat constituency tree: {0}")]
    NotFlatForm(String),
    #[error("projection of token {head} is missing its role annotation")]
    MissingRole { head: usize },
    #[error(transparent)]
    Model(#[from] TreeError),
}

fn summarize_violations(violations: &[Violation]) -> String {
    match violations {
        [] => "no constituent details".to_string(),
        [first] => first.to_string(),
        [first, rest @ ..] => format!("{} (and {} more)", first, rest.len()),
    }
}

fn ensure_projective(tree: &DependencyTree) -> Result<(), XBarError> {
    let violations = tree.contiguity_violations();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(XBarError::NonProjective(violations))
    }
}

/// Sort sibling nodes into surface order. Yields are disjoint, so ordering
/// by leftmost position is total.
fn order_children(children: &mut [XBarNode]) {
    children.sort_by_key(XBarNode::first_position);
}

/// Translate a projective dependency tree into its flat constituency form:
/// one bar-1 node per word, with the lexical head and the projections of all
/// its dependents side by side beneath it, in surface order.
pub fn to_flat_xbar(tree: &DependencyTree) -> Result<XBarTree, XBarError> {
    ensure_projective(tree)?;
    let root = flat_projection(tree, tree.root(), None);
    Ok(XBarTree::new(root, tree.clone()))
}

fn flat_projection(tree: &DependencyTree, index: usize, role: Option<DepType>) -> XBarNode {
    let token = tree.token(index).expect("projection of a known token");
    let mut children: Vec<XBarNode> = tree
        .dependents_of(index)
        .iter()
        .map(|&d| {
            let (_, dependent_role) = tree.head_of(d).expect("dependent has a head");
            flat_projection(tree, d, Some(dependent_role))
        })
        .collect();
    children.push(XBarNode::leaf(token));
    order_children(&mut children);
    XBarNode {
        category: token.category.clone(),
        bar: 1,
        head: index,
        role,
        token: None,
        children,
    }
}

/// Invert the flat translation, recovering the tokens, arcs, and roles of
/// the dependency tree a flat constituency tree encodes.
pub fn from_flat_xbar(xbar: &XBarTree) -> Result<DependencyTree, XBarError> {
    flatten_root(&xbar.root)
}

/// As [`from_flat_xbar`], but starting from a bare root node; useful when
/// the flat tree was built by hand rather than by [`to_flat_xbar`].
pub fn flatten_root(root: &XBarNode) -> Result<DependencyTree, XBarError> {
    let mut tokens = Vec::new();
    let mut arcs = Vec::new();
    collect_flat(root, None, &mut tokens, &mut arcs)?;
    tokens.sort_by_key(|t: &Token| t.index);
    Ok(DependencyTree::new(tokens, arcs)?)
}

fn collect_flat(
    node: &XBarNode,
    parent_head: Option<usize>,
    tokens: &mut Vec<Token>,
    arcs: &mut Vec<crate::model::Arc>,
) -> Result<(), XBarError> {
    if node.bar != 1 {
        return Err(XBarError::NotFlatForm(format!(
            "bar-{} node projecting token {}",
            node.bar, node.head
        )));
    }
    if let Some(head) = parent_head {
        let role = node
            .role
            .ok_or(XBarError::MissingRole { head: node.head })?;
        arcs.push(crate::model::Arc::new(head, node.head, role));
    }
    let mut lexical_child = false;
    for child in &node.children {
        if child.bar == 0 {
            let token = child.token.as_ref().ok_or_else(|| {
                XBarError::NotFlatForm(format!("bar-0 node without a token under {}", node.head))
            })?;
            if token.index != node.head || child.category != node.category {
                return Err(XBarError::NotFlatForm(format!(
                    "projection of token {} has lexical child {}",
                    node.head, token.index
                )));
            }
            if lexical_child {
                return Err(XBarError::NotFlatForm(format!(
                    "projection of token {} has two lexical children",
                    node.head
                )));
            }
            lexical_child = true;
            tokens.push(token.clone());
        } else if child.bar == 1 && child.head == node.head {
            return Err(XBarError::NotFlatForm(format!(
                "stacked projection of token {}",
                node.head
            )));
        } else {
            collect_flat(child, Some(node.head), tokens, arcs)?;
        }
    }
    if !lexical_child {
        return Err(XBarError::NotFlatForm(format!(
            "projection of token {} has no lexical child",
            node.head
        )));
    }
    Ok(())
}

/// The modifiers of `head` split by side, each listed nearest-first: left
/// modifiers in decreasing position, right modifiers in increasing position.
fn sided_modifiers(tree: &DependencyTree, head: usize) -> (Vec<usize>, Vec<usize>) {
    let modifiers = tree.modifiers_of(head);
    let left: Vec<usize> = modifiers
        .iter()
        .rev()
        .copied()
        .filter(|&m| m < head)
        .collect();
    let right: Vec<usize> = modifiers.into_iter().filter(|&m| m > head).collect();
    (left, right)
}

/// All licensed stacking orders for the modifiers of `head`, in
/// lexicographic order of their position sequences. A head with modifiers
/// on at most one side has exactly one; a head with `m` on the left and `n`
/// on the right has `(m + n)! / (m! n!)`.
pub fn enumerate_interleavings(
    tree: &DependencyTree,
    head: usize,
) -> Result<Vec<Interleaving>, XBarError> {
    if tree.token(head).is_none() {
        return Err(XBarError::UnknownIndex(head));
    }
    let (left, right) = sided_modifiers(tree, head);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(left.len() + right.len());
    merge_orders(&left, &right, &mut current, &mut out);
    Ok(out)
}

/// Emit every merge of the two side sequences. Taking the left side first at
/// each step produces lexicographic order, because every left position is
/// smaller than every right position.
fn merge_orders(
    left: &[usize],
    right: &[usize],
    current: &mut Vec<usize>,
    out: &mut Vec<Interleaving>,
) {
    if left.is_empty() && right.is_empty() {
        out.push(Interleaving::new(current.clone()));
        return;
    }
    if let Some((&next, rest)) = left.split_first() {
        current.push(next);
        merge_orders(rest, right, current, out);
        current.pop();
    }
    if let Some((&next, rest)) = right.split_first() {
        current.push(next);
        merge_orders(left, rest, current, out);
        current.pop();
    }
}

/// Whether `order` is a licensed stacking of the modifiers of `head`: the
/// right multiset of positions, working outward on each side.
fn is_licensed_interleaving(tree: &DependencyTree, head: usize, order: &[usize]) -> bool {
    let mut sorted: Vec<usize> = order.to_vec();
    sorted.sort_unstable();
    if sorted != tree.modifiers_of(head) {
        return false;
    }
    let outward = |side: Vec<usize>, nearest_first: &[usize]| -> bool {
        let seen: Vec<usize> = order.iter().copied().filter(|m| side.contains(m)).collect();
        seen == nearest_first[..seen.len()]
    };
    let (left, right) = sided_modifiers(tree, head);
    outward(left.clone(), &left) && outward(right.clone(), &right)
}

/// The single licensed order for a head whose modifiers all lie on one side,
/// or an error if both sides are occupied and a choice is required.
fn forced_interleaving(tree: &DependencyTree, head: usize) -> Result<Vec<usize>, XBarError> {
    let (left, right) = sided_modifiers(tree, head);
    match (left.is_empty(), right.is_empty()) {
        (true, _) => Ok(right),
        (_, true) => Ok(left),
        _ => Err(XBarError::InvalidInterleaving { head }),
    }
}

/// Convert a projective dependency tree to one stacked constituency tree.
///
/// `choices` fixes the modifier stacking order per head. A head whose order
/// is forced — modifiers on one side only, which covers heads with fewer
/// than two modifiers — may be omitted. Supplying an order that is not
/// licensed for its head, or omitting a head that genuinely has a choice,
/// is an error.
pub fn to_stacked_xbar(
    tree: &DependencyTree,
    choices: &BTreeMap<usize, Interleaving>,
) -> Result<XBarTree, XBarError> {
    ensure_projective(tree)?;
    for (&head, interleaving) in choices {
        if tree.token(head).is_none() {
            return Err(XBarError::UnknownIndex(head));
        }
        if !is_licensed_interleaving(tree, head, &interleaving.order) {
            return Err(XBarError::InvalidInterleaving { head });
        }
    }
    let root = stacked_projection(tree, tree.root(), None, choices)?;
    Ok(XBarTree::new(root, tree.clone()))
}

fn stacked_projection(
    tree: &DependencyTree,
    index: usize,
    role: Option<DepType>,
    choices: &BTreeMap<usize, Interleaving>,
) -> Result<XBarNode, XBarError> {
    let token = tree.token(index).expect("projection of a known token");
    let bar1 = |children: Vec<XBarNode>| XBarNode {
        category: token.category.clone(),
        bar: 1,
        head: index,
        role: None,
        token: None,
        children,
    };

    // Innermost layer: the lexical head with all of its complements.
    let mut inner_children = vec![XBarNode::leaf(token)];
    for complement in tree.complements_of(index) {
        inner_children.push(stacked_projection(
            tree,
            complement,
            Some(DepType::Complement),
            choices,
        )?);
    }
    order_children(&mut inner_children);
    let mut stack = bar1(inner_children);

    // One additional bar-1 layer per modifier, innermost choice first.
    let order = match choices.get(&index) {
        Some(interleaving) => interleaving.order.clone(),
        None => forced_interleaving(tree, index)?,
    };
    for modifier in order {
        let projection = stacked_projection(tree, modifier, Some(DepType::Modifier), choices)?;
        let mut layer = vec![stack, projection];
        order_children(&mut layer);
        stack = bar1(layer);
    }

    // The maximal projection always tops the stack; the specifier, if any,
    // attaches here.
    let mut top_children = vec![stack];
    if let Some(specifier) = tree.specifier_of(index) {
        top_children.push(stacked_projection(
            tree,
            specifier,
            Some(DepType::Specifier),
            choices,
        )?);
    }
    order_children(&mut top_children);
    Ok(XBarNode {
        category: token.category.clone(),
        bar: 2,
        head: index,
        role,
        token: None,
        children: top_children,
    })
}

/// Every stacked constituency tree the input licenses: one per combination
/// of modifier stacking orders across all heads.
///
/// The order is deterministic: heads are visited in surface order with the
/// lowest head varying slowest, and each head's orders run lexicographically
/// as in [`enumerate_interleavings`].
pub fn enumerate_stacked(tree: &DependencyTree) -> Result<Vec<XBarTree>, XBarError> {
    ensure_projective(tree)?;
    let mut axes: Vec<(usize, Vec<Interleaving>)> = Vec::new();
    for head in 1..=tree.len() {
        let orders = enumerate_interleavings(tree, head)?;
        if orders.len() > 1 {
            axes.push((head, orders));
        }
    }

    let mut out = Vec::new();
    let mut selection = vec![0usize; axes.len()];
    loop {
        let choices: BTreeMap<usize, Interleaving> = axes
            .iter()
            .zip(&selection)
            .map(|((head, orders), &pick)| (*head, orders[pick].clone()))
            .collect();
        out.push(to_stacked_xbar(tree, &choices)?);

        // Advance the rightmost axis first, so earlier heads vary slowest.
        let mut axis = axes.len();
        loop {
            if axis == 0 {
                return Ok(out);
            }
            axis -= 1;
            selection[axis] += 1;
            if selection[axis] < axes[axis].1.len() {
                break;
            }
            selection[axis] = 0;
        }
    }
}

/// The distinct yields of every bar-1 node with the given category, across
/// one constituency tree.
pub fn bar1_spans(xbar: &XBarTree, category: &Category) -> std::collections::BTreeSet<String> {
    let mut spans = std::collections::BTreeSet::new();
    xbar.root.walk(&mut |node| {
        if node.bar == 1 && node.category == *category {
            spans.insert(node.yield_text());
        }
    });
    spans
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::write_brackets;
    use crate::model::Arc;

    fn cat(label: &str) -> Category {
        Category::new(label).unwrap()
    }

    fn token(index: usize, form: &str, category: &str) -> Token {
        Token::new(index, form, cat(category))
    }

    fn chased_garden() -> DependencyTree {
        let tokens = vec![
            token(1, "the", "D"),
            token(2, "old", "Adj"),
            token(3, "dog", "N"),
            token(4, "chased", "V"),
            token(5, "the", "D"),
            token(6, "cat", "N"),
            token(7, "into", "P"),
            token(8, "the", "D"),
            token(9, "garden", "N"),
        ];
        let arcs = vec![
            Arc::new(3, 1, DepType::Specifier),
            Arc::new(3, 2, DepType::Modifier),
            Arc::new(4, 3, DepType::Complement),
            Arc::new(6, 5, DepType::Specifier),
            Arc::new(4, 6, DepType::Complement),
            Arc::new(4, 7, DepType::Modifier),
            Arc::new(9, 8, DepType::Specifier),
            Arc::new(7, 9, DepType::Complement),
        ];
        DependencyTree::new(tokens, arcs).unwrap()
    }

    fn big_red_house() -> DependencyTree {
        let tokens = vec![
            token(1, "the", "D"),
            token(2, "big", "Adj"),
            token(3, "red", "Adj"),
            token(4, "house", "N"),
        ];
        let arcs = vec![
            Arc::new(4, 1, DepType::Specifier),
            Arc::new(4, 2, DepType::Modifier),
            Arc::new(4, 3, DepType::Modifier),
        ];
        DependencyTree::new(tokens, arcs).unwrap()
    }

    fn student_cambridge() -> DependencyTree {
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
        DependencyTree::new(tokens, arcs).unwrap()
    }

    fn one_word() -> DependencyTree {
        DependencyTree::new(vec![token(1, "dog", "N")], Vec::new()).unwrap()
    }

    #[test]
    fn flat_translation_of_the_whole_sentence() {
        let flat = to_flat_xbar(&chased_garden()).unwrap();
        assert_eq!(
            write_brackets(&flat),
            "(V1 (N1 (D1 (D0 the)) (Adj1 (Adj0 old)) (N0 dog)) (V0 chased) \
             (N1 (D1 (D0 the)) (N0 cat)) (P1 (P0 into) (N1 (D1 (D0 the)) (N0 garden))))"
        );
        // One bar-1 node and one leaf per word, nothing else.
        assert_eq!(flat.root.node_count(), 2 * 9);
    }

    #[test]
    fn flat_translation_of_a_single_word() {
        let flat = to_flat_xbar(&one_word()).unwrap();
        assert_eq!(write_brackets(&flat), "(N1 (N0 dog))");
    }

    #[test]
    fn flat_translation_round_trips() {
        for tree in [
            chased_garden(),
            big_red_house(),
            student_cambridge(),
            one_word(),
        ] {
            let flat = to_flat_xbar(&tree).unwrap();
            assert_eq!(from_flat_xbar(&flat).unwrap(), tree);
        }
    }

    #[test]
    fn flat_inverse_rejects_stacked_input() {
        let stacked = to_stacked_xbar(&big_red_house(), &BTreeMap::new()).unwrap();
        assert!(matches!(
            from_flat_xbar(&stacked),
            Err(XBarError::NotFlatForm(_))
        ));
    }

    #[test]
    fn conversion_requires_projectivity() {
        let tokens = vec![token(1, "a", "Adv"), token(2, "b", "V"), token(3, "c", "N")];
        let arcs = vec![
            Arc::new(3, 1, DepType::Modifier),
            Arc::new(2, 3, DepType::Complement),
        ];
        let crossing = DependencyTree::new(tokens, arcs).unwrap();
        let expect_rejection = |result: Result<XBarTree, XBarError>| match result {
            Err(XBarError::NonProjective(violations)) => {
                assert_eq!(violations.len(), 1);
                assert_eq!(violations[0].head, 3);
                assert_eq!(violations[0].gap, vec![2]);
            }
            other => panic!("expected a projectivity rejection, got {other:?}"),
        };
        expect_rejection(to_flat_xbar(&crossing));
        expect_rejection(to_stacked_xbar(&crossing, &BTreeMap::new()));
        match enumerate_stacked(&crossing) {
            Err(XBarError::NonProjective(_)) => {}
            other => panic!("expected a projectivity rejection, got {other:?}"),
        }
    }

    #[test]
    fn stacked_conversion_stacks_one_modifier_per_layer() {
        let stacked = to_stacked_xbar(&big_red_house(), &BTreeMap::new()).unwrap();
        assert_eq!(
            write_brackets(&stacked),
            "(N2 (D2 (D1 (D0 the))) (N1 (Adj2 (Adj1 (Adj0 big))) \
             (N1 (Adj2 (Adj1 (Adj0 red))) (N1 (N0 house)))))"
        );
        // Per word one bar-2 and one bar-0 node, plus a bar-1 node per word
        // and per modifier: 4 + 4 + (4 + 2).
        assert_eq!(stacked.root.node_count(), 14);
    }

    #[test]
    fn stacked_conversion_of_a_single_word() {
        let stacked = to_stacked_xbar(&one_word(), &BTreeMap::new()).unwrap();
        assert_eq!(write_brackets(&stacked), "(N2 (N1 (N0 dog)))");
    }

    #[test]
    fn interleavings_merge_the_two_sides_outward() {
        // Five words headed by position 3, with two modifiers on each side.
        let tokens = vec![
            token(1, "a", "Adj"),
            token(2, "b", "Adj"),
            token(3, "c", "N"),
            token(4, "d", "Adj"),
            token(5, "e", "Adj"),
        ];
        let arcs = vec![
            Arc::new(3, 1, DepType::Modifier),
            Arc::new(3, 2, DepType::Modifier),
            Arc::new(3, 4, DepType::Modifier),
            Arc::new(3, 5, DepType::Modifier),
        ];
        let tree = DependencyTree::new(tokens, arcs).unwrap();
        let orders: Vec<Vec<usize>> = enumerate_interleavings(&tree, 3)
            .unwrap()
            .into_iter()
            .map(|i| i.order)
            .collect();
        assert_eq!(
            orders,
            vec![
                vec![2, 1, 4, 5],
                vec![2, 4, 1, 5],
                vec![2, 4, 5, 1],
                vec![4, 2, 1, 5],
                vec![4, 2, 5, 1],
                vec![4, 5, 2, 1],
            ]
        );
    }

    #[test]
    fn interleaving_of_an_unmodified_head_is_empty() {
        let tree = one_word();
        assert_eq!(
            enumerate_interleavings(&tree, 1).unwrap(),
            vec![Interleaving::new(Vec::new())]
        );
        assert_eq!(
            enumerate_interleavings(&tree, 2),
            Err(XBarError::UnknownIndex(2))
        );
    }

    #[test]
    fn stacked_enumeration_lists_both_attachment_orders() {
        let both = enumerate_stacked(&student_cambridge()).unwrap();
        let rendered: Vec<String> = both.iter().map(write_brackets).collect();
        assert_eq!(
            rendered,
            vec![
                "(N2 (D2 (D1 (D0 the))) (N1 (N1 (Adj2 (Adj1 (Adj0 long-haired))) \
                 (N1 (N0 student))) (P2 (P1 (P0 from) (N2 (N1 (N0 Cambridge)))))))",
                "(N2 (D2 (D1 (D0 the))) (N1 (Adj2 (Adj1 (Adj0 long-haired))) \
                 (N1 (N1 (N0 student)) (P2 (P1 (P0 from) (N2 (N1 (N0 Cambridge))))))))",
            ]
        );
    }

    #[test]
    fn stacked_enumeration_is_a_product_over_heads() {
        // Both nouns carry one modifier on each side, so the sentence
        // licenses 2 x 2 stacked trees.
        let tokens = vec![
            token(1, "the", "D"),
            token(2, "old", "Adj"),
            token(3, "student", "N"),
            token(4, "from", "P"),
            token(5, "Cambridge", "N"),
            token(6, "met", "V"),
            token(7, "a", "D"),
            token(8, "young", "Adj"),
            token(9, "teacher", "N"),
            token(10, "from", "P"),
            token(11, "Oxford", "N"),
        ];
        let arcs = vec![
            Arc::new(3, 1, DepType::Specifier),
            Arc::new(3, 2, DepType::Modifier),
            Arc::new(6, 3, DepType::Complement),
            Arc::new(3, 4, DepType::Modifier),
            Arc::new(4, 5, DepType::Complement),
            Arc::new(9, 7, DepType::Specifier),
            Arc::new(9, 8, DepType::Modifier),
            Arc::new(6, 9, DepType::Complement),
            Arc::new(9, 10, DepType::Modifier),
            Arc::new(10, 11, DepType::Complement),
        ];
        let tree = DependencyTree::new(tokens, arcs).unwrap();
        let all = enumerate_stacked(&tree).unwrap();
        assert_eq!(all.len(), 4);
        // Every tree reads out the same sentence.
        for stacked in &all {
            assert_eq!(
                stacked.root.yield_text(),
                "the old student from Cambridge met a young teacher from Oxford"
            );
        }
        // Enumeration runs the lower head's orders slowest, each head's
        // orders lexicographically, so the four trees land in a fixed order.
        let expected: Vec<XBarTree> = [
            (vec![2, 4], vec![8, 10]),
            (vec![2, 4], vec![10, 8]),
            (vec![4, 2], vec![8, 10]),
            (vec![4, 2], vec![10, 8]),
        ]
        .into_iter()
        .map(|(student_order, teacher_order)| {
            let choices = BTreeMap::from([
                (3, Interleaving::new(student_order)),
                (9, Interleaving::new(teacher_order)),
            ]);
            to_stacked_xbar(&tree, &choices).unwrap()
        })
        .collect();
        assert_eq!(all, expected);
    }

    #[test]
    fn explicit_choices_are_validated() {
        let tree = student_cambridge();
        let bad = BTreeMap::from([(3, Interleaving::new(vec![2, 2]))]);
        assert_eq!(
            to_stacked_xbar(&tree, &bad),
            Err(XBarError::InvalidInterleaving { head: 3 })
        );
        let unknown = BTreeMap::from([(9, Interleaving::new(Vec::new()))]);
        assert_eq!(
            to_stacked_xbar(&tree, &unknown),
            Err(XBarError::UnknownIndex(9))
        );
        // Head 3 has modifiers on both sides, so omitting it is an error...
        assert_eq!(
            to_stacked_xbar(&tree, &BTreeMap::new()),
            Err(XBarError::InvalidInterleaving { head: 3 })
        );
        // ...while either licensed order is accepted.
        for order in [vec![2, 4], vec![4, 2]] {
            let choices = BTreeMap::from([(3, Interleaving::new(order))]);
            assert!(to_stacked_xbar(&tree, &choices).is_ok());
        }
    }

    #[test]
    fn bar1_spans_collects_yields_by_category() {
        let both = enumerate_stacked(&student_cambridge()).unwrap();
        let mut spans = std::collections::BTreeSet::new();
        for stacked in &both {
            spans.extend(bar1_spans(stacked, &cat("N")));
        }
        let expected: std::collections::BTreeSet<String> = [
            "student",
            "long-haired student",
            "student from Cambridge",
            "long-haired student from Cambridge",
            "Cambridge",
        ]
        .into_iter()
        .map(str::to_string)
        .collect();
        assert_eq!(spans, expected);
    }
}
