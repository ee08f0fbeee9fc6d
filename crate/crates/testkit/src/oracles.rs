//! Brute-force recomputations of the quantities the library derives.

use std::collections::BTreeSet;

use barstack::{DepType, DependencyTree};
use itertools::Itertools;

/// All stacking orders for the modifiers of `head`, the slow way: filter
/// every permutation by the requirement that each side, read in layer
/// order, works outward from the head. Sorted lexicographically.
pub fn oracle_interleavings(tree: &DependencyTree, head: usize) -> Vec<Vec<usize>> {
    let modifiers = tree.modifiers_of(head);
    let mut orders: Vec<Vec<usize>> = modifiers
        .iter()
        .copied()
        .permutations(modifiers.len())
        .filter(|order| sides_work_outward(order, head))
        .collect();
    orders.sort();
    orders
}

fn sides_work_outward(order: &[usize], head: usize) -> bool {
    let left: Vec<usize> = order.iter().copied().filter(|&m| m < head).collect();
    let right: Vec<usize> = order.iter().copied().filter(|&m| m > head).collect();
    left.windows(2).all(|w| w[0] > w[1]) && right.windows(2).all(|w| w[0] < w[1])
}

/// Binomial coefficient, wide enough that per-sentence products for small
/// corpora cannot overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}

fn side_counts(tree: &DependencyTree, head: usize) -> (u64, u64) {
    let modifiers = tree.modifiers_of(head);
    let left = modifiers.iter().filter(|&&m| m < head).count() as u64;
    let right = modifiers.len() as u64 - left;
    (left, right)
}

/// How many stacked trees the sentence licenses, predicted from per-head
/// modifier counts alone: the product over heads of C(m+n, m).
pub fn predicted_stacked_count(tree: &DependencyTree) -> u128 {
    (1..=tree.len())
        .map(|head| {
            let (m, n) = side_counts(tree, head);
            binomial(m + n, m)
        })
        .product()
}

/// How many antecedent spans a head with `m` left and `n` right modifiers
/// offers when all spans spell differently: (m+1)(n+1).
pub fn predicted_antecedent_count(tree: &DependencyTree, head: usize) -> usize {
    let (m, n) = side_counts(tree, head);
    ((m + 1) * (n + 1)) as usize
}

/// A constituent's positions recomputed by fixpoint expansion over the head
/// relation, rather than by walking child lists.
pub fn oracle_constituent(tree: &DependencyTree, head: usize) -> Vec<usize> {
    let mut members = BTreeSet::from([head]);
    loop {
        let before = members.len();
        for token in 1..=tree.len() {
            if let Some((h, _)) = tree.head_of(token) {
                if members.contains(&h) {
                    members.insert(token);
                }
            }
        }
        if members.len() == before {
            return members.into_iter().collect();
        }
    }
}

/// Total modifier arcs in the tree; the stacked form grows one extra bar-1
/// node for each.
pub fn modifier_count(tree: &DependencyTree) -> usize {
    tree.arcs().filter(|a| a.role == DepType::Modifier).count()
}
