//! Deterministic fixture sentences for the benchmarks. Each shape stresses
//! one code path and scales with a size parameter, so timings stay
//! comparable across runs without a random corpus.

use barstack::{Arc, Category, DepType, DependencyTree, Token, write_treebank};

fn token(index: usize, form: String, category: &str) -> Token {
    Token::new(index, form, Category::new(category).expect("static label"))
}

/// A right-branching complement chain of `len` tokens: token 1 is the root
/// and every later token is the complement of its predecessor. Both
/// constituency forms nest `len` levels deep, and the stacked family has
/// exactly one member, so this isolates raw projection cost.
pub fn complement_chain(len: usize) -> DependencyTree {
    assert!(len >= 1, "a sentence has at least one token");
    let tokens = (1..=len).map(|i| token(i, format!("w{i}"), "N")).collect();
    let arcs = (2..=len).map(|i| Arc::new(i - 1, i, DepType::Complement));
    DependencyTree::new(tokens, arcs).expect("chain arcs form a tree")
}

/// One noun head with `left` single-token modifiers before it and `right`
/// after it. The stacked family has C(left + right, left) members, so this
/// shape stresses enumeration and the analyses built on top of it.
pub fn modifier_spine(left: usize, right: usize) -> DependencyTree {
    let head = left + 1;
    let mut tokens = Vec::new();
    let mut arcs = Vec::new();
    for i in 1..=left {
        tokens.push(token(i, format!("l{i}"), "Adj"));
        arcs.push(Arc::new(head, i, DepType::Modifier));
    }
    tokens.push(token(head, "head".to_string(), "N"));
    for i in 1..=right {
        tokens.push(token(head + i, format!("r{i}"), "Adv"));
        arcs.push(Arc::new(head, head + i, DepType::Modifier));
    }
    DependencyTree::new(tokens, arcs).expect("spine arcs form a tree")
}

/// A multi-sentence treebank text alternating the two shapes at varied
/// sizes, for the parsing benchmark.
pub fn mixed_treebank(sentences: usize) -> String {
    let trees: Vec<DependencyTree> = (0..sentences)
        .map(|i| {
            if i % 2 == 0 {
                complement_chain(2 + i % 11)
            } else {
                modifier_spine(i % 4, i % 3)
            }
        })
        .collect();
    write_treebank(&trees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use barstack::{enumerate_stacked, read_treebank};

    #[test]
    fn chain_has_a_single_deep_reading() {
        let tree = complement_chain(8);
        assert!(tree.is_projective());
        assert_eq!(enumerate_stacked(&tree).unwrap().len(), 1);
    }

    #[test]
    fn spine_family_size_is_the_binomial() {
        let tree = modifier_spine(3, 2);
        assert_eq!(enumerate_stacked(&tree).unwrap().len(), 10);
    }

    #[test]
    fn mixed_treebank_parses_back() {
        let text = mixed_treebank(20);
        assert_eq!(read_treebank(text.as_bytes()).unwrap().len(), 20);
    }
}
