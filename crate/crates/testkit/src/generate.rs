//! Seeded random dependency trees.
//!
//! [`random_projective_tree`] builds trees by recursively splitting a
//! surface interval, so contiguity holds by construction, and assigns roles
//! ordered outward on each side of every head — complements nearest, then
//! modifiers, then at most one specifier outermost. That ordering is what
//! the stacked conversion's layer geometry assumes (and what every natural
//! example satisfies); see the interval invariant checks in `shapes`.
//!
//! [`random_tree`] attaches heads arbitrarily instead, yielding mostly
//! non-projective trees for exercising the model and contiguity checker.

use barstack::{Arc, Category, DepType, DependencyTree, Token};
use rand::Rng;
use rand::SeedableRng;
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

/// A fixed-algorithm RNG so test corpora are reproducible from a seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const CATEGORIES: &[&str] = &["N", "V", "Adj", "Adv", "P", "D"];

fn random_tokens<R: Rng>(rng: &mut R, n: usize) -> Vec<Token> {
    (1..=n)
        .map(|i| {
            let label = CATEGORIES[rng.random_range(0..CATEGORIES.len())];
            Token::new(i, format!("w{i}"), Category::new(label).unwrap())
        })
        .collect()
}

/// Random projective tree of 1..=`max_tokens` tokens with at most
/// `max_arity` dependents per head (`max_arity` >= 2 so both sides of a
/// head can be populated). All three roles occur; forms are distinct.
pub fn random_projective_tree<R: Rng>(
    rng: &mut R,
    max_tokens: usize,
    max_arity: usize,
) -> DependencyTree {
    assert!(max_arity >= 2, "need room for a dependent on each side");
    let n = rng.random_range(1..=max_tokens.max(1));
    let mut arcs = Vec::new();
    grow_span(rng, 1, n, max_arity, &mut arcs);
    DependencyTree::new(random_tokens(rng, n), arcs)
        .expect("interval splitting produces a valid tree")
}

/// Pick a head for the span `lo..=hi`, partition the rest into child spans,
/// and recurse. Returns the picked head so the caller can attach its arc.
fn grow_span<R: Rng>(
    rng: &mut R,
    lo: usize,
    hi: usize,
    max_arity: usize,
    arcs: &mut Vec<Arc>,
) -> usize {
    let head = rng.random_range(lo..=hi);
    let left_len = head - lo;
    let right_len = hi - head;

    // How many direct dependents on each side, within the arity budget.
    let left_count = if left_len == 0 {
        0
    } else {
        let cap = max_arity - usize::from(right_len > 0);
        rng.random_range(1..=left_len.min(cap))
    };
    let right_count = if right_len == 0 {
        0
    } else {
        rng.random_range(1..=right_len.min(max_arity - left_count))
    };

    // Child spans on each side, nearest to the head first.
    let mut left_spans = split_side(rng, lo, head - 1, left_count);
    left_spans.reverse();
    let right_spans = split_side(rng, head + 1, hi, right_count);

    // Roles run outward on each side: complements, then modifiers, then at
    // most one specifier over both sides, outermost on its side.
    let left_roles = outward_roles(rng, left_count, true);
    let spec_taken = left_roles.contains(&DepType::Specifier);
    let right_roles = outward_roles(rng, right_count, !spec_taken);

    for (spans, roles) in [(left_spans, left_roles), (right_spans, right_roles)] {
        for (&(span_lo, span_hi), &role) in spans.iter().zip(&roles) {
            let dependent = grow_span(rng, span_lo, span_hi, max_arity, arcs);
            arcs.push(Arc::new(head, dependent, role));
        }
    }
    head
}

/// Partition `lo..=hi` into `count` nonempty contiguous spans, in position
/// order.
fn split_side<R: Rng>(rng: &mut R, lo: usize, hi: usize, count: usize) -> Vec<(usize, usize)> {
    if count == 0 {
        return Vec::new();
    }
    // A cut after position p splits the interval; choose count-1 distinct
    // cuts from the hi-lo available ones.
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, hi - lo, count - 1)
        .into_iter()
        .collect();
    cuts.sort_unstable();
    let mut spans = Vec::with_capacity(count);
    let mut start = lo;
    for cut in cuts {
        spans.push((start, lo + cut));
        start = lo + cut + 1;
    }
    spans.push((start, hi));
    spans
}

/// Roles for one side's spans, nearest-first: a run of complements, then
/// modifiers, with the outermost slot sometimes a specifier.
fn outward_roles<R: Rng>(rng: &mut R, count: usize, allow_specifier: bool) -> Vec<DepType> {
    if count == 0 {
        return Vec::new();
    }
    let complements = rng.random_range(0..=count);
    let mut roles: Vec<DepType> = (0..count)
        .map(|i| {
            if i < complements {
                DepType::Complement
            } else {
                DepType::Modifier
            }
        })
        .collect();
    if allow_specifier && rng.random_bool(0.3) {
        *roles.last_mut().unwrap() = DepType::Specifier;
    }
    roles
}

/// Random single-rooted tree with arbitrary attachment, usually
/// non-projective. Respects the one-specifier-per-head cap but nothing
/// else about role placement.
pub fn random_tree<R: Rng>(rng: &mut R, max_tokens: usize) -> DependencyTree {
    let n = rng.random_range(1..=max_tokens.max(1));
    let mut insertion: Vec<usize> = (1..=n).collect();
    insertion.shuffle(rng);
    let mut specifier_used = vec![false; n + 1];
    let mut arcs = Vec::new();
    for slot in 1..n {
        let dependent = insertion[slot];
        let head = insertion[rng.random_range(0..slot)];
        let role = match rng.random_range(0..4) {
            0 if !specifier_used[head] => {
                specifier_used[head] = true;
                DepType::Specifier
            }
            1 => DepType::Complement,
            _ => DepType::Modifier,
        };
        arcs.push(Arc::new(head, dependent, role));
    }
    DependencyTree::new(random_tokens(rng, n), arcs)
        .expect("attaching to earlier insertions cannot cycle")
}
