//! Typed dependency trees: tokens, arcs, constituents, and the contiguity
//! (projectivity) check that the constituency conversions rely on.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A syntactic category label such as `N`, `V`, or `Adj`.
///
/// Labels are an open set of case-sensitive symbols. They may not be empty
/// or contain whitespace or parentheses, since they are embedded verbatim in
/// bracket notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Category(String);

impl Category {
    pub fn new(label: impl Into<String>) -> Result<Self, TreeError> {
        let label = label.into();
        if label.is_empty() {
            return Err(TreeError::EmptyCategory);
        }
        if label
            .chars()
            .any(|c| c.is_whitespace() || c == '(' || c == ')')
        {
            return Err(TreeError::InvalidCategory(label));
        }
        Ok(Category(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Category {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::new(s)
    }
}

/// The three kinds of dependent the conversions distinguish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DepType {
    /// Subcategorized argument; attaches under the innermost bar-1 node.
    Complement,
    /// Optional, stackable adjunct; consumes one bar-1 node of its own.
    Modifier,
    /// Determiner-like dependent; at most one per head, attaches at bar-2.
    Specifier,
}

impl DepType {
    /// Short code used in the treebank ROLE column.
    pub fn code(self) -> &'static str {
        match self {
            DepType::Complement => "comp",
            DepType::Modifier => "mod",
            DepType::Specifier => "spec",
        }
    }

    /// Inverse of [`DepType::code`].
    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "comp" => Some(DepType::Complement),
            "mod" => Some(DepType::Modifier),
            "spec" => Some(DepType::Specifier),
            _ => None,
        }
    }
}

impl fmt::Display for DepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// One word of a sentence: its 1-based surface position, form, and category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub index: usize,
    pub form: String,
    pub category: Category,
}

impl Token {
    pub fn new(index: usize, form: impl Into<String>, category: Category) -> Self {
        Token {
            index,
            form: form.into(),
            category,
        }
    }
}

/// A typed link from a head to one of its dependents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub head: usize,
    pub dependent: usize,
    pub role: DepType,
}

impl Arc {
    pub fn new(head: usize, dependent: usize, role: DepType) -> Self {
        Arc {
            head,
            dependent,
            role,
        }
    }
}

/// Errors detected while assembling or querying a dependency tree.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("category label is empty")]
    EmptyCategory,
    #[error("category label `{0}` contains whitespace or parentheses")]
    InvalidCategory(String),
    #[error("token {index} has an empty form")]
    EmptyForm { index: usize },
    #[error("token {index} has a form containing a tab or newline")]
    InvalidForm { index: usize },
    #[error("token indices must run 1..=n in order: expected {expected}, found {found}")]
    NonContiguousIndices { expected: usize, found: usize },
    #[error("arc {head} -> {dependent} references a token outside the sentence")]
    DanglingArc { head: usize, dependent: usize },
    #[error("token {index} depends on itself")]
    SelfDependency { index: usize },
    #[error("token {dependent} has more than one head")]
    MultipleHeads { dependent: usize },
    #[error("dependency cycle through token {index}")]
    CycleDetected { index: usize },
    #[error("tree has no root")]
    NoRoot,
    #[error("tree has multiple roots: tokens {}", display_positions(.roots))]
    MultipleRoots { roots: Vec<usize> },
    #[error("token {head} has more than one specifier")]
    DuplicateSpecifier { head: usize },
    #[error("token index {index} is out of range")]
    UnknownIndex { index: usize },
}

pub(crate) fn display_positions(positions: &[usize]) -> String {
    let strings: Vec<String> = positions.iter().map(|p| p.to_string()).collect();
    strings.join(", ")
}

/// A word together with the surface positions of the phrase it heads: the
/// word itself plus all of its direct and indirect dependents, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constituent {
    pub head: usize,
    pub positions: Vec<usize>,
}

impl Constituent {
    /// The forms at [`Constituent::positions`], joined by single spaces.
    pub fn text(&self, tree: &DependencyTree) -> String {
        tree.text(&self.positions)
    }

    /// Whether the positions form an unbroken surface interval.
    pub fn is_interval(&self) -> bool {
        match (self.positions.first(), self.positions.last()) {
            (Some(first), Some(last)) => last - first + 1 == self.positions.len(),
            _ => true,
        }
    }
}

/// A contiguity failure: the constituent of `head` skips the listed
/// positions, so it cannot be a constituent of any phrase-structure reading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub head: usize,
    pub gap: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "constituent of token {} is missing position{} {}",
            self.head,
            if self.gap.len() == 1 { "" } else { "s" },
            display_positions(&self.gap)
        )
    }
}

/// A dependency analysis of one sentence: every token except the root has
/// exactly one typed head, and the arcs form a single tree.
///
/// Construction validates the arc set; all query methods on a built tree are
/// therefore total except for explicit index lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencyTree {
    tokens: Vec<Token>,
    /// `heads[i]` is the head and role of token `i`; slot 0 is unused.
    heads: Vec<Option<(usize, DepType)>>,
    /// `children[i]` lists the dependents of token `i` in surface order.
    children: Vec<Vec<usize>>,
    root: usize,
}

impl DependencyTree {
    /// Assemble a tree from tokens (which must be numbered 1..=n in order)
    /// and typed arcs, rejecting anything that is not a single rooted tree
    /// with at most one specifier per head.
    pub fn new(tokens: Vec<Token>, arcs: impl IntoIterator<Item = Arc>) -> Result<Self, TreeError> {
        let n = tokens.len();
        for (slot, token) in tokens.iter().enumerate() {
            if token.index != slot + 1 {
                return Err(TreeError::NonContiguousIndices {
                    expected: slot + 1,
                    found: token.index,
                });
            }
            if token.form.is_empty() {
                return Err(TreeError::EmptyForm { index: token.index });
            }
            if token.form.contains(['\t', '\n', '\r']) {
                return Err(TreeError::InvalidForm { index: token.index });
            }
        }

        let mut heads: Vec<Option<(usize, DepType)>> = vec![None; n + 1];
        for arc in arcs {
            if arc.head == 0 || arc.head > n || arc.dependent == 0 || arc.dependent > n {
                return Err(TreeError::DanglingArc {
                    head: arc.head,
                    dependent: arc.dependent,
                });
            }
            if arc.head == arc.dependent {
                return Err(TreeError::SelfDependency { index: arc.head });
            }
            if heads[arc.dependent].is_some() {
                return Err(TreeError::MultipleHeads {
                    dependent: arc.dependent,
                });
            }
            heads[arc.dependent] = Some((arc.head, arc.role));
        }

        if let Some(index) = find_cycle(&heads) {
            return Err(TreeError::CycleDetected { index });
        }

        let roots: Vec<usize> = (1..=n).filter(|&i| heads[i].is_none()).collect();
        let root = match roots.as_slice() {
            [] => return Err(TreeError::NoRoot),
            [only] => *only,
            _ => return Err(TreeError::MultipleRoots { roots }),
        };

        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        let mut specifier_seen = vec![false; n + 1];
        for dependent in 1..=n {
            if let Some((head, role)) = heads[dependent] {
                // Ascending iteration keeps each child list in surface order.
                children[head].push(dependent);
                if role == DepType::Specifier {
                    if specifier_seen[head] {
                        return Err(TreeError::DuplicateSpecifier { head });
                    }
                    specifier_seen[head] = true;
                }
            }
        }

        Ok(DependencyTree {
            tokens,
            heads,
            children,
            root,
        })
    }

    /// Number of tokens in the sentence.
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    /// Always false: a valid tree has at least its root token. Present so
    /// `len` follows the usual container conventions.
    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn token(&self, index: usize) -> Option<&Token> {
        index.checked_sub(1).and_then(|i| self.tokens.get(i))
    }

    /// The one token with no head.
    pub fn root(&self) -> usize {
        self.root
    }

    /// The head and role of `index`, or `None` for the root (and for
    /// out-of-range indices).
    pub fn head_of(&self, index: usize) -> Option<(usize, DepType)> {
        self.heads.get(index).copied().flatten()
    }

    /// The arcs of the tree, ordered by dependent position.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (1..=self.len()).filter_map(|dependent| {
            self.head_of(dependent)
                .map(|(head, role)| Arc::new(head, dependent, role))
        })
    }

    /// Direct dependents of `index` in surface order.
    pub fn dependents_of(&self, index: usize) -> &[usize] {
        self.children.get(index).map_or(&[], Vec::as_slice)
    }

    fn dependents_with_role(&self, index: usize, role: DepType) -> Vec<usize> {
        self.dependents_of(index)
            .iter()
            .copied()
            .filter(|&d| self.head_of(d).is_some_and(|(_, r)| r == role))
            .collect()
    }

    /// Complement dependents of `index` in surface order.
    pub fn complements_of(&self, index: usize) -> Vec<usize> {
        self.dependents_with_role(index, DepType::Complement)
    }

    /// Modifier dependents of `index` in surface order.
    pub fn modifiers_of(&self, index: usize) -> Vec<usize> {
        self.dependents_with_role(index, DepType::Modifier)
    }

    /// The specifier of `index`, if it has one.
    pub fn specifier_of(&self, index: usize) -> Option<usize> {
        self.dependents_with_role(index, DepType::Specifier)
            .into_iter()
            .next()
    }

    /// The phrase headed by `index`: the token itself plus everything
    /// reachable through dependent arcs.
    pub fn constituent(&self, index: usize) -> Result<Constituent, TreeError> {
        if self.token(index).is_none() {
            return Err(TreeError::UnknownIndex { index });
        }
        let mut positions = Vec::new();
        let mut stack = vec![index];
        while let Some(current) = stack.pop() {
            positions.push(current);
            stack.extend_from_slice(self.dependents_of(current));
        }
        positions.sort_unstable();
        Ok(Constituent {
            head: index,
            positions,
        })
    }

    /// Every constituent of the sentence, ordered by head position.
    pub fn constituents(&self) -> Vec<Constituent> {
        (1..=self.len())
            .map(|i| self.constituent(i).expect("indices 1..=n are all valid"))
            .collect()
    }

    /// All contiguity failures, ordered by head position. An empty result
    /// means the tree is projective and convertible to constituency form.
    pub fn contiguity_violations(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        for constituent in self.constituents() {
            if constituent.is_interval() {
                continue;
            }
            let first = constituent.positions[0];
            let last = *constituent.positions.last().expect("nonempty");
            let gap: Vec<usize> = (first..=last)
                .filter(|p| constituent.positions.binary_search(p).is_err())
                .collect();
            violations.push(Violation {
                head: constituent.head,
                gap,
            });
        }
        violations
    }

    /// Whether every constituent occupies an unbroken surface interval.
    pub fn is_projective(&self) -> bool {
        self.contiguity_violations().is_empty()
    }

    /// The forms at the given positions, joined by single spaces.
    pub fn text(&self, positions: &[usize]) -> String {
        let forms: Vec<&str> = positions
            .iter()
            .filter_map(|&p| self.token(p))
            .map(|t| t.form.as_str())
            .collect();
        forms.join(" ")
    }
}

/// Follow head links upward from every token; a link back into the chain
/// currently being walked is a cycle, and its meeting point the witness.
fn find_cycle(heads: &[Option<(usize, DepType)>]) -> Option<usize> {
    const UNSEEN: u8 = 0;
    const WALKING: u8 = 1;
    const CLEARED: u8 = 2;
    let mut state = vec![UNSEEN; heads.len()];
    for start in 1..heads.len() {
        if state[start] != UNSEEN {
            continue;
        }
        let mut walked = Vec::new();
        let mut current = start;
        loop {
            match state[current] {
                WALKING => return Some(current),
                CLEARED => break,
                _ => {
                    state[current] = WALKING;
                    walked.push(current);
                    match heads[current] {
                        Some((head, _)) => current = head,
                        None => break,
                    }
                }
            }
        }
        for token in walked {
            state[token] = CLEARED;
        }
    }
    None
}
