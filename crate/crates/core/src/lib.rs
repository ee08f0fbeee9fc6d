//! Dependency trees and their X-bar constituency readings.
//!
//! The model is a word-to-word dependency analysis: every token of a
//! sentence except one (the root) depends on a head, and each arc is typed
//! as complement, modifier, or specifier. A word plus all of its direct and
//! indirect dependents forms a constituent, and when every constituent
//! occupies an unbroken interval of the sentence — the contiguity, or
//! projectivity, condition — the analysis maps onto constituency trees.
//!
//! Two such mappings are implemented. The *flat* mapping ([`to_flat_xbar`])
//! gives each word a single bar-1 projection over its leaf and dependent
//! phrases, is unique, and inverts exactly ([`from_flat_xbar`]). The
//! *stacked* mapping ([`to_stacked_xbar`]) rebuilds layered structure:
//! complements attach under an innermost bar-1 node, each modifier adds one
//! bar-1 layer working outward, and a bar-2 node with the specifier tops the
//! stack. Heads with modifiers on both sides license several layer orders,
//! so one dependency tree maps to a family of stacked trees
//! ([`enumerate_stacked`]) rather than a single one.
//!
//! That one-to-many mapping is the point: the bar-1 layers it creates are
//! exactly the spans the proform *one* can stand in for
//! ([`one_antecedents`]) and the modifier scopes a sentence is ambiguous
//! between ([`scope_bracketings`]).
//!
//! Trees travel as a 5-column tab-separated treebank ([`read_treebank`]),
//! and constituency output renders as single-line bracket notation
//! ([`write_brackets`]) or an indented listing ([`render_ascii`]).

pub mod analyses;
pub mod brackets;
pub mod model;
pub mod treebank;
pub mod xbar;

pub use analyses::{AntecedentSet, ScopeBracketing, one_antecedents, scope_bracketings};
pub use brackets::{render_ascii, write_brackets};
pub use model::{Arc, Category, Constituent, DepType, DependencyTree, Token, TreeError, Violation};
pub use treebank::{
    ParseError, ParseErrorKind, TreebankRecord, read_records, read_treebank, write_record,
    write_treebank,
};
pub use xbar::{
    Interleaving, XBarError, XBarNode, XBarTree, bar1_spans, enumerate_interleavings,
    enumerate_stacked, from_flat_xbar, to_flat_xbar, to_stacked_xbar,
};
