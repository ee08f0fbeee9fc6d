//! Test support for the conversion library: seeded random tree generators,
//! brute-force oracles, structural checkers, and a bracket-notation reader.
//!
//! Everything here recomputes answers the slow, obvious way, independently
//! of the production algorithms it is used to check — oracles that shared
//! code with the code under test would prove nothing.

pub mod generate;
pub mod oracles;
pub mod reader;
pub mod shapes;

pub use generate::{random_projective_tree, random_tree, seeded_rng};
pub use oracles::{
    binomial, modifier_count, oracle_constituent, oracle_interleavings, predicted_antecedent_count,
    predicted_stacked_count,
};
pub use reader::{BracketNode, parse_brackets, skeleton};
pub use shapes::{check_flat_shape, check_leaf_order, check_stacked_shape};
