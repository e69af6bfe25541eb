//! Exact invariants of single graphs.

mod clique;
mod coloring;
mod matching;
mod structure;
mod witness;

pub use clique::{clique_number, max_clique};
pub use coloring::{chromatic_number, optimal_coloring};
pub use matching::{has_perfect_matching, maximum_matching};
pub use structure::{
    basic_kind, find_join_decomposition, is_basic, is_chi_critical, is_hypomatchable, join_graphs,
    BasicKind, JoinDecomposition, JoinFactor,
};
pub use witness::{h1_of_graph, verify_witness, PairPath, StarSubdivisionWitness, WitnessDefect};
