//! Degree sequences of simple graphs: graphicality and clique-forcing
//! tests, constructive realizations, exact invariants at desk scale, and
//! certified star-subdivided clique witnesses.
//!
//! Vertices are `0..n` throughout. Builders that work on a sequence bind
//! vertex `i` to the `i`-th largest degree.

pub mod analysis;
pub mod canon;
pub mod error;
pub mod format;
pub mod graph;
pub mod hajos;
pub mod limits;
pub mod oracle;
pub mod realize;
pub mod sequence;

pub use analysis::{
    chromatic_number, clique_number, find_join_decomposition, h1_of_graph, is_basic,
    is_chi_critical, is_hypomatchable, join_graphs, maximum_matching, verify_witness,
    StarSubdivisionWitness,
};
pub use error::{BipartiteCondition, Error, Result};
pub use graph::{SimpleGraph, MAX_VERTICES};
pub use limits::Limits;
pub use sequence::{
    classify_basic_profile, is_graphic, largecl_check, omega_of_sequence, parse_sequence,
    rao_omega_at_least, yinli_sufficient, BasicProfile, DegreeSequence, Method, ProfileVerdict,
    SequenceStats,
};
