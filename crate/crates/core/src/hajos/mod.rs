//! Constructive witnesses for `χ(G) <= h1(D(G))` and the bound checks.

mod bounds;
mod construction;
mod pipeline;

pub use bounds::{check_bounds, BoundCheck, BoundReport, BoundStatus, Rational};
pub use construction::{
    build_basic_witness, plan_construction, BasicWitness, CaseTag, ConstructionPlan,
};
pub use pipeline::{join_witness_realizations, witness_pipeline, PipelineResult};
