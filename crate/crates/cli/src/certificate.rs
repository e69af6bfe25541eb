use serde::Serialize;

use degseq::analysis::{JoinDecomposition, StarSubdivisionWitness};
use degseq::hajos::{BoundReport, ConstructionPlan};
use degseq::sequence::Stat;
use degseq::BasicProfile;

pub const SCHEMA: u32 = 1;

/// Top-level JSON document emitted by `check` and `hajos`.
#[derive(Debug, Serialize)]
pub struct Certificate {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub timestamp: String,
    pub input: Input,
    pub verdicts: Verdicts,
    pub artifacts: Artifacts,
}

impl Certificate {
    pub fn new(input: Input) -> Self {
        Certificate {
            schema: SCHEMA,
            tool: "degseq",
            version: env!("CARGO_PKG_VERSION"),
            timestamp: chrono::Utc::now().to_rfc3339(),
            input,
            verdicts: Verdicts::default(),
            artifacts: Artifacts::default(),
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Input {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

#[derive(Debug, Default, Serialize)]
pub struct Verdicts {
    pub graphic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<Stat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<BasicProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<Stat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1: Option<Stat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundReport>,
}

/// Graphs are stored as graph6 strings with 0-based vertex labels.
#[derive(Debug, Default, Serialize)]
pub struct Artifacts {
    /// A realization containing a clique of order ω(D) on vertices `0..ω`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub realization: Option<String>,
    /// Degree sequence the witness graph realizes, when it differs from the input.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<StarSubdivisionWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plan: Option<ConstructionPlan>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<JoinDecomposition>,
}
