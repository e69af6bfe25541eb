use crate::error::{Error, Result};

/// Size caps for the exhaustive layers.
///
/// All searches behind these caps are exponential; exceeding a cap is always
/// reported as [`Error::Resource`], never silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Labeled realization enumeration.
    pub realizations: usize,
    /// Sequence-level chromatic number and h1 (max over realizations).
    pub sequence_chi: usize,
    /// Sequence-level checks that only need clique numbers.
    pub sequence_omega: usize,
    /// Exact chromatic number of a single graph.
    pub graph_chi: usize,
    /// Star-subdivided clique search on a single graph.
    pub h1: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            realizations: 8,
            sequence_chi: 7,
            sequence_omega: 9,
            graph_chi: 12,
            h1: 10,
        }
    }
}

impl Limits {
    /// Effectively no caps; for callers that have acknowledged the cost.
    pub fn unbounded() -> Self {
        Limits {
            realizations: usize::MAX,
            sequence_chi: usize::MAX,
            sequence_omega: usize::MAX,
            graph_chi: usize::MAX,
            h1: usize::MAX,
        }
    }

    pub(crate) fn check(what: &'static str, n: usize, limit: usize) -> Result<()> {
        if n > limit {
            Err(Error::Resource { what, n, limit })
        } else {
            Ok(())
        }
    }
}
