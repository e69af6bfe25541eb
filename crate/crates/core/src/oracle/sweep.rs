//! Exhaustive sweeps of the bounds and exactness claims over all graphic
//! sequences up to a given length.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hajos::{check_bounds, BoundCheck, BoundStatus};
use crate::limits::Limits;
use crate::sequence::{
    is_graphic, largecl_check, omega_of_sequence, rao_omega_at_least, DegreeSequence, Method,
    SequenceStats,
};

use super::{
    chi_of_sequence, enumerate_bounded_sequences, enumerate_graphic_sequences, h1_of_sequence,
    realization_exists, sequence_table, SequenceExtremes,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Hajos,
    Sf,
    Reed,
    Hajos2,
    RaoVsOracle,
    EgVsOracle,
    LargeclVsRao,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Hajos,
        Check::Sf,
        Check::Reed,
        Check::Hajos2,
        Check::RaoVsOracle,
        Check::EgVsOracle,
        Check::LargeclVsRao,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Hajos => "hajos",
            Check::Sf => "sf",
            Check::Reed => "reed",
            Check::Hajos2 => "hajos2",
            Check::RaoVsOracle => "rao_vs_oracle",
            Check::EgVsOracle => "eg_vs_oracle",
            Check::LargeclVsRao => "largecl_vs_rao",
        }
    }

    fn needs_chi(self) -> bool {
        matches!(self, Check::Hajos | Check::Sf | Check::Reed | Check::Hajos2)
    }

    fn cap(self, limits: &Limits) -> usize {
        match self {
            Check::Hajos | Check::Sf | Check::Reed | Check::Hajos2 => limits.sequence_chi,
            Check::RaoVsOracle => limits.realizations,
            Check::EgVsOracle | Check::LargeclVsRao => limits.sequence_omega,
        }
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Argument(format!("unknown check {s:?}")))
    }
}

/// Comma-separated check names, or `all`.
pub fn parse_checks(text: &str) -> Result<BTreeSet<Check>> {
    if text.trim() == "all" {
        return Ok(Check::ALL.into_iter().collect());
    }
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub sequence: Vec<u32>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub evaluated: usize,
    pub violations: Vec<Violation>,
    pub tight_cases: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub sequences_checked: usize,
    pub checks: BTreeMap<Check, CheckReport>,
    pub runtime_ms: u128,
}

impl SweepReport {
    pub fn total_violations(&self) -> usize {
        self.checks.values().map(|c| c.violations.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_violations() == 0
    }

    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "sweep up to n = {}: {} graphic sequences, {} ms\n",
            self.n_max, self.sequences_checked, self.runtime_ms
        );
        out.push_str(&format!(
            "{:<16}{:>10}{:>12}{:>8}\n",
            "check", "evaluated", "violations", "tight"
        ));
        for (check, r) in &self.checks {
            out.push_str(&format!(
                "{:<16}{:>10}{:>12}{:>8}\n",
                check.name(),
                r.evaluated,
                r.violations.len(),
                r.tight_cases.len()
            ));
        }
        out
    }
}

enum Outcome {
    Skipped,
    Passed { tight: bool },
    Failed(String),
}

fn from_bounds(named: &[(&str, &BoundCheck)]) -> Outcome {
    let failed: Vec<String> = named
        .iter()
        .filter(|(_, c)| c.is_violated())
        .map(|(n, c)| format!("{n} violated (slack {})", c.slack.expect("evaluated")))
        .collect();
    if !failed.is_empty() {
        return Outcome::Failed(failed.join("; "));
    }
    if let Some((n, c)) = named
        .iter()
        .find(|(_, c)| c.status == BoundStatus::NotEvaluated)
    {
        return Outcome::Failed(format!("{n} not evaluated, missing {:?}", c.missing));
    }
    Outcome::Passed {
        tight: named.iter().any(|(_, c)| c.status == BoundStatus::Tight),
    }
}

/// Oracle values available for one sequence.
#[derive(Default)]
struct Known<'a> {
    row: Option<&'a SequenceExtremes>,
    chi_h1: Option<(usize, usize)>,
}

fn evaluate(check: Check, seq: &DegreeSequence, known: Known, limits: &Limits) -> Result<Outcome> {
    let key = seq.degrees();
    let row = || {
        known.row.copied().ok_or_else(|| {
            Error::Internal(format!(
                "graphic sequence {seq} has no realization in the table"
            ))
        })
    };
    let stats = || -> Result<SequenceStats> {
        let mut s = SequenceStats::new(seq.max_degree() as usize)
            .with_omega(omega_of_sequence(seq)?, Method::RaoExact);
        if let Some((chi, h1)) = known.chi_h1 {
            s = s
                .with_chi(chi, Method::OracleEnumeration)
                .with_h1(h1, Method::OracleEnumeration);
        }
        Ok(s)
    };
    Ok(match check {
        Check::Hajos => from_bounds(&[("hajos", &check_bounds(&stats()?).hajos)]),
        Check::Sf => from_bounds(&[("sf", &check_bounds(&stats()?).sf)]),
        Check::Reed => from_bounds(&[("reed", &check_bounds(&stats()?).reed)]),
        Check::Hajos2 => {
            let b = check_bounds(&stats()?);
            from_bounds(&[("hajos2_a", &b.hajos2_a), ("hajos2_b", &b.hajos2_b)])
        }
        Check::RaoVsOracle => {
            let omega = row()?.omega;
            let bad: Vec<usize> = (1..=key.len())
                .map(|k| Ok((k, rao_omega_at_least(seq, k)? != (omega >= k))))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|&(_, differs)| differs)
                .map(|(k, _)| k)
                .collect();
            if bad.is_empty() {
                Outcome::Passed { tight: false }
            } else {
                Outcome::Failed(format!(
                    "Rao test disagrees with omega = {omega} at k = {bad:?}"
                ))
            }
        }
        Check::EgVsOracle => {
            let eg = is_graphic(seq);
            let exists = realization_exists(seq, limits)?;
            if eg == exists {
                Outcome::Passed { tight: false }
            } else {
                Outcome::Failed(format!(
                    "Erdős–Gallai says {eg}, exhaustive search says {exists}"
                ))
            }
        }
        Check::LargeclVsRao => {
            let n = key.len();
            let k = n.div_ceil(2);
            if n % 2 == 0 || (seq.min_degree() as usize) + 1 < k {
                Outcome::Skipped
            } else {
                let lc = largecl_check(seq, k)?;
                let rao = rao_omega_at_least(seq, k)?;
                if lc == rao {
                    Outcome::Passed { tight: false }
                } else {
                    Outcome::Failed(format!(
                        "large-clique test says {lc}, Rao says {rao} (k = {k})"
                    ))
                }
            }
        }
    })
}

/// Runs each selected check on every graphic sequence of length `1..=n_max`
/// (every bounded sequence for `eg_vs_oracle`). All caps are validated
/// before any work starts.
///
/// χ(D) and h1(D) come from labelled realization enumeration; the
/// `rao_vs_oracle` clique numbers come from one graph per isomorphism class.
pub fn sweep(n_max: usize, checks: &BTreeSet<Check>, limits: &Limits) -> Result<SweepReport> {
    if checks.is_empty() {
        return Err(Error::Argument("no checks selected".to_string()));
    }
    for &c in checks {
        let cap = c.cap(limits);
        if n_max > cap {
            return Err(Error::Resource {
                what: match c {
                    Check::RaoVsOracle => "rao_vs_oracle sweep",
                    Check::EgVsOracle | Check::LargeclVsRao => "omega-level sweep",
                    _ => "chi-level sweep",
                },
                n: n_max,
                limit: cap,
            });
        }
    }
    let start = Instant::now();
    let mut report = SweepReport {
        n_max,
        sequences_checked: 0,
        checks: checks
            .iter()
            .map(|&c| (c, CheckReport::default()))
            .collect(),
        runtime_ms: 0,
    };
    let need_chi = checks.iter().any(|c| c.needs_chi());
    for n in 1..=n_max {
        let graphic = enumerate_graphic_sequences(n)?;
        report.sequences_checked += graphic.len();
        let table = if checks.contains(&Check::RaoVsOracle) {
            Some(sequence_table(n, false, limits)?)
        } else {
            None
        };
        let chi_h1: Vec<(usize, usize)> = if need_chi {
            graphic
                .par_iter()
                .map(|s| Ok((chi_of_sequence(s, limits)?, h1_of_sequence(s, limits)?)))
                .collect::<Result<_>>()?
        } else {
            Vec::new()
        };
        let bounded = if checks.contains(&Check::EgVsOracle) {
            enumerate_bounded_sequences(n)?
        } else {
            Vec::new()
        };
        for &c in checks {
            let seqs = if c == Check::EgVsOracle {
                &bounded
            } else {
                &graphic
            };
            let outcomes: Vec<Outcome> = seqs
                .par_iter()
                .enumerate()
                .map(|(i, s)| {
                    let known = if c == Check::EgVsOracle {
                        Known::default()
                    } else {
                        Known {
                            row: table.as_ref().and_then(|t| t.get(s.degrees())),
                            chi_h1: chi_h1.get(i).copied(),
                        }
                    };
                    evaluate(c, s, known, limits)
                })
                .collect::<Result<_>>()?;
            let r = report.checks.get_mut(&c).expect("check registered");
            for (s, o) in seqs.iter().zip(outcomes) {
                match o {
                    Outcome::Skipped => {}
                    Outcome::Passed { tight } => {
                        r.evaluated += 1;
                        if tight {
                            r.tight_cases.push(s.degrees().to_vec());
                        }
                    }
                    Outcome::Failed(detail) => {
                        r.evaluated += 1;
                        r.violations.push(Violation {
                            sequence: s.degrees().to_vec(),
                            detail,
                        });
                    }
                }
            }
        }
    }
    report.runtime_ms = start.elapsed().as_millis();
    Ok(report)
}
