//! Brute-force ground truth: sequence and graph enumeration and exact
//! sequence invariants by exhaustion.

mod sweep;

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::analysis::{clique_number, h1_of_graph, optimal_coloring};
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, SimpleGraph};
use crate::limits::Limits;
use crate::realize::completion::{Completion, Order};
use crate::realize::for_each_realization;
use crate::sequence::{classify_basic_profile, is_graphic, DegreeSequence, ProfileVerdict};

pub use sweep::{parse_checks, sweep, Check, CheckReport, SweepReport, Violation};

/// Longest sequences [`enumerate_graphic_sequences`] will list.
pub const SEQUENCE_LIMIT: usize = 9;
/// Longest sequences [`basic_profile_sequences`] will list.
pub const BASIC_PROFILE_LIMIT: usize = 13;
/// Largest order for [`all_graphs_up_to_iso`].
pub const GRAPH_LIMIT: usize = 8;

fn check_length(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Argument(format!("{what} needs n >= 1")));
    }
    Limits::check(what, n, limit)
}

/// Non-increasing tuples of length `n` with entries in `lo..=n-1`, in
/// ascending lexicographic order. With `prune`, prefixes that already
/// violate the Erdős–Gallai bound for every completion are cut.
fn tuples(n: usize, lo: u32, prune: bool) -> Vec<Vec<u32>> {
    fn rec(n: usize, lo: u32, prune: bool, cur: &mut Vec<u32>, sum: u64, out: &mut Vec<Vec<u32>>) {
        let t = cur.len();
        if t == n {
            out.push(cur.clone());
            return;
        }
        let hi = cur.last().copied().unwrap_or(n.saturating_sub(1) as u32);
        for d in lo..=hi {
            let s = sum + u64::from(d);
            let tt = (t + 1) as u64;
            // later entries are at most d
            let room = tt * (tt - 1) + (n as u64 - tt) * u64::from(d).min(tt);
            if prune && s > room {
                continue;
            }
            cur.push(d);
            rec(n, lo, prune, cur, s, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, lo, prune, &mut Vec::with_capacity(n), 0, &mut out);
    out.sort();
    out
}

fn graphic_with_min_degree(n: usize, lo: u32) -> Vec<DegreeSequence> {
    tuples(n, lo, true)
        .into_iter()
        .map(DegreeSequence::new)
        .filter(is_graphic)
        .collect()
}

/// Every graphic sequence of length exactly `n` (zeros allowed), in
/// ascending lexicographic order.
pub fn enumerate_graphic_sequences(n: usize) -> Result<Vec<DegreeSequence>> {
    check_length("graphic sequence enumeration", n, SEQUENCE_LIMIT)?;
    Ok(graphic_with_min_degree(n, 0))
}

/// Every non-increasing sequence of length `n` with entries at most `n-1`,
/// graphic or not.
pub fn enumerate_bounded_sequences(n: usize) -> Result<Vec<DegreeSequence>> {
    check_length("sequence enumeration", n, SEQUENCE_LIMIT)?;
    Ok(tuples(n, 0, false)
        .into_iter()
        .map(DegreeSequence::new)
        .collect())
}

/// Every graphic sequence of odd length `n` classified as a nontrivial
/// basic profile.
pub fn basic_profile_sequences(n: usize) -> Result<Vec<DegreeSequence>> {
    check_length("basic profile enumeration", n, BASIC_PROFILE_LIMIT)?;
    if n % 2 == 0 {
        return Ok(Vec::new());
    }
    let m = (n / 2) as u32;
    let mut out = Vec::new();
    for s in graphic_with_min_degree(n, m) {
        if classify_basic_profile(&s)?.verdict == ProfileVerdict::NontrivialBasicProfile {
            out.push(s);
        }
    }
    Ok(out)
}

fn max_over_realizations(
    seq: &DegreeSequence,
    limits: &Limits,
    what: &'static str,
    cap: usize,
    f: impl Fn(&SimpleGraph) -> Result<usize>,
) -> Result<usize> {
    Limits::check(what, seq.len(), cap)?;
    let mut best = 0;
    let mut failure = None;
    for_each_realization(seq, limits, |g| match f(g) {
        Ok(v) => {
            best = best.max(v);
            ControlFlow::Continue(())
        }
        Err(e) => {
            failure = Some(e);
            ControlFlow::Break(())
        }
    })?;
    failure.map_or(Ok(best), Err)
}

/// χ(D): the largest chromatic number over all labelled realizations.
pub fn chi_of_sequence(seq: &DegreeSequence, limits: &Limits) -> Result<usize> {
    max_over_realizations(
        seq,
        limits,
        "sequence chromatic number",
        limits.sequence_chi,
        |g| Ok(optimal_coloring(g).0),
    )
}

/// h1(D): the largest h1 over all labelled realizations.
pub fn h1_of_sequence(seq: &DegreeSequence, limits: &Limits) -> Result<usize> {
    max_over_realizations(seq, limits, "sequence h1", limits.sequence_chi, |g| {
        Ok(h1_of_graph(g, limits)?.0)
    })
}

/// ω(D) by enumeration, independent of Rao's condition.
pub fn omega_by_enumeration(seq: &DegreeSequence, limits: &Limits) -> Result<usize> {
    max_over_realizations(
        seq,
        limits,
        "sequence clique number",
        limits.realizations,
        |g| Ok(clique_number(g)),
    )
}

/// Exhaustive existence search with no graphicality pruning; ground truth
/// for the Erdős–Gallai test.
pub fn realization_exists(seq: &DegreeSequence, limits: &Limits) -> Result<bool> {
    Limits::check("realization search", seq.len(), limits.sequence_omega)?;
    let n = seq.len();
    let allowed = (0..n).map(|v| full_mask(n) & !bit(v)).collect();
    Ok(
        Completion::new(seq.degrees().to_vec(), allowed, Order::Greedy)
            .without_eg_pruning()
            .first()
            .is_some(),
    )
}

/// One graph per isomorphism class on `n` vertices, ordered by edge count
/// and then canonical form. Built by adding one edge at a time.
pub fn all_graphs_up_to_iso(n: usize) -> Result<Vec<SimpleGraph>> {
    Limits::check("graph enumeration", n, GRAPH_LIMIT)?;
    let mut out = Vec::new();
    let mut level = BTreeSet::from([canonical_form(&SimpleGraph::new(n))]);
    while !level.is_empty() {
        let graphs: Vec<SimpleGraph> = level.iter().map(|c| c.to_graph()).collect();
        let next: BTreeSet<_> = graphs
            .par_iter()
            .flat_map_iter(|g| {
                g.complement()
                    .edges()
                    .map(|(u, v)| {
                        let mut h = g.clone();
                        h.add_edge(u, v);
                        canonical_form(&h)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        out.extend(graphs);
        level = next;
    }
    Ok(out)
}

/// Complements of the 2-regular graphs on `n` vertices, one per cycle type
/// (a partition of `n` into parts of size at least 3).
pub fn cycle_union_complements(n: usize) -> Result<Vec<(Vec<usize>, SimpleGraph)>> {
    fn partitions(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (3..=max.min(left)).rev() {
            cur.push(p);
            partitions(left - p, p, cur, out);
            cur.pop();
        }
    }
    SimpleGraph::try_new(n)?;
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    Ok(parts
        .into_iter()
        .map(|p| {
            let mut g = SimpleGraph::new(n);
            let mut start = 0;
            for &len in &p {
                for i in 0..len {
                    g.add_edge(start + i, start + (i + 1) % len);
                }
                start += len;
            }
            (p, g.complement())
        })
        .collect())
}

/// Extremes over the realizations of one degree sequence.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SequenceExtremes {
    pub omega: usize,
    pub chi: Option<usize>,
    pub h1: Option<usize>,
    /// Number of isomorphism classes realizing the sequence.
    pub classes: usize,
}

/// ω(D), and optionally χ(D) and h1(D), for every graphic sequence of
/// length `n`, obtained by scanning one graph per isomorphism class.
pub fn sequence_table(
    n: usize,
    with_chi_h1: bool,
    limits: &Limits,
) -> Result<BTreeMap<Vec<u32>, SequenceExtremes>> {
    if with_chi_h1 {
        Limits::check("sequence table", n, limits.sequence_chi)?;
    }
    let graphs = all_graphs_up_to_iso(n)?;
    let rows: Vec<(Vec<u32>, SequenceExtremes)> = graphs
        .par_iter()
        .map(|g| -> Result<_> {
            let (chi, h1) = if with_chi_h1 {
                (Some(optimal_coloring(g).0), Some(h1_of_graph(g, limits)?.0))
            } else {
                (None, None)
            };
            let key = g.degree_sequence().degrees().to_vec();
            Ok((
                key,
                SequenceExtremes {
                    omega: clique_number(g),
                    chi,
                    h1,
                    classes: 1,
                },
            ))
        })
        .collect::<Result<_>>()?;
    let mut table: BTreeMap<Vec<u32>, SequenceExtremes> = BTreeMap::new();
    for (key, row) in rows {
        let e = table.entry(key).or_default();
        e.omega = e.omega.max(row.omega);
        e.chi = e.chi.max(row.chi);
        e.h1 = e.h1.max(row.h1);
        e.classes += 1;
    }
    Ok(table)
}
