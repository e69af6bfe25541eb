use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, MAX_VERTICES};
use crate::limits::Limits;
use crate::sequence::omega_of_sequence;

use super::coloring::{chromatic_number, optimal_coloring};
use super::matching::has_perfect_matching;

/// `n` odd and `G - v` has a perfect matching for every vertex `v`.
pub fn is_hypomatchable(g: &SimpleGraph) -> bool {
    g.n() % 2 == 1 && (0..g.n()).all(|v| has_perfect_matching(&g.remove_vertex(v)))
}

/// Deleting any vertex lowers the chromatic number.
pub fn is_chi_critical(g: &SimpleGraph, limits: &Limits) -> Result<bool> {
    let chi = chromatic_number(g, limits)?;
    Ok((0..g.n()).all(|v| optimal_coloring(&g.remove_vertex(v)).0 < chi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasicKind {
    /// `χ(G) <= ω(D(G))`.
    Trivial,
    /// χ-critical on `2m+1` vertices, `χ = m+1`, `ω(D) = m`, complement
    /// hypo-matchable.
    Nontrivial,
}

/// Which clause of the basic-graph definition `g` satisfies, if any.
pub fn basic_kind(g: &SimpleGraph, limits: &Limits) -> Result<Option<BasicKind>> {
    let chi = chromatic_number(g, limits)?;
    let omega_d = omega_of_sequence(&g.degree_sequence())?;
    if chi <= omega_d {
        return Ok(Some(BasicKind::Trivial));
    }
    let n = g.n();
    if n % 2 == 0 {
        return Ok(None);
    }
    let m = n / 2;
    let nontrivial = chi == m + 1
        && omega_d == m
        && is_chi_critical(g, limits)?
        && is_hypomatchable(&g.complement());
    Ok(nontrivial.then_some(BasicKind::Nontrivial))
}

pub fn is_basic(g: &SimpleGraph, limits: &Limits) -> Result<bool> {
    Ok(basic_kind(g, limits)?.is_some())
}

/// Disjoint union plus all edges between different parts. Part `i` occupies
/// the labels listed in `map[i]`, consecutively and in order.
pub fn join_graphs(parts: &[SimpleGraph]) -> Result<(SimpleGraph, Vec<Vec<usize>>)> {
    if parts.is_empty() {
        return Err(Error::Argument("join needs at least one part".to_string()));
    }
    let total: usize = parts.iter().map(SimpleGraph::n).sum();
    if total > MAX_VERTICES {
        return Err(Error::Resource {
            what: "join",
            n: total,
            limit: MAX_VERTICES,
        });
    }
    let mut map = Vec::with_capacity(parts.len());
    let mut next = 0;
    for p in parts {
        map.push((next..next + p.n()).collect::<Vec<_>>());
        next += p.n();
    }
    let mut g = SimpleGraph::new(total);
    for (i, p) in parts.iter().enumerate() {
        for (u, v) in p.edges() {
            g.add_edge(map[i][u], map[i][v]);
        }
        for j in (i + 1)..parts.len() {
            for &u in &map[i] {
                for &v in &map[j] {
                    g.add_edge(u, v);
                }
            }
        }
    }
    Ok((g, map))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinFactor {
    /// Labels in the original graph, ascending.
    pub vertices: Vec<usize>,
    #[serde(skip)]
    pub graph: SimpleGraph,
    pub kind: BasicKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinDecomposition {
    /// Vertices of the induced subgraph `G'`, ascending.
    pub vertices: Vec<usize>,
    #[serde(skip)]
    pub subgraph: SimpleGraph,
    pub chi: usize,
    pub factors: Vec<JoinFactor>,
}

/// An induced subgraph `G'` with `χ(G') = χ(G)` that is a join of basic
/// graphs, together with its join factors.
///
/// Vertices are deleted lowest label first while the chromatic number
/// survives, which leaves a χ-critical graph; its factors are the components
/// of its complement.
pub fn find_join_decomposition(g: &SimpleGraph, limits: &Limits) -> Result<JoinDecomposition> {
    let chi = chromatic_number(g, limits)?;
    let mut kept: Vec<usize> = (0..g.n()).collect();
    'shrink: loop {
        for i in 0..kept.len() {
            let mut trial = kept.clone();
            trial.remove(i);
            if optimal_coloring(&g.induced(&trial)).0 == chi {
                kept = trial;
                continue 'shrink;
            }
        }
        break;
    }
    let subgraph = g.induced(&kept);
    let mut factors = Vec::new();
    for comp in subgraph.complement().components() {
        let graph = subgraph.induced(&comp);
        let kind = basic_kind(&graph, limits)?.ok_or_else(|| {
            Error::Internal(format!(
                "join factor {graph:?} of a chi-critical subgraph is not basic"
            ))
        })?;
        factors.push(JoinFactor {
            vertices: comp.iter().map(|&i| kept[i]).collect(),
            graph,
            kind,
        });
    }
    Ok(JoinDecomposition {
        vertices: kept,
        subgraph,
        chi,
        factors,
    })
}
