//! Star-subdivided cliques: the witness type, its verifier and the exact
//! h1 search.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{bit, bits, SimpleGraph};
use crate::limits::Limits;

/// Route between two branch vertices: a host edge, or two host edges through
/// `mid`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairPath {
    pub u: usize,
    pub v: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mid: Option<usize>,
}

/// A subdivision of `K_order` in which the subdivided pairs form
/// vertex-disjoint stars and each pair is subdivided at most once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarSubdivisionWitness {
    pub order: usize,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<PairPath>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum WitnessDefect {
    /// Wrong order, repeated or out-of-range labels, missing pairs.
    Malformed {
        detail: String,
    },
    MissingEdge {
        u: usize,
        v: usize,
    },
    OverlappingPaths {
        vertex: usize,
    },
    StarsNotDisjoint {
        u: usize,
        v: usize,
    },
    DoubleSubdivision {
        u: usize,
        v: usize,
    },
}

impl WitnessDefect {
    pub fn code(&self) -> &'static str {
        match self {
            WitnessDefect::Malformed { .. } => "malformed",
            WitnessDefect::MissingEdge { .. } => "missing-edge",
            WitnessDefect::OverlappingPaths { .. } => "overlapping-paths",
            WitnessDefect::StarsNotDisjoint { .. } => "stars-not-disjoint",
            WitnessDefect::DoubleSubdivision { .. } => "double-subdivision",
        }
    }
}

impl std::fmt::Display for WitnessDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WitnessDefect::Malformed { detail } => write!(f, "malformed witness: {detail}"),
            WitnessDefect::MissingEdge { u, v } => write!(f, "host graph lacks edge {u}-{v}"),
            WitnessDefect::OverlappingPaths { vertex } => {
                write!(f, "vertex {vertex} is used by more than one path")
            }
            WitnessDefect::StarsNotDisjoint { u, v } => {
                write!(f, "subdivided pair {u}-{v} joins two star centres")
            }
            WitnessDefect::DoubleSubdivision { u, v } => {
                write!(f, "pair {u}-{v} is routed more than once")
            }
        }
    }
}

impl StarSubdivisionWitness {
    /// A clique on `vertices` with every pair a direct edge.
    pub fn clique(vertices: &[usize]) -> Self {
        let mut branch = vertices.to_vec();
        branch.sort_unstable();
        let mut paths = Vec::new();
        for (i, &u) in branch.iter().enumerate() {
            for &v in &branch[i + 1..] {
                paths.push(PairPath { u, v, mid: None });
            }
        }
        StarSubdivisionWitness {
            order: branch.len(),
            branch_vertices: branch,
            paths,
        }
    }

    pub fn subdivision_vertices(&self) -> Vec<usize> {
        let mut mids: Vec<usize> = self.paths.iter().filter_map(|p| p.mid).collect();
        mids.sort_unstable();
        mids
    }

    pub fn subdivided_pairs(&self) -> Vec<(usize, usize)> {
        self.paths
            .iter()
            .filter(|p| p.mid.is_some())
            .map(|p| (p.u.min(p.v), p.u.max(p.v)))
            .collect()
    }

    /// The stars formed by the subdivided pairs as `(centre, leaves)`; a
    /// single-edge star is centred at its smaller label. Only meaningful for
    /// witnesses that pass [`verify_witness`].
    pub fn stars(&self) -> Vec<(usize, Vec<usize>)> {
        let mut around: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (u, v) in self.subdivided_pairs() {
            around.entry(u).or_default().push(v);
            around.entry(v).or_default().push(u);
        }
        let mut stars = Vec::new();
        for (&c, leaves) in &around {
            let lone_edge = leaves.len() == 1 && around[&leaves[0]].len() == 1;
            if leaves.len() > 1 || (lone_edge && c < leaves[0]) {
                let mut l = leaves.clone();
                l.sort_unstable();
                stars.push((c, l));
            }
        }
        stars
    }

    /// Renames every vertex through `map`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        let mut branch: Vec<usize> = self.branch_vertices.iter().map(|&v| map[v]).collect();
        branch.sort_unstable();
        let mut paths: Vec<PairPath> = self
            .paths
            .iter()
            .map(|p| {
                let (u, v) = (map[p.u], map[p.v]);
                PairPath {
                    u: u.min(v),
                    v: u.max(v),
                    mid: p.mid.map(|m| map[m]),
                }
            })
            .collect();
        paths.sort();
        StarSubdivisionWitness {
            order: self.order,
            branch_vertices: branch,
            paths,
        }
    }
}

/// Checks every witness invariant against the host graph.
pub fn verify_witness(g: &SimpleGraph, w: &StarSubdivisionWitness) -> Result<(), WitnessDefect> {
    let malformed = |detail: String| Err(WitnessDefect::Malformed { detail });
    let n = g.n();
    if w.branch_vertices.len() != w.order {
        return malformed(format!(
            "order {} but {} branch vertices",
            w.order,
            w.branch_vertices.len()
        ));
    }
    let mut branch = 0u64;
    for &b in &w.branch_vertices {
        if b >= n {
            return malformed(format!("branch vertex {b} out of range"));
        }
        if branch & bit(b) != 0 {
            return malformed(format!("branch vertex {b} repeated"));
        }
        branch |= bit(b);
    }
    let mut routed: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for p in &w.paths {
        if p.u == p.v
            || p.u >= n
            || p.v >= n
            || branch & (bit(p.u) | bit(p.v)) != bit(p.u) | bit(p.v)
        {
            return malformed(format!(
                "path {}-{} does not join two branch vertices",
                p.u, p.v
            ));
        }
        if let Some(m) = p.mid {
            if m >= n {
                return malformed(format!("midpoint {m} out of range"));
            }
        }
        let key = (p.u.min(p.v), p.u.max(p.v));
        *routed.entry(key).or_default() += 1;
    }
    if let Some((&(u, v), _)) = routed.iter().find(|(_, &c)| c > 1) {
        return Err(WitnessDefect::DoubleSubdivision { u, v });
    }
    let expected = w.order * w.order.saturating_sub(1) / 2;
    if routed.len() != expected {
        return malformed(format!(
            "{} of {expected} branch pairs routed",
            routed.len()
        ));
    }
    let mut used = branch;
    for p in &w.paths {
        if let Some(m) = p.mid {
            if used & bit(m) != 0 {
                return Err(WitnessDefect::OverlappingPaths { vertex: m });
            }
            used |= bit(m);
        }
    }
    let pairs = w.subdivided_pairs();
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    for &(u, v) in &pairs {
        *deg.entry(u).or_default() += 1;
        *deg.entry(v).or_default() += 1;
    }
    if let Some(&(u, v)) = pairs.iter().find(|(u, v)| deg[u] > 1 && deg[v] > 1) {
        return Err(WitnessDefect::StarsNotDisjoint { u, v });
    }
    for p in &w.paths {
        let hops: Vec<(usize, usize)> = match p.mid {
            None => vec![(p.u, p.v)],
            Some(m) => vec![(p.u, m), (m, p.v)],
        };
        if let Some(&(a, b)) = hops.iter().find(|&&(a, b)| !g.has_edge(a, b)) {
            return Err(WitnessDefect::MissingEdge { u: a, v: b });
        }
    }
    Ok(())
}

/// Picks pairwise distinct midpoints, `mids[i]` from `cands[i]`, by
/// augmenting paths with the lowest candidate tried first.
fn assign_midpoints(cands: &[u64]) -> Option<Vec<usize>> {
    fn augment(i: usize, cands: &[u64], owner: &mut [usize; 64], seen: &mut u64) -> bool {
        for m in bits(cands[i] & !*seen) {
            *seen |= bit(m);
            if owner[m] == usize::MAX || augment(owner[m], cands, owner, seen) {
                owner[m] = i;
                return true;
            }
        }
        false
    }
    let mut owner = [usize::MAX; 64];
    for i in 0..cands.len() {
        let mut seen = 0u64;
        if !augment(i, cands, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut mids = vec![0; cands.len()];
    for (m, &o) in owner.iter().enumerate() {
        if o != usize::MAX {
            mids[o] = m;
        }
    }
    Some(mids)
}

/// A witness on exactly the branch set `set`, if one exists.
fn witness_on(g: &SimpleGraph, set: u64) -> Option<StarSubdivisionWitness> {
    let branch: Vec<usize> = bits(set).collect();
    let mut missing = Vec::new();
    let mut deg = [0usize; 64];
    for (i, &u) in branch.iter().enumerate() {
        for &v in &branch[i + 1..] {
            if !g.has_edge(u, v) {
                missing.push((u, v));
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    if missing.iter().any(|&(u, v)| deg[u] > 1 && deg[v] > 1) {
        return None;
    }
    let cands: Vec<u64> = missing
        .iter()
        .map(|&(u, v)| g.neighbors_mask(u) & g.neighbors_mask(v) & !set)
        .collect();
    let mids = assign_midpoints(&cands)?;
    let mut paths = Vec::new();
    let mut k = 0;
    for (i, &u) in branch.iter().enumerate() {
        for &v in &branch[i + 1..] {
            let mid = if g.has_edge(u, v) {
                None
            } else {
                k += 1;
                Some(mids[k - 1])
            };
            paths.push(PairPath { u, v, mid });
        }
    }
    Some(StarSubdivisionWitness {
        order: branch.len(),
        branch_vertices: branch,
        paths,
    })
}

/// Visits the `r`-subsets of `0..n` in lexicographic order of their sorted
/// element lists.
fn first_subset(n: usize, r: usize, mut test: impl FnMut(u64) -> bool) -> Option<u64> {
    fn rec(
        start: usize,
        n: usize,
        left: usize,
        acc: u64,
        test: &mut dyn FnMut(u64) -> bool,
    ) -> Option<u64> {
        if left == 0 {
            return test(acc).then_some(acc);
        }
        for v in start..=(n - left) {
            if let Some(s) = rec(v + 1, n, left - 1, acc | bit(v), test) {
                return Some(s);
            }
        }
        None
    }
    rec(0, n, r, 0, &mut test)
}

/// `h1(G)` and a witness on the lexicographically first branch set of that
/// order. The empty graph gives `(0, None)`.
pub fn h1_of_graph(
    g: &SimpleGraph,
    limits: &Limits,
) -> Result<(usize, Option<StarSubdivisionWitness>)> {
    Limits::check("h1 search", g.n(), limits.h1)?;
    let n = g.n();
    for r in (1..=n).rev() {
        let mut found = None;
        first_subset(n, r, |set| {
            found = witness_on(g, set);
            found.is_some()
        });
        if found.is_some() {
            return Ok((r, found));
        }
    }
    Ok((0, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn examples() {
        let c5 = SimpleGraph::cycle(5);
        let (r, w) = h1_of_graph(&c5, &lim()).unwrap();
        assert_eq!(r, 3);
        let w = w.unwrap();
        assert_eq!(verify_witness(&c5, &w), Ok(()));
        assert_eq!(w.stars().len(), 1);
        assert_eq!(w.stars()[0].1.len(), 2);

        let (r, w) = h1_of_graph(&SimpleGraph::complete(4), &lim()).unwrap();
        assert_eq!(r, 4);
        assert!(w.unwrap().subdivision_vertices().is_empty());

        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(h1_of_graph(&star, &lim()).unwrap().0, 2);
        assert_eq!(
            h1_of_graph(&SimpleGraph::new(0), &lim()).unwrap(),
            (0, None)
        );
        assert_eq!(h1_of_graph(&SimpleGraph::new(3), &lim()).unwrap().0, 1);
        assert!(h1_of_graph(&SimpleGraph::new(11), &lim()).is_err());
    }

    #[test]
    fn overlapping_midpoints_rejected() {
        let c5 = SimpleGraph::cycle(5);
        let w = StarSubdivisionWitness {
            order: 3,
            branch_vertices: vec![0, 2, 3],
            paths: vec![
                PairPath {
                    u: 0,
                    v: 2,
                    mid: Some(1),
                },
                PairPath {
                    u: 0,
                    v: 3,
                    mid: Some(1),
                },
                PairPath {
                    u: 2,
                    v: 3,
                    mid: None,
                },
            ],
        };
        let err = verify_witness(&c5, &w).unwrap_err();
        assert_eq!(err, WitnessDefect::OverlappingPaths { vertex: 1 });
        assert_eq!(err.code(), "overlapping-paths");
    }

    #[test]
    fn path_of_subdivided_pairs_rejected() {
        let k7 = SimpleGraph::complete(7);
        let mut w = StarSubdivisionWitness::clique(&[0, 1, 2, 3]);
        for p in &mut w.paths {
            match (p.u, p.v) {
                (0, 1) => p.mid = Some(4),
                (1, 2) => p.mid = Some(5),
                (2, 3) => p.mid = Some(6),
                _ => {}
            }
        }
        let err = verify_witness(&k7, &w).unwrap_err();
        assert_eq!(err, WitnessDefect::StarsNotDisjoint { u: 1, v: 2 });
    }

    #[test]
    fn other_defects() {
        let k4 = SimpleGraph::complete(4);
        let mut w = StarSubdivisionWitness::clique(&[0, 1, 2]);
        assert_eq!(verify_witness(&k4, &w), Ok(()));
        assert_eq!(
            verify_witness(&SimpleGraph::path(3), &w)
                .unwrap_err()
                .code(),
            "missing-edge"
        );
        w.paths.push(PairPath {
            u: 1,
            v: 0,
            mid: Some(3),
        });
        assert_eq!(
            verify_witness(&k4, &w).unwrap_err(),
            WitnessDefect::DoubleSubdivision { u: 0, v: 1 }
        );
        w.paths.truncate(2);
        assert_eq!(verify_witness(&k4, &w).unwrap_err().code(), "malformed");
        let mut w = StarSubdivisionWitness::clique(&[0, 1, 2]);
        w.paths[0].mid = Some(2);
        assert_eq!(
            verify_witness(&k4, &w).unwrap_err(),
            WitnessDefect::OverlappingPaths { vertex: 2 }
        );
    }

    #[test]
    fn json_shape() {
        let c5 = SimpleGraph::cycle(5);
        let w = h1_of_graph(&c5, &lim()).unwrap().1.unwrap();
        let text = serde_json::to_string(&w).unwrap();
        assert!(text.starts_with("{\"order\":3,\"branch_vertices\":"));
        assert!(text.contains("\"mid\":"));
        let back: StarSubdivisionWitness = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn relabel_keeps_validity() {
        let c5 = SimpleGraph::cycle(5);
        let w = h1_of_graph(&c5, &lim()).unwrap().1.unwrap();
        let perm = [3, 0, 4, 1, 2];
        let edges: Vec<_> = c5.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = SimpleGraph::from_edges(5, &edges);
        assert_eq!(verify_witness(&h, &w.relabel(&perm)), Ok(()));
    }
}
