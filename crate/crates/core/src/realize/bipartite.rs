//! Bipartite realizations with a matching that covers the smaller side.
//!
//! The construction is inductive. With `u_1`, `v_1` the vertices of largest
//! demand, `u_1` is joined to `v_1..v_{a_1}` and `v_1` to `u_1..u_{b_1}`;
//! the residual demands are realized recursively and `u_1 v_1` joins the
//! matching. Two corner cases need a different split:
//!
//! * some `v_j` (`2 <= j <= a_1`) is exhausted, forcing `b_1 = 2`; if `u_2`
//!   is exhausted as well, `u_2` is matched to `v_1` and `u_1` to an
//!   exhausted `v_j`;
//! * `u_{b_1}` is exhausted while no `v_j` is: `v_1` and `u_{b_1}` are split
//!   off together and `u_1` keeps all of its `B`-side demand but one.

use crate::error::{BipartiteCondition, Error, Result};
use crate::graph::{SimpleGraph, MAX_VERTICES};

/// Edges and matching in terms of input positions `(i, j)`: `i` indexes `a`,
/// `j` indexes `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BipartiteEdges {
    pub edges: Vec<(usize, usize)>,
    pub matching: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteRealization {
    /// Vertices `0..n` form part A, `n..n+m` part B.
    pub graph: SimpleGraph,
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
    /// `(a_vertex, b_vertex)` pairs covering every vertex of part A.
    pub matching: Vec<(usize, usize)>,
}

impl BipartiteRealization {
    /// Checks degrees, bipartiteness and the matching against `a`, `b`.
    pub fn satisfies(&self, a: &[u32], b: &[u32]) -> bool {
        let g = &self.graph;
        let degrees_ok = self
            .part_a
            .iter()
            .zip(a)
            .chain(self.part_b.iter().zip(b))
            .all(|(&v, &d)| g.degree(v) == d as usize);
        let bipartite = g
            .edges()
            .all(|(u, v)| self.part_a.contains(&u) != self.part_a.contains(&v));
        let mut used = std::collections::HashSet::new();
        let matching_ok = self.matching.len() == self.part_a.len()
            && self.matching.iter().all(|&(u, v)| {
                g.has_edge(u, v)
                    && self.part_a.contains(&u)
                    && self.part_b.contains(&v)
                    && used.insert(u)
                    && used.insert(v)
            });
        degrees_ok && bipartite && matching_ok
    }
}

fn check_conditions(a: &[u32], b: &[u32]) -> std::result::Result<(), BipartiteCondition> {
    let (n, m) = (a.len(), b.len());
    if a.iter().chain(b).any(|&x| x == 0) {
        return Err(BipartiteCondition::Positive);
    }
    if n > m {
        return Err(BipartiteCondition::PartSizes);
    }
    if a.iter().any(|&x| x as usize > m) {
        return Err(BipartiteCondition::MaxDegree);
    }
    let sa: u64 = a.iter().map(|&x| u64::from(x)).sum();
    let sb: u64 = b.iter().map(|&x| u64::from(x)).sum();
    if sa != sb {
        return Err(BipartiteCondition::EqualSums);
    }
    if let (Some(&hi), Some(&lo)) = (b.iter().max(), b.iter().min()) {
        if hi > lo + 1 {
            return Err(BipartiteCondition::Balanced);
        }
    }
    Ok(())
}

/// `(id, demand)` lists kept sorted by demand descending, then id ascending.
type Side = Vec<(usize, u32)>;

fn sorted(mut side: Side) -> Side {
    side.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
    side
}

fn degs(side: &[(usize, u32)]) -> Vec<u32> {
    side.iter().map(|&(_, d)| d).collect()
}

fn build(a: Side, b: Side, edges: &mut Vec<(usize, usize)>) -> Result<Vec<(usize, usize)>> {
    if let Err(c) = check_conditions(&degs(&a), &degs(&b)) {
        return Err(Error::Internal(format!(
            "bipartite recursion reached an instance violating {c}: a = {:?}, b = {:?}",
            degs(&a),
            degs(&b)
        )));
    }
    let n = a.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let (u1, a1) = a[0];
    let (v1, b1) = b[0];

    if n == 1 {
        // K_{1,m}
        for &(v, _) in &b {
            edges.push((u1, v));
        }
        return Ok(vec![(u1, v1)]);
    }

    if b1 == 1 {
        // disjoint stars centred in A
        let mut leaves = b.iter().map(|&(v, _)| v);
        let mut matching = Vec::with_capacity(n);
        for &(u, deg) in &a {
            for k in 0..deg {
                let v = leaves.next().expect("sum(a) == sum(b)");
                if k == 0 {
                    matching.push((u, v));
                }
                edges.push((u, v));
            }
        }
        return Ok(matching);
    }

    let (a1u, b1u) = (a1 as usize, b1 as usize);
    if b1u > n {
        return Err(Error::Internal(format!("b_1 = {b1} exceeds n = {n}")));
    }
    let reduced_a: Side = a[1..]
        .iter()
        .enumerate()
        .map(|(i, &(u, d))| if i + 1 < b1u { (u, d - 1) } else { (u, d) })
        .filter(|&(_, d)| d > 0)
        .collect();
    let reduced_b: Side = b[1..]
        .iter()
        .enumerate()
        .map(|(j, &(v, d))| if j + 1 < a1u { (v, d - 1) } else { (v, d) })
        .filter(|&(_, d)| d > 0)
        .collect();
    let m = b.len();
    let star_edges = |edges: &mut Vec<(usize, usize)>| {
        for &(v, _) in &b[..a1u] {
            edges.push((u1, v));
        }
        for &(u, _) in &a[1..b1u] {
            edges.push((u, v1));
        }
    };

    if reduced_a.is_empty() {
        // n = b_1 = 2, a_2 = 1: K_{1,m} with one edge subdivided through v_1.
        star_edges(edges);
        let u2 = a[1].0;
        return Ok(vec![(u1, b[1].0), (u2, v1)]);
    }

    if reduced_b.len() < m - 1 {
        // some v_j with 2 <= j <= a_1 had demand 1, hence b_1 = 2
        star_edges(edges);
        let mut matching = build(sorted(reduced_a.clone()), sorted(reduced_b), edges)?;
        if reduced_a.len() == n - 1 {
            matching.push((u1, v1));
        } else {
            let u2 = a[1].0;
            let free = b[1..a1u]
                .iter()
                .find(|&&(_, d)| d == 1)
                .map(|&(v, _)| v)
                .ok_or_else(|| Error::Internal("no exhausted partner for u_1".into()))?;
            matching.push((u2, v1));
            matching.push((u1, free));
        }
        return Ok(matching);
    }

    if reduced_a.len() < n - 1 {
        // u_{b_1} is the only exhausted vertex of A; split off u_{b_1} and v_1
        let (ub, db) = a[b1u - 1];
        if db != 1 || a[1..b1u - 1].iter().any(|&(_, d)| d < 2) {
            return Err(Error::Internal(format!(
                "unexpected exhaustion pattern in a = {:?} with b_1 = {b1}",
                degs(&a)
            )));
        }
        let mut alt: Side = vec![(u1, a1 - 1)];
        alt.extend(a[1..b1u - 1].iter().map(|&(u, d)| (u, d - 1)));
        alt.extend(a[b1u..].iter().copied());
        let mut matching = build(sorted(alt), b[1..].to_vec(), edges)?;
        for &(u, _) in &a[..b1u] {
            edges.push((u, v1));
        }
        matching.push((ub, v1));
        return Ok(matching);
    }

    star_edges(edges);
    let mut matching = build(sorted(reduced_a), sorted(reduced_b), edges)?;
    matching.push((u1, v1));
    Ok(matching)
}

/// Realizes demands given by position; neither side needs to be sorted.
pub(crate) fn bipartite_positional(a: &[u32], b: &[u32]) -> Result<BipartiteEdges> {
    check_conditions(a, b).map_err(Error::Bipartite)?;
    let a_side = sorted(a.iter().copied().enumerate().collect());
    let b_side = sorted(b.iter().copied().enumerate().collect());
    let mut edges = Vec::new();
    let matching = build(a_side, b_side, &mut edges)?;
    edges.sort_unstable();
    Ok(BipartiteEdges { edges, matching })
}

/// Bipartite graph with part degrees `a` (vertices `0..n`) and `b`
/// (vertices `n..n+m`) containing a matching that covers part A.
///
/// Requires both sequences non-increasing and positive, `n <= m`,
/// `a_1 <= m`, equal sums and `b_1 <= b_m + 1`; the first violated
/// condition is reported.
pub fn realize_bipartite_with_matching(a: &[u32], b: &[u32]) -> Result<BipartiteRealization> {
    let non_increasing = |s: &[u32]| s.windows(2).all(|w| w[0] >= w[1]);
    if !non_increasing(a) || !non_increasing(b) {
        return Err(Error::Bipartite(BipartiteCondition::NonIncreasing));
    }
    let (n, m) = (a.len(), b.len());
    check_conditions(a, b).map_err(Error::Bipartite)?;
    if n + m > MAX_VERTICES {
        return Err(Error::Resource {
            what: "bipartite realization",
            n: n + m,
            limit: MAX_VERTICES,
        });
    }
    let built = bipartite_positional(a, b)?;
    let mut graph = SimpleGraph::new(n + m);
    for &(i, j) in &built.edges {
        graph.add_edge(i, n + j);
    }
    let mut matching: Vec<(usize, usize)> =
        built.matching.iter().map(|&(i, j)| (i, n + j)).collect();
    matching.sort_unstable();
    Ok(BipartiteRealization {
        graph,
        part_a: (0..n).collect(),
        part_b: (n..n + m).collect(),
        matching,
    })
}
