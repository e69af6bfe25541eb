//! Realizations of nontrivial basic profiles that contain a once-subdivided
//! `K_{m+1}` whose subdivided edges all meet `v_{m+1}`.
//!
//! Labels follow positions: `v_i` of the sequence is vertex `i - 1`.
//! `A = {v_1..v_m}` and `B = {v_{m+1}..v_{2m+1}}` start as two cliques; a
//! forest built from the tree `T_1` is deleted inside `B` and the missing
//! degree is supplied by a bipartite graph between `A` and `B` whose
//! matching provides the subdivision vertices.

use serde::Serialize;

use crate::analysis::{verify_witness, PairPath, StarSubdivisionWitness};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::realize::{bipartite_positional, realize_low_degree, tree_from_degrees};
use crate::sequence::{classify_basic_profile, DegreeSequence, ProfileVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    /// `d_{m+1} >= m + α`
    CaseOne,
    /// `d_{m+1} <= m + α - 1`
    CaseTwo,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionPlan {
    pub sequence: Vec<u32>,
    pub m: usize,
    pub alpha: usize,
    pub beta: usize,
    pub r: usize,
    /// Degrees of `v_{2m-R+1}..v_{2m+1}` in `T_1`.
    pub t: Vec<u32>,
    pub case: CaseTag,
    /// Cross demands of `v_1..v_m`: `a_i`, or `a'_i` in the second case.
    pub a_targets: Vec<u32>,
    /// Cross demands of `v_{m+1}..v_{2m+1}` (`b_i`), or of `v_{m+2}..v_{2m+1}`
    /// (`b'_i`) in the second case.
    pub b_targets: Vec<u32>,
    pub tree_edges: Vec<(usize, usize)>,
    /// Neighbours of `v_{2m+1}` in `T_1` whose tree edges are replaced.
    pub chosen_neighbors: Vec<usize>,
    /// Vertex set of `T_3`, in embedding order; empty in the first case.
    pub s_set: Vec<usize>,
    pub low_degree_edges: Vec<(usize, usize)>,
    /// `E(T_2)` or `E(T_4)`: the edges deleted from the two cliques.
    pub removed_edges: Vec<(usize, usize)>,
}

impl ConstructionPlan {
    fn dump(&self) -> String {
        serde_json::to_string(self).unwrap_or_else(|_| format!("{self:?}"))
    }

    fn fail(&self, what: &str) -> Error {
        Error::Internal(format!("{what}; plan: {}", self.dump()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicWitness {
    pub plan: ConstructionPlan,
    #[serde(skip)]
    pub graph: SimpleGraph,
    pub witness: StarSubdivisionWitness,
}

fn norm((u, v): (usize, usize)) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Evaluates α, β, `R`, `t`, the tree `T_1`, the case split and the
/// modified forest, and records the cross-edge demands.
pub fn plan_construction(seq: &DegreeSequence) -> Result<ConstructionPlan> {
    let profile = classify_basic_profile(seq)?;
    if profile.verdict != ProfileVerdict::NontrivialBasicProfile {
        return Err(Error::Domain(format!(
            "{seq} has profile {:?}, not a nontrivial basic profile",
            profile.verdict
        )));
    }
    let m = profile.m.expect("odd length has m");
    let d = |i: usize| i64::from(seq.d(i));
    let mi = m as i64;
    let dm1 = d(m + 1);
    let alpha: i64 = (1..=m).map(|i| d(i) - dm1).sum();
    let beta: i64 = (m + 2..=2 * m + 1).map(|i| dm1 - d(i)).sum();
    let invariant = |what: &str| {
        Error::Internal(format!(
            "construction invariant {what} fails for {seq} (alpha = {alpha}, beta = {beta})"
        ))
    };
    let twice_r = 2 * mi - dm1 + alpha + beta;
    if twice_r % 2 != 0 {
        return Err(invariant("R integral"));
    }
    let r = twice_r / 2;
    if !(0 <= beta && beta < r && r <= 2 * mi - dm1 - 1 && 2 * mi - dm1 - 1 <= mi - 1) {
        return Err(invariant("0 <= beta < R <= 2m - d_{m+1} - 1 <= m - 1"));
    }
    let (ru, bu) = (r as usize, beta as usize);
    if d(2 * m - ru) != dm1 {
        return Err(invariant("d_{2m-R} = d_{m+1}"));
    }
    let mut t: Vec<i64> = (1..=ru).map(|i| dm1 - d(2 * m - ru + i) + 1).collect();
    t.push(dm1 - d(2 * m + 1) + r - beta);
    if t.iter().sum::<i64>() != 2 * r || t.iter().any(|&x| x < 1) {
        return Err(invariant("sum t_i = 2R with t_i >= 1"));
    }
    let t: Vec<u32> = t.iter().map(|&x| x as u32).collect();

    // T_1 lives on v_{2m-R+1}..v_{2m+1}.
    let lo = 2 * m - ru;
    let last = 2 * m;
    let tree = tree_from_degrees(&t).map_err(|e| invariant(&format!("tree for t ({e})")))?;
    let tree_edges: Vec<(usize, usize)> = tree.edges().map(|(x, y)| (lo + x, lo + y)).collect();
    let last_nbrs: Vec<usize> = tree.neighbors(ru).map(|x| lo + x).collect();

    let a: Vec<u32> = (1..=m).map(|i| (d(i) - (mi - 1)) as u32).collect();
    let case = if dm1 >= mi + alpha {
        CaseTag::CaseOne
    } else {
        CaseTag::CaseTwo
    };
    let mut plan = ConstructionPlan {
        sequence: seq.degrees().to_vec(),
        m,
        alpha: alpha as usize,
        beta: bu,
        r: ru,
        t,
        case,
        a_targets: Vec::new(),
        b_targets: Vec::new(),
        tree_edges: tree_edges.clone(),
        chosen_neighbors: Vec::new(),
        s_set: Vec::new(),
        low_degree_edges: Vec::new(),
        removed_edges: Vec::new(),
    };
    let base = (dm1 - mi) as u32;
    match case {
        CaseTag::CaseOne => {
            let k = ru - bu - 1;
            if last_nbrs.len() < k || m + ru - bu > 2 * m - ru {
                return Err(plan.fail(
                    "first case needs R - beta - 1 tree neighbours and m + R - beta <= 2m - R",
                ));
            }
            let chosen = last_nbrs[..k].to_vec();
            let mut removed: Vec<(usize, usize)> = tree_edges
                .iter()
                .copied()
                .filter(|&(x, y)| !(y == last && chosen.contains(&x)))
                .collect();
            removed.extend(
                chosen
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| norm((c, m + 1 + j))),
            );
            removed.sort_unstable();
            plan.b_targets = (1..=m + 1)
                .map(|i| {
                    if i == 1 || (ru - bu + 1 <= i && i <= m - ru) {
                        base
                    } else {
                        base + 1
                    }
                })
                .collect();
            plan.a_targets = a;
            plan.chosen_neighbors = chosen;
            plan.removed_edges = removed;
        }
        CaseTag::CaseTwo => {
            let k = ru - bu;
            if last_nbrs.len() < k {
                return Err(plan.fail("second case needs R - beta tree neighbours"));
            }
            let chosen = last_nbrs[..k].to_vec();
            let mut s = vec![last];
            s.extend(&chosen);
            s.extend(m + 1..lo);
            if s.len() != m - bu {
                return Err(plan.fail("|S| = m - beta"));
            }
            let t3 = realize_low_degree(s.len(), k)
                .map_err(|e| plan.fail(&format!("low-degree graph on S ({e})")))?;
            let t3_edges: Vec<(usize, usize)> =
                t3.edges().map(|(x, y)| norm((s[x], s[y]))).collect();
            let mut removed: Vec<(usize, usize)> = tree_edges
                .iter()
                .copied()
                .filter(|&(x, y)| !(y == last && chosen.contains(&x)))
                .chain(t3_edges.iter().copied())
                .collect();
            removed.sort_unstable();
            let in_s2 = |v: usize| {
                s.iter()
                    .position(|&x| x == v)
                    .is_some_and(|p| t3.degree(p) == 2)
            };
            plan.b_targets = (1..=m)
                .map(|i| if in_s2(m + i) { base + 2 } else { base + 1 })
                .collect();
            plan.a_targets = a
                .iter()
                .enumerate()
                .map(|(i, &ai)| if (i as u32) < base { ai - 1 } else { ai })
                .collect();
            plan.chosen_neighbors = chosen;
            plan.s_set = s;
            plan.low_degree_edges = t3_edges;
            plan.removed_edges = removed;
        }
    }
    Ok(plan)
}

/// Runs the construction and returns the realization with its witness of
/// order `m + 1` on `v_1..v_{m+1}`.
///
/// Every step is checked: a failure is an [`Error::Internal`] carrying the
/// plan, since the construction cannot fail on valid input.
pub fn build_basic_witness(seq: &DegreeSequence) -> Result<BasicWitness> {
    let plan = plan_construction(seq)?;
    let m = plan.m;
    let n = 2 * m + 1;
    let mut g = SimpleGraph::new(n);
    for part in [0..m, m..n] {
        for u in part.clone() {
            for v in (u + 1)..part.end {
                g.add_edge(u, v);
            }
        }
    }
    for &(u, v) in &plan.removed_edges {
        if !g.remove_edge(u, v) {
            return Err(plan.fail(&format!("edge {u}-{v} removed twice")));
        }
    }
    if plan.case == CaseTag::CaseTwo {
        let direct = (plan.sequence[m] as usize) - m;
        for i in 0..direct {
            g.add_edge(m, i);
        }
    }
    let need = |g: &SimpleGraph, v: usize| i64::from(plan.sequence[v]) - g.degree(v) as i64;
    let a: Vec<i64> = (0..m).map(|v| need(&g, v)).collect();
    let b_start = if plan.case == CaseTag::CaseOne {
        m
    } else {
        m + 1
    };
    let b: Vec<i64> = (b_start..n).map(|v| need(&g, v)).collect();
    let as_u32 = |x: &[u32]| x.iter().map(|&v| i64::from(v)).collect::<Vec<_>>();
    if a != as_u32(&plan.a_targets) || b != as_u32(&plan.b_targets) {
        return Err(plan.fail(&format!(
            "residual demands a = {a:?}, b = {b:?} disagree with the plan"
        )));
    }
    if b_start == m + 1 && need(&g, m) != 0 {
        return Err(plan.fail("v_{m+1} is not saturated"));
    }
    // zero demands occur only when d_{m+1} = m and are dropped
    let keep: Vec<usize> = (0..b.len()).filter(|&j| b[j] > 0).collect();
    let a_dem: Vec<u32> = a.iter().map(|&x| x as u32).collect();
    let b_dem: Vec<u32> = keep.iter().map(|&j| b[j] as u32).collect();
    let cross = bipartite_positional(&a_dem, &b_dem)
        .map_err(|e| plan.fail(&format!("bipartite step ({e})")))?;
    for &(i, j) in &cross.edges {
        g.add_edge(i, b_start + keep[j]);
    }
    let mut partner = vec![usize::MAX; m];
    for &(i, j) in &cross.matching {
        partner[i] = b_start + keep[j];
    }

    if g.degrees() != plan.sequence {
        return Err(plan.fail(&format!("built degrees {:?}", g.degrees())));
    }
    if (m + 1..n).any(|v| !g.has_edge(m, v)) {
        return Err(plan.fail("v_{m+1} misses part of B"));
    }
    let mut paths = Vec::new();
    for u in 0..=m {
        for v in (u + 1)..=m {
            let mid = (v == m && !g.has_edge(u, v)).then(|| partner[u]);
            paths.push(PairPath { u, v, mid });
        }
    }
    let witness = StarSubdivisionWitness {
        order: m + 1,
        branch_vertices: (0..=m).collect(),
        paths,
    };
    verify_witness(&g, &witness).map_err(|e| plan.fail(&format!("witness rejected: {e}")))?;
    Ok(BasicWitness {
        plan,
        graph: g,
        witness,
    })
}
