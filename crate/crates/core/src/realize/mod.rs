//! Constructive realizations of degree sequences.
//!
//! Every builder binds vertex `i` of its output to the `i`-th entry of its
//! input, so callers can rely on positions as well as on the multiset.

mod bipartite;
pub(crate) mod completion;

use std::ops::ControlFlow;

pub(crate) use bipartite::bipartite_positional;
pub use bipartite::{realize_bipartite_with_matching, BipartiteRealization};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, SimpleGraph, MAX_VERTICES};
use crate::limits::Limits;
use crate::sequence::{is_graphic, rao_omega_at_least, DegreeSequence};
use completion::{Completion, Order};

fn ensure_graphic(seq: &DegreeSequence) -> Result<()> {
    if !is_graphic(seq) {
        return Err(Error::Domain(format!("{seq} is not graphic")));
    }
    if seq.len() > MAX_VERTICES {
        return Err(Error::Resource {
            what: "realization",
            n: seq.len(),
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Havel–Hakimi: repeatedly saturate the vertex of largest remaining demand
/// against the next-largest demands.
pub fn realize_any(seq: &DegreeSequence) -> Result<SimpleGraph> {
    ensure_graphic(seq)?;
    let n = seq.len();
    let mut residual: Vec<u32> = seq.degrees().to_vec();
    let mut g = SimpleGraph::new(n);
    loop {
        let Some(v) = (0..n)
            .filter(|&v| residual[v] > 0)
            .max_by(|&a, &b| residual[a].cmp(&residual[b]).then(b.cmp(&a)))
        else {
            break;
        };
        let need = residual[v] as usize;
        residual[v] = 0;
        let mut partners: Vec<usize> = (0..n).filter(|&w| w != v && residual[w] > 0).collect();
        partners.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        if partners.len() < need {
            return Err(Error::Internal(format!(
                "Havel-Hakimi stalled on graphic sequence {seq}"
            )));
        }
        for &w in &partners[..need] {
            residual[w] -= 1;
            g.add_edge(v, w);
        }
    }
    Ok(g)
}

/// A tree on positions `0..n` where vertex `i` has degree `degrees[i]`.
///
/// Leaves are attached, highest index first, to the lowest-index vertex that
/// still needs more than one edge.
pub(crate) fn tree_from_degrees(degrees: &[u32]) -> Result<SimpleGraph> {
    let n = degrees.len();
    if n == 0 || degrees.iter().any(|&d| d == 0) {
        return Err(Error::Domain("tree realization needs d_n >= 1".to_string()));
    }
    let sum: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
    if sum != 2 * n as u64 - 2 {
        return Err(Error::Domain(format!(
            "tree realization needs sum = 2n - 2 = {}, got {sum}",
            2 * n - 2
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::Resource {
            what: "tree realization",
            n,
            limit: MAX_VERTICES,
        });
    }
    let mut residual = degrees.to_vec();
    let mut g = SimpleGraph::new(n);
    loop {
        let hub = (0..n).find(|&v| residual[v] >= 2);
        let leaves: Vec<usize> = (0..n).filter(|&v| residual[v] == 1).collect();
        match hub {
            Some(h) => {
                let leaf = *leaves.last().expect("a leaf exists while a hub remains");
                g.add_edge(h, leaf);
                residual[h] -= 1;
                residual[leaf] = 0;
            }
            None => {
                if let [u, v] = leaves[..] {
                    g.add_edge(u, v);
                }
                break;
            }
        }
    }
    Ok(g)
}

/// Tree realization; vertex `i` receives degree `d_{i+1}`.
pub fn realize_tree(seq: &DegreeSequence) -> Result<SimpleGraph> {
    tree_from_degrees(seq.degrees())
}

/// A graph with `n` vertices, `e` edges and all degrees in `{1, 2}`: a single
/// cycle when `e = n >= 3`, otherwise a path with `2e - n + 1` edges on
/// vertices `0..` followed by a matching of `n - e - 1` edges.
pub fn realize_low_degree(n: usize, e: usize) -> Result<SimpleGraph> {
    if n > MAX_VERTICES {
        return Err(Error::Resource {
            what: "low-degree realization",
            n,
            limit: MAX_VERTICES,
        });
    }
    if e == n && n >= 3 {
        return Ok(SimpleGraph::cycle(n));
    }
    if n >= 2 && e < n && n <= 2 * e {
        let path_edges = 2 * e + 1 - n;
        let mut g = SimpleGraph::new(n);
        for i in 0..path_edges {
            g.add_edge(i, i + 1);
        }
        let mut next = path_edges + 1;
        for _ in 0..(n - e - 1) {
            g.add_edge(next, next + 1);
            next += 2;
        }
        return Ok(g);
    }
    Err(Error::Infeasible(format!(
        "no graph with 1 <= degree <= 2 has n = {n} vertices and e = {e} edges \
         (need e = n >= 3, or e + 1 <= n <= 2e with n >= 2)"
    )))
}

/// A realization of `seq` in which the first `k` positions (the `k` largest
/// degrees) form a clique.
///
/// The clique is placed first and the remaining demands are completed by an
/// exhaustive search that never uses a clique pair twice.
pub fn realize_with_clique(seq: &DegreeSequence, k: usize) -> Result<SimpleGraph> {
    if !rao_omega_at_least(seq, k)? {
        return Err(Error::Infeasible(format!(
            "{seq} has no realization with a clique of order {k}"
        )));
    }
    ensure_graphic(seq)?;
    let n = seq.len();
    let clique = full_mask(k);
    let residual: Vec<u32> = seq
        .degrees()
        .iter()
        .enumerate()
        .map(|(i, &d)| if i < k { d - (k as u32 - 1) } else { d })
        .collect();
    let allowed: Vec<u64> = (0..n)
        .map(|v| {
            let mut a = full_mask(n) & !bit(v);
            if v < k {
                a &= !clique;
            }
            a
        })
        .collect();
    let edges = Completion::new(residual, allowed, Order::Greedy)
        .first()
        .ok_or_else(|| {
            Error::Internal(format!(
                "no completion around a {k}-clique although {seq} passes Rao's test"
            ))
        })?;
    let mut g = SimpleGraph::new(n);
    for u in 0..k {
        for v in (u + 1)..k {
            g.add_edge(u, v);
        }
    }
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Visits every labelled realization (vertex `i` of degree `d_{i+1}`) once.
pub fn for_each_realization(
    seq: &DegreeSequence,
    limits: &Limits,
    mut visit: impl FnMut(&SimpleGraph) -> ControlFlow<()>,
) -> Result<()> {
    ensure_graphic(seq)?;
    Limits::check("realization enumeration", seq.len(), limits.realizations)?;
    let n = seq.len();
    let allowed = (0..n).map(|v| full_mask(n) & !bit(v)).collect();
    let mut search = Completion::new(seq.degrees().to_vec(), allowed, Order::Fixed);
    let _ = search.run(&mut |edges| visit(&SimpleGraph::from_edges(n, edges)));
    Ok(())
}

/// All labelled realizations, or one per isomorphism class when
/// `up_to_isomorphism` is set.
pub fn enumerate_realizations(
    seq: &DegreeSequence,
    limits: &Limits,
    up_to_isomorphism: bool,
) -> Result<Vec<SimpleGraph>> {
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for_each_realization(seq, limits, |g| {
        if !up_to_isomorphism || seen.insert(canonical_form(g)) {
            out.push(g.clone());
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::clique_number;

    fn seq(v: &[u32]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec())
    }

    #[test]
    fn any_examples() {
        let g = realize_any(&seq(&[2; 5])).unwrap();
        assert_eq!(g.degrees(), vec![2; 5]);
        assert!(g.is_connected());
        let g = realize_any(&seq(&[0, 0])).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = realize_any(&seq(&[3, 1, 1, 1])).unwrap();
        assert_eq!(g.degrees(), vec![3, 1, 1, 1]);
        assert!(matches!(
            realize_any(&seq(&[3, 3, 1, 1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn tree_examples() {
        assert_eq!(realize_tree(&seq(&[1, 1])).unwrap(), SimpleGraph::path(2));
        let p3 = realize_tree(&seq(&[2, 1, 1])).unwrap();
        assert_eq!(p3.degrees(), vec![2, 1, 1]);
        assert!(p3.is_connected());
        let err = realize_tree(&seq(&[2, 2])).unwrap_err();
        assert!(err.to_string().contains("2n - 2"));
        let err = realize_tree(&seq(&[2, 1, 1, 0])).unwrap_err();
        assert!(err.to_string().contains("d_n >= 1"));
    }

    #[test]
    fn positional_tree_keeps_labels() {
        let t = tree_from_degrees(&[1, 1, 3, 1, 2]).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 3, 1, 2]);
        assert_eq!(t.edge_count(), 4);
        assert!(t.is_connected());
    }

    #[test]
    fn low_degree_examples() {
        assert_eq!(realize_low_degree(3, 3).unwrap(), SimpleGraph::cycle(3));
        let g = realize_low_degree(5, 3).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (3, 4)]);
        assert!(matches!(
            realize_low_degree(2, 2),
            Err(Error::Infeasible(_))
        ));
        assert!(realize_low_degree(1, 0).is_err());
        assert_eq!(realize_low_degree(2, 1).unwrap(), SimpleGraph::path(2));
        assert!(realize_low_degree(7, 3).is_err());
    }

    #[test]
    fn clique_examples() {
        assert_eq!(
            realize_with_clique(&seq(&[3; 4]), 4).unwrap(),
            SimpleGraph::complete(4)
        );
        let g = realize_with_clique(&seq(&[3, 3, 2, 2, 2]), 3).unwrap();
        assert_eq!(g.degrees(), vec![3, 3, 2, 2, 2]);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
        assert!(matches!(
            realize_with_clique(&seq(&[2; 5]), 3),
            Err(Error::Infeasible(_))
        ));
        let g = realize_with_clique(&seq(&[7; 10]), 5).unwrap();
        assert_eq!(clique_number(&g), 5);
    }

    #[test]
    fn enumeration_examples() {
        let lim = Limits::default();
        assert_eq!(
            enumerate_realizations(&seq(&[2; 5]), &lim, false)
                .unwrap()
                .len(),
            12
        );
        assert_eq!(
            enumerate_realizations(&seq(&[2; 5]), &lim, true)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_realizations(&seq(&[1, 1]), &lim, false)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_realizations(&seq(&[3, 1, 1, 1]), &lim, false)
                .unwrap()
                .len(),
            1
        );
        // C6 and two triangles
        assert_eq!(
            enumerate_realizations(&seq(&[2; 6]), &lim, true)
                .unwrap()
                .len(),
            2
        );
        assert!(matches!(
            enumerate_realizations(&seq(&[2; 9]), &lim, false),
            Err(Error::Resource { .. })
        ));
    }
}
